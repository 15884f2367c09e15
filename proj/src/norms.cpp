#include "parallax/norms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "parallax/linalg.hpp"
#include "parallax/oracle.hpp"

namespace parallax {

NormHandle NormHandle::schatten(double p) {
  if (std::isnan(p) || p < 1.0)
    throw BadHandle("Schatten exponent must satisfy p >= 1");
  NormHandle h;
  h.kind = Kind::Schatten;
  h.p = p;
  return h;
}

NormHandle NormHandle::ky_fan(int k) {
  if (k < 1) throw BadHandle("Ky-Fan order must satisfy k >= 1");
  NormHandle h;
  h.kind = Kind::KyFan;
  h.k = k;
  return h;
}

NormHandle NormHandle::induced(VectorNormTag v) {
  NormHandle h;
  h.kind = Kind::Induced;
  h.vec = v;
  return h;
}

NormHandle NormHandle::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw BadHandle("norm spec must look like kind:param, got '" +
                    std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "schatten") {
    if (arg == "inf") return schatten(std::numeric_limits<double>::infinity());
    double p = 0.0;
    const auto* end = arg.data() + arg.size();
    const auto res = std::from_chars(arg.data(), end, p);
    if (res.ec != std::errc{} || res.ptr != end)
      throw BadHandle("bad Schatten exponent '" + std::string(arg) + "'");
    return schatten(p);
  }
  if (kind == "kyfan") {
    int k = 0;
    const auto* end = arg.data() + arg.size();
    const auto res = std::from_chars(arg.data(), end, k);
    if (res.ec != std::errc{} || res.ptr != end)
      throw BadHandle("bad Ky-Fan order '" + std::string(arg) + "'");
    return ky_fan(k);
  }
  if (kind == "induced") {
    if (arg == "l1") return induced(VectorNormTag::L1);
    if (arg == "l2") return induced(VectorNormTag::L2);
    if (arg == "linf") return induced(VectorNormTag::Linf);
    throw BadHandle("bad induced norm tag '" + std::string(arg) + "'");
  }
  throw BadHandle("unknown norm kind '" + std::string(kind) + "'");
}

std::string NormHandle::to_string() const {
  switch (kind) {
    case Kind::Schatten: {
      if (std::isinf(p)) return "schatten:inf";
      char buf[32];
      std::snprintf(buf, sizeof buf, "schatten:%g", p);
      return buf;
    }
    case Kind::KyFan:
      return "kyfan:" + std::to_string(k);
    case Kind::Induced:
      switch (vec) {
        case VectorNormTag::L1: return "induced:l1";
        case VectorNormTag::L2: return "induced:l2";
        case VectorNormTag::Linf: return "induced:linf";
      }
  }
  return "?";
}

namespace {

double lp_of(const RealVector& s, double p) {
  if (std::isinf(p)) return s.size() > 0 ? s(0) : 0.0;
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

double induced_l1(const ComplexMatrix& a) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    best = std::max(best, a.col(j).cwiseAbs().sum());
  return best;
}

double induced_linf(const ComplexMatrix& a) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    best = std::max(best, a.row(i).cwiseAbs().sum());
  return best;
}

}  // namespace

double matrix_norm(const ComplexMatrix& a, const NormHandle& h) {
  switch (h.kind) {
    case NormHandle::Kind::Schatten: {
      if (std::isinf(h.p)) {
        const RealVector s = singular_values(a);
        return s.size() > 0 ? s(0) : 0.0;
      }
      if (h.p == 2.0) return a.norm();  // Frobenius
      return lp_of(singular_values(a), h.p);
    }
    case NormHandle::Kind::KyFan: {
      const RealVector s = singular_values(a);
      if (h.k > s.size())
        throw BadHandle("Ky-Fan order k = " + std::to_string(h.k) +
                        " exceeds min(rows, cols) = " + std::to_string(s.size()));
      return s.head(h.k).sum();
    }
    case NormHandle::Kind::Induced: {
      if (a.rows() != a.cols())
        throw NotSquare("induced norms are defined for square matrices");
      switch (h.vec) {
        case VectorNormTag::L1: return induced_l1(a);
        case VectorNormTag::Linf: return induced_linf(a);
        case VectorNormTag::L2: {
          const RealVector s = singular_values(a);
          return s.size() > 0 ? s(0) : 0.0;
        }
      }
    }
  }
  throw BadHandle("unhandled norm kind");
}

double vector_norm(const ComplexVector& x, VectorNormTag v) {
  switch (v) {
    case VectorNormTag::L1: return x.cwiseAbs().sum();
    case VectorNormTag::L2: return x.norm();
    case VectorNormTag::Linf:
      return x.size() > 0 ? x.cwiseAbs().maxCoeff() : 0.0;
  }
  throw BadHandle("unhandled vector norm tag");
}

Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("trace_inner needs equal shapes");
  return (a.array() * b.array().conjugate()).sum();
}

double dual_norm(const ComplexMatrix& a, const NormHandle& h,
                 const Tolerance& tol) {
  switch (h.kind) {
    case NormHandle::Kind::Schatten: {
      double q;
      if (std::isinf(h.p))
        q = 1.0;
      else if (h.p == 1.0)
        q = std::numeric_limits<double>::infinity();
      else
        q = h.p / (h.p - 1.0);
      return matrix_norm(a, NormHandle::schatten(q));
    }
    case NormHandle::Kind::KyFan: {
      // dual of Ky-Fan(k) is max(op-norm, trace-norm / k)
      const RealVector s = singular_values(a);
      if (h.k > s.size())
        throw BadHandle("Ky-Fan order exceeds matrix dimension");
      const double op = s.size() > 0 ? s(0) : 0.0;
      return std::max(op, s.sum() / h.k);
    }
    case NormHandle::Kind::Induced: {
      // No closed form; fall back to the sampling oracle (documented ~1e-3).
      OracleConfig cfg;
      cfg.refine_steps = std::max(cfg.refine_steps, tol.refine_iters);
      return oracle_dual_norm(a, h, cfg);
    }
  }
  throw BadHandle("unhandled norm kind");
}

}  // namespace parallax
