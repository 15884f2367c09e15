#pragma once

#include <string>
#include <string_view>

#include "parallax/types.hpp"

namespace parallax {

enum class VectorNormTag { L1, L2, Linf };

// Identifies one of the supported matrix norms:
//   Schatten(p): lp norm of the singular values, p in [1, inf]
//   KyFan(k):    sum of the k largest singular values
//   Induced(v):  operator norm induced by the vector norm v (square inputs)
// Construct through the factories; they reject invalid parameters so a
// handle in hand is always well formed (k <= n is checked at use sites).
struct NormHandle {
  enum class Kind { Schatten, KyFan, Induced };

  Kind kind = Kind::Schatten;
  double p = 2.0;                       // Schatten exponent, may be infinity
  int k = 1;                            // Ky-Fan order
  VectorNormTag vec = VectorNormTag::L2;

  static NormHandle schatten(double p);
  static NormHandle ky_fan(int k);
  static NormHandle induced(VectorNormTag v);

  // Grammar: "schatten:<p|inf>", "kyfan:<k>", "induced:<l1|l2|linf>".
  static NormHandle parse(std::string_view text);
  std::string to_string() const;
};

double matrix_norm(const ComplexMatrix& a, const NormHandle& h);
double vector_norm(const ComplexVector& x, VectorNormTag v);

// tr(a * b.adjoint()); the Hilbert-Schmidt pairing used by the duality
// certificates.
Complex trace_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Norm of `a` measured in the dual of h. Schatten duals use the conjugate
// exponent, the Ky-Fan dual is max(op-norm, trace-norm / k); induced-norm
// duals have no closed form here and are delegated to the sampling oracle
// (accuracy ~1e-3, documented on the oracle).
double dual_norm(const ComplexMatrix& a, const NormHandle& h,
                 const Tolerance& tol = {});

}  // namespace parallax
