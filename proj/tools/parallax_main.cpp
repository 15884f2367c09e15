// parallax command line: parallelism, orthogonality and numerical-range
// queries on complex matrices in the JSON wire format.
//
// Exit codes: 0 when the queried property holds, 1 when it does not,
// 2 on parse or domain errors.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parallax/certificates.hpp"
#include "parallax/geometry.hpp"
#include "parallax/json_io.hpp"
#include "parallax/linalg.hpp"
#include "parallax/kmodule.hpp"
#include "parallax/norms.hpp"
#include "parallax/numrange.hpp"
#include "parallax/oracle.hpp"

namespace {

using nlohmann::json;
using namespace parallax;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct CommonOpts {
  std::string norm_spec;
  double tol = 0.0;       // 0 means "leave defaults"
  int grid = 0;           // 0 means "leave defaults"
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool as_json = false;
};

Tolerance make_tolerance(const CommonOpts& o) {
  Tolerance tol;
  if (o.tol > 0.0) {
    tol.abs_tol = o.tol;
    tol.rel_tol = o.tol;
  }
  if (o.grid > 0) tol.grid_points = o.grid;
  tol.validate();
  return tol;
}

std::uint64_t effective_seed(const CommonOpts& o) {
  if (o.seed_set) return o.seed;
  if (const char* env = std::getenv("PARALLAX_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw ParseError("PARALLAX_SEED must be an unsigned integer");
  }
  return OracleConfig{}.seed;
}

OracleConfig make_oracle_config(const CommonOpts& o) {
  OracleConfig cfg;
  cfg.seed = effective_seed(o);
  if (o.grid > 0) cfg.lambda_grid = o.grid;
  return cfg;
}

json tolerance_to_json(const Tolerance& tol) {
  return {{"abs_tol", tol.abs_tol},
          {"rel_tol", tol.rel_tol},
          {"grid_points", tol.grid_points},
          {"refine_iters", tol.refine_iters}};
}

json complex_to_json(Complex z) { return {z.real(), z.imag()}; }

json verdict_to_json(const ParallelVerdict& v) {
  return {{"parallel", v.parallel},
          {"lambda_star", complex_to_json(v.lambda_star)},
          {"achieved", v.achieved},
          {"bound", v.bound},
          {"gap", v.gap}};
}

json vector_to_json(const ComplexVector& v) {
  return matrix_to_json(ComplexMatrix(v));
}

// Report goes to stdout; in --json mode it is the only stdout output and
// carries no timing, so identical runs are byte identical. Wall time goes
// to stderr.
void emit(const json& report, bool as_json, const std::string& human) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

int run_parallel(const std::string& a_path, const std::string& b_path,
                 const CommonOpts& opts) {
  const Tolerance tol = make_tolerance(opts);
  const NormHandle h = NormHandle::parse(opts.norm_spec);
  const ComplexMatrix a = load_matrix(a_path);
  const ComplexMatrix b = load_matrix(b_path);
  const ParallelVerdict v = is_parallel(a, b, h, tol);

  json report = {{"command", "parallel"},
                 {"norm", h.to_string()},
                 {"tolerance", tolerance_to_json(tol)},
                 {"result", verdict_to_json(v)}};
  char line[256];
  std::snprintf(line, sizeof line,
                "%s under %s: achieved %.12g of bound %.12g (gap %.3g)",
                v.parallel ? "parallel" : "not parallel",
                h.to_string().c_str(), v.achieved, v.bound, v.gap);
  emit(report, opts.as_json, line);
  return v.parallel ? kExitHolds : kExitFails;
}

int run_bjo(const std::string& x_path, const std::string& y_path,
            const CommonOpts& opts) {
  const Tolerance tol = make_tolerance(opts);
  const NormHandle h = NormHandle::parse(opts.norm_spec);
  const ComplexMatrix x = load_matrix(x_path);
  const ComplexMatrix y = load_matrix(y_path);
  const BjoVerdict v = is_bj_orthogonal(x, y, h, tol);

  json report = {{"command", "bjo"},
                 {"norm", h.to_string()},
                 {"tolerance", tolerance_to_json(tol)},
                 {"result",
                  {{"orthogonal", v.orthogonal},
                   {"alpha_star", complex_to_json(v.alpha_star)},
                   {"min_value", v.min_value}}}};
  char line[256];
  std::snprintf(line, sizeof line,
                "%s under %s: min ||x + a y|| = %.12g at a = %.6g%+.6gi",
                v.orthogonal ? "orthogonal" : "not orthogonal",
                h.to_string().c_str(), v.min_value, v.alpha_star.real(),
                v.alpha_star.imag());
  emit(report, opts.as_json, line);
  return v.orthogonal ? kExitHolds : kExitFails;
}

json dual_certificate_to_json(const DualCertificate& c) {
  return {{"k", c.k},
          {"f", matrix_to_json(c.f)},
          {"trace_a", complex_to_json(c.trace_a)},
          {"trace_b", complex_to_json(c.trace_b)},
          {"f_opnorm", c.f_opnorm},
          {"f_tracenorm", c.f_tracenorm},
          {"a_norm", c.a_norm},
          {"b_norm", c.b_norm},
          {"checks_pass", c.checks_pass},
          {"tie_warning", c.tie_warning},
          {"sigma_gap", c.sigma_gap}};
}

int run_certificate(const std::string& a_path, const std::string& b_path,
                    const CommonOpts& opts) {
  const Tolerance tol = make_tolerance(opts);
  const NormHandle h = NormHandle::parse(opts.norm_spec);
  const ComplexMatrix a = load_matrix(a_path);
  const ComplexMatrix b = load_matrix(b_path);

  json report = {{"command", "certificate"},
                 {"norm", h.to_string()},
                 {"tolerance", tolerance_to_json(tol)}};
  bool holds = false;
  std::string human;

  if (h.kind == NormHandle::Kind::Schatten && std::isinf(h.p)) {
    const auto [verdict, cert] = opnorm_parallel_decide(a, b, tol);
    holds = verdict.parallel;
    json result = {{"verdict", verdict_to_json(verdict)}};
    if (cert) {
      result["certificate"] = {{"x", vector_to_json(cert->x)},
                               {"y", vector_to_json(cert->y)},
                               {"lambda", complex_to_json(cert->lambda)},
                               {"x_ay", complex_to_json(cert->x_ay)},
                               {"x_by", complex_to_json(cert->x_by)}};
    }
    report["result"] = std::move(result);
    human = holds ? "parallel: witness pair recovered from the compressed range"
                  : "not parallel: compressed numerical radius falls short";
  } else if (h.kind == NormHandle::Kind::Schatten && h.p == 1.0) {
    const auto cert = trace_certificate(a, b, tol);
    holds = cert.has_value() && cert->checks_pass;
    json result = {{"parallel", cert.has_value()}};
    if (cert) result["certificate"] = dual_certificate_to_json(*cert);
    report["result"] = std::move(result);
    human = cert ? (cert->checks_pass ? "parallel: trace-norm certificate verified"
                                      : "parallel, but certificate checks degenerate")
                 : "not parallel under the trace norm";
  } else if (h.kind == NormHandle::Kind::Schatten) {
    const SchattenCondition cond = schatten_condition(a, b, h.p, tol);
    holds = cond.holds;
    report["result"] = {{"holds", cond.holds},
                        {"lhs", cond.lhs},
                        {"rhs", cond.rhs}};
    char line[192];
    std::snprintf(line, sizeof line,
                  "trace identity %s: |tr(d^{p-1} c b*)| = %.12g vs %.12g",
                  cond.holds ? "holds" : "fails", cond.lhs, cond.rhs);
    human = line;
  } else if (h.kind == NormHandle::Kind::KyFan) {
    const auto cert = kyfan_certificate(a, b, h.k, tol);
    holds = cert.has_value() && cert->checks_pass;
    json result = {{"parallel", cert.has_value()}};
    if (cert) result["certificate"] = dual_certificate_to_json(*cert);
    report["result"] = std::move(result);
    if (!cert) {
      const ParallelVerdict v = is_parallel(a, b, h, tol);
      report["result"]["verdict"] = verdict_to_json(v);
      char line[160];
      std::snprintf(line, sizeof line,
                    "not parallel under %s (gap %.6g of bound %.6g)",
                    h.to_string().c_str(), v.gap, v.bound);
      human = line;
    } else {
      human = cert->checks_pass
                  ? "parallel: dual certificate verified"
                  : (cert->tie_warning
                         ? "parallel, but sigma_k tie leaves f undetermined"
                         : "parallel, certificate checks failed");
    }
  } else {
    // induced norms: extreme-point route for l1/linf on real input,
    // vector-level sufficiency otherwise
    if (h.vec != VectorNormTag::L2) {
      const double scale =
          std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
      const bool real_input =
          a.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale &&
          b.imag().cwiseAbs().maxCoeff() <= 1e-12 * scale;
      if (real_input) {
        const auto dec = extreme_point_check(a, b, h.vec, tol);
        holds = dec.has_value();
        json result = {{"decomposition_found", dec.has_value()}};
        if (dec) {
          json pairs = json::array();
          for (std::size_t i = 0; i < dec->xs.size(); ++i) {
            pairs.push_back(
                {{"x", matrix_to_json(dec->xs[i].cast<Complex>())},
                 {"y", matrix_to_json(dec->ys[i].cast<Complex>())},
                 {"weight", dec->weights[i]}});
          }
          result["pairs"] = std::move(pairs);
          result["value"] = dec->value;
        }
        report["result"] = std::move(result);
        human = holds ? "parallel: extreme-point decomposition found"
                      : "not parallel: no norming extreme pair attains ||b||";
        emit(report, opts.as_json, human);
        return holds ? kExitHolds : kExitFails;
      }
    }
    const VectorLevelResult res = vector_level_sufficiency(a, b, h.vec, tol);
    holds = res.found;
    json result = {{"found", res.found},
                   {"matrix_confirmed", res.matrix_confirmed}};
    if (res.found) result["y"] = vector_to_json(res.y);
    report["result"] = std::move(result);
    human = res.found ? "parallel: common norming vector with parallel images"
                      : "no vector-level witness found";
  }

  emit(report, opts.as_json, human);
  return holds ? kExitHolds : kExitFails;
}

int run_numrange(const std::string& t_path, const CommonOpts& opts,
                 const std::optional<std::pair<double, double>>& point,
                 int boundary) {
  const Tolerance tol = make_tolerance(opts);
  const ComplexMatrix t = load_matrix(t_path);

  json report = {{"command", "numrange"},
                 {"tolerance", tolerance_to_json(tol)}};
  if (point) {
    const Complex z(point->first, point->second);
    const bool inside = in_numerical_range(t, z, tol);
    report["result"] = {{"point", complex_to_json(z)}, {"inside", inside}};
    char line[160];
    std::snprintf(line, sizeof line, "point %.6g%+.6gi is %s W(t)",
                  z.real(), z.imag(), inside ? "inside" : "outside");
    emit(report, opts.as_json, line);
    return inside ? kExitHolds : kExitFails;
  }
  if (boundary > 0) {
    json pts = json::array();
    for (const Complex& z : boundary_points(t, boundary))
      pts.push_back(complex_to_json(z));
    report["result"] = {{"boundary", std::move(pts)}};
    emit(report, opts.as_json,
         "boundary polyline with " + std::to_string(boundary) + " points");
    return kExitHolds;
  }
  const double w = numerical_radius(t, tol);
  report["result"] = {{"radius", w}};
  char line[96];
  std::snprintf(line, sizeof line, "numerical radius %.12g", w);
  emit(report, opts.as_json, line);
  return kExitHolds;
}

int run_module_verify(const std::string& check, const CommonOpts& opts,
                      const std::vector<std::string>& files, int d, int n,
                      int trials) {
  const Tolerance tol = make_tolerance(opts);
  json report = {{"command", "module-verify"},
                 {"check", check},
                 {"tolerance", tolerance_to_json(tol)}};
  std::mt19937_64 rng(effective_seed(opts));

  const auto random_element = [&](int dd, int nn) {
    return ModuleElement{random_gaussian(dd, nn, rng)};
  };

  if (check == "thm-a" || check == "thm-l" || check == "corollary") {
    int agree = 0;
    int total = 0;
    const auto one = [&](const ModuleElement& x, const ModuleElement& y) {
      CheckPair pair;
      if (check == "thm-a")
        pair = thm_a_check(x, y, tol);
      else if (check == "thm-l")
        pair = thm_l_check(x, y, tol);
      else
        pair = corollary_idempotent_check(x, y, tol);
      ++total;
      if (pair.lhs_parallel == pair.rhs_holds) ++agree;
    };

    if (files.size() == 2) {
      one(ModuleElement{load_matrix(files[0])},
          ModuleElement{load_matrix(files[1])});
    } else {
      for (int t = 0; t < trials; ++t) {
        ModuleElement x = random_element(d, n);
        if (check != "thm-a") {
          // these checks need <x,x> to be a projection: use xi e_1^T scaled
          ComplexVector xi = random_unit_vector(d, rng);
          ComplexMatrix m = ComplexMatrix::Zero(d, n);
          m.col(0) = xi;
          x = ModuleElement{std::move(m)};
        }
        ModuleElement y = random_element(d, n);
        if (t % 4 == 0) {
          // engineered parallel instance
          const Complex c(0.5 + 0.1 * (t % 7), 0.3);
          y = ModuleElement{c * x.mat};
        }
        one(x, y);
      }
    }
    report["result"] = {{"trials", total}, {"agree", agree}};
    emit(report, opts.as_json,
         check + ": " + std::to_string(agree) + "/" + std::to_string(total) +
             " sides agree");
    return agree == total ? kExitHolds : kExitFails;
  }

  if (check == "thm-b") {
    ComplexVector xi = ComplexVector::Zero(d);
    xi(0) = 1.0;
    const OrthonormalBasis basis = make_orthonormal_basis(xi, n);
    const double worst = thm_b_search(basis, trials, tol, effective_seed(opts));
    report["result"] = {{"worst_violation", worst}};
    char line[128];
    std::snprintf(line, sizeof line,
                  "worst simultaneous-parallelism margin %.6g (negative = holds)",
                  worst);
    emit(report, opts.as_json, line);
    return worst < 0.0 ? kExitHolds : kExitFails;
  }

  if (check == "transitivity") {
    int violations = 0;
    int premise_hits = 0;
    for (int t = 0; t < trials; ++t) {
      ComplexVector y = random_unit_vector(d, rng);
      ComplexVector x;
      ComplexVector z;
      if (t % 2 == 0) {
        // collinear triple: premises hold by construction
        x = Complex(1.3, -0.4) * y;
        z = Complex(-0.2, 2.0) * y;
      } else {
        x = random_gaussian(d, 1, rng).col(0);
        z = random_gaussian(d, 1, rng).col(0);
      }
      const TransitivityResult res =
          transitivity_check(ModuleElement{ComplexMatrix(x)},
                             ModuleElement{ComplexMatrix(y)},
                             ModuleElement{ComplexMatrix(z)}, tol);
      if (res.premises) {
        ++premise_hits;
        if (!res.conclusion) ++violations;
      }
    }
    report["result"] = {{"trials", trials},
                        {"premises_held", premise_hits},
                        {"violations", violations}};
    emit(report, opts.as_json,
         "transitivity: " + std::to_string(violations) + " violations in " +
             std::to_string(premise_hits) + " premise-holding triples");
    return violations == 0 ? kExitHolds : kExitFails;
  }

  throw ParseError("unknown check '" + check + "'");
}

int run_oracle(const CommonOpts& opts, const std::string& mode,
               const std::vector<std::string>& files) {
  const OracleConfig cfg = make_oracle_config(opts);
  json report = {{"command", "oracle"},
                 {"mode", mode},
                 {"seed", cfg.seed}};

  if (mode == "parallel") {
    if (files.size() != 2) throw ParseError("oracle parallel needs two matrices");
    const NormHandle h = NormHandle::parse(opts.norm_spec);
    const ParallelVerdict v =
        oracle_parallel(load_matrix(files[0]), load_matrix(files[1]), h, cfg);
    report["norm"] = h.to_string();
    report["result"] = verdict_to_json(v);
    char line[192];
    std::snprintf(line, sizeof line,
                  "oracle: %s (achieved %.12g of bound %.12g)",
                  v.parallel ? "parallel" : "not parallel", v.achieved, v.bound);
    emit(report, opts.as_json, line);
    return v.parallel ? kExitHolds : kExitFails;
  }
  if (mode == "radius") {
    if (files.size() != 1) throw ParseError("oracle radius needs one matrix");
    const double w = oracle_numerical_radius(load_matrix(files[0]), cfg);
    report["result"] = {{"radius_lower_bound", w}};
    char line[96];
    std::snprintf(line, sizeof line, "oracle radius lower bound %.12g", w);
    emit(report, opts.as_json, line);
    return kExitHolds;
  }
  if (mode == "dual") {
    if (files.size() != 1) throw ParseError("oracle dual needs one matrix");
    const NormHandle h = NormHandle::parse(opts.norm_spec);
    const double v = oracle_dual_norm(load_matrix(files[0]), h, cfg);
    report["norm"] = h.to_string();
    report["result"] = {{"dual_lower_bound", v}};
    char line[96];
    std::snprintf(line, sizeof line, "oracle dual-norm lower bound %.12g", v);
    emit(report, opts.as_json, line);
    return kExitHolds;
  }
  throw ParseError("unknown oracle mode '" + mode + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm parallelism and numerical range toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> files;
  std::optional<std::pair<double, double>> point;
  std::vector<double> point_raw;
  int boundary = 0;
  std::string check = "thm-a";
  std::string oracle_mode = "parallel";
  int d = 2;
  int n = 2;
  int trials = 50;

  const auto add_common = [&](CLI::App* cmd, bool with_norm) {
    if (with_norm)
      cmd->add_option("--norm", opts.norm_spec,
                      "norm spec: schatten:<p|inf> | kyfan:<k> | induced:<l1|l2|linf>")
          ->required();
    cmd->add_option("--tol", opts.tol, "absolute and relative tolerance");
    cmd->add_option("--grid", opts.grid, "unit-circle grid points");
    cmd->add_option("--seed", opts.seed, "RNG seed (overrides PARALLAX_SEED)")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_flag("--json", opts.as_json, "machine-readable report on stdout");
  };

  CLI::App* parallel = app.add_subcommand("parallel", "decide a || b");
  add_common(parallel, true);
  parallel->add_option("files", files, "A.json B.json")->expected(2);

  CLI::App* bjo = app.add_subcommand("bjo", "decide x B-orthogonal y");
  add_common(bjo, true);
  bjo->add_option("files", files, "X.json Y.json")->expected(2);

  CLI::App* certificate =
      app.add_subcommand("certificate", "parallelism certificate for the norm");
  add_common(certificate, true);
  certificate->add_option("files", files, "A.json B.json")->expected(2);

  CLI::App* numrange =
      app.add_subcommand("numrange", "numerical range queries");
  add_common(numrange, false);
  numrange->add_option("files", files, "T.json")->expected(1);
  numrange->add_option("--point", point_raw, "re im membership query")
      ->expected(2);
  numrange->add_option("--boundary", boundary, "emit N boundary points");

  CLI::App* module_verify =
      app.add_subcommand("module-verify", "module-theorem verification suites");
  add_common(module_verify, false);
  module_verify->add_option("--check", check,
                            "thm-a | thm-l | corollary | thm-b | transitivity");
  module_verify->add_option("files", files, "optional explicit elements")
      ->expected(0, 3);
  module_verify->add_option("--d", d, "module dimension d");
  module_verify->add_option("--n", n, "multiplicity n");
  module_verify->add_option("--trials", trials, "randomized trials");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force references");
  add_common(oracle, false);
  oracle->add_option("--norm", opts.norm_spec, "norm spec for parallel/dual");
  oracle->add_option("--mode", oracle_mode, "parallel | radius | dual");
  oracle->add_option("files", files, "matrices")->expected(1, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitHolds : kExitError;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    int code = kExitError;
    if (app.got_subcommand(parallel))
      code = run_parallel(files[0], files[1], opts);
    else if (app.got_subcommand(bjo))
      code = run_bjo(files[0], files[1], opts);
    else if (app.got_subcommand(certificate))
      code = run_certificate(files[0], files[1], opts);
    else if (app.got_subcommand(numrange)) {
      if (point_raw.size() == 2)
        point = std::make_pair(point_raw[0], point_raw[1]);
      code = run_numrange(files[0], opts, point, boundary);
    } else if (app.got_subcommand(module_verify))
      code = run_module_verify(check, opts, files, d, n, trials);
    else if (app.got_subcommand(oracle))
      code = run_oracle(opts, oracle_mode, files);
    const auto t1 = std::chrono::steady_clock::now();
    std::fprintf(stderr, "wall time %.1f ms\n",
                 std::chrono::duration<double, std::milli>(t1 - t0).count());
    return code;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitError;
  }
}
