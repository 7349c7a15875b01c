#include "laxalg/verify.hpp"

#include <functional>

#include "laxalg/central.hpp"
#include "laxalg/errors.hpp"
#include "laxalg/random.hpp"
#include "laxalg/tyurin_local.hpp"

namespace lax {

namespace {

constexpr std::size_t kMaxReseeds = 5;

struct Context {
  const RunConfig& run;
  ConfigPtr config;
  BasisCache cache;
  ConnectionForm lambda;
};

class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && failure_.empty()) failure_ = what();
  }
  SuiteResult finish(std::string summary) const {
    SuiteResult r;
    r.checks = checks_;
    r.passed = failure_.empty();
    r.detail = r.passed ? std::move(summary) : failure_;
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::string failure_;
};

RationalMatrixFunction random_member(BasisCache& cache, Rng& rng, int m) {
  const auto& basis = cache.at(m);
  RationalMatrixFunction out(cache.config());
  for (const auto& e : basis.elements) out += rng.gaussian() * e;
  return out;
}

int random_degree(Rng& rng, const DegreeRange& d) { return static_cast<int>(rng.uniform(d.lo, d.hi)); }

int witness_trunc(const AlgebraSpec& spec) { return spec.family() == Family::sp ? 3 : 1; }

std::string pair_label(std::size_t trial, int k, int l) {
  return "trial " + std::to_string(trial) + " (degrees " + std::to_string(k) + ", " + std::to_string(l) + ")";
}

SuiteResult closure_suite(Context& ctx, Rng& rng) {
  Tally t;
  const AlgebraSpec& spec = ctx.config->spec();
  const int trunc = witness_trunc(spec);
  const bool sp = spec.family() == Family::sp;
  for (std::size_t trial = 0; trial < ctx.run.trials; ++trial) {
    const int k = random_degree(rng, ctx.run.degrees);
    const int l = random_degree(rng, ctx.run.degrees);
    const auto L = random_member(ctx.cache, rng, k);
    const auto L2 = random_member(ctx.cache, rng, l);
    const auto br = bracket(L, L2);
    const auto report = membership(*ctx.config, k + l, br);
    t.expect(report.member, [&] { return pair_label(trial, k, l) + ": bracket not in g_{k+l}: " + report.reason; });
    for (std::size_t s = 0; s < ctx.config->point_count(); ++s) {
      const auto at = MarkedPoint::tyurin(s);
      const auto a = localize(L, at, trunc);
      const auto b = localize(L2, at, trunc);
      const auto w = bracket_closure_witness(spec, ctx.config->point(s), a, b);
      t.expect(w.agree(), [&] { return pair_label(trial, k, l) + ": point " + std::to_string(s) + ": bracket data differ from the closed form"; });
      bool forbidden_zero = w.result.coeff(-2).is_zero();
      if (sp) forbidden_zero = w.result.coeff(-3).is_zero() && w.result.coeff(-4).is_zero();
      t.expect(forbidden_zero, [&] { return pair_label(trial, k, l) + ": forbidden Laurent order at point " + std::to_string(s); });
      if (spec.family() == Family::gl) {
        const auto p = product_closure_witness(spec, ctx.config->point(s), a, b);
        t.expect(p.agree(), [&] { return pair_label(trial, k, l) + ": product data differ from the closed form"; });
      }
    }
    if (spec.family() == Family::gl) {
      const auto prod = membership(*ctx.config, k + l, multiply(L, L2));
      t.expect(prod.member, [&] { return pair_label(trial, k, l) + ": product not in g_{k+l}: " + prod.reason; });
    }
  }
  return t.finish(std::to_string(ctx.run.trials) + " random pairs closed");
}

SuiteResult grading_suite(Context& ctx, Rng&) {
  Tally t;
  const AlgebraSpec& spec = ctx.config->spec();
  for (std::size_t s = 0; s < ctx.config->point_count(); ++s) {
    const auto rank = mat_rank(local_constraint_block(spec, ctx.config->point(s).alpha()));
    t.expect(rank == condition_count(spec), [&] {
      return "point " + std::to_string(s) + ": constraint rank " + std::to_string(rank) + ", expected " +
             std::to_string(condition_count(spec));
    });
  }
  for (int m = ctx.run.degrees.lo; m <= ctx.run.degrees.hi; ++m) {
    const auto& basis = ctx.cache.at(m);
    t.expect(basis.dim() == spec.dim(), [&] {
      return "dim g_" + std::to_string(m) + " = " + std::to_string(basis.dim()) + ", expected " + std::to_string(spec.dim());
    });
    for (std::size_t i = 0; i < basis.dim(); ++i) {
      const auto report = membership(*ctx.config, m, basis.elements[i]);
      t.expect(report.member, [&] { return "basis element " + std::to_string(i) + " of g_" + std::to_string(m) + ": " + report.reason; });
    }
  }
  return t.finish("dim g_m = " + std::to_string(spec.dim()) + " for m in " + std::to_string(ctx.run.degrees.lo) + ".." +
                  std::to_string(ctx.run.degrees.hi));
}

SuiteResult residue_eigenvalue_suite(Context& ctx, Rng& rng) {
  Tally t;
  for (std::size_t trial = 0; trial < ctx.run.trials; ++trial) {
    const int k = random_degree(rng, ctx.run.degrees);
    const int l = random_degree(rng, ctx.run.degrees);
    const auto L = random_member(ctx.cache, rng, k);
    const auto L2 = random_member(ctx.cache, rng, l);
    for (std::size_t s = 0; s < ctx.config->point_count(); ++s) {
      const auto pair = residue_eigenvalue_check(*ctx.config, s, L, L2);
      t.expect(pair.agree(), [&] {
        return pair_label(trial, k, l) + ": res tr L dL' = " + to_string(pair.lhs) + " but c kappa([L, L']) = " + to_string(pair.rhs);
      });
      const auto lam = connection_residue_check(ctx.lambda, s, L);
      t.expect(lam.agree(), [&] {
        return pair_label(trial, k, l) + ": res tr L Lambda = " + to_string(lam.lhs) + " but c kappa(L) = " + to_string(lam.rhs);
      });
    }
  }
  if (ctx.config->point_count() == 0) return t.finish("no Tyurin points");
  return t.finish("residues match c kappa with c = " + std::to_string(family_factor(ctx.config->spec())));
}

SuiteResult regularity_suite(Context& ctx, Rng& rng) {
  Tally t;
  const auto check = check_connection(ctx.lambda);
  t.expect(check.valid, [&] { return "connection form: " + check.first_violation; });
  for (std::size_t trial = 0; trial < ctx.run.trials; ++trial) {
    const int k = random_degree(rng, ctx.run.degrees);
    const int l = random_degree(rng, ctx.run.degrees);
    const auto L = random_member(ctx.cache, rng, k);
    const auto L2 = random_member(ctx.cache, rng, l);
    for (std::size_t s = 0; s < ctx.config->point_count(); ++s) {
      const auto defect = regularity_defect(ctx.lambda, s, L, L2);
      const bool holomorphic = std::all_of(defect.begin(), defect.end(), [](const auto& x) { return x.is_zero(); });
      t.expect(holomorphic, [&] {
        return pair_label(trial, k, l) + ": tr(L dL' - [L, L'] Lambda) has a pole at point " + std::to_string(s) +
               " (residue " + to_string(defect.empty() ? GaussianRational() : defect.back()) + ")";
      });
    }
  }
  return t.finish("trace form holomorphic at every Tyurin point");
}

SuiteResult cocycle_identity_suite(Context& ctx, Rng& rng) {
  Tally t;
  for (std::size_t trial = 0; trial < ctx.run.trials; ++trial) {
    const int k = random_degree(rng, ctx.run.degrees);
    const int l = random_degree(rng, ctx.run.degrees);
    const int m = random_degree(rng, ctx.run.degrees);
    const auto L = random_member(ctx.cache, rng, k);
    const auto L2 = random_member(ctx.cache, rng, l);
    const auto L3 = random_member(ctx.cache, rng, m);
    const auto id = cocycle_identity_check(ctx.lambda, L, L2, L3);
    t.expect(id.is_zero(), [&] { return "trial " + std::to_string(trial) + ": cocycle identity gives " + to_string(id); });
    const auto g12 = cocycle(ctx.lambda, L, L2);
    const auto g21 = cocycle(ctx.lambda, L2, L);
    t.expect((g12 + g21).is_zero(), [&] { return "trial " + std::to_string(trial) + ": not antisymmetric"; });
    t.expect(cocycle(ctx.lambda, L, L).is_zero(), [&] { return "trial " + std::to_string(trial) + ": gamma(L, L) != 0"; });
  }
  return t.finish(std::to_string(ctx.run.trials) + " random triples");
}

SuiteResult locality_suite(Context& ctx, Rng&) {
  Tally t;
  const auto table = cocycle_table(ctx.cache, ctx.lambda, ctx.run.degrees.lo, ctx.run.degrees.hi);
  const auto& w = table.window;
  int seen_lo = 0;
  int seen_hi = 0;
  bool any = false;
  for (const auto& e : table.values) {
    if (e.value.is_zero()) continue;
    const int sum = e.k + e.l;
    seen_lo = any ? std::min(seen_lo, sum) : sum;
    seen_hi = any ? std::max(seen_hi, sum) : sum;
    any = true;
  }
  t.expect(table.regular, [] { return "table: residue at a Tyurin point"; });
  t.expect(table.antisymmetric, [] { return "table not antisymmetric"; });
  t.expect(table.local, [&] {
    return "nonzero value with k + l in [" + std::to_string(seen_lo) + ", " + std::to_string(seen_hi) +
           "] outside window [" + std::to_string(w.lower) + ", " + std::to_string(w.upper) + "]";
  });
  t.expect(!any || (seen_lo >= w.lower_alt && seen_hi <= w.upper), [&] { return "values outside [lower_alt, upper]"; });
  std::string summary = "window [" + std::to_string(w.lower) + ", " + std::to_string(w.upper) + "]";
  if (any) summary += ", nonzero k + l in [" + std::to_string(seen_lo) + ", " + std::to_string(seen_hi) + "]";
  return t.finish(summary);
}

SuiteResult loop_reduction_suite(Context& ctx, Rng&) {
  Tally t;
  const AlgebraSpec& spec = ctx.config->spec();
  const auto config0 = make_config(spec, {});
  BasisCache cache0(config0);
  const DegreeRange& d = ctx.run.degrees;

  // X_a with g_m = span {X_a z^m}.
  auto monomial_coeffs = [&](int m) {
    std::vector<ExactMatrix> xs;
    for (const auto& e : cache0.at(m).elements) {
      const bool monomial = e.poly_min() == m && e.poly_coeffs().size() == 1;
      t.expect(monomial, [&] { return "g_" + std::to_string(m) + " element is not a monomial X z^m"; });
      xs.push_back(e.poly_coeff(m));
    }
    return xs;
  };
  auto coords_matrix = [&](const std::vector<ExactMatrix>& xs) {
    ExactMatrix out(spec.dim(), xs.size());
    for (std::size_t c = 0; c < xs.size(); ++c) {
      const auto v = spec.coordinates(xs[c]);
      for (std::size_t r = 0; r < spec.dim(); ++r) out(r, c) = v[r];
    }
    return out;
  };

  for (int m = d.lo; m <= d.hi; ++m) {
    const auto xs = monomial_coeffs(m);
    t.expect(xs.size() == spec.dim() && mat_rank(coords_matrix(xs)) == spec.dim(),
             [&] { return "g_" + std::to_string(m) + " does not span g z^m"; });
  }

  const int sample[] = {d.lo, 0, d.hi};
  for (int k : sample)
    for (int l : sample) {
      const auto sc = structure_constants(cache0, k, l);
      t.expect(sc.closed && sc.graded, [&] { return "structure constants (" + std::to_string(k) + ", " + std::to_string(l) + "): " + sc.first_violation; });
      const auto xk = monomial_coeffs(k);
      const auto xl = monomial_coeffs(l);
      const auto target = coords_matrix(monomial_coeffs(k + l));
      for (std::size_t i = 0; i < xk.size(); ++i)
        for (std::size_t j = 0; j < xl.size(); ++j) {
          const auto expected = mat_solve_affine(target, spec.coordinates(commutator(xk[i], xl[j])));
          t.expect(expected && *expected == sc.values[i][j], [&] {
            return "structure constant (" + std::to_string(k) + ", " + std::to_string(i) + ", " + std::to_string(l) +
                   ", " + std::to_string(j) + ") differs from g tensor monomials";
          });
        }
    }

  const auto lambda0 = construct_connection(config0, 0);
  for (int i = d.lo; i <= d.hi; ++i)
    for (int j = d.lo; j <= d.hi; ++j) {
      const auto& bi = cache0.at(i).elements;
      const auto& bj = cache0.at(j).elements;
      for (const auto& x : bi)
        for (const auto& y : bj) {
          const auto value = cocycle(lambda0, x, y);
          const GaussianRational expected =
              i + j == 0 ? GaussianRational(-i) * trace_of_product(x.poly_coeff(i), y.poly_coeff(j)) : GaussianRational();
          t.expect(value == expected, [&] {
            return "gamma(X z^" + std::to_string(i) + ", Y z^" + std::to_string(j) + ") = " + to_string(value) +
                   ", monomial rule gives " + to_string(expected);
          });
        }
    }
  return t.finish("K = 0 reproduces g tensor monomials and -i delta tr(XY)");
}

SuiteResult gl_split_suite(Context& ctx, Rng& rng) {
  Tally t;
  const std::size_t N = ctx.config->spec().size();
  const int n = static_cast<int>(N);
  const auto gl_config = rebind_config(*ctx.config, AlgebraSpec(Family::gl, n));
  const auto sl_config = rebind_config(*ctx.config, AlgebraSpec(Family::sl, n));
  BasisCache gl_cache(gl_config);
  const auto identity = RationalMatrixFunction::monomial(gl_config, ExactMatrix::identity(N), 0);
  for (std::size_t trial = 0; trial < ctx.run.trials; ++trial) {
    const int m = random_degree(rng, ctx.run.degrees);
    const auto L = random_member(gl_cache, rng, m);
    for (std::size_t s = 0; s < gl_config->point_count(); ++s) {
      const auto r = residue_of_trace_form(L, OneForm{identity}, MarkedPoint::tyurin(s));
      t.expect(r.is_zero(), [&] { return "trial " + std::to_string(trial) + ": tr L has residue " + to_string(r) + " at point " + std::to_string(s); });
    }
    const auto split = gl_split(L);
    t.expect(split.traceless + split.scalar == L, [&] { return "trial " + std::to_string(trial) + ": split does not add back up"; });
    bool scalar_ok = true;
    for (std::size_t s = 0; s < gl_config->point_count(); ++s) scalar_ok &= split.scalar.pole_order(s) == 0;
    for (const auto& c : split.scalar.poly_coeffs()) scalar_ok &= c == ExactMatrix::identity(N) * c(0, 0);
    t.expect(scalar_ok, [&] { return "trial " + std::to_string(trial) + ": scalar part is not A(z) id with A regular at the Tyurin points"; });
    const auto traceless = membership(*sl_config, m, split.traceless.rebind(sl_config));
    t.expect(traceless.member, [&] { return "trial " + std::to_string(trial) + ": traceless part not in sl: " + traceless.reason; });
  }
  return t.finish(std::to_string(ctx.run.trials) + " gl(" + std::to_string(n) + ") members split");
}

using Suite = SuiteResult (*)(Context&, Rng&);

struct SuiteEntry {
  const char* name;
  const char* property;
  Suite run;
};

const SuiteEntry kSuites[] = {
    {"closure", "brackets of members stay in the algebra with the predicted local data", closure_suite},
    {"grading-dimension", "dim g_m = dim g, with full per-point constraint rank", grading_suite},
    {"residue-eigenvalue", "res tr L dL' = c kappa([L, L']) and res tr L Lambda = c kappa(L)", residue_eigenvalue_suite},
    {"regularity", "tr(L dL' - [L, L'] Lambda) is holomorphic at the Tyurin points", regularity_suite},
    {"cocycle-identity", "gamma is antisymmetric and satisfies the 2-cocycle identity", cocycle_identity_suite},
    {"locality", "gamma(g_k, g_l) vanishes outside the window from Lambda's orders", locality_suite},
    {"loop-reduction", "without Tyurin points the algebra is g tensor Laurent polynomials", loop_reduction_suite},
    {"gl-split", "gl = sl + A id with the scalar part regular at the Tyurin points", gl_split_suite},
};

Json lambda_summary(const ConnectionForm& lambda) {
  auto order = [](const std::optional<int>& m) { return m ? Json(*m) : Json(nullptr); };
  return Json{{"pole_order", lambda.pole_order},
              {"m_plus", order(lambda.m_plus)},
              {"m_minus", order(lambda.m_minus)},
              {"window", to_json(locality_window(lambda))}};
}

}  // namespace

bool VerifyReport::passed() const {
  return !suites.empty() && std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

VerifyReport run_verify(const RunConfig& run, const std::optional<Json>& lambda_json) {
  VerifyReport report;
  report.config = to_json(run);
  for (std::size_t attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    report.attempts = attempt + 1;
    report.suites.clear();
    try {
      const ConfigPtr config = materialize(run, attempt);
      Context ctx{run, config, BasisCache(config), {}};
      report.configuration = to_json(*ctx.config);
      for (int m = run.degrees.lo; m <= run.degrees.hi; ++m) ctx.cache.at(m);
      ctx.lambda = lambda_json ? connection_from_json(ctx.config, *lambda_json) : construct_connection(ctx.config, run.max_pole);
      report.lambda = lambda_summary(ctx.lambda);

      const std::uint64_t attempt_seed = derive_seed(run.seed, 1000 + attempt);
      for (std::size_t i = 0; i < std::size(kSuites); ++i) {
        Rng rng(derive_seed(attempt_seed, i));
        SuiteResult r;
        try {
          r = kSuites[i].run(ctx, rng);
        } catch (const DegenerateConfiguration&) {
          throw;
        } catch (const LaxError& e) {
          r.passed = false;
          r.detail = e.what();
        }
        r.name = kSuites[i].name;
        r.property = kSuites[i].property;
        report.suites.push_back(std::move(r));
      }
      return report;
    } catch (const DegenerateConfiguration& e) {
      if (run.tyurin || attempt == kMaxReseeds) {
        for (const auto& s : kSuites)
          report.suites.push_back({s.name, s.property, false, 0, std::string("degenerate configuration: ") + e.what()});
        return report;
      }
    } catch (const NoConnectionFound& e) {
      if (run.tyurin || attempt == kMaxReseeds) {
        for (const auto& s : kSuites)
          report.suites.push_back({s.name, s.property, false, 0, std::string("no connection form: ") + e.what()});
        return report;
      }
    }
  }
  return report;
}

Json to_json(const VerifyReport& report) {
  Json suites = Json::array();
  for (const auto& s : report.suites)
    suites.push_back(Json{{"name", s.name}, {"property", s.property}, {"passed", s.passed}, {"checks", s.checks}, {"detail", s.detail}});
  return Json{{"config", report.config},
              {"attempts", report.attempts},
              {"configuration", report.configuration},
              {"lambda", report.lambda},
              {"suites", suites},
              {"passed", report.passed()}};
}

}  // namespace lax
