#include "hyerslab/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "hyerslab/approximate.hpp"
#include "hyerslab/control.hpp"
#include "hyerslab/gajda.hpp"
#include "hyerslab/symmetric.hpp"
#include "hyerslab/types.hpp"

namespace hyerslab {

Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "zeta-branch") return Fault::ZetaBranch;
  throw ConfigError("unknown fault '" + name + "' (known: none, zeta-branch)");
}

namespace {

using Ramp = std::function<double(double, double)>;

Ramp ramp_for(Fault fault) {
  if (fault == Fault::ZetaBranch) {
    return [](double x, double eps) {
      if (x >= 1.0) return eps / 6;
      return -eps / 6;  // (-inf, 1] swallowing the middle branch
    };
  }
  return [](double x, double eps) { return zeta(x, eps); };
}

struct Check {
  InvariantResult res;
  std::size_t failures = 0;
  void fail(const std::string& what) {
    if (failures++ == 0) res.detail = what;
  }
  InvariantResult done() {
    res.pass = failures == 0;
    if (!res.pass) {
      std::ostringstream m;
      m << failures << " failure(s); first: " << res.detail;
      res.detail = m.str();
    }
    return res;
  }
};

Tuple random_tuple(Rng& rng, int len, int d, double lo, double hi, bool nonzero = false) {
  Tuple t(static_cast<std::size_t>(len), Point(static_cast<std::size_t>(d)));
  for (auto& p : t)
    for (auto& v : p) {
      v = rng.uniform(lo, hi);
      if (nonzero && std::fabs(v) < 1e-3) v = 0.5;
    }
  return t;
}

std::vector<SymmetricSpec> catalog(int n, int d) {
  std::vector<SymmetricSpec> specs{{n, d, ExactMultiadditive{1.5}},
                                   {n, d, PowerPerturbed{1.0, 0.1, 0.5}},
                                   {n, d, PowerPerturbed{-2.0, 0.3, 2.0}},
                                   {n, d, AbsProduct{1.0}}};
  if (d == 1 && n >= 2) specs.push_back({n, d, GajdaMulti{6.0}});
  return specs;
}

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(17);
  o << v;
  return o.str();
}

InvariantResult symmetry(Rng& rng) {
  Check c{{"core.symmetry", false, ""}};
  for (int n = 1; n <= 4; ++n)
    for (int d : {1, 2})
      for (const auto& spec : catalog(n, d))
        for (int s = 0; s < 50; ++s) {
          auto y = random_tuple(rng, n, d, -5, 5);
          const double base = evaluate_symmetric(spec, y);
          auto perm = y;
          std::sort(perm.begin(), perm.end());
          do {
            if (evaluate_symmetric(spec, perm) != base) c.fail(describe(spec));
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
  return c.done();
}

InvariantResult multiadditive_kernel(Rng& rng) {
  Check c{{"core.multiadditive_kernel", false, ""}};
  for (int n = 1; n <= 5; ++n)
    for (int d : {1, 3}) {
      const SymmetricSpec spec{n, d, ExactMultiadditive{2.5}};
      for (int s = 0; s < 200; ++s) {
        auto z = random_tuple(rng, n + 1, d, -10, 10);
        const double dv = defect(spec, z);
        // rounding scale: |c| prod_{i<n} ||x_i||_1 (||x_n||_1 + ||x_{n+1}||_1), 4 ulp per operation
        auto l1 = [](const Point& p) {
          double t = 0;
          for (double v : p) t += std::fabs(v);
          return t;
        };
        double scale = 2.5 * (l1(z[n - 1]) + l1(z[n]));
        for (int i = 0; i + 1 < n; ++i) scale *= l1(z[i]);
        const double tol = 4.0 * (d + n + 1) * std::numeric_limits<double>::epsilon() * scale;
        if (std::fabs(dv) > tol) c.fail("n=" + std::to_string(n) + " defect " + fmt(dv));
      }
    }
  return c.done();
}

const double kRValues[] = {-1, -0.5, 0, 0.25, 0.5, 0.75, 1.5, 2, 3};

InvariantResult fold_homogeneity(Rng& rng) {
  Check c{{"core.fold_homogeneity", false, ""}};
  for (int n = 2; n <= 5; ++n)
    for (double r : kRValues) {
      const PowerControl phi{n, 0.7, r};
      for (int s = 0; s < 20; ++s) {
        auto y = random_tuple(rng, n, 2, -3, 3, true);
        const double lhs = fold_control(phi, scale_tuple(y, 1));
        const double rhs = std::pow(2.0, n * r) * fold_control(phi, y);
        if (!rel_close(lhs, rhs, 1e-12)) c.fail("n=" + std::to_string(n) + " r=" + fmt(r));
      }
    }
  return c.done();
}

InvariantResult fold_closed_form(Rng& rng) {
  Check c{{"core.fold_closed_form", false, ""}};
  for (int n = 2; n <= 5; ++n)
    for (double r : kRValues) {
      const PowerControl phi{n, 1.3, r};
      for (int s = 0; s < 20; ++s) {
        auto y = random_tuple(rng, n, 1, -4, 4, true);
        double prod = 1.0;
        for (const auto& p : y) prod *= power_norm(p, r);
        if (!rel_close(fold_control(phi, y), phi.eps * kappa(n, r) * prod, 1e-10))
          c.fail("n=" + std::to_string(n) + " r=" + fmt(r));
      }
    }
  return c.done();
}

InvariantResult series_closed_form(Rng& rng) {
  Check c{{"core.series_closed_form", false, ""}};
  for (int n = 1; n <= 4; ++n)
    for (double r : kRValues) {
      const Mode mode = mode_for(r);
      const PowerControl phi{n, 0.9, r};
      for (int s = 0; s < 10; ++s) {
        auto y = random_tuple(rng, n, 1, -4, 4, true);
        const double total = stabilizer_series(phi, y, mode, 40).total();
        if (!rel_close(total, stabilizer_closed_form(phi, y, mode), 1e-10))
          c.fail("n=" + std::to_string(n) + " r=" + fmt(r));
      }
    }
  return c.done();
}

struct Pairing {
  SymmetricSpec spec;
  PowerControl phi;
};

std::vector<Pairing> admissible_pairs(int n) {
  std::vector<Pairing> v{{{n, 1, ExactMultiadditive{1.0}}, {n, 0.5, 0.5}},
                         {{n, 1, PowerPerturbed{1.0, 0.1, 0.5}}, {n, 0.1, 0.5}},
                         {{n, 1, PowerPerturbed{1.0, 0.1, 2.0}}, {n, 0.1, 2.0}},
                         {{n, 2, PowerPerturbed{-1.0, 0.2, 0.25}}, {n, 0.2, 0.25}},
                         {{n, 1, AbsProduct{1.0}}, {n, 1.0, 1.0}}};
  if (n >= 2) v.push_back({{n, 1, GajdaMulti{6.0}}, {n, 6.0, 1.0}});
  return v;
}

InvariantResult double_step(Rng& rng) {
  Check c{{"core.double_step_inequality", false, ""}};
  for (int n = 1; n <= 4; ++n)
    for (const auto& [spec, phi] : admissible_pairs(n))
      for (int s = 0; s < 100; ++s) {
        auto y = random_tuple(rng, n, spec.d, -6, 6);
        const double g2 = evaluate_symmetric(spec, scale_tuple(y, 1));
        const double g1 = evaluate_symmetric(spec, y);
        const double lhs = std::fabs(g2 - std::ldexp(g1, n));
        const double tol = 64 * std::numeric_limits<double>::epsilon() * (std::fabs(g2) + std::ldexp(std::fabs(g1), n));
        if (lhs > fold_control(phi, y) + tol) c.fail(describe(spec));
      }
  return c.done();
}

InvariantResult fixed_point(Rng& rng) {
  Check c{{"core.fixed_point", false, ""}};
  for (int n = 1; n <= 3; ++n) {
    const SymmetricSpec spec{n, 1, ExactMultiadditive{1.0}};
    for (double r : {0.5, 2.0}) {
      const PowerControl phi{n, 1.0, r};
      for (int s = 0; s < 10; ++s) {
        auto y = random_tuple(rng, n, 1, -4, 4);
        // n = 1, r = 0.5 decays like 2^{-k/2}; allow enough steps to certify
        const auto res = approximate(spec, phi, y, mode_for(r), {200, 1e-12}, std::nullopt);
        const double g = evaluate_symmetric(spec, y);
        bool constant = true;
        for (const auto& [k, v] : res.trace) constant = constant && rel_close(v, g, 1e-14);
        if (!rel_close(res.value, g, 1e-12) || !constant || !res.certified ||
            std::fabs(res.value - g) > res.bound + 1e-15)
          c.fail("n=" + std::to_string(n) + " r=" + fmt(r));
      }
    }
  }
  return c.done();
}

InvariantResult uniqueness(Rng& rng) {
  Check c{{"core.uniqueness_offsets", false, ""}};
  for (double r : {0.5, 2.0}) {
    const SymmetricSpec spec{2, 1, PowerPerturbed{1.0, 0.1, r}};
    const PowerControl phi{2, 0.1, r};
    for (int s = 0; s < 20; ++s) {
      auto y = random_tuple(rng, 2, 1, -4, 4);
      const double base = approximate_from_offset(spec, phi, y, mode_for(r), 0, {}).value;
      for (int k0 = 1; k0 <= 3; ++k0) {
        const double v = approximate_from_offset(spec, phi, y, mode_for(r), k0, {}).value;
        if (!rel_close(v, base, 1e-10)) c.fail("r=" + fmt(r) + " k0=" + std::to_string(k0));
      }
    }
  }
  return c.done();
}

InvariantResult certificate(Rng& rng) {
  Check c{{"core.direct_method_certificate", false, ""}};
  for (int n = 1; n <= 3; ++n)
    for (const auto& [spec, phi] : admissible_pairs(n)) {
      if (phi.r == 1.0) continue;
      for (int s = 0; s < 20; ++s) {
        auto y = random_tuple(rng, n, spec.d, -4, 4);
        const auto res = approximate(spec, phi, y, mode_for(phi.r), {}, std::nullopt);
        if (std::fabs(res.value - res.g) > res.bound * (1 + 1e-12) + 1e-300) c.fail(describe(spec));
      }
    }
  return c.done();
}

InvariantResult gajda_oracle(Rng& rng, const Ramp& ramp) {
  Check c{{"counterexamples.gajda_exact_vs_series", false, ""}};
  for (int s = 0; s < 10000; ++s) {
    const double x = rng.uniform(-10, 10);
    const auto series = gajda_series(x, 6.0, 60, ramp);
    if (std::fabs(series.value - gajda_exact(x, 6.0)) > series.tail_bound) c.fail("x=" + fmt(x));
  }
  return c.done();
}

InvariantResult gajda_bounded(Rng& rng) {
  Check c{{"counterexamples.boundedness", false, ""}};
  for (int s = 0; s < 10000; ++s) {
    const double x = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.bits() % 80) - 40);
    if (std::fabs(gajda_exact(x, 3.0)) > 1.0 * (1 + 1e-15)) c.fail("x=" + fmt(x));
  }
  return c.done();
}

InvariantResult oddness(Rng& rng, const Ramp& ramp) {
  Check c{{"counterexamples.oddness", false, ""}};
  for (int s = 0; s < 10000; ++s) {
    const double x = rng.uniform(-5, 5);
    if (gajda_exact(-x, 2.0) != -gajda_exact(x, 2.0)) c.fail("f_G at x=" + fmt(x));
    if (ramp(-x, 2.0) != -ramp(x, 2.0)) c.fail("zeta at x=" + fmt(x));
  }
  return c.done();
}

InvariantResult scaling_identity(Rng& rng, const Ramp& ramp) {
  Check c{{"counterexamples.scaling_identity", false, ""}};
  for (int s = 0; s < 10000; ++s) {
    const double x = rng.uniform(-5, 5);
    const double lhs = gajda_exact(2 * x, 6.0);
    const double rhs = 2 * (gajda_exact(x, 6.0) - ramp(x, 6.0));
    if (std::fabs(lhs - rhs) > 1e-12 * std::max({std::fabs(lhs), std::fabs(rhs), 1e-300}))
      c.fail("x=" + fmt(x));
  }
  return c.done();
}

InvariantResult cauchy_bound(Rng& rng) {
  Check c{{"counterexamples.cauchy_defect_bound", false, ""}};
  for (int s = 0; s < 100000; ++s) {
    const double x = rng.uniform(-100, 100), y = rng.uniform(-100, 100);
    const double eps = 1.0;
    if (std::fabs(cauchy_defect(x, y, eps)) > eps * (std::fabs(x) + std::fabs(y)) * (1 + 1e-12))
      c.fail("x=" + fmt(x) + " y=" + fmt(y));
  }
  return c.done();
}

InvariantResult multi_defect_bound(Rng& rng) {
  Check c{{"counterexamples.gajda_multi_defect_bound", false, ""}};
  for (int n = 2; n <= 4; ++n) {
    const SymmetricSpec spec{n, 1, GajdaMulti{6.0}};
    const PowerControl phi{n, 6.0, 1.0};
    for (int s = 0; s < 20000; ++s) {
      auto z = random_tuple(rng, n + 1, 1, -10, 10);
      const double lhs = std::fabs(defect(spec, z));
      const double tol = 64 * std::numeric_limits<double>::epsilon() * defect_magnitude(spec, z);
      if (lhs > evaluate_control(phi, z) + tol) c.fail("n=" + std::to_string(n));
    }
  }
  return c.done();
}

InvariantResult witness_validity() {
  Check c{{"counterexamples.witness_validity", false, ""}};
  for (int n = 2; n <= 4; ++n)
    for (double coef : {0.0, 1.0, -1.0, 10.0, -10.0, 0.37}) {
      const SymmetricSpec a_spec{n, 1, ExactMultiadditive{coef}};
      SymmetricMap a = [&](const std::vector<double>& x) {
        Tuple t;
        for (double v : x) t.push_back({v});
        return evaluate_symmetric(a_spec, t);
      };
      const auto m = reduce_to_additive(a, n, 6.0);
      for (double delta : {0.25, 1.0, 10.0, 100.0}) {
        try {
          const auto w = find_witness(m, 6.0, delta);
          const double direct = std::fabs(gajda_exact(w.x_star, 6.0) - m.slope * w.x_star);
          if (!w.valid() || !(direct > delta * std::fabs(w.x_star)))
            c.fail("n=" + std::to_string(n) + " c=" + fmt(coef) + " delta=" + fmt(delta));
        } catch (const std::exception& e) {
          c.fail(e.what());
        }
      }
    }
  return c.done();
}

}  // namespace

std::vector<InvariantResult> run_selftest(const SelftestOptions& opts) {
  const Ramp ramp = ramp_for(opts.fault);
  std::vector<InvariantResult> out;
  // each suite draws from its own stream so results do not depend on order
  auto rng = [&](std::uint64_t k) { return Rng(opts.seed + 0x9E3779B97F4A7C15ULL * k); };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  {
    auto g = rng(1);
    guarded("core.symmetry", [&] { return symmetry(g); });
  }
  {
    auto g = rng(2);
    guarded("core.multiadditive_kernel", [&] { return multiadditive_kernel(g); });
  }
  {
    auto g = rng(3);
    guarded("core.fold_homogeneity", [&] { return fold_homogeneity(g); });
  }
  {
    auto g = rng(4);
    guarded("core.fold_closed_form", [&] { return fold_closed_form(g); });
  }
  {
    auto g = rng(5);
    guarded("core.series_closed_form", [&] { return series_closed_form(g); });
  }
  {
    auto g = rng(6);
    guarded("core.double_step_inequality", [&] { return double_step(g); });
  }
  {
    auto g = rng(7);
    guarded("core.fixed_point", [&] { return fixed_point(g); });
  }
  {
    auto g = rng(8);
    guarded("core.uniqueness_offsets", [&] { return uniqueness(g); });
  }
  {
    auto g = rng(9);
    guarded("core.direct_method_certificate", [&] { return certificate(g); });
  }
  {
    auto g = rng(10);
    guarded("counterexamples.gajda_exact_vs_series", [&] { return gajda_oracle(g, ramp); });
  }
  {
    auto g = rng(11);
    guarded("counterexamples.boundedness", [&] { return gajda_bounded(g); });
  }
  {
    auto g = rng(12);
    guarded("counterexamples.oddness", [&] { return oddness(g, ramp); });
  }
  {
    auto g = rng(13);
    guarded("counterexamples.scaling_identity", [&] { return scaling_identity(g, ramp); });
  }
  {
    auto g = rng(14);
    guarded("counterexamples.cauchy_defect_bound", [&] { return cauchy_bound(g); });
  }
  {
    auto g = rng(15);
    guarded("counterexamples.gajda_multi_defect_bound", [&] { return multi_defect_bound(g); });
  }
  guarded("counterexamples.witness_validity", [&] { return witness_validity(); });
  return out;
}

}  // namespace hyerslab
