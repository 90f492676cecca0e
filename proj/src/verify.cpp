#include "rauzy2/verify.hpp"

namespace rauzy2 {

namespace {

void merge(CheckReport& into, const CheckReport& from, const std::string& prefix = {}) {
  for (const auto& c : from.checks) into.add(prefix + c.name, c.passed, c.detail);
}

SignedPatch sigma_seed(const CaseSpec& spec) {
  return seed(spec.delta_is_identity() ? SeedKind::U : SeedKind::U_tilde, spec);
}

// A fixed signed patch exercising coefficients other than +-1.
SignedPatch mixed_patch() {
  return SignedPatch{{{{0, 0}, 1}, 2}, {{{1, -1}, 2}, -1}, {{{-2, 3}, 1}, 1}, {{{3, 1}, 2}, 3}, {{{-1, -2}, 2}, -2}};
}

}  // namespace

CheckReport check_dual_laws(const CaseSpec& spec, unsigned n_max) {
  CheckReport r;
  const std::vector<std::pair<std::string, Endomorphism>> maps{
      {"sigma", spec.sigma}, {"tau", spec.tau}, {"delta", spec.delta}, {"delta^-1", spec.delta_inv}};
  const std::vector<SignedPatch> patches{seed(SeedKind::U, spec), seed(SeedKind::U_prime, spec), sigma_seed(spec),
                                         mixed_patch()};
  for (const auto& [n1, s1] : maps)
    for (const auto& [n2, s2] : maps) {
      bool ok = true;
      DualMap d1(s1), d2(s2), d12(compose(s1, s2));
      for (const auto& p : patches) ok = ok && d12.apply(p) == d2.apply(d1.apply(p));
      r.add("(" + n1 + " o " + n2 + ")* = " + n2 + "* o " + n1 + "*", ok);
    }
  bool alt = true;
  for (const auto& p : patches)
    for (const auto& [name, e] : maps) alt = alt && tiling_substitution_alt(e, p) == tiling_substitution(e, p);
  r.add("negative-letter cross-check form", alt);
  for (unsigned n = 0; n <= n_max; ++n) {
    bool ok = true;
    for (const auto& p : patches)
      ok = ok && iterate_dual(spec, DualWhich::sigma, p, n) == iterate_dual(spec, DualWhich::delta_composed, p, n);
    r.add("sigma*^" + std::to_string(n) + " = delta* tau*^" + std::to_string(n) + " (delta^-1)*", ok);
  }
  return r;
}

CheckReport check_surface_closure(const CaseSpec& spec, unsigned n_max) {
  CheckReport r;
  EigenData et = eigen_for(spec, System::tau);
  SurfaceConvention s = surface_convention(spec, System::tau, Strictness::S);
  SurfaceConvention sp = surface_convention(spec, System::tau, Strictness::S_prime);
  bool alternative = classify(spec.tau) == EndoClass::alternative_substitution;
  DualMap tau(spec.tau);
  SignedPatch u = seed(SeedKind::U, spec), up = seed(SeedKind::U_prime, spec);
  for (unsigned n = 0; n <= n_max; ++n) {
    bool swap = alternative && n % 2 == 1;
    bool ok = patch_in_G(u, et, swap ? sp : s) && patch_in_G(up, et, swap ? s : sp) && connected(u) && connected(up);
    r.add("tau*^" + std::to_string(n) + "(U), tau*^" + std::to_string(n) + "(U') on the tau surface" +
              (swap ? " (alternating)" : ""),
          ok, std::to_string(u.size()) + " segments");
    u = tau.apply(u);
    up = tau.apply(up);
  }

  EigenData es = eigen_for(spec, System::sigma);
  SurfaceConvention ss = surface_convention(spec, System::sigma, Strictness::S);
  DualMap sigma(spec.sigma);
  SignedPatch v = sigma_seed(spec);
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n >= 1 && n % static_cast<unsigned>(spec.power) == 0) {
      bool ok = patch_in_G(v, es, ss) && connected(v);
      r.add("sigma*^" + std::to_string(n) + "(seed) on the sigma surface", ok, std::to_string(v.size()) + " segments");
    }
    v = sigma.apply(v);
  }
  return r;
}

CheckReport check_replacement(const CaseSpec& spec, std::int64_t radius) {
  CheckReport r;
  if (spec.delta_is_identity()) return r;
  DualMap delta(spec.delta);
  std::size_t tested = 0, bad = 0;
  std::string first_bad;
  for (std::int64_t x1 = -radius; x1 <= radius; ++x1)
    for (std::int64_t x2 = -radius; x2 <= radius; ++x2)
      for (int star = 1; star <= 2; ++star) {
        Segment s{{x1, x2}, star};
        ++tested;
        if (!(replacement_map(spec, s) == delta.apply(SignedPatch{{s, 1}}))) {
          ++bad;
          if (first_bad.empty()) first_bad = s.to_string();
        }
      }
  r.add("replacement method equals delta*", bad == 0,
        std::to_string(tested) + " segments" + (first_bad.empty() ? "" : ", first mismatch " + first_bad));
  return r;
}

namespace {

struct ConvergenceSetup {
  EigenData ed;
  SurfaceConvention conv;
  SignedPatch seed;
  DualMap map;
};

ConvergenceSetup convergence_setup(const CaseSpec& spec, System system) {
  return {eigen_for(spec, system), surface_convention(spec, system),
          system == System::sigma ? sigma_seed(spec) : seed(SeedKind::U, spec), DualMap(system_map(spec, system))};
}

}  // namespace

std::optional<unsigned> convergence_level(const CaseSpec& spec, System system, std::int64_t radius, unsigned n_max) {
  ConvergenceSetup cs = convergence_setup(spec, system);
  SignedPatch oracle = oriented_surface(spec, system, radius).window(radius - 1);
  SignedPatch p = cs.seed;
  for (unsigned n = 1; n <= n_max; ++n) {
    p = cs.map.apply(p);
    if (n % static_cast<unsigned>(spec.power) == 0 && p.window(radius - 1) == oracle) return n;
  }
  return std::nullopt;
}

bool window_subset(const CaseSpec& spec, System system, std::int64_t radius, unsigned n_max) {
  ConvergenceSetup cs = convergence_setup(spec, system);
  SignedPatch oracle = oriented_surface(spec, system, radius).window(radius - 1);
  SignedPatch p = cs.seed;
  for (unsigned n = 1; n <= n_max; ++n) {
    p = cs.map.apply(p);
    if (n % static_cast<unsigned>(spec.power) != 0) continue;
    for (const auto& [seg, c] : p.window(radius - 1))
      if (oracle.coefficient(seg) != c) return false;
  }
  return true;
}

CheckReport check_set_equations(const CaseSpec& spec, unsigned n) {
  CheckReport r;
  for (SetEquation v : {SetEquation::substitution, SetEquation::alternative_single, SetEquation::alternative_double,
                        SetEquation::conjugated}) {
    if (!set_equation_applies(spec, v)) continue;
    SetEquationReport rep = set_equation_residual(spec, v, n);
    for (const auto& e : rep.entries) {
      const std::string tag = to_string(v) + " " + e.label;
      r.add(tag + " residual within bound", e.deviation <= e.bound,
            "deviation " + to_float(e.deviation, 15) + ", bound " + to_float(e.bound, 15));
      r.add(tag + " members overlap within bound", e.overlap <= e.member_error * Rational(2),
            "overlap " + to_float(e.overlap, 15));
      r.add(tag + " union is an interval", e.single_interval, std::to_string(e.members) + " members");
    }
  }
  return r;
}

CheckReport check_length_law(const CaseSpec& spec, const Rational& tol) {
  CheckReport r;
  for (System system : {System::tau, System::sigma}) {
    QuadNum total, lengths;
    bool first = true;
    for (Letter sym : symbols(spec, system)) {
      FractalTarget t = FractalTarget::piece(system, sym);
      LimitResult lr = limit_interval(spec, t, tol);
      QuadNum len = lr.interval.length();
      r.add("length of " + t.to_string() + " equals the projected seed length", lr.law_ok,
            "n = " + std::to_string(lr.n) + ", length " + to_float(len, 12) + ", error " + to_float(lr.interval.error, 3));
      Interval ex = exact_fractal(spec, t);
      r.add("exact endpoints of " + t.to_string() + " inside the certified limit",
            (ex.lo - lr.interval.lo).abs() <= lr.interval.error && (ex.hi - lr.interval.hi).abs() <= lr.interval.error);
      lengths = first ? ex.length() : lengths + ex.length();
      first = false;
    }
    Interval whole = exact_fractal(spec, FractalTarget::whole(system));
    r.add("pieces of X_" + to_string(system) + " add up to X", whole.length() == lengths);
  }
  return r;
}

CheckReport check_orbit_coding(const CaseSpec& spec, std::size_t steps, const Rational& tol) {
  CheckReport r;
  PeriodicPoints pp = periodic_point_prefix(spec, steps);
  for (System system : {System::sigma, System::tau}) {
    PartitionSpec part = build_partition(spec, system, tol);
    const std::vector<Letter>& omega = system == System::sigma ? pp.sigma : pp.tau;
    Orbit orbit = domain_exchange_orbit(part, QuadNum(part.pieces[0].interval.lo.root(), 0), steps, &omega);
    std::size_t first_diff = steps;
    for (std::size_t k = 0; k < steps; ++k)
      if (orbit.coding[k] != omega[k]) {
        first_diff = k;
        break;
      }
    r.add("orbit of the origin under T_" + to_string(system) + " codes the periodic point", first_diff == steps,
          first_diff == steps ? std::to_string(steps) + " steps" : "first difference at step " + std::to_string(first_diff));
    r.add("orbit of the origin under T_" + to_string(system) + " has no boundary ambiguity", orbit.ambiguous.empty(),
          std::to_string(orbit.ambiguous.size()) + " ambiguous steps");
  }
  return r;
}

CheckReport check_structure(const CaseSpec& spec, const std::vector<unsigned>& levels, const Rational& tol) {
  CheckReport r;
  PartitionSpec tau_part = build_partition(spec, System::tau, tol);
  PartitionSpec sigma_part = build_partition(spec, System::sigma, tol);
  for (unsigned n : levels) {
    std::string tag = n == 0 ? "delta^-1-structure: "
                             : "delta^-1 tau^" + std::to_string(n * static_cast<unsigned>(spec.power)) + "-structure: ";
    merge(r, structure_check(sigma_part, delta_structure_inner(spec, tau_part, n)), tag);
  }
  if (classify(spec.sigma) == EndoClass::substitution)
    for (unsigned n : levels)
      if (n > 0)
        merge(r, structure_check(sigma_part, power_structure_inner(spec, sigma_part, n)),
              "sigma^" + std::to_string(n) + "-structure: ");
  merge(r, induced_map_check(spec, sigma_part, tau_part, 100));
  return r;
}

CheckReport verify_battery(const CaseSpec& spec, const BatteryOptions& o) {
  CheckReport r;
  auto section = [&](const std::string& name, auto&& fn) {
    try {
      merge(r, fn(), name + ": ");
    } catch (const ResourceError&) {
      throw;
    } catch (const ParameterError&) {
      throw;
    } catch (const std::exception& e) {
      r.add(name, false, e.what());
    }
  };
  section("conjugacy", [&] { return verify_conjugacy(spec); });
  section("spectrum", [&] {
    CheckReport c;
    std::string detail;
    c.add("eigenvalue brackets", brackets_hold(spec, &detail), detail);
    SpectralPredicates sp = spectral_predicates(spec.sigma);
    c.add("hyperbolic, unimodular, irreducible", sp.hyperbolic && sp.unimodular && sp.irreducible);
    auto inv = nielsen_invert(power(spec.tau, static_cast<unsigned>(spec.power)));
    c.add("tau^power invertible by Nielsen reduction",
          inv.has_value() && compose(power(spec.tau, static_cast<unsigned>(spec.power)), *inv) == Endomorphism::identity());
    return c;
  });
  section("periodic points", [&] {
    CheckReport c;
    PeriodicPoints pp = periodic_point_prefix(spec, o.orbit_steps);
    c.add("sigma periodic point = delta^-1(tau periodic point)", pp.sigma.size() == o.orbit_steps);
    return c;
  });
  section("dual laws", [&] { return check_dual_laws(spec, std::min(o.surface_n, 6u)); });
  section("surface", [&] { return check_surface_closure(spec, o.surface_n); });
  section("replacement", [&] { return check_replacement(spec, o.radius); });
  section("convergence", [&] {
    CheckReport c;
    for (System system : {System::sigma, System::tau}) {
      const std::string name = to_string(system) + " iterates match the enumerated surface";
      if (spec.id == CaseId::iv) {
        c.add(to_string(system) + " iterates lie on the enumerated surface", window_subset(spec, system, o.radius, 10));
      } else {
        auto level = convergence_level(spec, system, o.radius, 10);
        c.add(name, level.has_value(), level ? "n = " + std::to_string(*level) : "not reached by n = 10");
      }
    }
    return c;
  });
  unsigned fn = o.fractal_n + (spec.power == 2 && o.fractal_n % 2 ? 1 : 0);
  section("set equations", [&] { return check_set_equations(spec, fn); });
  section("interval law", [&] { return check_length_law(spec, o.tol); });
  section("orbit", [&] { return check_orbit_coding(spec, o.orbit_steps, o.tol); });
  section("Y-sets", [&] {
    CheckReport c;
    for (System system : {System::sigma, System::tau})
      merge(c, y_set_check(spec, build_partition(spec, system, o.tol), o.y_points, o.y_tol), to_string(system) + " ");
    return c;
  });
  section("structure", [&] { return check_structure(spec, {0, 1}, o.tol); });
  return r;
}

}  // namespace rauzy2
