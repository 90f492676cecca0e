// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "rauzy2/cli.hpp"
#include "rauzy2/verify.hpp"

using namespace rauzy2;

namespace {

// Pinned tolerances.
const Rational kOrbitTol(1, 1000000000);       // 1e-9
const Rational kLengthTol(1, 200000000);       // 5e-9, so 2 * error <= 1e-8
const Rational kLengthLawBound(1, 100000000);  // 1e-8
const Rational kYGap(1, 1000);                 // 1e-3
constexpr unsigned kDualLawN = 6;
constexpr unsigned kClosureN = 8;
constexpr std::int64_t kReplacementRadius = 6;
constexpr std::int64_t kWindowRadius = 3;
constexpr unsigned kConvergenceN = 10;
constexpr unsigned kFibonacciN = 10;
constexpr unsigned kSetEquationN = 12;
constexpr unsigned kCalibrationN = 2;
constexpr std::size_t kOrbitSteps = 1000;
constexpr std::size_t kYPoints = 5000;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

std::string label(const CaseSpec& s) { return to_string(s.id) + " a=" + std::to_string(s.a); }

std::vector<CaseSpec> minimal_cases() {
  std::vector<CaseSpec> r;
  for (CaseId id : {CaseId::i, CaseId::ii, CaseId::iii, CaseId::iv}) r.push_back(family(id, minimal_a(id)));
  return r;
}

std::vector<CaseSpec> conjugacy_sweep() {
  std::vector<CaseSpec> r;
  for (long a = 3; a <= 8; ++a) r.push_back(family(CaseId::i, a));
  for (long a = -8; a <= -3; ++a) r.push_back(family(CaseId::ii, a));
  for (long a = -8; a <= -1; ++a) r.push_back(family(CaseId::iv, a));
  return r;
}

void require_report(Outcome& o, const CaseSpec& spec, const CheckReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.passed) o.fail(label(spec) + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

Outcome conjugacy() {
  Outcome o;
  auto cases = conjugacy_sweep();
  for (const auto& spec : cases) require_report(o, spec, verify_conjugacy(spec));
  if (o.passed) o.detail = std::to_string(cases.size()) + " family members";
  return o;
}

Outcome brackets() {
  Outcome o;
  auto cases = conjugacy_sweep();
  for (const auto& spec : cases) {
    std::string detail;
    if (!brackets_hold(spec, &detail)) o.fail(label(spec) + ": " + detail);
  }
  if (o.passed) o.detail = std::to_string(cases.size()) + " family members, exact sign tests";
  return o;
}

Outcome cancellation() {
  Outcome o;
  CaseSpec c1 = family(CaseId::i, 3);
  ReducedWord w = apply_endo(c1.sigma, apply_endo(c1.sigma, ReducedWord::parse("2")));
  if (w != ReducedWord::parse("21^-1221^-12221^-122")) o.fail("got " + w.to_string());
  else if (w.size() != 11) o.fail("length " + std::to_string(w.size()));
  else o.detail = w.to_string() + ", 11 letters";
  return o;
}

Outcome dual_laws() {
  Outcome o;
  for (const auto& spec : minimal_cases()) require_report(o, spec, check_dual_laws(spec, kDualLawN));
  if (o.passed) o.detail = "composition identities and sigma*^n = delta* tau*^n (delta^-1)* for n <= 6";
  return o;
}

// delta* carries tau-surface pieces onto the sigma surface.
bool replacement_memberships(const CaseSpec& spec, std::string& where) {
  if (spec.delta_is_identity()) return true;
  EigenData et = eigen_for(spec, System::tau), es = eigen_for(spec, System::sigma);
  SurfaceConvention S{}, target = surface_convention(spec, System::sigma);
  auto on_tau = [&](const Segment& s) { return in_surface(s, et, S); };
  for (const auto& [s, c] : enumerate_surface(et, S, kReplacementRadius)) {
    Vec2 x = s.x;
    SignedPatch image;
    bool applies = true;
    switch (spec.id) {
      case CaseId::i:
        if (s.star == 1) image = replacement_map(spec, s) + replacement_map(spec, {x, 2});
        else if (!on_tau({x, 1})) image = replacement_map(spec, s);
        else applies = false;
        break;
      case CaseId::ii:
        if (s.star == 1) image = replacement_map(spec, s) + replacement_map(spec, {x - kE1 + kE2, 2});
        else if (!on_tau({x + kE1 - kE2, 1})) image = replacement_map(spec, s);
        else applies = false;
        break;
      default: image = replacement_map(spec, s);
    }
    if (applies && !patch_in_G(image, es, target)) {
      where = s.to_string();
      return false;
    }
  }
  return true;
}

Outcome closure() {
  Outcome o;
  for (const auto& spec : minimal_cases()) {
    require_report(o, spec, check_surface_closure(spec, kClosureN));
    require_report(o, spec, check_replacement(spec, kReplacementRadius));
    std::string where;
    if (!replacement_memberships(spec, where)) o.fail(label(spec) + ": delta* image of " + where + " leaves the surface");
  }
  if (o.passed) o.detail = "n <= 8, replacement on |x| <= 6";
  return o;
}

Outcome convergence() {
  Outcome o;
  std::ostringstream levels;
  for (const auto& spec : minimal_cases()) {
    auto level = convergence_level(spec, System::sigma, kWindowRadius, kConvergenceN);
    if (level) {
      levels << label(spec) << ": n=" << *level << "  ";
      continue;
    }
    bool subset = window_subset(spec, System::sigma, kWindowRadius, kConvergenceN);
    o.fail(label(spec) + ": no n <= 10 matches the window (iterates " +
           (subset ? "stay inside the surface but do not fill it" : "leave the surface") + ")");
  }
  if (o.passed) o.detail = levels.str();
  return o;
}

Outcome fibonacci_difference() {
  Outcome o;
  CaseSpec fib = family(CaseId::iii, 1);
  SignedPatch U = seed(SeedKind::U, fib), Up = seed(SeedKind::U_prime, fib);
  for (unsigned n = 0; n <= kFibonacciN; ++n)
    if (iterate_dual(fib, DualWhich::sigma, U, n) - iterate_dual(fib, DualWhich::sigma, Up, n) != U - Up)
      o.fail("differs at n=" + std::to_string(n));
  if (o.passed) o.detail = "n <= 10";
  return o;
}

Outcome set_equations() {
  Outcome o;
  double worst_ratio = 0;
  for (const auto& spec : minimal_cases())
    for (SetEquation v : {SetEquation::substitution, SetEquation::alternative_single, SetEquation::alternative_double,
                          SetEquation::conjugated}) {
      if (!set_equation_applies(spec, v)) continue;
      SetEquationReport cal = set_equation_residual(spec, v, kCalibrationN);
      SetEquationReport rep = set_equation_residual(spec, v, kSetEquationN);
      const EigenData ed = eigen_for(spec, v == SetEquation::conjugated ? System::sigma : System::tau);
      QuadNum mu = ed.lambda_prime.abs();
      for (std::size_t k = 0; k < rep.entries.size(); ++k) {
        const auto& e = rep.entries[k];
        std::string tag = label(spec) + " " + to_string(v) + " " + e.label;
        QuadNum C = cal.entries[k].deviation / mu.pow(kCalibrationN);
        QuadNum bound = C * mu.pow(kSetEquationN) * Rational(2);
        if (e.deviation > bound) o.fail(tag + ": deviation " + to_float(e.deviation, 6) + " above " + to_float(bound, 6));
        if (e.deviation > e.bound) o.fail(tag + ": deviation above the certified bound");
        if (e.overlap > e.member_error * Rational(2)) o.fail(tag + ": overlap " + to_float(e.overlap, 6));
        if (!e.single_interval) o.fail(tag + ": union is not an interval");
        if (!C.is_zero()) worst_ratio = std::max(worst_ratio, (e.deviation / bound).to_double());
      }
    }
  // Fibonacci instance: A^-1 X^(1) = -pi e1 + X^(2), written out by hand.
  CaseSpec fib = family(CaseId::iii, 1);
  EigenData ed = eigen_for(fib, System::sigma);
  IntervalSet x1 = approx_fractal(fib, FractalTarget::piece(System::sigma, Letter(1, 1)), kSetEquationN);
  IntervalSet x2 = approx_fractal(fib, FractalTarget::piece(System::sigma, Letter(2, 1)), kSetEquationN);
  IntervalSet lhs = x1.scaled(ed.lambda_prime.inverse());
  IntervalSet rhs = x2.translated(-ed.line_form.value(kE1));
  QuadNum err = x1.hull().error * ed.lambda_prime.inverse().abs() + x2.hull().error;
  if (hausdorff(lhs, rhs) > err) o.fail("Fibonacci A^-1 X^(1) = -pi e1 + X^(2) off by " + to_float(hausdorff(lhs, rhs), 6));
  if (o.passed)
    o.detail = "n = 12, worst deviation / (2 C |l'|^n) = " + std::to_string(worst_ratio);
  return o;
}

Outcome length_law() {
  Outcome o;
  double worst = 0;
  for (const auto& spec : minimal_cases())
    for (System sys : {System::tau, System::sigma})
      for (Letter l : symbols(spec, sys)) {
        FractalTarget t = FractalTarget::piece(sys, l);
        LimitResult lr = limit_interval(spec, t, kLengthTol);
        QuadNum diff = (lr.interval.length() - lr.law_length).abs();
        QuadNum bound = lr.interval.error * Rational(2);
        if (!lr.law_ok || diff > bound) o.fail(label(spec) + " " + t.to_string() + ": off by " + to_float(diff, 6));
        if (bound > QuadNum(bound.root(), kLengthLawBound)) o.fail(label(spec) + " " + t.to_string() + ": bound above 1e-8");
        if (exact_fractal(spec, t).length() != lr.law_length)
          o.fail(label(spec) + " " + t.to_string() + ": exact length differs from the projected seed");
        worst = std::max(worst, bound.to_double());
      }
  if (o.passed) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    o.detail = std::string("largest certified bound ") + buf;
  }
  return o;
}

Outcome dynamics() {
  Outcome o;
  for (const auto& spec : minimal_cases()) {
    require_report(o, spec, check_orbit_coding(spec, kOrbitSteps, kOrbitTol));
    for (System sys : {System::tau, System::sigma})
      require_report(o, spec, y_set_check(spec, build_partition(spec, sys, kOrbitTol), kYPoints, kYGap));
  }
  if (o.passed) o.detail = "1000-step orbits, 5000 Y-set points";
  return o;
}

Outcome structure() {
  Outcome o;
  for (const auto& spec : minimal_cases()) require_report(o, spec, check_structure(spec, {0, 1, 2}, kOrbitTol));
  if (o.passed) o.detail = "levels 0, 1, 2";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& spec : minimal_cases())
    for (const char* fmt : {"svg", "json", "text"})
      for (const char* which : {"sigma", "tau"}) {
        RunConfig cfg;
        cfg.case_id = to_string(spec.id);
        cfg.a = spec.a;
        cfg.format = fmt;
        cfg.which = which;
        cfg.n = 6;
        if (cmd_surface(spec, cfg) != cmd_surface(spec, cfg)) o.fail(label(spec) + " surface " + fmt);
        cfg.n = 8;
        if (cmd_fractal(spec, cfg) != cmd_fractal(spec, cfg)) o.fail(label(spec) + " fractal " + fmt);
      }
  if (o.passed) o.detail = "surface and fractal, all formats";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"conjugacy identities", conjugacy},
      {"eigenvalue brackets", brackets},
      {"cancellation regression", cancellation},
      {"dual-map laws", dual_laws},
      {"stepped-surface closure", closure},
      {"convergence to the enumerated surface", convergence},
      {"Fibonacci seed difference", fibonacci_difference},
      {"set equations", set_equations},
      {"interval length law", length_law},
      {"orbit coding and Y-sets", dynamics},
      {"delta^-1 structures", structure},
      {"deterministic output", determinism},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-40s %s [%.1fs]\n", o.passed ? "PASS" : "FAIL", ++k, name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
