#pragma once

#include <optional>

#include "rauzy2/dynamics.hpp"

namespace rauzy2 {

// Property checks shared by the `verify` command and the test suites.

// (s o s')* = s'* o s* for s, s' in {sigma, tau, delta, delta^-1} on the
// seeds, and sigma*^n = delta* tau*^n (delta^-1)* for n <= n_max.
CheckReport check_dual_laws(const CaseSpec& spec, unsigned n_max);

// Dual iterates of the seeds stay on the stepped surface and are connected.
CheckReport check_surface_closure(const CaseSpec& spec, unsigned n_max);

// Closed-form delta* equals the general tiling substitution on every
// segment based in the window of the given radius.
CheckReport check_replacement(const CaseSpec& spec, std::int64_t radius);

// Smallest n <= n_max (a multiple of power) at which the dual iterate of the
// seed agrees with the enumerated surface strictly inside the window.
std::optional<unsigned> convergence_level(const CaseSpec& spec, System system, std::int64_t radius, unsigned n_max);
// True when every window segment of every iterate n <= n_max lies on the surface.
bool window_subset(const CaseSpec& spec, System system, std::int64_t radius, unsigned n_max);

CheckReport check_set_equations(const CaseSpec& spec, unsigned n);
CheckReport check_length_law(const CaseSpec& spec, const Rational& tol);
CheckReport check_orbit_coding(const CaseSpec& spec, std::size_t steps, const Rational& tol);
CheckReport check_structure(const CaseSpec& spec, const std::vector<unsigned>& levels, const Rational& tol);

struct BatteryOptions {
  unsigned surface_n = 6;
  unsigned fractal_n = 10;
  std::int64_t radius = 3;
  Rational tol = Rational(1, 1000000000);
  std::size_t orbit_steps = 1000;
  std::size_t y_points = 5000;
  Rational y_tol = Rational(1, 1000);
};

CheckReport verify_battery(const CaseSpec& spec, const BatteryOptions& options);

}  // namespace rauzy2
