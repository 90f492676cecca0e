#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rauzy2/interval.hpp"
#include "rauzy2/patch.hpp"

namespace rauzy2 {

struct FractalTarget {
  enum class Object { whole, piece, prime_piece };
  Object object = Object::whole;
  System system = System::tau;
  // i^{epsilon_i} for sigma targets, a positive generator for tau targets.
  // Ignored for Object::whole.
  Letter symbol{2, 1};

  static FractalTarget whole(System s) { return {Object::whole, s, Letter(2, 1)}; }
  static FractalTarget piece(System s, Letter l) { return {Object::piece, s, l}; }
  static FractalTarget prime_piece(System s, Letter l) { return {Object::prime_piece, s, l}; }
  std::string to_string() const;
};

// Alphabet of piece symbols: {1^{eps1}, 2} for sigma, {1, 2} for tau.
std::array<Letter, 2> symbols(const CaseSpec& spec, System system);
void validate_target(const CaseSpec& spec, const FractalTarget& target);

// Seed patch of the target (seed U, U-bar, (e_i,i*), (o,i*), ...).
SignedPatch fractal_seed(const CaseSpec& spec, const FractalTarget& target);
const Endomorphism& system_map(const CaseSpec& spec, System system);

// Certified constant B with Hausdorff(lambda'^n pi(e*^n seed), X) <= B |lambda'|^n.
QuadNum tail_constant(const CaseSpec& spec, const FractalTarget& target);

// Projection of e*^n(seed), scaled by lambda'^n. Endpoints are exact values
// of the approximant; the attached error is the certified tail bound.
IntervalSet approx_fractal(const CaseSpec& spec, const FractalTarget& target, unsigned n);

struct LimitResult {
  Interval interval;          // approximate hull with certified error
  unsigned n = 0;             // refinement level reached
  QuadNum movement;           // endpoint movement over the last step
  QuadNum law_length;         // length predicted by the projected seed
  bool law_ok = false;
};

// Refines a pruned iteration until the certified error is at most tol.
LimitResult limit_interval(const CaseSpec& spec, const FractalTarget& target, const Rational& tol,
                           unsigned max_n = 400);

// Exact endpoints: from the max-plus fixed point of a positive step map for
// tau (and substitutions), and through the conjugacy decomposition for sigma.
Interval exact_fractal(const CaseSpec& spec, const FractalTarget& target);

// Translation h in P_tau with A_delta X_sigma^(i) = pi_tau (delta^-1)*(seed) + h,
// in tau line coordinates. Exact; the identity holds when the two lengths agree.
QuadNum conjugacy_offset(const CaseSpec& spec, Letter symbol);

enum class SetEquation { substitution, alternative_single, alternative_double, conjugated };
SetEquation parse_set_equation(const std::string& text);
std::string to_string(SetEquation v);

struct SetEquationEntry {
  std::string label;
  QuadNum deviation;   // Hausdorff distance of LHS and union of RHS members
  QuadNum overlap;     // max pairwise overlap among RHS members
  QuadNum gap;         // max gap between consecutive RHS members
  std::size_t members = 0;
  bool single_interval = false;
  QuadNum bound;       // certified bound for the deviation
  QuadNum member_error;
};

struct SetEquationReport {
  SetEquation variant = SetEquation::substitution;
  unsigned n = 0;
  std::vector<SetEquationEntry> entries;
  QuadNum max_deviation() const;
  QuadNum max_overlap() const;
  bool all_single() const;
};

bool set_equation_applies(const CaseSpec& spec, SetEquation variant);
SetEquationReport set_equation_residual(const CaseSpec& spec, SetEquation variant, unsigned n);

}  // namespace rauzy2
