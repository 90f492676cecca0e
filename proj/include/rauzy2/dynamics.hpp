#pragma once

#include <string>
#include <vector>

#include "rauzy2/family.hpp"
#include "rauzy2/fractal.hpp"

namespace rauzy2 {

struct Piece {
  Letter symbol;
  Interval interval;
  QuadNum shift;  // T(x) = x + shift on this piece, shift = -pi f(symbol)
};

// Two-interval domain exchange. Where both pieces have exact endpoints the
// shared boundary point belongs to the right piece when boundary_to_right
// is set and to the left piece otherwise.
struct PartitionSpec {
  System system = System::tau;
  std::vector<Piece> pieces;
  bool boundary_to_right = true;

  const Piece& piece(Letter symbol) const;
  Interval whole() const;
  QuadNum max_error() const;
};

PartitionSpec build_partition(const CaseSpec& spec, System system, const Rational& tol);

struct Orbit {
  std::vector<Letter> coding;
  std::vector<QuadNum> points;
  std::vector<std::size_t> ambiguous;
};

Orbit domain_exchange_orbit(const PartitionSpec& part, const QuadNum& start, std::size_t steps,
                            const std::vector<Letter>* predicted = nullptr);

struct InnerPiece {
  Letter symbol;
  Interval interval;
  ReducedWord word;  // itinerary through the outer pieces
};

CheckReport structure_check(const PartitionSpec& outer, const std::vector<InnerPiece>& inner);

// Inner partition {A_delta^-1 A_tau^{power*n} X_tau^(i)} with words
// delta^-1 tau^{power*n}(i), expressed in sigma line coordinates.
std::vector<InnerPiece> delta_structure_inner(const CaseSpec& spec, const PartitionSpec& tau_part, unsigned n);
// Inner partition {A^n X^(i)} with words e^n(i) for a substitution system.
std::vector<InnerPiece> power_structure_inner(const CaseSpec& spec, const PartitionSpec& part, unsigned n);

CheckReport y_set_check(const CaseSpec& spec, const PartitionSpec& part, std::size_t n_points, const Rational& tol);

// First return of T_sigma to A_delta^-1 X_tau against the conjugated T_tau step.
CheckReport induced_map_check(const CaseSpec& spec, const PartitionSpec& sigma_part, const PartitionSpec& tau_part,
                              std::size_t samples);

}  // namespace rauzy2
