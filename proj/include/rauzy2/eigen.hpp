#pragma once

#include <array>
#include <string>

#include "rauzy2/family.hpp"
#include "rauzy2/quad.hpp"

namespace rauzy2 {

enum class EigenConvention { generic, sigma_i, sigma_ii, sigma_iv, tau_i, tau_ii, tau_iv };

using QuadVec = std::array<QuadNum, 2>;

// Point c * u' of the contractive line.
struct LineCoord {
  QuadNum c;
  friend bool operator==(const LineCoord&, const LineCoord&) = default;
};

// Exact linear functional x -> x1*f1 + x2*f2 on Z^2 with f1, f2 in Q(lambda),
// stored over a common positive denominator so that evaluation on lattice
// points stays in 128-bit integers.
class LatticeForm {
 public:
  struct Raw {
    __int128 p = 0, q = 0;
    friend Raw operator-(Raw x, Raw y) { return {x.p - y.p, x.q - y.q}; }
    friend Raw operator+(Raw x, Raw y) { return {x.p + y.p, x.q + y.q}; }
    friend bool operator==(Raw, Raw) = default;
  };

  LatticeForm() = default;
  LatticeForm(const QuadNum& f1, const QuadNum& f2);

  Raw raw(Vec2 x) const;
  QuadNum value(Vec2 x) const;
  QuadNum value(Raw r) const;
  int sign(Vec2 x) const { return sign(raw(x)); }
  int sign(Raw r) const { return root_.sign(r.p, r.q); }
  // Exact three-way comparison of two raw values.
  int compare(Raw x, Raw y) const { return sign(x - y); }
  const RootSpec& root() const { return root_; }

 private:
  RootSpec root_;
  std::int64_t p1_ = 0, q1_ = 0, p2_ = 0, q2_ = 0;
  Integer den_ = 1;
};

struct EigenData {
  IncidenceMatrix matrix;
  RootSpec root;
  QuadNum lambda, lambda_prime;
  QuadVec v_row;        // v A = lambda v
  QuadVec u_col;        // A u = lambda u, u = (1, .)
  QuadVec u_prime_col;  // A u' = lambda' u', u' = (1, .)
  LatticeForm inner_form;  // x -> <x, v>
  LatticeForm line_form;   // x -> line coordinate of pi(x)
};

EigenData eigen_data(const IncidenceMatrix& m, EigenConvention convention);

QuadNum inner(Vec2 x, const QuadVec& v);
LineCoord project(const QuadVec& x, const EigenData& ed);
QuadNum project_lattice(Vec2 x, const EigenData& ed);

enum class System { sigma, tau };
std::string to_string(System s);
System parse_system(const std::string& text);

EigenConvention convention_for(const CaseSpec& spec, System system);
EigenData eigen_for(const CaseSpec& spec, System system);

// Open integer brackets for the dominant and contractive roots of each
// family: (i) a-1 < l < a, 0 < l' < 1; (ii) and (iii) a < l < a+1,
// -1 < l' < 0; (iv) a-1 < l < a, 0 < l' < 1.
struct RootBrackets {
  long lambda_lo = 0, lambda_hi = 0;
  long prime_lo = 0, prime_hi = 0;
};
RootBrackets family_brackets(CaseId id, long a);
// Exact check that lambda and lambda' lie strictly inside the brackets.
bool brackets_hold(const CaseSpec& spec, std::string* detail = nullptr);

// Scalar kappa with pi_sigma(A_delta^-1 x) = kappa * pi_tau(x) in line
// coordinates (identity for case iii).
QuadNum change_of_basis(const CaseSpec& spec);

}  // namespace rauzy2
