#pragma once

#include <array>
#include <string>
#include <vector>

#include "rauzy2/word.hpp"

namespace rauzy2 {

enum class CaseId { i, ii, iii, iv };

CaseId parse_case(const std::string& text);
std::string to_string(CaseId id);

// One member of the four hyperbolic families together with its conjugate
// tau = delta sigma delta^-1 and the conjugator delta.
struct CaseSpec {
  CaseId id = CaseId::iii;
  long a = 1;
  Endomorphism sigma, tau, delta, delta_inv;
  std::array<int, 2> epsilon{1, 1};
  int power = 1;

  // The letter i^{epsilon_i} used to code orbits.
  Letter symbol(int generator) const { return Letter(generator, epsilon[generator - 1]); }
  bool delta_is_identity() const { return id == CaseId::iii; }
};

// Smallest |a| admitted by the case.
long minimal_a(CaseId id);
CaseSpec family(CaseId id, long a);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = {});
};

CheckReport verify_conjugacy(const CaseSpec& spec);

struct PeriodicPoints {
  std::vector<Letter> sigma;
  std::vector<Letter> tau;
};

// Prefixes of the fixed (or periodic) points obtained by iterating
// sigma^power and tau^power on the word "2".
PeriodicPoints periodic_point_prefix(const CaseSpec& spec, std::size_t n_letters);

// Prefix of lim e^n(2); e must fix the first letter 2.
std::vector<Letter> fixed_point_prefix(const Endomorphism& e, std::size_t n_letters);

}  // namespace rauzy2
