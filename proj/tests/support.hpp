#pragma once

// Conversions between library values and the plain oracle representations.

#include "oracles.hpp"
#include "rauzy2/family.hpp"
#include "rauzy2/patch.hpp"
#include "rauzy2/word.hpp"

namespace testing_support {

inline oracle::Word to_oracle(const rauzy2::ReducedWord& w) {
  oracle::Word r;
  for (auto l : w) r.push_back(l.signed_value());
  return r;
}

inline oracle::Endo to_oracle(const rauzy2::Endomorphism& e) { return {to_oracle(e.image1()), to_oracle(e.image2())}; }

inline oracle::Patch to_oracle(const rauzy2::SignedPatch& p) {
  oracle::Patch r;
  for (const auto& [s, c] : p) oracle::add(r, s.x.x1, s.x.x2, s.star, c);
  return r;
}

inline std::vector<rauzy2::Letter> to_letters(const oracle::Word& w) {
  std::vector<rauzy2::Letter> r;
  for (int l : w) r.push_back(rauzy2::Letter::parse(l));
  return r;
}

inline rauzy2::ReducedWord word(const oracle::Word& w) { return rauzy2::ReducedWord(to_letters(w)); }

// Every family member used by sweeps: (i) 3..8, (ii) -8..-3, (iii) 1..8, (iv) -8..-1.
inline std::vector<rauzy2::CaseSpec> sweep() {
  using rauzy2::CaseId;
  std::vector<rauzy2::CaseSpec> r;
  for (long a = 3; a <= 8; ++a) r.push_back(rauzy2::family(CaseId::i, a));
  for (long a = -8; a <= -3; ++a) r.push_back(rauzy2::family(CaseId::ii, a));
  for (long a = 1; a <= 8; ++a) r.push_back(rauzy2::family(CaseId::iii, a));
  for (long a = -8; a <= -1; ++a) r.push_back(rauzy2::family(CaseId::iv, a));
  return r;
}

inline std::vector<rauzy2::CaseSpec> minimal_cases() {
  using rauzy2::CaseId;
  std::vector<rauzy2::CaseSpec> r;
  for (CaseId id : {CaseId::i, CaseId::ii, CaseId::iii, CaseId::iv}) r.push_back(rauzy2::family(id, rauzy2::minimal_a(id)));
  return r;
}

inline std::string label(const rauzy2::CaseSpec& s) { return rauzy2::to_string(s.id) + " a=" + std::to_string(s.a); }

}  // namespace testing_support
