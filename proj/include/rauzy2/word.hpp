#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rauzy2/numeric.hpp"

namespace rauzy2 {

// A letter of {1, 2, 1^-1, 2^-1}.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : gen_(static_cast<std::int8_t>(generator)), sign_(static_cast<std::int8_t>(sign)) {}
  static Letter parse(int signed_generator);  // 1, 2, -1, -2

  constexpr int generator() const { return gen_; }
  constexpr int sign() const { return sign_; }
  constexpr Letter inverse() const { return Letter(gen_, -sign_); }
  constexpr bool positive() const { return sign_ > 0; }
  constexpr int signed_value() const { return gen_ * sign_; }
  std::string to_string() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) { return a.signed_value() <=> b.signed_value(); }

 private:
  std::int8_t gen_ = 1;
  std::int8_t sign_ = 1;
};

// Freely reduced word. Every constructor reduces eagerly.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(const std::vector<Letter>& raw);
  ReducedWord(std::initializer_list<int> signed_generators);
  // Accepts "21^-122", "2 1^-1 2 2", or "" for the empty word.
  static ReducedWord parse(const std::string& text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

std::vector<Letter> free_reduce(const std::vector<Letter>& raw);
ReducedWord reduce(const std::vector<Letter>& raw);
ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2);
ReducedWord invert(const ReducedWord& w);
AbelianVector abelianize(const ReducedWord& w);
AbelianVector abelianize(const std::vector<Letter>& letters);

// Pair of generator images.
class Endomorphism {
 public:
  Endomorphism() : Endomorphism(ReducedWord{1}, ReducedWord{2}) {}
  Endomorphism(ReducedWord image1, ReducedWord image2, bool allow_empty = false);
  static Endomorphism identity() { return Endomorphism(); }
  static Endomorphism parse(const std::string& image1, const std::string& image2);

  const ReducedWord& image(int generator) const;
  const ReducedWord& image1() const { return image1_; }
  const ReducedWord& image2() const { return image2_; }
  std::string to_string() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  ReducedWord image1_, image2_;
};

ReducedWord apply_endo(const Endomorphism& e, const ReducedWord& w);
// (outer o inner)(i) = outer(inner(i)).
Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner);
Endomorphism power(const Endomorphism& e, unsigned k);
IncidenceMatrix incidence_matrix(const Endomorphism& e);

struct PrefixSuffix {
  ReducedWord prefix;
  Letter letter;
  ReducedWord suffix;
};
// k is 1-based: e(j) = prefix . letter . suffix with |prefix| = k - 1.
PrefixSuffix prefix_suffix(const Endomorphism& e, int j, std::size_t k);

enum class EndoClass { substitution, alternative_substitution, general };
EndoClass classify(const Endomorphism& e);
std::string to_string(EndoClass c);

struct SpectralPredicates {
  bool pisot = false;
  bool irreducible = false;
  bool unimodular = false;
  bool hyperbolic = false;
  bool primitive_or_neg_primitive = false;
};
SpectralPredicates spectral_predicates(const IncidenceMatrix& m);
SpectralPredicates spectral_predicates(const Endomorphism& e);

// Greedy Nielsen reduction; nullopt means "not proven invertible".
std::optional<Endomorphism> nielsen_invert(const Endomorphism& e, std::size_t max_steps = 10000);

}  // namespace rauzy2
