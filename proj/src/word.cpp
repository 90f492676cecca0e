#include "rauzy2/word.hpp"

#include <cctype>

namespace rauzy2 {

Letter Letter::parse(int signed_generator) {
  int g = signed_generator < 0 ? -signed_generator : signed_generator;
  if (g != 1 && g != 2) throw ParameterError("letter must be one of 1, 2, -1, -2");
  return Letter(g, signed_generator < 0 ? -1 : 1);
}

std::string Letter::to_string() const {
  std::string s(1, static_cast<char>('0' + gen_));
  if (sign_ < 0) s += "^-1";
  return s;
}

std::vector<Letter> free_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

ReducedWord::ReducedWord(const std::vector<Letter>& raw) : letters_(free_reduce(raw)) {}

ReducedWord::ReducedWord(std::initializer_list<int> signed_generators) {
  std::vector<Letter> raw;
  for (int g : signed_generators) raw.push_back(Letter::parse(g));
  letters_ = free_reduce(raw);
}

ReducedWord ReducedWord::parse(const std::string& text) {
  std::vector<Letter> raw;
  std::size_t k = 0;
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c)) || c == 'e') {
      ++k;
      continue;
    }
    if (c != '1' && c != '2') throw ParameterError("malformed word '" + text + "'");
    int g = c - '0';
    ++k;
    if (text.compare(k, 3, "^-1") == 0) {
      raw.emplace_back(g, -1);
      k += 3;
    } else {
      raw.emplace_back(g, 1);
    }
  }
  return ReducedWord(raw);
}

std::string ReducedWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (Letter l : letters_) s += l.to_string();
  return s;
}

ReducedWord reduce(const std::vector<Letter>& raw) { return ReducedWord(raw); }

ReducedWord concat(const ReducedWord& w1, const ReducedWord& w2) {
  std::vector<Letter> raw(w1.begin(), w1.end());
  raw.insert(raw.end(), w2.begin(), w2.end());
  return ReducedWord(raw);
}

ReducedWord invert(const ReducedWord& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return ReducedWord(raw);
}

AbelianVector abelianize(const std::vector<Letter>& letters) {
  Vec2 v;
  for (Letter l : letters) (l.generator() == 1 ? v.x1 : v.x2) += l.sign();
  return v;
}

AbelianVector abelianize(const ReducedWord& w) { return abelianize(w.letters()); }

Endomorphism::Endomorphism(ReducedWord image1, ReducedWord image2, bool allow_empty)
    : image1_(std::move(image1)), image2_(std::move(image2)) {
  if (!allow_empty && (image1_.empty() || image2_.empty()))
    throw ParameterError("empty generator image requires an explicit non-injective flag");
}

Endomorphism Endomorphism::parse(const std::string& image1, const std::string& image2) {
  return Endomorphism(ReducedWord::parse(image1), ReducedWord::parse(image2));
}

const ReducedWord& Endomorphism::image(int generator) const {
  if (generator == 1) return image1_;
  if (generator == 2) return image2_;
  throw ParameterError("generator must be 1 or 2");
}

std::string Endomorphism::to_string() const {
  return "1->" + image1_.to_string() + ", 2->" + image2_.to_string();
}

ReducedWord apply_endo(const Endomorphism& e, const ReducedWord& w) {
  const ReducedWord inv1 = invert(e.image1()), inv2 = invert(e.image2());
  std::vector<Letter> out;
  for (Letter l : w) {
    const ReducedWord& img = l.generator() == 1 ? (l.positive() ? e.image1() : inv1)
                                                : (l.positive() ? e.image2() : inv2);
    for (Letter m : img) {
      if (!out.empty() && out.back() == m.inverse())
        out.pop_back();
      else
        out.push_back(m);
    }
  }
  return ReducedWord(out);
}

Endomorphism compose(const Endomorphism& outer, const Endomorphism& inner) {
  return Endomorphism(apply_endo(outer, inner.image1()), apply_endo(outer, inner.image2()), true);
}

Endomorphism power(const Endomorphism& e, unsigned k) {
  Endomorphism r = Endomorphism::identity();
  for (unsigned t = 0; t < k; ++t) r = compose(e, r);
  return r;
}

IncidenceMatrix incidence_matrix(const Endomorphism& e) {
  Vec2 c1 = abelianize(e.image1()), c2 = abelianize(e.image2());
  return {c1.x1, c2.x1, c1.x2, c2.x2};
}

PrefixSuffix prefix_suffix(const Endomorphism& e, int j, std::size_t k) {
  const ReducedWord& w = e.image(j);
  if (k < 1 || k > w.size())
    throw PositionError("position " + std::to_string(k) + " outside 1.." + std::to_string(w.size()));
  std::vector<Letter> pre(w.begin(), w.begin() + static_cast<long>(k - 1));
  std::vector<Letter> suf(w.begin() + static_cast<long>(k), w.end());
  return {ReducedWord(pre), w[k - 1], ReducedWord(suf)};
}

EndoClass classify(const Endomorphism& e) {
  bool any_pos = false, any_neg = false;
  for (int g = 1; g <= 2; ++g)
    for (Letter l : e.image(g)) (l.positive() ? any_pos : any_neg) = true;
  if (!any_neg) return EndoClass::substitution;
  if (!any_pos) return EndoClass::alternative_substitution;
  return EndoClass::general;
}

std::string to_string(EndoClass c) {
  switch (c) {
    case EndoClass::substitution: return "substitution";
    case EndoClass::alternative_substitution: return "alternative_substitution";
    default: return "general";
  }
}

namespace {

bool nonnegative(const Mat2& m) { return m.a11 >= 0 && m.a12 >= 0 && m.a21 >= 0 && m.a22 >= 0; }
bool positive(const Mat2& m) { return m.a11 > 0 && m.a12 > 0 && m.a21 > 0 && m.a22 > 0; }

// A nonnegative 2x2 matrix is primitive iff A or A^2 is positive.
bool primitive(const Mat2& m) { return nonnegative(m) && (positive(m) || positive(m * m)); }

bool perfect_square(const Integer& d) {
  if (d < 0) return false;
  Integer s = boost::multiprecision::sqrt(d);
  return s * s == d;
}

}  // namespace

SpectralPredicates spectral_predicates(const IncidenceMatrix& m) {
  SpectralPredicates sp;
  Integer t = m.trace(), d = m.det();
  // chi(x) = x^2 - t x + d at x = 1 and x = -1.
  Integer chi_pos = 1 - t + d, chi_neg = 1 + t + d;
  sp.unimodular = d == 1 || d == -1;
  sp.irreducible = !perfect_square(t * t - 4 * d);
  // Exactly one root in (-1, 1) and none at +-1.
  sp.hyperbolic = chi_pos * chi_neg < 0;
  sp.pisot = sp.hyperbolic && chi_pos < 0;
  sp.primitive_or_neg_primitive = primitive(m) || primitive(-m);
  return sp;
}

SpectralPredicates spectral_predicates(const Endomorphism& e) { return spectral_predicates(incidence_matrix(e)); }

}  // namespace rauzy2
