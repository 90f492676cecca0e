#include "rauzy2/numeric.hpp"

#include <cctype>
#include <sstream>

namespace rauzy2 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
  return r;
}

Vec2 operator+(Vec2 a, Vec2 b) { return {checked_add(a.x1, b.x1), checked_add(a.x2, b.x2)}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {checked_add(a.x1, -b.x1), checked_add(a.x2, -b.x2)}; }

std::int64_t Vec2::norm_inf() const {
  std::int64_t u = x1 < 0 ? -x1 : x1;
  std::int64_t v = x2 < 0 ? -x2 : x2;
  return u > v ? u : v;
}

std::int64_t Mat2::det() const { return checked_add(checked_mul(a11, a22), -checked_mul(a12, a21)); }
std::int64_t Mat2::trace() const { return checked_add(a11, a22); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {checked_add(checked_mul(a11, o.a11), checked_mul(a12, o.a21)),
          checked_add(checked_mul(a11, o.a12), checked_mul(a12, o.a22)),
          checked_add(checked_mul(a21, o.a11), checked_mul(a22, o.a21)),
          checked_add(checked_mul(a21, o.a12), checked_mul(a22, o.a22))};
}

Vec2 Mat2::operator*(Vec2 v) const {
  return {checked_add(checked_mul(a11, v.x1), checked_mul(a12, v.x2)),
          checked_add(checked_mul(a21, v.x1), checked_mul(a22, v.x2))};
}

Mat2 Mat2::inverse_unimodular() const {
  std::int64_t d = det();
  if (d != 1 && d != -1) throw PreconditionError("matrix " + to_string() + " is not unimodular");
  return {d * a22, -d * a12, -d * a21, d * a11};
}

Mat2 Mat2::pow(unsigned k) const {
  Mat2 r;
  for (unsigned t = 0; t < k; ++t) r = r * *this;
  return r;
}

std::string Mat2::to_string() const {
  std::ostringstream os;
  os << "[[" << a11 << "," << a12 << "],[" << a21 << "," << a22 << "]]";
  return os.str();
}

Rational parse_decimal(const std::string& text) {
  std::size_t k = 0;
  bool negative = false;
  if (k < text.size() && (text[k] == '+' || text[k] == '-')) negative = text[k++] == '-';
  Integer digits = 0;
  long frac = 0;
  bool seen_digit = false, seen_point = false;
  for (; k < text.size(); ++k) {
    char c = text[k];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (seen_point) ++frac;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParameterError("malformed decimal '" + text + "'");
  long exponent = 0;
  if (k < text.size() && (text[k] == 'e' || text[k] == 'E')) {
    ++k;
    std::size_t used = 0;
    try {
      exponent = std::stol(text.substr(k), &used);
    } catch (const std::exception&) {
      throw ParameterError("malformed decimal '" + text + "'");
    }
    k += used;
  }
  if (k != text.size()) throw ParameterError("malformed decimal '" + text + "'");
  exponent -= frac;
  if (exponent > 4000 || exponent < -4000) throw ParameterError("decimal exponent out of range in '" + text + "'");
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(digits, scale) : Rational(digits * scale);
  return negative ? Rational(-r) : r;
}

}  // namespace rauzy2
