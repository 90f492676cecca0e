#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace rauzy2 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Error hierarchy. The CLI maps ParameterError to exit code 2 and
// ResourceError to exit code 3; everything else is a failed computation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParameterError : public Error { using Error::Error; };
class PositionError : public Error { using Error::Error; };
class PreconditionError : public Error { using Error::Error; };
class SpectralError : public Error { using Error::Error; };
class DivisionError : public Error { using Error::Error; };
class ResourceError : public Error { using Error::Error; };
class ConvergenceError : public Error { using Error::Error; };
class InconsistencyError : public Error { using Error::Error; };
class DynamicsError : public Error { using Error::Error; };

// Integer point of Z^2; doubles as the abelianization of a word.
struct Vec2 {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;

  friend auto operator<=>(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b);
  friend Vec2 operator-(Vec2 a, Vec2 b);
  friend Vec2 operator-(Vec2 a) { return Vec2{} - a; }
  Vec2& operator+=(Vec2 b) { return *this = *this + b; }
  std::int64_t norm_inf() const;
};

using AbelianVector = Vec2;

inline constexpr Vec2 kOrigin{0, 0};
inline constexpr Vec2 kE1{1, 0};
inline constexpr Vec2 kE2{0, 1};

// 2x2 integer matrix [[a11, a12], [a21, a22]].
struct Mat2 {
  std::int64_t a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  std::int64_t det() const;
  std::int64_t trace() const;
  Mat2 operator*(const Mat2& o) const;
  Vec2 operator*(Vec2 v) const;
  Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
  // Inverse of a matrix with determinant +-1.
  Mat2 inverse_unimodular() const;
  Mat2 pow(unsigned k) const;
  std::string to_string() const;
};

using IncidenceMatrix = Mat2;

// Overflow-checked int64 helpers; overflow raises ResourceError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Parse a decimal such as "1e-9", "0.001" or "3" into an exact rational.
Rational parse_decimal(const std::string& text);

}  // namespace rauzy2
