#pragma once

#include <string>

#include "rauzy2/numeric.hpp"

namespace rauzy2 {

// Dominant root lambda of x^2 - a x + det. The root is kept implicit and
// isolated by the rational bracket (lo2/2, hi2/2), inside which the
// characteristic polynomial has exactly one root.
class RootSpec {
 public:
  RootSpec() : RootSpec(1, -1) {}
  RootSpec(long trace, int det);

  long trace() const { return a_; }
  int det() const { return det_; }
  long lo2() const { return lo2_; }
  long hi2() const { return hi2_; }
  Rational lo() const { return Rational(lo2_, 2); }
  Rational hi() const { return Rational(hi2_, 2); }
  // Sign of the characteristic polynomial at the lower bracket end.
  int chi_lo_sign() const { return chi_lo_sign_; }

  friend bool operator==(const RootSpec& x, const RootSpec& y) { return x.a_ == y.a_ && x.det_ == y.det_; }

  // Sign of p + q*lambda for integers p, q.
  int sign(const Integer& p, const Integer& q) const;
  int sign(__int128 p, __int128 q) const;
  // Sign of lambda - num/den (den > 0).
  int compare_root(const Integer& num, const Integer& den) const;
  // Rational approximation of lambda within 2^-bits.
  Rational approximate(unsigned bits) const;

 private:
  long a_;
  int det_;
  long lo2_, hi2_;
  int chi_lo_sign_;
};

// p + q*lambda in Q(lambda).
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const RootSpec& root, Rational p, Rational q = 0) : p_(std::move(p)), q_(std::move(q)), root_(root) {}
  static QuadNum lambda(const RootSpec& root) { return QuadNum(root, 0, 1); }
  static QuadNum lambda_prime(const RootSpec& root) { return QuadNum(root, root.trace(), -1); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const RootSpec& root() const { return root_; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }

  int sign() const;
  QuadNum abs() const { return sign() < 0 ? -*this : *this; }
  QuadNum inverse() const;
  QuadNum conjugate() const;
  QuadNum pow(long k) const;
  double to_double() const;
  std::string to_string() const;  // "p + q*L"

  QuadNum operator-() const { return QuadNum(root_, -p_, -q_); }
  QuadNum& operator+=(const QuadNum& y);
  QuadNum& operator-=(const QuadNum& y);
  QuadNum& operator*=(const QuadNum& y);
  QuadNum& operator/=(const QuadNum& y) { return *this *= y.inverse(); }
  QuadNum& operator*=(const Rational& r);
  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
  friend QuadNum operator*(QuadNum x, const Rational& r) { return x *= r; }
  friend QuadNum operator*(const Rational& r, QuadNum x) { return x *= r; }
  friend QuadNum operator+(QuadNum x, const Rational& r) { return x += QuadNum(x.root_, r); }
  friend QuadNum operator-(QuadNum x, const Rational& r) { return x -= QuadNum(x.root_, r); }

  friend bool operator==(const QuadNum& x, const QuadNum& y) { return x.p_ == y.p_ && x.q_ == y.q_; }
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

 private:
  void check_root(const QuadNum& y) const;

  Rational p_ = 0;
  Rational q_ = 0;
  RootSpec root_;
};

int qsign(const QuadNum& x);
const QuadNum& qmin(const QuadNum& x, const QuadNum& y);
const QuadNum& qmax(const QuadNum& x, const QuadNum& y);

// Correctly rounded decimal with `digits` digits after the point.
std::string to_float(const QuadNum& x, int digits);
std::string to_float(const Rational& x, int digits);

}  // namespace rauzy2
