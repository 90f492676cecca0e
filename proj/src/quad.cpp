#include "rauzy2/quad.hpp"

#include <map>
#include <mutex>

namespace rauzy2 {

namespace {

int sgn(const Integer& x) { return x.sign(); }

Integer to_integer(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Integer(-r) : r;
}

constexpr __int128 kFastLimit = static_cast<__int128>(1) << 56;

bool small(__int128 v) { return v < kFastLimit && v > -kFastLimit; }

}  // namespace

RootSpec::RootSpec(long trace, int det) : a_(trace), det_(det) {
  if (det != 1 && det != -1) throw SpectralError("characteristic polynomial must have constant term +-1");
  Integer D = Integer(trace) * trace - 4 * det;
  if (D <= 0) throw SpectralError("x^2 - " + std::to_string(trace) + "x + " + std::to_string(det) + " is not hyperbolic");
  Integer s = boost::multiprecision::sqrt(D);
  if (s * s == D)
    throw SpectralError("x^2 - " + std::to_string(trace) + "x + " + std::to_string(det) + " has rational roots");
  long sl = s.convert_to<long>();
  if (trace > 0) {
    lo2_ = trace + sl;
    hi2_ = trace + sl + 1;
  } else {
    lo2_ = trace - sl - 1;
    hi2_ = trace - sl;
  }
  Integer chi = Integer(lo2_) * lo2_ - 2 * Integer(trace) * lo2_ + 4 * det;
  chi_lo_sign_ = sgn(chi);
}

int RootSpec::compare_root(const Integer& num, const Integer& den) const {
  if (2 * num <= lo2_ * den) return 1;
  if (2 * num >= hi2_ * den) return -1;
  Integer chi = num * num - a_ * num * den + det_ * den * den;
  return sgn(chi) == chi_lo_sign_ ? 1 : -1;
}

int RootSpec::sign(const Integer& p, const Integer& q) const {
  int sq = sgn(q);
  if (sq == 0) return sgn(p);
  Integer num = sq > 0 ? Integer(-p) : p;
  Integer den = sq > 0 ? q : Integer(-q);
  return sq * compare_root(num, den);
}

int RootSpec::sign(__int128 p, __int128 q) const {
  if (!small(p) || !small(q)) return sign(to_integer(p), to_integer(q));
  if (q == 0) return (p > 0) - (p < 0);
  int sq = q > 0 ? 1 : -1;
  __int128 num = sq > 0 ? -p : p;
  __int128 den = sq > 0 ? q : -q;
  int r;
  if (2 * num <= static_cast<__int128>(lo2_) * den) {
    r = 1;
  } else if (2 * num >= static_cast<__int128>(hi2_) * den) {
    r = -1;
  } else {
    __int128 chi = num * num - static_cast<__int128>(a_) * num * den + static_cast<__int128>(det_) * den * den;
    r = ((chi > 0) - (chi < 0)) == chi_lo_sign_ ? 1 : -1;
  }
  return sq * r;
}

Rational RootSpec::approximate(unsigned bits) const {
  static std::mutex mu;
  static std::map<std::tuple<long, int, unsigned>, Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(a_, det_, bits);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Rational lo = this->lo(), hi = this->hi();
  for (unsigned k = 0; k < bits; ++k) {
    Rational mid = (lo + hi) / 2;
    if (compare_root(boost::multiprecision::numerator(mid), boost::multiprecision::denominator(mid)) > 0)
      lo = mid;
    else
      hi = mid;
  }
  Rational r = (lo + hi) / 2;
  cache.emplace(key, r);
  return r;
}

void QuadNum::check_root(const QuadNum& y) const {
  if (!(root_ == y.root_)) throw InconsistencyError("arithmetic between different quadratic fields");
}

int QuadNum::sign() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (q_ == 0) return p_.sign();
  // Clear denominators with the positive factor den(p) den(q).
  return root_.sign(Integer(numerator(p_) * denominator(q_)), Integer(numerator(q_) * denominator(p_)));
}

QuadNum& QuadNum::operator+=(const QuadNum& y) {
  check_root(y);
  p_ += y.p_;
  q_ += y.q_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& y) {
  check_root(y);
  p_ -= y.p_;
  q_ -= y.q_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& y) {
  check_root(y);
  // lambda^2 = a lambda - det.
  Rational qq = q_ * y.q_;
  Rational np = p_ * y.p_ - root_.det() * qq;
  Rational nq = p_ * y.q_ + q_ * y.p_ + root_.trace() * qq;
  p_ = std::move(np);
  q_ = std::move(nq);
  return *this;
}

QuadNum& QuadNum::operator*=(const Rational& r) {
  p_ *= r;
  q_ *= r;
  return *this;
}

QuadNum QuadNum::conjugate() const { return QuadNum(root_, p_ + q_ * root_.trace(), -q_); }

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero in Q(lambda)");
  Rational norm = p_ * p_ + p_ * q_ * root_.trace() + q_ * q_ * root_.det();
  QuadNum c = conjugate();
  c *= Rational(1) / norm;
  return c;
}

QuadNum QuadNum::pow(long k) const {
  QuadNum base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  QuadNum r(root_, 1);
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

double QuadNum::to_double() const {
  if (q_ == 0) return p_.convert_to<double>();
  Rational v = p_ + q_ * root_.approximate(256);
  return v.convert_to<double>();
}

std::string QuadNum::to_string() const { return p_.str() + " + " + q_.str() + "*L"; }

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int qsign(const QuadNum& x) { return x.sign(); }
const QuadNum& qmin(const QuadNum& x, const QuadNum& y) { return y < x ? y : x; }
const QuadNum& qmax(const QuadNum& x, const QuadNum& y) { return x < y ? y : x; }

namespace {

// round(r * 10^digits), halves away from zero.
Integer round_scaled(const Rational& r, const Integer& scale) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Rational s = boost::multiprecision::abs(r) * scale + Rational(1, 2);
  Integer n = numerator(s) / denominator(s);
  return r < 0 ? Integer(-n) : n;
}

std::string format_scaled(const Integer& n, int digits) {
  Integer m = boost::multiprecision::abs(n);
  std::string s = m.str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(static_cast<std::size_t>(digits) + 1 - s.size(), '0') + s;
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (n < 0 ? "-" : "") + s;
}

}  // namespace

std::string to_float(const Rational& x, int digits) {
  if (digits < 1) throw ParameterError("to_float needs at least one digit");
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  return format_scaled(round_scaled(x, scale), digits);
}

std::string to_float(const QuadNum& x, int digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (digits < 1) throw ParameterError("to_float needs at least one digit");
  if (x.is_rational()) return to_float(x.p(), digits);
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  const RootSpec& root = x.root();
  Rational lo = root.lo(), hi = root.hi();
  for (int iter = 0; iter < 100000; ++iter) {
    Integer n1 = round_scaled(x.p() + x.q() * lo, scale);
    Integer n2 = round_scaled(x.p() + x.q() * hi, scale);
    if (n1 == n2) return format_scaled(n1, digits);
    Rational mid = (lo + hi) / 2;
    if (root.compare_root(numerator(mid), denominator(mid)) > 0)
      lo = mid;
    else
      hi = mid;
  }
  throw ConvergenceError("decimal rounding did not settle");
}

}  // namespace rauzy2
