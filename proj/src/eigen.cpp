#include "rauzy2/eigen.hpp"

#include <numeric>

namespace rauzy2 {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Integer to_integer(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Integer(-r) : r;
}

std::int64_t to_int64(const Integer& v) {
  static const Integer limit = Integer(1) << 62;
  if (v >= limit || v <= -limit) throw ResourceError("linear form coefficients exceed 62 bits");
  return v.convert_to<std::int64_t>();
}

Integer lcm(const Integer& x, const Integer& y) { return x / boost::multiprecision::gcd(x, y) * y; }

}  // namespace

LatticeForm::LatticeForm(const QuadNum& f1, const QuadNum& f2) : root_(f1.root()) {
  if (!(f1.root() == f2.root())) throw InconsistencyError("linear form over mixed fields");
  den_ = lcm(lcm(denominator(f1.p()), denominator(f1.q())), lcm(denominator(f2.p()), denominator(f2.q())));
  auto scaled = [&](const Rational& r) { return to_int64(numerator(r) * (den_ / denominator(r))); };
  p1_ = scaled(f1.p());
  q1_ = scaled(f1.q());
  p2_ = scaled(f2.p());
  q2_ = scaled(f2.q());
}

LatticeForm::Raw LatticeForm::raw(Vec2 x) const {
  using I = __int128;
  return {static_cast<I>(x.x1) * p1_ + static_cast<I>(x.x2) * p2_, static_cast<I>(x.x1) * q1_ + static_cast<I>(x.x2) * q2_};
}

QuadNum LatticeForm::value(Raw r) const {
  return QuadNum(root_, Rational(to_integer(r.p), den_), Rational(to_integer(r.q), den_));
}

QuadNum LatticeForm::value(Vec2 x) const { return value(raw(x)); }

QuadNum inner(Vec2 x, const QuadVec& v) { return v[0] * Rational(x.x1) + v[1] * Rational(x.x2); }

namespace {

QuadVec row_vector(EigenConvention conv, const Mat2& m, const QuadNum& lam) {
  const RootSpec& root = lam.root();
  QuadNum one(root, 1);
  switch (conv) {
    case EigenConvention::sigma_i: return {one, lam};
    case EigenConvention::sigma_ii:
    case EigenConvention::sigma_iv: return {-one, -lam};
    case EigenConvention::tau_i: return {one, lam / (lam - one)};
    case EigenConvention::tau_ii: return {one, lam / (lam + one)};
    case EigenConvention::tau_iv: return {one, -lam};
    case EigenConvention::generic:
      if (m.a21 != 0) return {one, (lam - Rational(m.a11)) * (Rational(1) / Rational(m.a21))};
      return {one, QuadNum(root, m.a12) / (lam - Rational(m.a22))};
  }
  return {one, lam};
}

// (1, gamma) with A (1, gamma) = mu (1, gamma).
QuadVec column_vector(const Mat2& m, const QuadNum& mu) {
  QuadNum one(mu.root(), 1);
  if (m.a12 != 0) return {one, (mu - Rational(m.a11)) * (Rational(1) / Rational(m.a12))};
  return {one, QuadNum(mu.root(), m.a21) / (mu - Rational(m.a22))};
}

QuadVec row_times(const QuadVec& v, const Mat2& m) {
  return {v[0] * Rational(m.a11) + v[1] * Rational(m.a21), v[0] * Rational(m.a12) + v[1] * Rational(m.a22)};
}

QuadVec times_col(const Mat2& m, const QuadVec& u) {
  return {u[0] * Rational(m.a11) + u[1] * Rational(m.a12), u[0] * Rational(m.a21) + u[1] * Rational(m.a22)};
}

}  // namespace

EigenData eigen_data(const IncidenceMatrix& m, EigenConvention convention) {
  EigenData ed;
  ed.matrix = m;
  std::int64_t det = m.det();
  if (det != 1 && det != -1) throw SpectralError("matrix " + m.to_string() + " is not unimodular");
  ed.root = RootSpec(static_cast<long>(m.trace()), static_cast<int>(det));
  ed.lambda = QuadNum::lambda(ed.root);
  ed.lambda_prime = QuadNum::lambda_prime(ed.root);
  ed.v_row = row_vector(convention, m, ed.lambda);
  QuadVec va = row_times(ed.v_row, m);
  if (!(va[0] == ed.lambda * ed.v_row[0] && va[1] == ed.lambda * ed.v_row[1]))
    throw SpectralError("eigenvector convention does not fit matrix " + m.to_string());
  ed.u_col = column_vector(m, ed.lambda);
  ed.u_prime_col = column_vector(m, ed.lambda_prime);
  ed.inner_form = LatticeForm(ed.v_row[0], ed.v_row[1]);
  QuadNum d = (ed.u_prime_col[1] - ed.u_col[1]).inverse();
  ed.line_form = LatticeForm(-ed.u_col[1] * d, d);
  return ed;
}

LineCoord project(const QuadVec& x, const EigenData& ed) {
  const QuadVec& u = ed.u_col;
  const QuadVec& w = ed.u_prime_col;
  QuadNum den = u[0] * w[1] - u[1] * w[0];
  if (den.is_zero()) throw InconsistencyError("degenerate eigenbasis");
  return {(u[0] * x[1] - u[1] * x[0]) / den};
}

QuadNum project_lattice(Vec2 x, const EigenData& ed) { return ed.line_form.value(x); }

std::string to_string(System s) { return s == System::sigma ? "sigma" : "tau"; }

System parse_system(const std::string& text) {
  if (text == "sigma") return System::sigma;
  if (text == "tau") return System::tau;
  throw ParameterError("unknown system '" + text + "' (expected sigma or tau)");
}

EigenConvention convention_for(const CaseSpec& spec, System system) {
  bool sigma = system == System::sigma;
  switch (spec.id) {
    case CaseId::i: return sigma ? EigenConvention::sigma_i : EigenConvention::tau_i;
    case CaseId::ii: return sigma ? EigenConvention::sigma_ii : EigenConvention::tau_ii;
    case CaseId::iv: return sigma ? EigenConvention::sigma_iv : EigenConvention::tau_iv;
    default: return EigenConvention::generic;
  }
}

EigenData eigen_for(const CaseSpec& spec, System system) {
  const Endomorphism& e = system == System::sigma ? spec.sigma : spec.tau;
  return eigen_data(incidence_matrix(e), convention_for(spec, system));
}

RootBrackets family_brackets(CaseId id, long a) {
  switch (id) {
    case CaseId::i:
    case CaseId::iv: return {a - 1, a, 0, 1};
    default: return {a, a + 1, -1, 0};
  }
}

bool brackets_hold(const CaseSpec& spec, std::string* detail) {
  EigenData ed = eigen_for(spec, System::sigma);
  RootBrackets b = family_brackets(spec.id, spec.a);
  auto inside = [](const QuadNum& x, long lo, long hi) { return (x - Rational(lo)).sign() > 0 && (x - Rational(hi)).sign() < 0; };
  bool ok = inside(ed.lambda, b.lambda_lo, b.lambda_hi) && inside(ed.lambda_prime, b.prime_lo, b.prime_hi);
  if (detail != nullptr)
    *detail = std::to_string(b.lambda_lo) + " < " + to_float(ed.lambda, 6) + " < " + std::to_string(b.lambda_hi) + ", " +
              std::to_string(b.prime_lo) + " < " + to_float(ed.lambda_prime, 6) + " < " + std::to_string(b.prime_hi);
  return ok;
}

QuadNum change_of_basis(const CaseSpec& spec) {
  EigenData es = eigen_for(spec, System::sigma);
  EigenData et = eigen_for(spec, System::tau);
  Mat2 dinv = incidence_matrix(spec.delta).inverse_unimodular();
  QuadVec img = times_col(dinv, et.u_prime_col);
  QuadNum kappa = img[0];
  if (!(img[1] == kappa * es.u_prime_col[1]))
    throw InconsistencyError("A_delta^-1 does not map the contractive eigenline of tau to that of sigma");
  return kappa;
}

}  // namespace rauzy2
