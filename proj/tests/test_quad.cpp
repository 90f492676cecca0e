#include <doctest.h>

#include "rauzy2/eigen.hpp"
#include "support.hpp"

using namespace rauzy2;
using testing_support::label;

namespace {

QuadVec row_times(const QuadVec& v, const Mat2& m) {
  return {v[0] * Rational(m.a11) + v[1] * Rational(m.a21), v[0] * Rational(m.a12) + v[1] * Rational(m.a22)};
}

QuadVec times_col(const Mat2& m, const QuadVec& u) {
  return {u[0] * Rational(m.a11) + u[1] * Rational(m.a12), u[0] * Rational(m.a21) + u[1] * Rational(m.a22)};
}

Rational random_rational(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return Rational(num(rng)) / Rational(den(rng));
}

long double approx(const QuadNum& x, long double lam) {
  return x.p().convert_to<long double>() + x.q().convert_to<long double>() * lam;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  RootSpec minus3(3, 1);
  QuadNum l = QuadNum::lambda(minus3);
  CHECK(l * l == QuadNum(minus3, -1, 3));

  RootSpec plus3(3, -1);
  CHECK(QuadNum::lambda(plus3) * QuadNum::lambda_prime(plus3) == QuadNum(plus3, -1));

  QuadNum x(minus3, Rational(2, 7), Rational(-5, 3));
  CHECK((x + (-x)).is_zero());
  CHECK(x * x.inverse() == QuadNum(minus3, 1));
  CHECK_THROWS_AS(QuadNum(minus3, 0).inverse(), DivisionError);
  CHECK_THROWS_AS(QuadNum::lambda(minus3) + QuadNum::lambda(plus3), InconsistencyError);
}

TEST_CASE("qsign examples") {
  RootSpec r1(3, 1);
  CHECK(qsign(QuadNum::lambda(r1) - Rational(1)) == 1);
  CHECK(qsign(QuadNum(r1, 0)) == 0);
  RootSpec r4(-1, -1);
  CHECK(qsign(QuadNum(r4, 1) - QuadNum::lambda(r4)) == 1);
}

TEST_CASE("root bracket validation") {
  CHECK_THROWS_AS(RootSpec(2, 1), SpectralError);   // double root 1
  CHECK_THROWS_AS(RootSpec(1, 1), SpectralError);   // complex roots
  CHECK_THROWS_AS(RootSpec(3, 2), SpectralError);   // not unimodular
  CHECK_THROWS_AS(eigen_data(Mat2{1, 0, 0, 1}, EigenConvention::generic), SpectralError);
  CHECK_THROWS_AS(eigen_data(Mat2{0, -1, 1, 2}, EigenConvention::generic), SpectralError);
}

TEST_CASE("eigen data examples") {
  auto ed = eigen_data(Mat2{0, -1, 1, 3}, EigenConvention::sigma_i);
  CHECK(ed.v_row[0] == QuadNum(ed.root, 1));
  CHECK(ed.v_row[1] == ed.lambda);
  CHECK(to_float(ed.lambda, 6) == "2.618034");

  auto fib = eigen_data(Mat2{0, 1, 1, 1}, EigenConvention::generic);
  CHECK(to_float(fib.lambda, 10) == "1.6180339887");
  CHECK(fib.v_row[1] == fib.lambda);

  auto e4 = eigen_data(Mat2{0, 1, 1, -1}, EigenConvention::sigma_iv);
  CHECK(e4.v_row[0] == QuadNum(e4.root, -1));
  CHECK(e4.v_row[1] == -e4.lambda);
  CHECK(to_float(e4.lambda, 6) == "-1.618034");

  // a convention that does not fit the matrix is rejected
  CHECK_THROWS_AS(eigen_data(Mat2{0, 1, 1, 1}, EigenConvention::tau_i), SpectralError);
}

TEST_CASE("inner products and projection") {
  auto ed = eigen_data(Mat2{0, -1, 1, 3}, EigenConvention::sigma_i);
  CHECK(inner(kE1, {QuadNum(ed.root, 1), ed.lambda}) == QuadNum(ed.root, 1));
  CHECK(inner(kOrigin, ed.v_row).is_zero());
  QuadNum d = inner(Vec2{-1, 1}, ed.v_row);
  CHECK(d == ed.lambda - Rational(1));
  CHECK(qsign(d) == 1);

  CHECK(project(ed.u_col, ed).c.is_zero());
  CHECK(project(ed.u_prime_col, ed).c == QuadNum(ed.root, 1));
  CHECK(project(times_col(ed.matrix, ed.u_prime_col), ed).c == ed.lambda_prime);
}

TEST_CASE("to_float rounding") {
  RootSpec r(3, 1);
  CHECK(to_float(QuadNum(r, 0), 6) == "0.000000");
  CHECK(to_float(QuadNum(r, Rational(-1, 20)), 1) == "-0.1");
  CHECK_THROWS(to_float(QuadNum(r, 1), 0));
  CHECK(to_float(QuadNum(r, Rational(1, 8)), 2) == "0.13");
  CHECK(to_float(QuadNum(r, Rational(-1, 1000)), 2) == "0.00");
  CHECK(to_float(QuadNum::lambda_prime(r), 20) == "0.38196601125010515180");
}

TEST_CASE("eigen equations across the family sweep") {
  for (const auto& spec : testing_support::sweep()) {
    for (System sys : {System::sigma, System::tau}) {
      INFO(label(spec) << " " << to_string(sys));
      EigenData ed = eigen_for(spec, sys);
      CHECK(row_times(ed.v_row, ed.matrix) == QuadVec{ed.lambda * ed.v_row[0], ed.lambda * ed.v_row[1]});
      CHECK(times_col(ed.matrix, ed.u_col) == QuadVec{ed.lambda * ed.u_col[0], ed.lambda * ed.u_col[1]});
      CHECK(times_col(ed.matrix, ed.u_prime_col) ==
            QuadVec{ed.lambda_prime * ed.u_prime_col[0], ed.lambda_prime * ed.u_prime_col[1]});
      CHECK(ed.lambda + ed.lambda_prime == QuadNum(ed.root, spec.a));
      CHECK(ed.lambda * ed.lambda_prime == QuadNum(ed.root, ed.matrix.det()));
      CHECK(ed.u_prime_col[0] == QuadNum(ed.root, 1));
      // dominant root matches the floating oracle
      long double lam = oracle::dominant_root(ed.matrix.trace(), static_cast<int>(ed.matrix.det()));
      CHECK(std::fabs(static_cast<double>(ed.lambda.to_double() - lam)) < 1e-12);
    }
  }
}

TEST_CASE("eigenvector proportionality under the conjugator") {
  // v_sigma A_delta^-1 = c v_tau with c = lambda - 1 in case (i)
  for (long a = 3; a <= 8; ++a) {
    CaseSpec spec = family(CaseId::i, a);
    EigenData es = eigen_for(spec, System::sigma), et = eigen_for(spec, System::tau);
    QuadVec lhs = row_times(es.v_row, incidence_matrix(spec.delta_inv));
    QuadNum c = es.lambda - Rational(1);
    CHECK(lhs == QuadVec{c * et.v_row[0], c * et.v_row[1]});
  }
  for (const auto& spec : testing_support::sweep()) {
    if (spec.delta_is_identity()) continue;
    INFO(label(spec));
    EigenData es = eigen_for(spec, System::sigma), et = eigen_for(spec, System::tau);
    QuadVec lhs = row_times(es.v_row, incidence_matrix(spec.delta_inv));
    QuadNum c = lhs[0] / et.v_row[0];
    CHECK(lhs[1] == c * et.v_row[1]);
    CHECK_FALSE(c.is_zero());
  }
}

TEST_CASE("projection commutes with the conjugator") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coord(-50, 50);
  for (const auto& spec : testing_support::sweep()) {
    if (spec.delta_is_identity()) continue;
    EigenData es = eigen_for(spec, System::sigma), et = eigen_for(spec, System::tau);
    QuadNum kappa = change_of_basis(spec);
    Mat2 dinv = incidence_matrix(spec.delta_inv);
    for (int k = 0; k < 200; ++k) {
      Vec2 x{coord(rng), coord(rng)};
      CHECK(project_lattice(dinv * x, es) == kappa * project_lattice(x, et));
    }
  }
}

TEST_CASE("property: field axioms") {
  std::mt19937_64 rng(99);
  const std::vector<RootSpec> roots{RootSpec(3, 1), RootSpec(-3, -1), RootSpec(1, -1), RootSpec(-1, -1), RootSpec(7, 1)};
  for (int trial = 0; trial < 10000; ++trial) {
    const RootSpec& r = roots[static_cast<std::size_t>(trial) % roots.size()];
    QuadNum x(r, random_rational(rng, 40), random_rational(rng, 40));
    QuadNum y(r, random_rational(rng, 40), random_rational(rng, 40));
    QuadNum z(r, random_rational(rng, 40), random_rational(rng, 40));
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inverse() == QuadNum(r, 1));
    // conjugation is a field automorphism
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
  }
}

TEST_CASE("property: qsign order against floating evaluation") {
  std::mt19937_64 rng(1234);
  const std::vector<RootSpec> roots{RootSpec(3, 1), RootSpec(-3, -1), RootSpec(1, -1), RootSpec(-1, -1), RootSpec(-8, 1),
                                    RootSpec(8, -1)};
  for (int trial = 0; trial < 10000; ++trial) {
    const RootSpec& r = roots[static_cast<std::size_t>(trial) % roots.size()];
    long double lam = oracle::dominant_root(r.trace(), r.det());
    QuadNum x(r, random_rational(rng, 60), random_rational(rng, 60));
    QuadNum y(r, random_rational(rng, 60), random_rational(rng, 60));
    QuadNum z(r, random_rational(rng, 60), random_rational(rng, 60));
    long double fx = approx(x, lam);
    if (std::fabs(fx) > 1e-9L) CHECK(qsign(x) == (fx > 0 ? 1 : -1));
    int lt = x < y, eq = x == y, gt = x > y;
    CHECK(lt + eq + gt == 1);
    if (x < y && y < z) CHECK(x < z);
    CHECK(qsign(x - y) == -qsign(y - x));
  }
}

TEST_CASE("property: wide and narrow sign paths agree") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> big(-(std::int64_t(1) << 60), std::int64_t(1) << 60);
  RootSpec r(-5, 1);
  for (int trial = 0; trial < 10000; ++trial) {
    std::int64_t p = big(rng), q = big(rng) >> (trial % 40);
    CHECK(r.sign(static_cast<__int128>(p), static_cast<__int128>(q)) == r.sign(Integer(p), Integer(q)));
  }
}

TEST_CASE("lattice forms evaluate exactly") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  for (const auto& spec : testing_support::minimal_cases()) {
    EigenData ed = eigen_for(spec, System::sigma);
    for (int k = 0; k < 500; ++k) {
      Vec2 x{coord(rng), coord(rng)};
      CHECK(ed.inner_form.value(x) == inner(x, ed.v_row));
      QuadVec xv{QuadNum(ed.root, x.x1), QuadNum(ed.root, x.x2)};
      CHECK(ed.line_form.value(x) == project(xv, ed).c);
    }
  }
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("1e-9") == Rational(1, 1000000000));
  CHECK(parse_decimal("0.25") == Rational(1, 4));
  CHECK(parse_decimal("-3") == Rational(-3));
  CHECK(parse_decimal("2.5E2") == Rational(250));
  CHECK_THROWS_AS(parse_decimal("abc"), ParameterError);
  CHECK_THROWS_AS(parse_decimal("1e"), ParameterError);
  CHECK_THROWS_AS(parse_decimal(""), ParameterError);
}
