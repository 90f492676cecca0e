#include "rauzy2/family.hpp"

namespace rauzy2 {

CaseId parse_case(const std::string& text) {
  if (text == "i") return CaseId::i;
  if (text == "ii") return CaseId::ii;
  if (text == "iii") return CaseId::iii;
  if (text == "iv") return CaseId::iv;
  throw ParameterError("unknown case '" + text + "' (expected i, ii, iii or iv)");
}

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::i: return "i";
    case CaseId::ii: return "ii";
    case CaseId::iii: return "iii";
    default: return "iv";
  }
}

long minimal_a(CaseId id) {
  switch (id) {
    case CaseId::i: return 3;
    case CaseId::ii: return -3;
    case CaseId::iii: return 1;
    default: return -1;
  }
}

namespace {

// 2^m: m copies of 2 for m > 0, |m| copies of 2^-1 for m < 0.
std::vector<Letter> two_pow(long m) {
  return std::vector<Letter>(static_cast<std::size_t>(m < 0 ? -m : m), Letter(2, m < 0 ? -1 : 1));
}

ReducedWord word(std::initializer_list<std::vector<Letter>> parts) {
  std::vector<Letter> raw;
  for (const auto& p : parts) raw.insert(raw.end(), p.begin(), p.end());
  return ReducedWord(raw);
}

std::vector<Letter> L(int signed_generator) { return {Letter::parse(signed_generator)}; }

}  // namespace

CaseSpec family(CaseId id, long a) {
  CaseSpec s;
  s.id = id;
  s.a = a;
  const ReducedWord two{2};
  switch (id) {
    case CaseId::i:
      if (a < 3) throw ParameterError("case i requires a >= 3 (got a = " + std::to_string(a) + ")");
      s.sigma = Endomorphism(two, word({two_pow(a - 2), L(-1), L(2), L(2)}));
      s.tau = Endomorphism(word({two_pow(a - 3), L(1), L(2)}), word({two_pow(a - 2), L(1), L(2)}));
      s.delta = Endomorphism(ReducedWord{2, -1}, two);
      s.delta_inv = Endomorphism(ReducedWord{-1, 2}, two);
      s.epsilon = {-1, 1};
      s.power = 1;
      break;
    case CaseId::ii:
      if (a > -3) throw ParameterError("case ii requires a <= -3 (got a = " + std::to_string(a) + ")");
      s.sigma = Endomorphism(two, word({L(-1), two_pow(a)}));
      s.tau = Endomorphism(word({L(-1), two_pow(a + 2)}), word({L(-1), two_pow(a + 1)}));
      s.delta = Endomorphism(ReducedWord{-2, 1}, two);
      s.delta_inv = Endomorphism(ReducedWord{2, 1}, two);
      s.epsilon = {1, 1};
      s.power = 2;
      break;
    case CaseId::iii:
      if (a < 1) throw ParameterError("case iii requires a >= 1 (got a = " + std::to_string(a) + ")");
      s.sigma = Endomorphism(two, word({two_pow(a), L(1)}));
      s.tau = s.sigma;
      s.delta = Endomorphism::identity();
      s.delta_inv = Endomorphism::identity();
      s.epsilon = {1, 1};
      s.power = 1;
      break;
    case CaseId::iv:
      if (a > -1) throw ParameterError("case iv requires a <= -1 (got a = " + std::to_string(a) + ")");
      s.sigma = Endomorphism(two, word({L(1), two_pow(a)}));
      s.tau = Endomorphism(ReducedWord{-2}, word({L(-1), two_pow(a)}));
      s.delta = Endomorphism(ReducedWord{-1}, two);
      s.delta_inv = s.delta;
      s.epsilon = {-1, 1};
      s.power = 2;
      break;
  }
  return s;
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

CheckReport verify_conjugacy(const CaseSpec& spec) {
  CheckReport r;
  const Endomorphism id = Endomorphism::identity();
  r.add("delta o delta_inv = id", compose(spec.delta, spec.delta_inv) == id);
  r.add("delta_inv o delta = id", compose(spec.delta_inv, spec.delta) == id);
  Endomorphism conj = compose(spec.delta_inv, compose(spec.tau, spec.delta));
  for (int g = 1; g <= 2; ++g) {
    r.add("delta_inv tau delta (" + std::to_string(g) + ") = sigma(" + std::to_string(g) + ")",
          conj.image(g) == spec.sigma.image(g),
          conj.image(g).to_string() + " vs " + spec.sigma.image(g).to_string());
  }
  Mat2 ad = incidence_matrix(spec.delta);
  Mat2 lhs = incidence_matrix(spec.sigma);
  Mat2 rhs = ad.inverse_unimodular() * incidence_matrix(spec.tau) * ad;
  r.add("A_sigma = A_delta^-1 A_tau A_delta", lhs == rhs, lhs.to_string() + " vs " + rhs.to_string());
  bool alphabet = true;
  for (int g = 1; g <= 2; ++g)
    for (Letter l : spec.delta_inv.image(g))
      if (l != spec.symbol(l.generator())) alphabet = false;
  r.add("delta_inv images in the epsilon alphabet", alphabet);
  return r;
}

std::vector<Letter> fixed_point_prefix(const Endomorphism& e, std::size_t n_letters) {
  if (n_letters < 1) throw ParameterError("periodic point prefix needs n_letters >= 1");
  ReducedWord w{2};
  for (int iter = 0; iter < 400; ++iter) {
    ReducedWord next = apply_endo(e, w);
    if (w.size() >= n_letters && next.size() >= n_letters) {
      if (!std::equal(w.begin(), w.begin() + static_cast<long>(n_letters), next.begin()))
        throw ConvergenceError("prefix of the iterated word did not stabilize");
      return std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(n_letters));
    }
    if (next.size() > 50'000'000) throw ResourceError("iterated word exceeds 5e7 letters");
    w = std::move(next);
  }
  throw ConvergenceError("iterated word does not grow");
}

PeriodicPoints periodic_point_prefix(const CaseSpec& spec, std::size_t n_letters) {
  PeriodicPoints pp;
  pp.sigma = fixed_point_prefix(power(spec.sigma, static_cast<unsigned>(spec.power)), n_letters);
  pp.tau = fixed_point_prefix(power(spec.tau, static_cast<unsigned>(spec.power)), n_letters);
  std::vector<Letter> image = apply_endo(spec.delta_inv, ReducedWord(pp.tau)).letters();
  if (image.size() < n_letters || !std::equal(pp.sigma.begin(), pp.sigma.end(), image.begin()))
    throw InconsistencyError("sigma periodic point differs from delta^-1 of the tau periodic point");
  for (Letter l : pp.sigma)
    if (l != spec.symbol(l.generator())) throw InconsistencyError("periodic point leaves the epsilon alphabet");
  return pp;
}

}  // namespace rauzy2
