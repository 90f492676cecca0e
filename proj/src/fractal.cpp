#include "rauzy2/fractal.hpp"

#include <algorithm>

namespace rauzy2 {

std::string FractalTarget::to_string() const {
  std::string base = object == Object::whole ? "X" : object == Object::piece ? "X^(" : "X'^(";
  if (object != Object::whole) base += symbol.to_string() + ")";
  return base + "_" + rauzy2::to_string(system);
}

std::array<Letter, 2> symbols(const CaseSpec& spec, System system) {
  if (system == System::tau) return {Letter(1, 1), Letter(2, 1)};
  return {spec.symbol(1), spec.symbol(2)};
}

void validate_target(const CaseSpec& spec, const FractalTarget& target) {
  if (target.object == FractalTarget::Object::whole) return;
  auto alphabet = symbols(spec, target.system);
  if (target.symbol != alphabet[0] && target.symbol != alphabet[1])
    throw ParameterError("symbol " + target.symbol.to_string() + " is not in the alphabet {" + alphabet[0].to_string() +
                         ", " + alphabet[1].to_string() + "} of this case");
}

const Endomorphism& system_map(const CaseSpec& spec, System system) {
  return system == System::sigma ? spec.sigma : spec.tau;
}

SignedPatch fractal_seed(const CaseSpec& spec, const FractalTarget& target) {
  validate_target(spec, target);
  bool odd = target.system == System::sigma && (spec.id == CaseId::i || spec.id == CaseId::iv);
  int g = target.symbol.generator();
  Vec2 e = g == 1 ? kE1 : kE2;
  switch (target.object) {
    case FractalTarget::Object::whole:
      return target.system == System::sigma ? seed(SeedKind::U_bar, spec) : seed(SeedKind::U, spec);
    case FractalTarget::Object::piece:
      if (odd && g == 1) return SignedPatch{{{kOrigin, 1}, 1}};
      return SignedPatch{{{e, g}, 1}};
    case FractalTarget::Object::prime_piece:
      if (odd && g == 1) return SignedPatch{{{kE1, 1}, 1}};
      return SignedPatch{{{kOrigin, g}, 1}};
  }
  return {};
}

namespace {

struct SystemData {
  EigenData ed;
  DualMap map;
  QuadNum B;

  SystemData(const CaseSpec& spec, System system)
      : ed(eigen_for(spec, system)), map(system_map(spec, system)) {
    const LatticeForm& f = ed.line_form;
    QuadNum L = qmax(f.value(kE1).abs(), f.value(kE2).abs());
    QuadNum M(ed.root, 0);
    for (int star = 1; star <= 2; ++star)
      for (const auto& ch : map.children(star)) M = qmax(M, f.value(ch.offset).abs());
    QuadNum one(ed.root, 1);
    B = L + M / (one - ed.lambda_prime.abs());
  }
};

void check_level(const CaseSpec& spec, unsigned n) {
  if (spec.power == 2 && n % 2 != 0)
    throw PreconditionError("cases ii and iv iterate in steps of 2; level " + std::to_string(n) + " is odd");
}

// Hull-merged projection of a patch, in unscaled coordinates.
IntervalSet project_patch(const SignedPatch& p, const LatticeForm& f) {
  using Raw = LatticeForm::Raw;
  std::vector<std::pair<Raw, Raw>> spans;
  spans.reserve(p.size());
  for (const auto& [seg, c] : p) {
    Raw a = f.raw(seg.tail()), b = f.raw(seg.head());
    if (f.compare(a, b) > 0) std::swap(a, b);
    spans.emplace_back(a, b);
  }
  std::sort(spans.begin(), spans.end(), [&](const auto& x, const auto& y) { return f.compare(x.first, y.first) < 0; });
  std::vector<Interval> parts;
  std::size_t k = 0;
  while (k < spans.size()) {
    Raw lo = spans[k].first, hi = spans[k].second;
    ++k;
    while (k < spans.size() && f.compare(spans[k].first, hi) <= 0) {
      if (f.compare(spans[k].second, hi) > 0) hi = spans[k].second;
      ++k;
    }
    parts.emplace_back(f.value(lo), f.value(hi));
  }
  return IntervalSet(std::move(parts));
}

QuadNum seed_law_length(const SignedPatch& seed, const LatticeForm& f) {
  QuadNum total(f.root(), 0);
  for (const auto& [seg, c] : seed) total += (f.value(seg.head()) - f.value(seg.tail())).abs();
  return total;
}

}  // namespace

QuadNum tail_constant(const CaseSpec& spec, const FractalTarget& target) {
  validate_target(spec, target);
  return SystemData(spec, target.system).B;
}

IntervalSet approx_fractal(const CaseSpec& spec, const FractalTarget& target, unsigned n) {
  check_level(spec, n);
  SystemData sd(spec, target.system);
  SignedPatch p = fractal_seed(spec, target);
  std::size_t cap = segment_cap();
  for (unsigned k = 0; k < n; ++k) p = sd.map.apply(p, cap);
  QuadNum scale = sd.ed.lambda_prime.pow(n);
  QuadNum error = sd.B * scale.abs();
  return project_patch(p, sd.ed.line_form).scaled(scale).with_error(error);
}

LimitResult limit_interval(const CaseSpec& spec, const FractalTarget& target, const Rational& tol, unsigned max_n) {
  if (tol <= 0) throw ParameterError("tolerance must be positive");
  SystemData sd(spec, target.system);
  const LatticeForm& f = sd.ed.line_form;
  const QuadNum& mu = sd.ed.lambda_prime;
  SignedPatch kept = fractal_seed(spec, target);
  QuadNum tolq(sd.ed.root, tol);

  LimitResult result;
  result.law_length = seed_law_length(kept, f);
  QuadNum scale(sd.ed.root, 1);
  std::optional<Interval> previous;
  for (unsigned n = 0; n < max_n;) {
    for (int s = 0; s < spec.power; ++s) {
      kept = sd.map.apply(kept);
      scale *= mu;
      ++n;
    }
    QuadNum err = sd.B * scale.abs();
    // Scaled base points and spans of the kept segments.
    std::vector<QuadNum> base;
    base.reserve(kept.size());
    QuadNum lo, hi, bmin, bmax;
    bool first = true;
    for (const auto& [seg, c] : kept) {
      QuadNum a = f.value(seg.tail()) * scale, b = f.value(seg.head()) * scale;
      if (b < a) std::swap(a, b);
      if (first || a < lo) lo = a;
      if (first || hi < b) hi = b;
      QuadNum s = f.value(seg.x) * scale;
      if (first || s < bmin) bmin = s;
      if (first || bmax < s) bmax = s;
      first = false;
      base.push_back(std::move(s));
    }
    Interval current(lo, hi, err);
    if (previous) result.movement = qmax((current.lo - previous->lo).abs(), (current.hi - previous->hi).abs());
    else result.movement = QuadNum(sd.ed.root, 0);
    previous = current;

    bool degenerate = n == static_cast<unsigned>(spec.power) && tolq >= current.length();
    if (err <= tolq || degenerate) {
      result.interval = current;
      result.n = n;
      QuadNum diff = (current.length() - result.law_length).abs();
      result.law_ok = diff <= err * Rational(2);
      if (!result.law_ok)
        throw InconsistencyError("length of " + target.to_string() + " differs from the projected seed length by " +
                                 to_float(diff, 12));
      return result;
    }
    // Drop segments whose descendants cannot reach either extreme.
    QuadNum two_err = err * Rational(2);
    std::vector<SignedPatch::Term> next;
    std::size_t idx = 0;
    for (const auto& term : kept) {
      const QuadNum& s = base[idx++];
      if (bmax - two_err <= s || s <= bmin + two_err) next.push_back(term);
    }
    kept = SignedPatch::from_terms(std::move(next));
  }
  throw ConvergenceError("limit of " + target.to_string() + " not certified within tolerance before level " +
                         std::to_string(max_n));
}

namespace {

// Exact hulls of the attractor pieces Z_1, Z_2 of a positive step map.
struct PieceBounds {
  std::array<QuadNum, 2> lo, hi;
};

PieceBounds maxplus_fixed_point(const DualMap& step, const LatticeForm& f, const QuadNum& mu) {
  struct Child {
    QuadNum c;
    int j;
  };
  std::array<std::vector<Child>, 2> ch;
  for (int i = 1; i <= 2; ++i)
    for (const auto& c : step.children(i)) {
      if (c.sign < 0) throw PreconditionError("max-plus solve needs a positive step map");
      ch[i - 1].push_back({f.value(c.offset), c.star});
    }
  const RootSpec& root = mu.root();
  QuadNum one(root, 1), zero(root, 0);

  auto solve = [&](const std::array<std::size_t, 2>& pol) {
    // x_i - mu x_{j_i} = c_i
    std::array<std::array<QuadNum, 2>, 2> m{{{one, zero}, {zero, one}}};
    std::array<QuadNum, 2> rhs;
    for (int i = 0; i < 2; ++i) {
      const Child& c = ch[i][pol[i]];
      m[i][c.j - 1] -= mu;
      rhs[i] = c.c;
    }
    QuadNum det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return std::array<QuadNum, 2>{(rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det,
                                  (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det};
  };
  auto iterate = [&](int dir) {  // dir = +1: maximum, -1: minimum
    std::array<std::size_t, 2> pol{0, 0};
    for (int round = 0; round < 1000; ++round) {
      auto x = solve(pol);
      bool changed = false;
      for (int i = 0; i < 2; ++i) {
        QuadNum best = x[i];
        for (std::size_t k = 0; k < ch[i].size(); ++k) {
          QuadNum v = ch[i][k].c + mu * x[ch[i][k].j - 1];
          if ((dir > 0 && best < v) || (dir < 0 && v < best)) {
            best = v;
            pol[i] = k;
            changed = true;
          }
        }
      }
      if (!changed) return x;
    }
    throw ConvergenceError("policy iteration did not terminate");
  };
  PieceBounds b;
  b.hi = iterate(1);
  b.lo = iterate(-1);
  return b;
}

Interval exact_from_seed(const SignedPatch& seed, const PieceBounds& z, const LatticeForm& f) {
  QuadNum lo, hi;
  bool first = true;
  for (const auto& [seg, c] : seed) {
    QuadNum base = f.value(seg.x);
    QuadNum a = base + z.lo[seg.star - 1], b = base + z.hi[seg.star - 1];
    if (first || a < lo) lo = a;
    if (first || hi < b) hi = b;
    first = false;
  }
  return Interval(lo, hi);
}

PieceBounds positive_bounds(const CaseSpec& spec, const EigenData& ed) {
  unsigned k = static_cast<unsigned>(spec.power);
  if (ed.lambda_prime.pow(k).sign() < 0) k *= 2;
  Endomorphism step = power(spec.tau, k);
  if (classify(step) != EndoClass::substitution)
    throw PreconditionError("tau^" + std::to_string(k) + " is not a substitution");
  return maxplus_fixed_point(DualMap(step), ed.line_form, ed.lambda_prime.pow(k));
}

}  // namespace

Interval exact_fractal(const CaseSpec& spec, const FractalTarget& target) {
  validate_target(spec, target);
  EigenData et = eigen_for(spec, System::tau);
  PieceBounds z = positive_bounds(spec, et);
  if (target.system == System::tau || spec.delta_is_identity())
    return exact_from_seed(fractal_seed(spec, target), z, et.line_form);

  if (target.object == FractalTarget::Object::whole) {
    Interval a = exact_fractal(spec, FractalTarget::piece(System::sigma, spec.symbol(1)));
    Interval b = exact_fractal(spec, FractalTarget::piece(System::sigma, spec.symbol(2)));
    return Interval(qmin(a.lo, b.lo), qmax(a.hi, b.hi));
  }
  EigenData es = eigen_for(spec, System::sigma);
  const Letter sym = target.symbol;
  if (target.object == FractalTarget::Object::prime_piece) {
    Interval x = exact_fractal(spec, FractalTarget::piece(System::sigma, sym));
    Vec2 fs = sym.generator() == 1 ? Vec2{sym.sign(), 0} : Vec2{0, sym.sign()};
    return x.translated(-es.line_form.value(fs));
  }
  // X_sigma^(sym) = union over occurrences of sym in delta^-1(j) of
  // -pi_sigma f(P_k) + kappa X_tau^(j).
  QuadNum kappa = change_of_basis(spec);
  QuadNum lo, hi;
  bool first = true;
  for (int j = 1; j <= 2; ++j) {
    Interval xt = exact_from_seed(SignedPatch{{{j == 1 ? kE1 : kE2, j}, 1}}, z, et.line_form).scaled(kappa);
    const auto& w = spec.delta_inv.image(j).letters();
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != sym) continue;
      QuadNum off = -es.line_form.value(abelianize(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(k))));
      Interval m = xt.translated(off);
      if (first || m.lo < lo) lo = m.lo;
      if (first || hi < m.hi) hi = m.hi;
      first = false;
    }
  }
  if (first) throw InconsistencyError("symbol " + sym.to_string() + " does not occur in any delta^-1 image");
  return Interval(lo, hi);
}

QuadNum conjugacy_offset(const CaseSpec& spec, Letter symbol) {
  FractalTarget t = FractalTarget::piece(System::sigma, symbol);
  validate_target(spec, t);
  EigenData et = eigen_for(spec, System::tau);
  // A_delta X_sigma^(i) in tau line coordinates
  Interval x = exact_fractal(spec, t).scaled(change_of_basis(spec).inverse());
  SignedPatch seed = fractal_seed(spec, t);
  if (!spec.delta_is_identity()) seed = DualMap(spec.delta_inv).apply(seed);
  Interval p = project_patch(seed, et.line_form).hull();
  if (x.length() != p.length())
    throw InconsistencyError("A_delta X_sigma^(" + symbol.to_string() + ") is not a translate of the projected seed");
  return x.lo - p.lo;
}

SetEquation parse_set_equation(const std::string& text) {
  if (text == "substitution") return SetEquation::substitution;
  if (text == "alternative_single") return SetEquation::alternative_single;
  if (text == "alternative_double") return SetEquation::alternative_double;
  if (text == "conjugated") return SetEquation::conjugated;
  throw ParameterError("unknown set equation '" + text + "'");
}

std::string to_string(SetEquation v) {
  switch (v) {
    case SetEquation::substitution: return "substitution";
    case SetEquation::alternative_single: return "alternative_single";
    case SetEquation::alternative_double: return "alternative_double";
    default: return "conjugated";
  }
}

QuadNum SetEquationReport::max_deviation() const {
  QuadNum m = entries.front().deviation;
  for (const auto& e : entries) m = qmax(m, e.deviation);
  return m;
}

QuadNum SetEquationReport::max_overlap() const {
  QuadNum m = entries.front().overlap;
  for (const auto& e : entries) m = qmax(m, e.overlap);
  return m;
}

bool SetEquationReport::all_single() const {
  for (const auto& e : entries)
    if (!e.single_interval) return false;
  return true;
}

bool set_equation_applies(const CaseSpec& spec, SetEquation variant) {
  bool alternative = spec.id == CaseId::ii || spec.id == CaseId::iv;
  switch (variant) {
    case SetEquation::substitution: return !alternative;
    case SetEquation::alternative_single:
    case SetEquation::alternative_double: return alternative;
    default: return !spec.delta_is_identity();
  }
}

namespace {

struct Member {
  QuadNum offset;
  int j;
};

SetEquationEntry evaluate(const std::string& label, const IntervalSet& lhs, const QuadNum& lhs_error,
                          const std::vector<IntervalSet>& members, const QuadNum& member_error) {
  SetEquationEntry e;
  e.label = label;
  e.members = members.size();
  const RootSpec& root = lhs_error.root();
  e.overlap = QuadNum(root, 0);
  e.gap = QuadNum(root, 0);
  e.member_error = member_error;
  e.bound = lhs_error + member_error;
  IntervalSet uni;
  std::vector<Interval> hulls;
  for (const auto& m : members) {
    uni = unite(uni, m);
    hulls.push_back(m.hull());
  }
  for (std::size_t a = 0; a < hulls.size(); ++a)
    for (std::size_t b = a + 1; b < hulls.size(); ++b) e.overlap = qmax(e.overlap, overlap(hulls[a], hulls[b]));
  for (std::size_t k = 0; k + 1 < uni.parts().size(); ++k)
    e.gap = qmax(e.gap, uni.parts()[k + 1].lo - uni.parts()[k].hi);
  e.single_interval = e.gap <= member_error * Rational(2);
  e.deviation = hausdorff(lhs, uni);
  return e;
}

}  // namespace

SetEquationReport set_equation_residual(const CaseSpec& spec, SetEquation variant, unsigned n) {
  if (!set_equation_applies(spec, variant))
    throw PreconditionError(to_string(variant) + " does not apply to case " + to_string(spec.id));
  check_level(spec, n);
  SetEquationReport report;
  report.variant = variant;
  report.n = n;

  if (variant == SetEquation::conjugated) {
    EigenData es = eigen_for(spec, System::sigma);
    QuadNum kappa = change_of_basis(spec);
    std::array<IntervalSet, 2> xt;
    for (int j = 1; j <= 2; ++j) xt[j - 1] = approx_fractal(spec, FractalTarget::piece(System::tau, Letter(j, 1)), n);
    QuadNum member_error = xt[0].hull().error * kappa.abs();
    for (Letter sym : symbols(spec, System::sigma)) {
      IntervalSet lhs = approx_fractal(spec, FractalTarget::piece(System::sigma, sym), n);
      std::vector<IntervalSet> members;
      for (int j = 1; j <= 2; ++j) {
        const auto& w = spec.delta_inv.image(j).letters();
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (w[k] != sym) continue;
          QuadNum off = -es.line_form.value(abelianize(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(k))));
          members.push_back(xt[j - 1].scaled(kappa).translated(off));
        }
      }
      report.entries.push_back(evaluate("X_sigma^(" + sym.to_string() + ")", lhs, lhs.hull().error, members, member_error));
    }
    return report;
  }

  EigenData et = eigen_for(spec, System::tau);
  bool doubled = variant == SetEquation::alternative_double;
  Endomorphism e = doubled ? power(spec.tau, 2) : spec.tau;
  QuadNum inv_mu = (doubled ? et.lambda_prime.pow(2) : et.lambda_prime).inverse();
  std::array<IntervalSet, 2> x;
  for (int j = 1; j <= 2; ++j) x[j - 1] = approx_fractal(spec, FractalTarget::piece(System::tau, Letter(j, 1)), n);
  QuadNum member_error = x[0].hull().error;
  for (int i = 1; i <= 2; ++i) {
    IntervalSet lhs = x[i - 1].scaled(inv_mu);
    std::vector<IntervalSet> members;
    for (int j = 1; j <= 2; ++j) {
      const auto& w = e.image(j).letters();
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].generator() != i) continue;
        bool single = variant == SetEquation::alternative_single;
        if (single ? w[k].positive() : !w[k].positive()) continue;
        std::size_t end = single ? k + 1 : k;
        Vec2 fp = abelianize(std::vector<Letter>(w.begin(), w.begin() + static_cast<long>(end)));
        members.push_back(x[j - 1].translated(-(et.line_form.value(fp) * inv_mu)));
      }
    }
    report.entries.push_back(evaluate("A^-1 X^(" + std::to_string(i) + ")", lhs, x[i - 1].hull().error * inv_mu.abs(),
                                      members, member_error));
  }
  return report;
}

}  // namespace rauzy2
