#include "rauzy2/dynamics.hpp"

#include <algorithm>

namespace rauzy2 {

const Piece& PartitionSpec::piece(Letter symbol) const {
  for (const auto& p : pieces)
    if (p.symbol == symbol) return p;
  throw ParameterError("partition has no piece for symbol " + symbol.to_string());
}

Interval PartitionSpec::whole() const {
  QuadNum lo = pieces.front().interval.lo, hi = pieces.front().interval.hi;
  for (const auto& p : pieces) {
    lo = qmin(lo, p.interval.lo);
    hi = qmax(hi, p.interval.hi);
  }
  return Interval(lo, hi, max_error());
}

QuadNum PartitionSpec::max_error() const {
  QuadNum m = pieces.front().interval.error;
  for (const auto& p : pieces) m = qmax(m, p.interval.error);
  return m;
}

namespace {

Vec2 letter_vector(Letter l) { return l.generator() == 1 ? Vec2{l.sign(), 0} : Vec2{0, l.sign()}; }

bool within(const QuadNum& x, const QuadNum& y, const QuadNum& margin) { return (x - y).abs() <= margin; }

bool included(const Interval& j, const Interval& k, const QuadNum& margin) {
  return k.lo - margin <= j.lo && j.hi <= k.hi + margin;
}

}  // namespace

PartitionSpec build_partition(const CaseSpec& spec, System system, const Rational& tol) {
  PartitionSpec part;
  part.system = system;
  EigenData ed = eigen_for(spec, system);
  for (Letter sym : symbols(spec, system)) {
    LimitResult approx = limit_interval(spec, FractalTarget::piece(system, sym), tol);
    Interval exact = exact_fractal(spec, FractalTarget::piece(system, sym));
    const QuadNum& err = approx.interval.error;
    if (!within(exact.lo, approx.interval.lo, err) || !within(exact.hi, approx.interval.hi, err))
      throw InconsistencyError("exact endpoints of X^(" + sym.to_string() + ") disagree with the certified limit");
    QuadNum shift = -ed.line_form.value(letter_vector(sym));
    LimitResult prime = limit_interval(spec, FractalTarget::prime_piece(system, sym), tol);
    Interval moved = exact.translated(shift);
    const QuadNum& perr = prime.interval.error;
    if (!within(moved.lo, prime.interval.lo, perr) || !within(moved.hi, prime.interval.hi, perr))
      throw InconsistencyError("X^(" + sym.to_string() + ") shifted by its translation differs from X'^(" +
                               sym.to_string() + ")");
    part.pieces.push_back({sym, exact, shift});
  }
  std::sort(part.pieces.begin(), part.pieces.end(),
            [](const Piece& x, const Piece& y) { return x.interval.lo < y.interval.lo; });
  const Interval& left = part.pieces[0].interval;
  const Interval& right = part.pieces[1].interval;
  if (!(left.hi == right.lo))
    throw InconsistencyError("partition pieces overlap or leave a gap: " + to_float(left.hi, 12) + " vs " +
                             to_float(right.lo, 12));
  // The origin codes the first letter 2 of the periodic point; when it sits on
  // the internal boundary that decides which piece owns the boundary.
  part.boundary_to_right = true;
  if (left.hi.is_zero()) part.boundary_to_right = part.pieces[1].symbol.generator() == 2;
  return part;
}

namespace {

// Index of the piece containing x; sets `ambiguous` when x lies within the
// endpoint error of the internal boundary.
std::size_t locate(const PartitionSpec& part, const QuadNum& x, bool& ambiguous) {
  const Interval& left = part.pieces[0].interval;
  const Interval& right = part.pieces[1].interval;
  QuadNum margin = part.max_error();
  if (x < left.lo - margin || right.hi + margin < x)
    throw DynamicsError("orbit point " + to_float(x, 12) + " left the domain");
  const QuadNum& b = left.hi;
  ambiguous = false;
  if (margin.sign() > 0 && (x - b).abs() <= margin) {
    ambiguous = true;
    return x < b ? 0 : 1;
  }
  if (x < b) return 0;
  if (b < x) return 1;
  return part.boundary_to_right ? 1 : 0;
}

}  // namespace

Orbit domain_exchange_orbit(const PartitionSpec& part, const QuadNum& start, std::size_t steps,
                            const std::vector<Letter>* predicted) {
  Orbit orbit;
  QuadNum x = start;
  for (std::size_t k = 0; k < steps; ++k) {
    bool amb = false;
    std::size_t idx = locate(part, x, amb);
    if (amb) {
      orbit.ambiguous.push_back(k);
      if (predicted != nullptr && k < predicted->size())
        for (std::size_t t = 0; t < part.pieces.size(); ++t)
          if (part.pieces[t].symbol == (*predicted)[k]) idx = t;
    }
    orbit.coding.push_back(part.pieces[idx].symbol);
    orbit.points.push_back(x);
    x += part.pieces[idx].shift;
  }
  return orbit;
}

CheckReport structure_check(const PartitionSpec& outer, const std::vector<InnerPiece>& inner) {
  CheckReport r;
  QuadNum inner_err = inner.front().interval.error;
  for (const auto& p : inner) inner_err = qmax(inner_err, p.interval.error);
  QuadNum margin = outer.max_error() + inner_err;
  Interval X = outer.whole();

  QuadNum alo = inner.front().interval.lo, ahi = inner.front().interval.hi;
  for (const auto& p : inner) {
    alo = qmin(alo, p.interval.lo);
    ahi = qmax(ahi, p.interval.hi);
  }
  Interval A(alo, ahi);

  std::vector<Interval> tower;
  for (const auto& p : inner) {
    const std::string tag = "A^(" + p.symbol.to_string() + ")";
    if (p.word.empty()) {
      r.add(tag + " word nonempty", false);
      continue;
    }
    Interval J = p.interval;
    bool inside = true, disjoint = true;
    std::string detail;
    for (std::size_t k = 0; k < p.word.size(); ++k) {
      const Piece& target = outer.piece(p.word[k]);
      if (!included(J, target.interval, margin)) {
        inside = false;
        if (detail.empty()) detail = "T^" + std::to_string(k) + " leaves X^(" + p.word[k].to_string() + ")";
      }
      if (k > 0 && overlap(J, A) > margin) {
        disjoint = false;
        if (detail.empty()) detail = "T^" + std::to_string(k) + " meets A";
      }
      tower.push_back(J);
      J = J.translated(target.shift);
    }
    r.add(tag + ": T^k A in X^(w_k+1)", inside, detail);
    r.add(tag + ": intermediate iterates avoid A", disjoint, detail);
    r.add(tag + ": T^l A in A", included(J, A, margin));
  }
  QuadNum total(X.lo.root(), 0), worst(X.lo.root(), 0);
  for (std::size_t a = 0; a < tower.size(); ++a) {
    total += tower[a].length();
    for (std::size_t b = a + 1; b < tower.size(); ++b) worst = qmax(worst, overlap(tower[a], tower[b]));
  }
  Rational count(static_cast<long>(tower.size()));
  bool tiles = worst <= margin * Rational(2) && (total - X.length()).abs() <= margin * Rational(2) * count;
  bool covers = true;
  for (const auto& J : tower) covers = covers && included(J, X, margin);
  r.add("iterates tile X", tiles && covers, "max overlap " + to_float(worst, 15));
  return r;
}

std::vector<InnerPiece> delta_structure_inner(const CaseSpec& spec, const PartitionSpec& tau_part, unsigned n) {
  EigenData et = eigen_for(spec, System::tau);
  unsigned k = static_cast<unsigned>(spec.power) * n;
  QuadNum scale = change_of_basis(spec) * et.lambda_prime.pow(k);
  Endomorphism word_map = compose(spec.delta_inv, power(spec.tau, k));
  std::vector<InnerPiece> inner;
  for (const auto& p : tau_part.pieces) {
    int g = p.symbol.generator();
    inner.push_back({Letter(g, 1), p.interval.scaled(scale), word_map.image(g)});
  }
  return inner;
}

std::vector<InnerPiece> power_structure_inner(const CaseSpec& spec, const PartitionSpec& part, unsigned n) {
  EigenData ed = eigen_for(spec, part.system);
  Endomorphism e = power(system_map(spec, part.system), n);
  QuadNum scale = ed.lambda_prime.pow(n);
  std::vector<InnerPiece> inner;
  for (const auto& p : part.pieces) {
    inner.push_back({p.symbol, p.interval.scaled(scale), apply_endo(e, ReducedWord(std::vector<Letter>{p.symbol}))});
  }
  return inner;
}

CheckReport y_set_check(const CaseSpec& spec, const PartitionSpec& part, std::size_t n_points, const Rational& tol) {
  if (n_points < 1) throw ParameterError("y_set_check needs at least one point");
  CheckReport r;
  PeriodicPoints pp = periodic_point_prefix(spec, n_points);
  const std::vector<Letter>& s = part.system == System::sigma ? pp.sigma : pp.tau;
  EigenData ed = eigen_for(spec, part.system);
  QuadNum tolq(ed.root, tol);

  struct Bucket {
    std::vector<QuadNum> y, yp;
  };
  std::vector<Bucket> buckets(part.pieces.size());
  Vec2 v = kOrigin;  // -f(s_0 ... s_{k-1})
  for (std::size_t k = 0; k < n_points; ++k) {
    std::size_t idx = 0;
    while (part.pieces[idx].symbol != s[k]) ++idx;
    buckets[idx].y.push_back(ed.line_form.value(v));
    v = v - letter_vector(s[k]);
    buckets[idx].yp.push_back(ed.line_form.value(v));
  }
  for (std::size_t idx = 0; idx < part.pieces.size(); ++idx) {
    const Piece& pc = part.pieces[idx];
    const std::string sym = pc.symbol.to_string();
    for (int prime = 0; prime < 2; ++prime) {
      const auto& pts = prime ? buckets[idx].yp : buckets[idx].y;
      Interval target = prime ? pc.interval.translated(pc.shift) : pc.interval;
      const std::string name = (prime ? "Y'^(" : "Y^(") + sym + ")";
      if (pts.empty()) {
        r.add(name + " nonempty", false);
        continue;
      }
      bool contained = true;
      QuadNum mn = pts.front(), mx = pts.front();
      for (const auto& x : pts) {
        if (x < target.lo - target.error || target.hi + target.error < x) contained = false;
        mn = qmin(mn, x);
        mx = qmax(mx, x);
      }
      QuadNum gap = qmax((mn - target.lo).abs(), (target.hi - mx).abs());
      r.add(name + " contained in its interval", contained, std::to_string(pts.size()) + " points");
      r.add(name + " reaches the endpoints", gap < tolq, "gap " + to_float(gap, 9));
    }
  }
  return r;
}

CheckReport induced_map_check(const CaseSpec& spec, const PartitionSpec& sigma_part, const PartitionSpec& tau_part,
                              std::size_t samples) {
  CheckReport r;
  QuadNum kappa = change_of_basis(spec);
  Interval A = tau_part.whole().scaled(kappa);
  // Generic start: a large prime denominator keeps the orbit off every endpoint.
  Interval whole = tau_part.whole();
  QuadNum start = whole.lo + (whole.hi - whole.lo) * Rational(314159, 1000003);
  Orbit tau_orbit = domain_exchange_orbit(tau_part, start, samples + 2);
  std::size_t mismatches = 0, boundary_hits = 0;
  for (std::size_t k = 1; k <= samples; ++k) {
    const QuadNum& y = tau_orbit.points[k];
    QuadNum expected = tau_orbit.points[k + 1] * kappa;
    QuadNum x = y * kappa;
    bool returned = false;
    for (int step = 0; step < 10000; ++step) {
      bool amb = false;
      std::size_t idx = locate(sigma_part, x, amb);
      x += sigma_part.pieces[idx].shift;
      if (x == A.lo || x == A.hi) ++boundary_hits;
      if (A.contains(x)) {
        returned = true;
        break;
      }
    }
    if (!returned || !(x == expected)) ++mismatches;
  }
  r.add("first return of T_sigma equals conjugated T_tau", mismatches == 0 && boundary_hits == 0,
        std::to_string(samples) + " samples, " + std::to_string(mismatches) + " mismatches, " +
            std::to_string(boundary_hits) + " boundary hits");
  return r;
}

}  // namespace rauzy2
