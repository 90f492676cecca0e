#include "rauzy2/patch.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rauzy2 {

std::string Segment::to_string() const {
  return "((" + std::to_string(x.x1) + "," + std::to_string(x.x2) + ")," + std::to_string(star) + "*)";
}

SignedPatch::SignedPatch(std::initializer_list<Term> terms) : SignedPatch(from_terms(std::vector<Term>(terms))) {}

SignedPatch SignedPatch::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  SignedPatch p;
  p.terms_.reserve(terms.size());
  for (const Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second = checked_add(p.terms_.back().second, t.second);
    else
      p.terms_.push_back(t);
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

std::int64_t SignedPatch::coefficient(const Segment& s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s, [](const Term& t, const Segment& v) { return t.first < v; });
  return it != terms_.end() && it->first == s ? it->second : 0;
}

SignedPatch SignedPatch::translated(Vec2 y) const {
  SignedPatch p = *this;
  for (auto& t : p.terms_) t.first.x += y;
  return p;
}

SignedPatch SignedPatch::window(std::int64_t r) const {
  SignedPatch p;
  for (const auto& t : terms_)
    if (t.first.x.norm_inf() <= r) p.terms_.push_back(t);
  return p;
}

std::string SignedPatch::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [seg, c] : terms_) {
    if (!s.empty()) s += " ";
    s += (c < 0 ? "-" : "+");
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) s += std::to_string(m);
    s += seg.to_string();
  }
  return s;
}

SignedPatch operator+(const SignedPatch& p, const SignedPatch& q) {
  std::vector<SignedPatch::Term> t(p.terms_);
  t.insert(t.end(), q.terms_.begin(), q.terms_.end());
  return SignedPatch::from_terms(std::move(t));
}

SignedPatch operator*(std::int64_t c, const SignedPatch& p) {
  std::vector<SignedPatch::Term> t(p.terms_);
  for (auto& term : t) term.second = checked_mul(term.second, c);
  return SignedPatch::from_terms(std::move(t));
}

SignedPatch operator-(const SignedPatch& p, const SignedPatch& q) { return p + (-1) * q; }

std::size_t segment_cap() {
  const char* env = std::getenv("RAUZY2_SEGMENT_CAP");
  if (env == nullptr || *env == '\0') return 10'000'000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw ParameterError("RAUZY2_SEGMENT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

DualMap::DualMap(const Endomorphism& e) : inv_(incidence_matrix(e).inverse_unimodular()) {
  for (int j = 1; j <= 2; ++j) {
    const auto& w = e.image(j).letters();
    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter l = w[k];
      std::vector<Letter> tail(w.begin() + static_cast<long>(k) + (l.positive() ? 1 : 0), w.end());
      children_[l.generator() - 1].push_back({abelianize(tail), j, l.sign()});
    }
  }
}

SignedPatch DualMap::apply(const SignedPatch& p, std::size_t cap) const {
  if (cap == 0) cap = segment_cap();
  std::vector<SignedPatch::Term> out;
  std::size_t raw = 0;
  for (const auto& [seg, c] : p) raw += children_[seg.star - 1].size();
  if (raw > 4 * cap)
    throw ResourceError("dual step would produce " + std::to_string(raw) + " raw segments (cap " + std::to_string(cap) + ")");
  out.reserve(raw);
  for (const auto& [seg, c] : p)
    for (const Child& ch : children_[seg.star - 1])
      out.push_back({Segment{inv_ * (seg.x + ch.offset), ch.star}, ch.sign > 0 ? c : -c});
  SignedPatch r = SignedPatch::from_terms(std::move(out));
  if (r.size() > cap)
    throw ResourceError("patch of " + std::to_string(r.size()) + " segments exceeds cap " + std::to_string(cap));
  return r;
}

SignedPatch tiling_substitution(const Endomorphism& e, const SignedPatch& p) { return DualMap(e).apply(p); }

SignedPatch tiling_substitution_alt(const Endomorphism& e, const SignedPatch& p) {
  Mat2 inv = incidence_matrix(e).inverse_unimodular();
  std::vector<SignedPatch::Term> out;
  for (const auto& [seg, c] : p) {
    for (int j = 1; j <= 2; ++j) {
      const auto& w = e.image(j).letters();
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].generator() != seg.star) continue;
        Vec2 s = abelianize(std::vector<Letter>(w.begin() + static_cast<long>(k) + 1, w.end()));
        Vec2 base = seg.x + s;
        if (!w[k].positive()) base = base - (seg.star == 1 ? kE1 : kE2);
        out.push_back({Segment{inv * base, j}, w[k].positive() ? c : -c});
      }
    }
  }
  return SignedPatch::from_terms(std::move(out));
}

SurfaceConvention surface_convention(const CaseSpec& spec, System system, Strictness s) {
  SurfaceConvention c;
  c.strictness = s;
  if (system == System::sigma && (spec.id == CaseId::ii || spec.id == CaseId::iv)) {
    c.style = SurfaceStyle::shifted;
    c.translate = kE1;
  }
  return c;
}

bool in_surface(const Segment& s, const EigenData& ed, const SurfaceConvention& conv) {
  const LatticeForm& f = ed.inner_form;
  Vec2 x = s.x - conv.translate;
  Vec2 upper, lower;  // need <upper, v> > 0 (>= 0) and <lower, v> <= 0 (< 0)
  if (conv.style == SurfaceStyle::standard) {
    upper = x;
    lower = x - (s.star == 1 ? kE1 : kE2);
  } else if (s.star == 1) {
    upper = x;
    lower = x + kE1;
  } else {
    upper = x + kE1;
    lower = x + kE1 - kE2;
  }
  int su = f.sign(upper), sl = f.sign(lower);
  if (conv.strictness == Strictness::S) return su > 0 && sl <= 0;
  return su >= 0 && sl < 0;
}

bool patch_in_G(const SignedPatch& p, const EigenData& ed, const SurfaceConvention& conv) {
  for (const auto& [seg, c] : p)
    if ((c != 1 && c != -1) || !in_surface(seg, ed, conv)) return false;
  return true;
}

bool connected(const SignedPatch& p) {
  if (p.size() <= 1) return true;
  std::vector<Vec2> verts;
  verts.reserve(2 * p.size());
  for (const auto& [seg, c] : p) {
    verts.push_back(seg.tail());
    verts.push_back(seg.head());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto index = [&](Vec2 v) { return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  std::size_t components = verts.size();
  for (const auto& [seg, c] : p) {
    std::size_t a = find(index(seg.tail())), b = find(index(seg.head()));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

SeedKind parse_seed_kind(const std::string& text) {
  if (text == "U") return SeedKind::U;
  if (text == "U_prime") return SeedKind::U_prime;
  if (text == "U_tilde") return SeedKind::U_tilde;
  if (text == "U_tilde_prime") return SeedKind::U_tilde_prime;
  if (text == "U_bar") return SeedKind::U_bar;
  if (text == "U_bar_prime") return SeedKind::U_bar_prime;
  throw ParameterError("unknown seed kind '" + text + "'");
}

std::string to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::U: return "U";
    case SeedKind::U_prime: return "U_prime";
    case SeedKind::U_tilde: return "U_tilde";
    case SeedKind::U_tilde_prime: return "U_tilde_prime";
    case SeedKind::U_bar: return "U_bar";
    default: return "U_bar_prime";
  }
}

SignedPatch seed(SeedKind kind, const CaseSpec& spec) {
  const SignedPatch U{{{kE1, 1}, 1}, {{kE2, 2}, 1}};
  const SignedPatch Up{{{kOrigin, 1}, 1}, {{kOrigin, 2}, 1}};
  bool odd_family = spec.id == CaseId::i || spec.id == CaseId::iv;
  switch (kind) {
    case SeedKind::U: return U;
    case SeedKind::U_prime: return Up;
    case SeedKind::U_tilde: return spec.delta_is_identity() ? U : tiling_substitution(spec.delta, U);
    case SeedKind::U_tilde_prime: return spec.delta_is_identity() ? Up : tiling_substitution(spec.delta, Up);
    case SeedKind::U_bar:
      if (odd_family) return SignedPatch{{{kOrigin, 1}, 1}, {{kE2, 2}, 1}};
      return U;
    case SeedKind::U_bar_prime:
      if (odd_family) return SignedPatch{{{kE1, 1}, 1}, {{kOrigin, 2}, 1}};
      return Up;
  }
  return U;
}

SignedPatch replacement_map(const CaseSpec& spec, const Segment& s) {
  if (spec.id == CaseId::iii) throw PreconditionError("replacement map is undefined for case iii (delta = id)");
  Vec2 y = incidence_matrix(spec.delta).inverse_unimodular() * s.x;
  const Vec2 d = kE1 - kE2;
  switch (spec.id) {
    case CaseId::i:
      if (s.star == 1) return SignedPatch{{{y + d, 1}, -1}};
      return SignedPatch{{{y + d, 1}, 1}, {{y, 2}, 1}};
    case CaseId::ii:
      if (s.star == 1) return SignedPatch{{{y, 1}, 1}};
      return SignedPatch{{{y + kE1, 1}, -1}, {{y, 2}, 1}};
    default:
      if (s.star == 1) return SignedPatch{{{y + kE1, 1}, -1}};
      return SignedPatch{{{y, 2}, 1}};
  }
}

SignedPatch iterate_dual(const CaseSpec& spec, DualWhich which, const SignedPatch& start, unsigned n) {
  std::size_t cap = segment_cap();
  SignedPatch p = start;
  if (which == DualWhich::sigma) {
    DualMap m(spec.sigma);
    for (unsigned k = 0; k < n; ++k) p = m.apply(p, cap);
    return p;
  }
  DualMap t(spec.tau);
  if (which == DualWhich::delta_composed) p = DualMap(spec.delta_inv).apply(p, cap);
  for (unsigned k = 0; k < n; ++k) p = t.apply(p, cap);
  if (which == DualWhich::delta_composed) p = DualMap(spec.delta).apply(p, cap);
  return p;
}

SignedPatch enumerate_surface(const EigenData& ed, const SurfaceConvention& conv, std::int64_t radius) {
  if (radius < 0) throw ParameterError("radius must be nonnegative");
  std::vector<SignedPatch::Term> terms;
  for (std::int64_t x1 = -radius; x1 <= radius; ++x1)
    for (std::int64_t x2 = -radius; x2 <= radius; ++x2)
      for (int star = 1; star <= 2; ++star) {
        Segment s{{x1, x2}, star};
        if (in_surface(s, ed, conv)) terms.push_back({s, 1});
      }
  return SignedPatch::from_terms(std::move(terms));
}

int surface_orientation(const CaseSpec& spec, System system, int star) {
  if (system == System::tau || star == 2) return 1;
  return spec.id == CaseId::ii || spec.id == CaseId::iv ? -1 : 1;
}

SignedPatch oriented_surface(const CaseSpec& spec, System system, std::int64_t radius) {
  SignedPatch plain = enumerate_surface(eigen_for(spec, system), surface_convention(spec, system), radius);
  std::vector<SignedPatch::Term> terms;
  for (const auto& [seg, c] : plain) terms.push_back({seg, c * surface_orientation(spec, system, seg.star)});
  return SignedPatch::from_terms(std::move(terms));
}

}  // namespace rauzy2
