#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rauzy2/eigen.hpp"
#include "rauzy2/family.hpp"

namespace rauzy2 {

// Oriented unit segment (x, i*): (x,1*) spans x -> x+e2, (x,2*) spans x -> x+e1.
struct Segment {
  Vec2 x;
  int star = 1;

  friend auto operator<=>(const Segment&, const Segment&) = default;
  Vec2 tail() const { return x; }
  Vec2 head() const { return star == 1 ? x + kE2 : x + kE1; }
  std::string to_string() const;
};

// Formal integer combination of segments, canonically sorted by
// (x1, x2, star) with zero coefficients removed.
class SignedPatch {
 public:
  using Term = std::pair<Segment, std::int64_t>;

  SignedPatch() = default;
  SignedPatch(std::initializer_list<Term> terms);
  static SignedPatch from_terms(std::vector<Term> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coefficient(const Segment& s) const;

  SignedPatch translated(Vec2 y) const;
  // Terms whose base point has sup-norm at most r.
  SignedPatch window(std::int64_t r) const;
  std::string to_string() const;

  friend SignedPatch operator+(const SignedPatch& p, const SignedPatch& q);
  friend SignedPatch operator-(const SignedPatch& p, const SignedPatch& q);
  friend SignedPatch operator*(std::int64_t c, const SignedPatch& p);
  friend bool operator==(const SignedPatch&, const SignedPatch&) = default;

 private:
  std::vector<Term> terms_;
};

// Segment cap for dual iteration: RAUZY2_SEGMENT_CAP or 10^7.
std::size_t segment_cap();

// Precomputed tiling substitution e* for a unimodular endomorphism e.
class DualMap {
 public:
  struct Child {
    Vec2 offset;  // f(S_k) for positive letters, f(w_k S_k) for negative ones
    int star;     // j
    int sign;     // +1 / -1
  };

  explicit DualMap(const Endomorphism& e);
  SignedPatch apply(const SignedPatch& p, std::size_t cap = 0) const;
  const Mat2& inverse_matrix() const { return inv_; }
  // Children of (o, i*) before the A^-1 is applied.
  const std::vector<Child>& children(int star) const { return children_[star - 1]; }

 private:
  Mat2 inv_;
  std::array<std::vector<Child>, 2> children_;
};

SignedPatch tiling_substitution(const Endomorphism& e, const SignedPatch& p);
// Same map through the form A^-1(x + f(S_k) - e_i) for negative letters.
SignedPatch tiling_substitution_alt(const Endomorphism& e, const SignedPatch& p);

enum class SurfaceStyle { standard, shifted };
enum class Strictness { S, S_prime };

struct SurfaceConvention {
  SurfaceStyle style = SurfaceStyle::standard;
  Strictness strictness = Strictness::S;
  Vec2 translate = kOrigin;
};

// Convention under which the dual iterates of `system` live: shifted and
// translated by e1 for sigma in cases ii and iv, standard otherwise.
SurfaceConvention surface_convention(const CaseSpec& spec, System system, Strictness s = Strictness::S);

bool in_surface(const Segment& s, const EigenData& ed, const SurfaceConvention& conv);
bool patch_in_G(const SignedPatch& p, const EigenData& ed, const SurfaceConvention& conv);
bool connected(const SignedPatch& p);

enum class SeedKind { U, U_prime, U_tilde, U_tilde_prime, U_bar, U_bar_prime };
SeedKind parse_seed_kind(const std::string& text);
std::string to_string(SeedKind kind);
SignedPatch seed(SeedKind kind, const CaseSpec& spec);

// Closed-form delta* on a single segment (cases i, ii, iv).
SignedPatch replacement_map(const CaseSpec& spec, const Segment& s);

enum class DualWhich { sigma, tau, delta_composed };
SignedPatch iterate_dual(const CaseSpec& spec, DualWhich which, const SignedPatch& start, unsigned n);

SignedPatch enumerate_surface(const EigenData& ed, const SurfaceConvention& conv, std::int64_t radius);

// Orientation carried by surviving star-segments of the sigma surface.
// The conjugating replacement leaves 1* segments reversed in cases ii
// and iv; everything else is positive.
int surface_orientation(const CaseSpec& spec, System system, int star);
// The enumerated surface of `system` with those orientations applied.
SignedPatch oriented_surface(const CaseSpec& spec, System system, std::int64_t radius);

}  // namespace rauzy2
