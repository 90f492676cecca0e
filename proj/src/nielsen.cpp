#include "rauzy2/word.hpp"

namespace rauzy2 {

namespace {

// Elementary automorphism g -> g h^{s} (right) or h^{s} g (left), h fixed.
Endomorphism elementary(int g, bool right, int s) {
  int h = 3 - g;
  ReducedWord hs = ReducedWord{s * h};
  ReducedWord gw = ReducedWord{g};
  ReducedWord img = right ? concat(gw, hs) : concat(hs, gw);
  return g == 1 ? Endomorphism(img, ReducedWord{2}) : Endomorphism(ReducedWord{1}, img);
}

}  // namespace

std::optional<Endomorphism> nielsen_invert(const Endomorphism& e, std::size_t max_steps) {
  std::int64_t d = incidence_matrix(e).det();
  if (d != 1 && d != -1) throw PreconditionError("nielsen_invert requires a unimodular incidence matrix");

  // Invariant: current = e o acc.
  Endomorphism current = e;
  Endomorphism acc = Endomorphism::identity();
  for (std::size_t step = 0;; ++step) {
    if (current.image1().size() == 1 && current.image2().size() == 1 &&
        current.image1()[0].generator() != current.image2()[0].generator()) {
      // current is a signed permutation pi, so e^-1 = acc o pi^-1.
      std::array<ReducedWord, 2> pinv;
      for (int g = 1; g <= 2; ++g) {
        Letter l = current.image(g)[0];
        pinv[l.generator() - 1] = ReducedWord{l.sign() * g};
      }
      return compose(acc, Endomorphism(pinv[0], pinv[1]));
    }
    if (step >= max_steps) return std::nullopt;

    std::size_t total = current.image1().size() + current.image2().size();
    bool moved = false;
    for (int g = 1; g <= 2 && !moved; ++g) {
      for (bool right : {true, false}) {
        for (int s : {1, -1}) {
          const ReducedWord& ug = current.image(g);
          ReducedWord uh = current.image(3 - g);
          if (s < 0) uh = invert(uh);
          ReducedWord candidate = right ? concat(ug, uh) : concat(uh, ug);
          if (candidate.size() + current.image(3 - g).size() < total) {
            Endomorphism nu = elementary(g, right, s);
            current = compose(current, nu);
            acc = compose(acc, nu);
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
    }
    if (!moved) return std::nullopt;
  }
}

}  // namespace rauzy2
