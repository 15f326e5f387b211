#include "picard/random.hpp"

#include <numeric>

namespace picard {

long Random::uniform(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Scalar Random::scalar(const CoeffDomain& dom, long range, bool nonzero, bool fractions) {
  for (;;) {
    Scalar q;
    if (dom.kind == CoeffKind::PrimeField) {
      q = uniform(0, dom.p - 1);
    } else {
      q = uniform(-range, range);
      if (fractions && dom.kind == CoeffKind::Rationals) {
        q /= uniform(1, std::max(1L, range));
        q.canonicalize();
      }
    }
    if (!nonzero || q != 0) return q;
  }
}

namespace {

Element draw(Random& rng, const Ring& ring, const std::vector<std::size_t>& gens, const RandomShape& shape) {
  std::vector<std::size_t> vars = shape.vars;
  if (vars.empty()) {
    vars.resize(ring->nvars());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
  }
  Element out(ring);
  for (int t = 0; t < shape.terms; ++t) {
    Exponents e = ring->unit_exponents();
    if (!vars.empty() && shape.var_degree > 0) {
      int budget = static_cast<int>(rng.uniform(0, shape.var_degree));
      for (int i = 0; i < budget; ++i) e[vars[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(vars.size()) - 1))]]++;
    }
    for (std::size_t k : gens) e[ring->nvars() + k] = static_cast<int>(rng.uniform(0, ring->gen(k).degree - 1));
    out += Element::monomial(ring, std::move(e), rng.scalar(ring->coeff(), shape.coeff_range, true, shape.fractions));
  }
  return out;
}

}  // namespace

Element random_element(Random& rng, const Ring& ring, const RandomShape& shape) {
  std::vector<std::size_t> gens;
  if (shape.use_generators) {
    for (std::size_t k = 0; k < ring->ngens(); ++k) gens.push_back(k);
  }
  return draw(rng, ring, gens, shape);
}

Element random_element_in(Random& rng, const Ring& ring, const std::vector<std::size_t>& gens,
                          const RandomShape& shape) {
  return draw(rng, ring, gens, shape);
}

}  // namespace picard
