#include "picard/arith.hpp"

#include <map>

#include "picard/errors.hpp"

namespace picard {

namespace {

Element gen_power(const Ring& ring, std::size_t k, int j) {
  Exponents e = ring->unit_exponents();
  e[ring->nvars() + k] = j;
  return Element::monomial(ring, std::move(e));
}

// c_1..c_d of the characteristic polynomial of multiplication by e, plus the
// cofactor with e * cof = N(e).
struct NormData {
  Element norm;
  Element cofactor;
};

NormData norm_data(const Element& e, std::size_t k) {
  Matrix m = multiplication_matrix(e, k);
  auto c = m.charpoly();
  const std::size_t d = c.size() - 1;
  Element norm = d % 2 == 0 ? c[d] : -c[d];
  Element x = e.ring()->one();
  for (std::size_t i = 1; i < d; ++i) x = x * e + c[i];
  Element cof = d % 2 == 1 ? x : -x;
  return {std::move(norm), std::move(cof)};
}

std::optional<Element> poly_divide(const Element& x, const Element& a) {
  const Ring& ring = x.ring();
  const CoeffDomain& dom = ring->coeff();
  const auto& [ea, ca] = a.leading_term();
  Element q(ring);
  Element rem = x;
  while (!rem.is_zero()) {
    const auto& [er, cr] = rem.leading_term();
    Exponents shift(er.size());
    for (std::size_t i = 0; i < er.size(); ++i) {
      shift[i] = er[i] - ea[i];
      if (shift[i] < 0) return std::nullopt;
    }
    Scalar coef;
    if (dom.kind == CoeffKind::Integers) {
      if (!dom.divides(ca, cr)) return std::nullopt;
      coef = cr / ca;
    } else {
      coef = dom.normalize(cr * dom.inverse(ca));
    }
    Element t = Element::monomial(ring, std::move(shift), coef);
    q += t;
    rem -= t * a;
  }
  return q;
}

// Division by r, which involves no generator with index >= k: done
// coordinatewise on the monomials in the generators >= k.
std::optional<Element> divide_by_lower(const Element& y, const Element& r, std::size_t k) {
  const Ring& ring = y.ring();
  const std::size_t nv = ring->nvars();
  std::map<Exponents, TermMap> groups;
  for (const auto& [e, c] : y.terms()) {
    Exponents upper(e.begin() + static_cast<long>(nv + k), e.end());
    Exponents lower = e;
    for (std::size_t s = nv + k; s < lower.size(); ++s) lower[s] = 0;
    auto it = groups.find(upper);
    if (it == groups.end()) it = groups.emplace(upper, ring->empty_terms()).first;
    it->second.emplace(std::move(lower), c);
  }
  Element q(ring);
  for (auto& [upper, t] : groups) {
    Element coord(ring, std::move(t));
    std::optional<Element> part =
        r.top_generator() ? try_divide(coord, r) : poly_divide(coord, r);
    if (!part) return std::nullopt;
    Exponents m = ring->unit_exponents();
    std::copy(upper.begin(), upper.end(), m.begin() + static_cast<long>(nv + k));
    q += *part * Element::monomial(ring, std::move(m));
  }
  return q;
}

Element prem_impl(const Element& a, const Element& b, std::size_t v) {
  const Ring& ring = a.ring();
  auto bc = split_by_var(b, v);
  const int n = static_cast<int>(bc.size()) - 1;
  const Element& lc = bc.back();
  Element r = a;
  while (!r.is_zero() && r.degree_in_var(v) >= n) {
    int m = r.degree_in_var(v);
    auto rc = split_by_var(r, v);
    Exponents e = ring->unit_exponents();
    e[v] = m - n;
    r = lc * r - rc.back() * Element::monomial(ring, std::move(e)) * b;
  }
  return r;
}

std::optional<std::size_t> main_var(const Element& a, const Element& b) {
  for (std::size_t v = a.ring()->nvars(); v-- > 0;) {
    if (a.degree_in_var(v) > 0 || b.degree_in_var(v) > 0) return v;
  }
  return std::nullopt;
}

Element gcd_rec(const Element& a, const Element& b);

Element content_in(const Element& p, std::size_t v) {
  Element g(p.ring());
  for (const auto& c : split_by_var(p, v)) {
    if (!c.is_zero()) g = gcd_rec(g, c);
  }
  return g;
}

Element primitive_in(const Element& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact_divide(p, content_in(p, v));
}

Element gcd_rec(const Element& a, const Element& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Ring& ring = a.ring();
  auto v = main_var(a, b);
  if (!v) {
    if (ring->coeff().kind != CoeffKind::Integers) return ring->one();
    mpz_class g;
    mpz_class x = a.constant_value()->get_num();
    mpz_class y = b.constant_value()->get_num();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return ring->constant(Scalar(g));
  }
  Element ca = content_in(a, *v);
  Element cb = content_in(b, *v);
  Element p = exact_divide(a, ca);
  Element q = exact_divide(b, cb);
  if (p.degree_in_var(*v) < q.degree_in_var(*v)) std::swap(p, q);
  while (!q.is_zero()) {
    Element r = prem_impl(p, q, *v);
    p = std::move(q);
    q = primitive_in(r, *v);
  }
  return gcd_rec(ca, cb) * primitive_in(p, *v);
}

}  // namespace

Matrix multiplication_matrix(const Element& e, std::size_t k) {
  const Ring& ring = e.ring();
  if (k >= ring->ngens()) throw PreconditionError("generator index out of range");
  auto top = e.top_generator();
  if (top && *top > k) {
    throw PreconditionError("element involves '" + ring->gen(*top).name + "', above '" + ring->gen(k).name + "'");
  }
  const auto d = static_cast<std::size_t>(ring->gen(k).degree);
  Matrix m(ring, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto coords = split_by_generator(e * gen_power(ring, k, static_cast<int>(j)), k);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = coords[i];
  }
  return m;
}

std::pair<Element, Element> trace_and_norm(const Element& e, std::size_t k) {
  Matrix m = multiplication_matrix(e, k);
  return {m.trace(), m.determinant()};
}

Element full_norm(const Element& e) {
  Element n = e;
  for (std::size_t k = e.ring()->ngens(); k-- > 0;) n = trace_and_norm(n, k).second;
  return n;
}

std::optional<Element> inverse(const Element& e) {
  if (e.is_zero()) return std::nullopt;
  const Ring& ring = e.ring();
  auto top = e.top_generator();
  if (!top) {
    auto c = e.constant_value();
    if (c && ring->coeff().is_unit(*c)) return ring->constant(ring->coeff().inverse(*c));
    return std::nullopt;
  }
  NormData nd = norm_data(e, *top);
  auto ninv = inverse(nd.norm);
  if (!ninv) return std::nullopt;
  Element r = nd.cofactor * *ninv;
  if (!(e * r).is_one()) return std::nullopt;
  return r;
}

std::optional<Element> try_divide(const Element& x, const Element& a) {
  if (!same_ring(x.ring(), a.ring())) throw RingMismatch("division of elements from different rings");
  if (a.is_zero()) return std::nullopt;
  if (x.is_zero()) return x;
  std::optional<Element> q;
  if (auto top = a.top_generator()) {
    NormData nd = norm_data(a, *top);
    q = divide_by_lower(x * nd.cofactor, nd.norm, *top);
  } else {
    q = divide_by_lower(x, a, 0);
  }
  if (q && a * *q == x) return q;
  return std::nullopt;
}

Element exact_divide(const Element& x, const Element& a) {
  auto q = try_divide(x, a);
  if (!q) throw PreconditionError("division of " + x.to_string() + " by " + a.to_string() + " is not exact");
  return *q;
}

bool is_ufd_layer(const Ring& ring) { return ring->ngens() == 0; }

bool is_pid_layer(const Ring& ring) {
  if (ring->ngens() != 0) return false;
  if (ring->coeff().kind == CoeffKind::Integers) return ring->nvars() == 0;
  return ring->nvars() <= 1;
}

Element normalize_associate(const Element& a) {
  if (a.is_zero()) return a;
  const CoeffDomain& dom = a.ring()->coeff();
  const Scalar& lc = a.leading_term().second;
  if (dom.kind == CoeffKind::Integers) return lc < 0 ? -a : a;
  return a * dom.inverse(lc);
}

Scalar scalar_content(const Element& a) {
  if (a.is_zero()) return 0;
  if (a.ring()->coeff().kind != CoeffKind::Integers) return 1;
  mpz_class g = 0;
  for (const auto& [e, c] : a.terms()) {
    mpz_class n = c.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return Scalar(g);
}

Element gcd_ufd(const Element& a, const Element& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("gcd of elements from different rings");
  if (!is_ufd_layer(a.ring())) {
    throw PreconditionError("gcd requires a polynomial ring over Z or a field; " + a.ring()->describe() +
                            " has generators");
  }
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  return normalize_associate(gcd_rec(a, b));
}

Element lcm_ufd(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return Element(a.ring());
  return normalize_associate(exact_divide(a * b, gcd_ufd(a, b)));
}

Element pseudo_remainder(const Element& a, const Element& b, std::size_t var) {
  if (b.is_zero()) throw PreconditionError("pseudo-division by zero");
  return prem_impl(a, b, var);
}

ExtGcd ext_gcd(const Element& a, const Element& b) {
  const Ring& ring = a.ring();
  if (!same_ring(ring, b.ring())) throw RingMismatch("ext_gcd of elements from different rings");
  if (!is_pid_layer(ring)) throw PreconditionError("extended Euclid needs Z or F[x]; got " + ring->describe());
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  if (ring->nvars() == 0 && ring->coeff().kind == CoeffKind::Integers) {
    mpz_class g, s, t;
    mpz_class x = a.constant_value()->get_num();
    mpz_class y = b.constant_value()->get_num();
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return {ring->constant(Scalar(g)), ring->constant(Scalar(s)), ring->constant(Scalar(t))};
  }
  if (ring->nvars() == 0) {
    // Field constants.
    const CoeffDomain& dom = ring->coeff();
    if (!a.is_zero()) return {ring->one(), ring->constant(dom.inverse(*a.constant_value())), ring->zero()};
    return {ring->one(), ring->zero(), ring->constant(dom.inverse(*b.constant_value()))};
  }
  // F[x]: r0 = s0 a + t0 b, r1 = s1 a + t1 b.
  auto divmod = [&](const Element& x, const Element& y) {
    const CoeffDomain& dom = ring->coeff();
    Element q(ring);
    Element r = x;
    const int dy = y.degree_in_var(0);
    const Scalar inv = dom.inverse(split_by_var(y, 0).back().constant_value().value());
    while (!r.is_zero() && r.degree_in_var(0) >= dy) {
      int dr = r.degree_in_var(0);
      Scalar c = dom.normalize(split_by_var(r, 0).back().constant_value().value() * inv);
      Exponents e{dr - dy};
      Element t = Element::monomial(ring, e, c);
      q += t;
      r -= t * y;
    }
    return std::make_pair(q, r);
  };
  Element r0 = a, r1 = b;
  Element s0 = ring->one(), s1 = ring->zero();
  Element t0 = ring->zero(), t1 = ring->one();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Scalar lc = r0.leading_term().second;
  Scalar inv = ring->coeff().inverse(lc);
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::size_t rank_over_field(const Matrix& m) {
  Matrix a = m;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    auto inv = inverse(a(p, c));
    if (!inv) throw PreconditionError("pivot " + a(p, c).to_string() + " is not invertible; rank needs a field");
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Element f = a(i, c) * *inv;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::optional<Matrix> inverse_matrix(const Matrix& m) {
  auto dinv = inverse(m.determinant());
  if (!dinv) return std::nullopt;
  return m.adjugate() * *dinv;
}

}  // namespace picard
