#include "picard/glue.hpp"

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/projective.hpp"
#include "picard/random.hpp"

namespace picard {

TwoChartCover::TwoChartCover(Element s, Element t, std::optional<BezoutCertificate> bezout)
    : s_(std::move(s)), t_(std::move(t)) {
  if (bezout) {
    if (bezout->elements.size() != 2 || bezout->elements[0] != s_ || bezout->elements[1] != t_) {
      throw CertificateError("cover certificate must be for {s, t} in that order");
    }
    if (!verify_bezout(*bezout)) throw CertificateError("cover certificate does not combine to 1");
    bezout_ = *bezout;
    return;
  }
  auto found = find_bezout({s_, t_});
  if (!found) {
    throw CertificateError("no Bezout certificate for {" + s_.to_string() + ", " + t_.to_string() +
                           "}; supply one outside Z and F[x]");
  }
  bezout_ = *found;
}

LocalizedElement TwoChartCover::from_s(const LocalizedElement& x) const {
  if (x.base != s_) throw PreconditionError("element is not in the chart A_s");
  return {x.numerator * t_.pow(x.exponent), st(), x.exponent};
}

LocalizedElement TwoChartCover::from_t(const LocalizedElement& y) const {
  if (y.base != t_) throw PreconditionError("element is not in the chart A_t");
  return {y.numerator * s_.pow(y.exponent), st(), y.exponent};
}

Element equalizer_preimage(const TwoChartCover& cover, const LocalizedElement& a_over_sn,
                           const LocalizedElement& b_over_tm, const std::optional<PowerBezout>& uv) {
  const Element& s = cover.s();
  const Element& t = cover.t();
  if (a_over_sn.base != s || b_over_tm.base != t) throw PreconditionError("fractions must live in A_s and A_t");
  const unsigned n = a_over_sn.exponent;
  const unsigned m = b_over_tm.exponent;
  const Element lhs = a_over_sn.numerator * t.pow(m);
  const Element rhs = b_over_tm.numerator * s.pow(n);
  const Element st = cover.st();
  std::optional<unsigned> p;
  Element stp = cover.ring()->one();
  for (unsigned k = 0; k <= 8 && !p; ++k) {
    if (lhs * stp == rhs * stp) p = k;
    stp *= st;
  }
  if (!p) {
    throw NotASection("images differ in A_st: " + lhs.to_string() + " != " + rhs.to_string());
  }
  // a/s^n = a s^p / s^{n+p}, b/t^m = b t^p / t^{m+p}; now a' t^{m'} = b' s^{n'}.
  const Element a = a_over_sn.numerator * s.pow(*p);
  const Element b = b_over_tm.numerator * t.pow(*p);
  const unsigned n2 = n + *p;
  const unsigned m2 = m + *p;
  const Element sn = s.pow(n2);
  const Element tm = t.pow(m2);
  Element u, v;
  if (uv && *p == 0) {
    std::tie(u, v) = *uv;
    if (!(sn * u + tm * v).is_one()) throw CertificateError("supplied u, v do not satisfy s^n u + t^m v = 1");
  } else if (auto c = is_pid_layer(cover.ring()) ? find_bezout({sn, tm}) : std::nullopt) {
    u = c->coefficients[0];
    v = c->coefficients[1];
  } else {
    BezoutCertificate c2 = bezout_for_powers(cover.bezout(), n2, m2);
    u = c2.coefficients[0];
    v = c2.coefficients[1];
  }
  Element c = b * v + a * u;
  if (c * sn != a || c * tm != b) throw CertificateError("preimage check failed for c = " + c.to_string());
  return c;
}

GluedModule::GluedModule(TwoChartCover cover, LocalizedElement omega, std::optional<LocalizedElement> omega_inverse)
    : cover_(std::move(cover)), omega_(std::move(omega)) {
  const Element st = cover_.st();
  if (omega_.base != st) throw PreconditionError("omega must be given over the base s*t");
  LocalizedElement one{cover_.ring()->one(), st, 0};
  if (omega_inverse) {
    if (omega_inverse->base != st) throw PreconditionError("omega inverse must be given over the base s*t");
    if (!localized_equal(omega_ * *omega_inverse, one)) {
      throw PreconditionError("the supplied inverse of omega does not invert it");
    }
    omega_inv_ = *omega_inverse;
    return;
  }
  auto inv = localized_inverse(omega_, 8);
  if (!inv) throw PreconditionError("omega = " + omega_.to_string() + " is not a unit of A_st (unit required)");
  omega_inv_ = *inv;
}

bool GluedModule::member(const LocalizedElement& xi, const LocalizedElement& eta) const {
  return localized_equal(omega_ * cover_.from_s(xi), cover_.from_t(eta));
}

std::pair<LocalizedElement, LocalizedElement> GluedModule::basis_s() const {
  return {cover_.in_s(cover_.ring()->one()), omega_};
}

std::pair<LocalizedElement, LocalizedElement> GluedModule::basis_t() const {
  return {omega_inv_, cover_.in_t(cover_.ring()->one())};
}

bool GluedModule::verify_local_bases() const {
  const Element st = cover_.st();
  LocalizedElement one{cover_.ring()->one(), st, 0};
  auto [s1, s2] = basis_s();
  auto [t1, t2] = basis_t();
  bool ok_s = localized_equal(omega_ * cover_.from_s(s1), s2);
  bool ok_t = localized_equal(omega_ * t1, cover_.from_t(t2));
  return ok_s && ok_t && localized_equal(omega_ * omega_inv_, one);
}

std::optional<LocalizedElement> GluedModule::coordinate_s(const LocalizedElement& xi,
                                                          const LocalizedElement& eta_st) const {
  if (!localized_equal(omega_ * cover_.from_s(xi), eta_st)) return std::nullopt;
  return xi;
}

std::optional<Element> global_coordinate(const GluedModule& glued, const LocalizedElement& u,
                                         const LocalizedElement& v, const LocalizedElement& xi,
                                         const LocalizedElement& eta) {
  if (!glued.member(xi, eta)) return std::nullopt;
  auto ui = localized_inverse(u);
  auto vi = localized_inverse(v);
  if (!ui || !vi) return std::nullopt;
  const TwoChartCover& cover = glued.cover();
  Element a;
  try {
    a = equalizer_preimage(cover, (xi * *ui).reduced(), (eta * *vi).reduced());
  } catch (const NotASection&) {
    return std::nullopt;
  }
  LocalizedElement au = u * a;
  LocalizedElement av = v * a;
  if (!localized_equal(au, xi) || !localized_equal(av, eta)) return std::nullopt;
  return a;
}

FreenessResult glued_freeness(const GluedModule& glued, const LocalizedElement& u, const LocalizedElement& v) {
  FreenessResult r;
  const TwoChartCover& cover = glued.cover();
  if (u.base != cover.s() || v.base != cover.t()) {
    r.failure = "u must lie in A_s and v in A_t";
    return r;
  }
  r.u_inverse = localized_inverse(u);
  if (!r.u_inverse) {
    r.failure = "u = " + u.to_string() + " is not a unit of A_s";
    return r;
  }
  r.v_inverse = localized_inverse(v);
  if (!r.v_inverse) {
    r.failure = "v = " + v.to_string() + " is not a unit of A_t";
    return r;
  }
  if (!glued.member(u, v)) {
    r.failure = "omega u != v in A_st";
    return r;
  }
  for (const Element& w : {cover.ring()->one(), cover.s()}) {
    auto a = global_coordinate(glued, u, v, u * w, v * w);
    if (!a || *a != w) {
      r.failure = "coordinate recovery failed for a sample member";
      return r;
    }
    r.coordinates.push_back(*a);
  }
  r.free = true;
  return r;
}

namespace {

LocalizedElement power_in_chart(const Element& base, int e, const Element& sign) {
  if (e >= 0) return {sign * base.pow(static_cast<unsigned>(e)), base, 0};
  return {sign, base, static_cast<unsigned>(-e)};
}

}  // namespace

Report glue_suite(const GlueSuiteOptions& opt) {
  Report rep("glue");
  const Ring zz = scalar_ring(CoeffDomain::integers());
  auto Z = [&](long k) { return zz->constant(Scalar(k)); };

  rep.guarded("preimage-example", "c = b v + a u: 6/2, 9/3 with u = 2, v = -1 gives 3", [&] {
    TwoChartCover cover(Z(2), Z(3));
    Element c = equalizer_preimage(cover, {Z(6), Z(2), 1}, {Z(9), Z(3), 1}, PowerBezout{Z(2), Z(-1)});
    rep.check("preimage-example", "c = b v + a u: 6/2, 9/3 with u = 2, v = -1 gives 3", c == Z(3),
              {{"c", c.to_string()}});
  });

  rep.guarded("preimage-random", "c = b v + a u recovers the global element over Z", [&] {
    Random rng(opt.seed);
    std::optional<Json> witness;
    std::size_t done = 0;
    while (done < opt.preimage_cases && !witness) {
      long s = rng.uniform(-60, 60);
      long t = rng.uniform(-60, 60);
      mpz_class g;
      mpz_class ms(s), mt(t);
      mpz_gcd(g.get_mpz_t(), ms.get_mpz_t(), mt.get_mpz_t());
      if (s == 0 || t == 0 || g != 1) continue;
      long c0 = rng.uniform(-1000, 1000);
      auto n = static_cast<unsigned>(rng.uniform(0, 3));
      auto m = static_cast<unsigned>(rng.uniform(0, 3));
      auto extra = static_cast<unsigned>(rng.uniform(0, 2));
      TwoChartCover cover(Z(s), Z(t));
      // a/s^n with a redundant factor s^extra in numerator and denominator.
      LocalizedElement a{Z(c0) * Z(s).pow(n + extra), Z(s), n + extra};
      LocalizedElement b{Z(c0) * Z(t).pow(m), Z(t), m};
      Element c = equalizer_preimage(cover, a, b);
      if (c != Z(c0)) witness = Json{{"s", s}, {"t", t}, {"c0", c0}, {"c", c.to_string()}};
      ++done;
    }
    rep.add("preimage-random", "c = b v + a u recovers the global element over Z",
            witness ? Status::Fail : Status::Pass, witness ? *witness : Json{{"cases", done}});
  });

  rep.guarded("preimage-not-a-section", "1/2 and 1/3 have different images in A_6", [&] {
    TwoChartCover cover(Z(2), Z(3));
    bool raised = false;
    try {
      equalizer_preimage(cover, {Z(1), Z(2), 1}, {Z(1), Z(3), 1});
    } catch (const NotASection&) {
      raised = true;
    }
    rep.check("preimage-not-a-section", "1/2 and 1/3 have different images in A_6", raised);
  });

  rep.guarded("local-bases-z", "omega = 2/3: bases (1, 2/3) and (3/2, 1)", [&] {
    TwoChartCover cover(Z(2), Z(3));
    GluedModule l(cover, {Z(4), Z(6), 1});
    auto [t1, t2] = l.basis_t();
    bool ok = l.verify_local_bases() && localized_equal(t1, {Z(3), Z(2), 1});
    rep.check("local-bases-z", "omega = 2/3: bases (1, 2/3) and (3/2, 1)", ok,
              {{"omega_inverse", t1.to_string()}});
  });

  rep.guarded("freeness-z", "omega = 2/3 is free with basis (1/2, 1/3); (1, 1) is not a basis", [&] {
    TwoChartCover cover(Z(2), Z(3));
    GluedModule l(cover, {Z(4), Z(6), 1});
    FreenessResult yes = glued_freeness(l, {Z(1), Z(2), 1}, {Z(1), Z(3), 1});
    FreenessResult no = glued_freeness(l, {Z(1), Z(2), 0}, {Z(1), Z(3), 0});
    rep.check("freeness-z", "omega = 2/3 is free with basis (1/2, 1/3); (1, 1) is not a basis", yes.free && !no.free,
              {{"basis", "(1/2, 1/3)"}, {"rejected", no.failure}});
  });

  // Charts x and 1-x of the universal ring, glued by y/x.
  const Ring a = universal_ring();
  const Element x = a->sym("x");
  const Element y = a->sym("y");
  const Element z = a->sym("z");
  const Element one = a->one();
  std::optional<TwoChartCover> cover;
  std::optional<GluedModule> lf;
  rep.guarded("chart-gluing", "omega = y/x = (1-x)/z glues (1, y/x) on D(x) and (z/(1-x), 1) on D(1-x)", [&] {
    cover.emplace(x, 1 - x, BezoutCertificate{{x, 1 - x}, {one, one}});
    LocalizedElement omega{y * (1 - x), cover->st(), 1};
    lf.emplace(*cover, omega);
    auto [s1, s2] = lf->basis_s();
    auto [t1, t2] = lf->basis_t();
    bool ok = lf->verify_local_bases() && localized_equal(s2, {y, x, 1}) && localized_equal(t1, {z, 1 - x, 1});
    // The columns of f are members: (x, y) and (z, 1-x).
    ok = ok && lf->member(cover->in_s(x), cover->in_t(y)) && lf->member(cover->in_s(z), cover->in_t(1 - x));
    rep.check("chart-gluing", "omega = y/x = (1-x)/z glues (1, y/x) on D(x) and (z/(1-x), 1) on D(1-x)", ok,
              {{"omega", omega.to_string()}, {"omega_inverse", t1.to_string()}});
  });

  Random rng(opt.seed + 7);
  auto random_pair = [&]() {
    int ea = static_cast<int>(rng.uniform(-opt.degree, opt.degree));
    int eb = static_cast<int>(rng.uniform(-opt.degree, opt.degree));
    Element su = rng.coin() ? one : -one;
    Element sv = rng.coin() ? one : -one;
    return std::make_pair(power_in_chart(x, ea, su), power_in_chart(1 - x, eb, sv));
  };

  rep.guarded("freeness-coboundary", "omega = v/u with units u, v gives a free module with basis (u, v)", [&] {
    std::optional<Json> witness;
    for (std::size_t c = 0; c < opt.freeness_cases && !witness; ++c) {
      auto [u, v] = random_pair();
      LocalizedElement fu = cover->from_s(u);
      LocalizedElement fv = cover->from_t(v);
      LocalizedElement fu_inv = *localized_inverse(fu, 2 * static_cast<unsigned>(opt.degree) + 2);
      LocalizedElement omega = (fv * fu_inv).reduced();
      LocalizedElement omega_inv = (fu * *localized_inverse(fv, 2 * static_cast<unsigned>(opt.degree) + 2)).reduced();
      GluedModule l(*cover, omega, omega_inv);
      FreenessResult r = glued_freeness(l, u, v);
      if (!r.free) witness = Json{{"u", u.to_string()}, {"v", v.to_string()}, {"failure", r.failure}};
    }
    rep.check("freeness-coboundary", "omega = v/u with units u, v gives a free module with basis (u, v)", !witness,
              witness ? *witness : Json{{"cases", opt.freeness_cases}});
  });

  rep.guarded("freeness-nonfree", "omega = (y/x) v/u: no unit pair found (bounded search)", [&] {
    std::optional<Json> witness;
    std::size_t pairs_tested = 0;
    for (std::size_t c = 0; c < opt.freeness_cases && !witness; ++c) {
      auto [u0, v0] = random_pair();
      LocalizedElement fu = cover->from_s(u0);
      LocalizedElement fv = cover->from_t(v0);
      const unsigned bound = 2 * static_cast<unsigned>(opt.degree) + 2;
      LocalizedElement omega = (lf->omega() * fv * *localized_inverse(fu, bound)).reduced();
      LocalizedElement omega_inv = (lf->omega_inverse() * fu * *localized_inverse(fv, bound)).reduced();
      GluedModule l(*cover, omega, omega_inv);
      // Candidate unit pairs: signed powers of x and 1-x.
      for (int i = 0; i < 6 && !witness; ++i) {
        auto [u, v] = random_pair();
        ++pairs_tested;
        if (glued_freeness(l, u, v).free) witness = Json{{"u", u.to_string()}, {"v", v.to_string()}};
      }
    }
    rep.add("freeness-nonfree", "omega = (y/x) v/u: no unit pair found (bounded search)",
            witness ? Status::Fail : Status::Inconclusive,
            witness ? Json{{"unexpected_basis", *witness}}
                    : Json{{"cases", opt.freeness_cases}, {"pairs_tested", pairs_tested}});
  });
  return rep;
}

}  // namespace picard
