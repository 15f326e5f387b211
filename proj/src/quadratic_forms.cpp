#include "picard/quadratic_forms.hpp"

#include <algorithm>
#include <set>

#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/random.hpp"

namespace picard {

namespace {

std::string fresh_name(const Ring& r, std::string name) {
  while (r->symbol_slot(name)) name += "_";
  return name;
}

// R[X, Y] with fresh names, plus the two new symbols.
struct Generic {
  Ring ring;
  Element x, y;
};

Generic generic_point(const Ring& r) {
  std::string xn = fresh_name(r, "X");
  std::string yn = fresh_name(r, "Y");
  Ring big = adjoin_vars(r, {xn, yn});
  return {big, big->sym(xn), big->sym(yn)};
}

BinaryQuadraticForm lift_form(const BinaryQuadraticForm& f, const Ring& to) {
  return {to, lift(f.a, to), lift(f.b, to), lift(f.c, to)};
}

Matrix det_matrix(const BinaryQuadraticForm& f, const Element& x, const Element& y) {
  return Matrix::from_rows(f.ring, {{x, -(f.b * x) - f.c * y}, {y, f.a * x + f.b * y}});
}

Element two(const Ring& r) { return r->constant(2); }

}  // namespace

BinaryQuadraticForm BinaryQuadraticForm::parse(Ring ring, const std::string& a, const std::string& b,
                                               const std::string& c) {
  return {ring, ring->parse(a), ring->parse(b), ring->parse(c)};
}

Element BinaryQuadraticForm::operator()(const Element& x, const Element& y) const {
  return a * x * x + two(ring) * b * x * y + c * y * y;
}

std::string BinaryQuadraticForm::to_string() const {
  return "(" + a.to_string() + ")X^2 + 2(" + b.to_string() + ")XY + (" + c.to_string() + ")Y^2";
}

Json form_to_json(const BinaryQuadraticForm& f) {
  return {{"a", f.a.to_string()}, {"b", f.b.to_string()}, {"c", f.c.to_string()}};
}

BinaryQuadraticForm form_from_json(const Ring& ring, const Json& j) {
  for (const char* k : {"a", "b", "c"})
    if (!j.is_object() || !j.contains(k)) throw PresentationError(std::string("form: missing field '") + k + "'");
  return {ring, element_from_json(ring, j["a"]), element_from_json(ring, j["b"]), element_from_json(ring, j["c"])};
}

Element QFModule::sqrt_d() const { return algebra->sym(algebra->gens().back().name); }

Element QFModule::element(const Element& p, const Element& q) const {
  return lift(p, algebra) + lift(q, algebra) * sqrt_d();
}

std::pair<Element, Element> QFModule::coordinates(const Element& w) const {
  auto parts = split_by_generator(w, algebra->ngens() - 1);
  parts.resize(2, algebra->zero());
  return {lift(parts[0], form.ring), lift(parts[1], form.ring)};
}

Matrix QFModule::action(const Element& w) const {
  auto [p, q] = coordinates(w);
  return Matrix::identity(form.ring, 2) * p + f * q;
}

QFModule module_from_form(const BinaryQuadraticForm& form) {
  const Ring& r = form.ring;
  Element d = form.discriminant();
  std::string t = fresh_name(r, "T");
  Ring algebra = adjoin_extension(r, t, t + "^2 - (" + d.to_string() + ")", false);
  Matrix f = Matrix::from_rows(r, {{-form.b, -form.c}, {form.a, form.b}});
  if (f * f != Matrix::identity(r, 2) * d) throw CertificateError("f^2 != D Id");
  Generic g = generic_point(r);
  BinaryQuadraticForm big = lift_form(form, g.ring);
  if (det_matrix(big, g.x, g.y).determinant() != big(g.x, g.y))
    throw CertificateError("F(X, Y) != det [[X, -bX-cY], [Y, aX+bY]]");
  return {form, algebra, f};
}

Element evaluate_form_det(const BinaryQuadraticForm& form, const Element& x, const Element& y) {
  Element v = form(x, y);
  if (det_matrix(form, x, y).determinant() != v) throw CertificateError("F(x, y) differs from det(w -> w z)");
  return v;
}

BasisTest basis_test(const QFModule& m, const Element& x, const Element& y) {
  BasisTest out;
  out.value = evaluate_form_det(m.form, x, y);
  auto inv = inverse(out.value);
  if (!inv) return out;
  out.basis = true;
  out.change = det_matrix(m.form, x, y);
  out.inverse = out.change->adjugate() * *inv;
  return out;
}

PrimitiveCharts properly_primitive_local_bases(const BinaryQuadraticForm& form, std::optional<BezoutCertificate> cert) {
  const Ring& r = form.ring;
  std::vector<Element> elems{form.a, two(r) * form.b, form.c};
  if (cert) {
    if (cert->elements != elems) throw CertificateError("certificate is not for {a, 2b, c}");
    if (!verify_bezout(*cert)) throw CertificateError("certificate for {a, 2b, c} does not sum to 1");
  } else {
    cert = find_bezout(elems);
    if (!cert) throw CertificateError("certificate required: no Bezout certificate for {a, 2b, c}");
  }
  PrimitiveCharts out;
  out.form_certificate = *cert;
  // c1 a + c2 (2b) + c3 c = (c1 - c2) a + c2 (a + 2b + c) + (c3 - c2) c.
  const auto& k = cert->coefficients;
  Element s = form.a + two(r) * form.b + form.c;
  out.cover = BezoutCertificate::certified({form.a, s, form.c}, {k[0] - k[1], k[1], k[2] - k[1]});

  auto chart = [&](const Element& den, long x, long y) {
    Element ex = r->constant(x);
    Element ey = r->constant(y);
    Matrix ch = det_matrix(form, ex, ey);
    return LocalChart{den, ex, ey, evaluate_form_det(form, ex, ey), ch, ch.adjugate()};
  };
  if (is_unit(form.a)) {
    out.global = true;
    out.charts.push_back(chart(r->one(), 1, 0));
  } else if (is_unit(form.c)) {
    out.global = true;
    out.charts.push_back(chart(r->one(), 0, 1));
  } else if (is_unit(s)) {
    out.global = true;
    out.charts.push_back(chart(r->one(), 1, 1));
  } else {
    // F(1,0) = a, F(0,1) = c, F(1,1) = a + 2b + c: each is inverted in its own chart.
    if (!form.a.is_zero()) out.charts.push_back(chart(form.a, 1, 0));
    if (!form.c.is_zero()) out.charts.push_back(chart(form.c, 0, 1));
    if (!s.is_zero()) out.charts.push_back(chart(s, 1, 1));
  }
  return out;
}

BinaryQuadraticForm nu_from_basis(const Matrix& t) {
  const Ring& r = t.ring();
  if (t.rows() != 2 || t.cols() != 2) throw PreconditionError("nu_from_basis: 2x2 matrix expected");
  const Element& alpha = t(0, 0);
  const Element& gamma = t(0, 1);
  const Element& beta = t(1, 0);
  const Element& delta = t(1, 1);
  auto half = try_divide(delta - alpha, two(r));
  if (!half) throw PreconditionError("nu_from_basis: XY coefficient " + (delta - alpha).to_string() + " is not even");
  return {r, beta, *half, -gamma};
}

Ring pell_ring(long d) {
  TowerSpec spec;
  spec.coeff = CoeffDomain::integers();
  spec.extensions = {{"T", "T^2 - (" + std::to_string(d) + ")"}};
  spec.check_domain = false;
  return RingTower::create(spec);
}

std::vector<Element> pell_units(long d, long bound) {
  Ring a = pell_ring(d);
  Element t = a->sym("T");
  std::vector<Element> out;
  const long pb = std::max(bound, 1L);  // +-1 always listed
  for (long p = -pb; p <= pb; ++p)
    for (long q = -bound; q <= bound; ++q) {
      mpz_class n = mpz_class(p) * p - mpz_class(d) * q * q;
      if (n == 1) out.push_back(a->constant(p) + t * Scalar(q));
    }
  return out;
}

Element automorphism_to_scalar(const QFModule& m, const Matrix& u) {
  const Ring& r = m.form.ring;
  if (r->coeff().characteristic() == 2) throw PreconditionError("2 is not cancellable in characteristic 2");
  if (u.rows() != 2 || u.cols() != 2) throw PreconditionError("automorphism: 2x2 matrix expected");
  if (!u.determinant().is_one()) throw PreconditionError("det(u) != 1: " + u.determinant().to_string());

  Generic g = generic_point(r);
  BinaryQuadraticForm big = lift_form(m.form, g.ring);
  auto uz = u.lift_to(g.ring) * std::vector<Element>{g.x, g.y};
  if (big(uz[0], uz[1]) != big(g.x, g.y)) throw CertificateError("F o u != F");

  // g(z) = t z - u^{-1}(t u(z)) satisfies z ^ g(z) = 0, so g is a homothety lambda.
  Matrix uinv = u.adjugate();
  Matrix h = m.f - uinv * m.f * u;
  if (!h(0, 1).is_zero() || !h(1, 0).is_zero() || h(0, 0) != h(1, 1))
    throw CertificateError("z ^ g(z) = 0 fails: g = " + h.to_string() + " is not a homothety");
  if (!h(0, 0).is_zero()) throw CertificateError("lambda = " + h(0, 0).to_string() + " != 0");

  // u is A-linear, hence u = p + q f with 2p = Tr(u).
  auto p = try_divide(u.trace(), two(r));
  if (!p) throw CertificateError("Tr(u) / 2 not in R");
  Matrix rest = u - Matrix::identity(r, 2) * *p;
  Element q = r->zero();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!m.f(i, j).is_zero() && q.is_zero()) {
        auto qq = try_divide(rest(i, j), m.f(i, j));
        if (!qq) throw CertificateError("u - p is not a multiple of f");
        q = *qq;
      }
  if (Matrix::identity(r, 2) * *p + m.f * q != u) throw CertificateError("u is not multiplication by p + qT");
  if (!(*p * *p - m.form.discriminant() * q * q).is_one()) throw CertificateError("norm of the scalar is not 1");
  return m.element(*p, q);
}

Report qform_suite(const QFormSuiteOptions& opt) {
  Report rep("qform");
  Random rng(opt.seed);

  const Ring qq = RingTower::create({});
  TowerSpec zs;
  zs.coeff = CoeffDomain::integers();
  const Ring zz = RingTower::create(zs);
  zs.vars = {"u", "v"};
  const Ring zuv = RingTower::create(zs);

  std::vector<BinaryQuadraticForm> forms;
  for (std::size_t i = 0; i < opt.forms; ++i) {
    RandomShape shape;
    if (i % 2 == 0) {
      shape.fractions = true;
      forms.push_back({qq, random_element(rng, qq, shape), random_element(rng, qq, shape),
                       random_element(rng, qq, shape)});
    } else {
      shape.var_degree = opt.degree;
      forms.push_back({zuv, random_element(rng, zuv, shape), random_element(rng, zuv, shape),
                       random_element(rng, zuv, shape)});
    }
  }
  if (opt.form) forms.push_back(*opt.form);

  rep.guarded("f-squared", "f^2 = D Id for f = [[-b, -c], [a, b]]", [&] {
    std::optional<Json> bad;
    for (const auto& F : forms) {
      Matrix f = Matrix::from_rows(F.ring, {{-F.b, -F.c}, {F.a, F.b}});
      if (f * f != Matrix::identity(F.ring, 2) * F.discriminant() && !bad) bad = form_to_json(F);
    }
    rep.check("f-squared", "f^2 = D Id for f = [[-b, -c], [a, b]]", !bad, bad ? *bad : Json{{"forms", forms.size()}});
  });

  rep.guarded("det-identity", "F(X, Y) = det [[X, -bX-cY], [Y, aX+bY]]", [&] {
    std::optional<Json> bad;
    for (const auto& F : forms) {
      Generic g = generic_point(F.ring);
      BinaryQuadraticForm big = lift_form(F, g.ring);
      if (det_matrix(big, g.x, g.y).determinant() != big(g.x, g.y) && !bad) bad = form_to_json(F);
    }
    rep.check("det-identity", "F(X, Y) = det [[X, -bX-cY], [Y, aX+bY]]", !bad,
              bad ? *bad : Json{{"forms", forms.size()}});
  });

  rep.guarded("nu-round-trip", "nu(X e1 + Y e2) = beta X^2 + (delta - alpha) XY - gamma Y^2 recovers F", [&] {
    std::optional<Json> bad;
    for (const auto& F : forms) {
      QFModule m = module_from_form(F);
      if (!(nu_from_basis(m.f) == F) && !bad) bad = form_to_json(F);
    }
    // L = A = Q[T]/(T^2 + 1) on {1, T}: t acts as [[0, -1], [1, 0]], nu is the norm form.
    BinaryQuadraticForm norm = nu_from_basis(Matrix::parse(qq, {{"0", "-1"}, {"1", "0"}}));
    bool ok = !bad && norm == BinaryQuadraticForm::parse(qq, "1", "0", "1");
    rep.check("nu-round-trip", "nu(X e1 + Y e2) = beta X^2 + (delta - alpha) XY - gamma Y^2 recovers F", ok,
              bad ? *bad : Json{{"forms", forms.size()}, {"norm form of Q(i)", form_to_json(norm)}});
  });

  rep.guarded("norm-multiplicative", "nu_L(w z) = nu_A(w) nu_L(z)", [&] {
    std::optional<Json> bad;
    for (const auto& F : forms) {
      QFModule m = module_from_form(F);
      RandomShape shape;
      shape.var_degree = 1;
      shape.fractions = F.ring->coeff().is_field();
      Element p = random_element(rng, F.ring, shape);
      Element q = random_element(rng, F.ring, shape);
      Element x = random_element(rng, F.ring, shape);
      Element y = random_element(rng, F.ring, shape);
      auto wz = m.action(m.element(p, q)) * std::vector<Element>{x, y};
      Element nw = p * p - F.discriminant() * q * q;
      if (F(wz[0], wz[1]) != nw * F(x, y) && !bad)
        bad = Json{{"form", form_to_json(F)}, {"p", p.to_string()}, {"q", q.to_string()}};
    }
    rep.check("norm-multiplicative", "nu_L(w z) = nu_A(w) nu_L(z)", !bad, bad ? *bad : Json{{"forms", forms.size()}});
  });

  rep.guarded("gauss-form", "X^2 + Y^2: D = -1, f^2 = -Id, F(3, 4) = 25", [&] {
    BinaryQuadraticForm g = BinaryQuadraticForm::parse(qq, "1", "0", "1");
    QFModule m = module_from_form(g);
    Element v = evaluate_form_det(g, qq->constant(3), qq->constant(4));
    bool ok = g.discriminant() == qq->constant(-1) && m.f == Matrix::parse(qq, {{"0", "-1"}, {"1", "0"}}) &&
              m.f * m.f == Matrix::identity(qq, 2) * Scalar(-1) && v == qq->constant(25);
    rep.check("gauss-form", "X^2 + Y^2: D = -1, f^2 = -Id, F(3, 4) = 25", ok,
              {{"D", g.discriminant().to_string()}, {"f", m.f.to_string()}, {"F(3,4)", v.to_string()}});
  });

  rep.guarded("basis-criterion", "z is an A-basis of L iff F(z) is a unit of R", [&] {
    QFModule q1 = module_from_form(BinaryQuadraticForm::parse(qq, "1", "0", "1"));
    QFModule z1 = module_from_form(BinaryQuadraticForm::parse(zz, "1", "0", "1"));
    QFModule z2 = module_from_form(BinaryQuadraticForm::parse(zz, "2", "0", "2"));
    BasisTest t1 = basis_test(q1, qq->one(), qq->zero());
    BasisTest t2 = basis_test(z2, zz->one(), zz->zero());
    BasisTest t3 = basis_test(z1, zz->constant(3), zz->constant(4));
    BasisTest t4 = basis_test(z1, zz->zero(), zz->constant(-1));
    bool ok = t1.basis && !t2.basis && !t3.basis && t4.basis;
    for (const BasisTest* t : {&t1, &t4})
      ok = ok && is_unit(t->change->determinant()) &&
           *t->change * *t->inverse == Matrix::identity(t->change->ring(), 2);
    rep.check("basis-criterion", "z is an A-basis of L iff F(z) is a unit of R", ok,
              {{"Q: X^2+Y^2 at (1,0)", t1.value.to_string()},
               {"Z: 2X^2+2Y^2 at (1,0)", t2.value.to_string()},
               {"Z: X^2+Y^2 at (3,4)", t3.value.to_string()},
               {"Z: X^2+Y^2 at (0,-1)", t4.value.to_string()}});
  });

  rep.guarded("primitive-charts", "aR + 2bR + cR = R gives bases (1,0), (0,1), (1,1) over R_a, R_c, R_{a+2b+c}", [&] {
    const char* anchor = "aR + 2bR + cR = R gives bases (1,0), (0,1), (1,1) over R_a, R_c, R_{a+2b+c}";
    PrimitiveCharts g = properly_primitive_local_bases(BinaryQuadraticForm::parse(zz, "1", "0", "1"));
    PrimitiveCharts three = properly_primitive_local_bases(BinaryQuadraticForm::parse(zz, "2", "1", "3"));
    bool ok = g.global && g.charts.size() == 1 && !three.global && three.charts.size() == 3 &&
              verify_bezout(three.cover);
    Json charts = Json::array();
    for (const auto& c : three.charts) {
      ok = ok && c.value == c.denominator && c.change * c.adjugate == Matrix::identity(zz, 2) * c.value;
      charts.push_back({{"chart", c.denominator.to_string()},
                        {"z", Json::array({c.x.to_string(), c.y.to_string()})},
                        {"F(z)", c.value.to_string()}});
    }
    std::string rejected;
    try {
      properly_primitive_local_bases(BinaryQuadraticForm::parse(zz, "2", "2", "2"));
    } catch (const CertificateError& e) {
      rejected = e.what();
    }
    ok = ok && !rejected.empty();
    rep.check("primitive-charts", anchor, ok,
              {{"2X^2+2XY+3Y^2", {{"certificate", bezout_to_json(three.form_certificate)},
                                   {"cover", bezout_to_json(three.cover)},
                                   {"charts", charts}}},
               {"2X^2+4XY+2Y^2", rejected}});
  });

  rep.guarded("pell", "p^2 - 2q^2 = 1 with |p|, |q| <= bound is exactly +-(3+2T)^k", [&] {
    auto units = pell_units(2, opt.pell_bound);
    Ring a = pell_ring(2);
    Element eps = a->parse("3 + 2*T");
    Element eps_inv = a->parse("3 - 2*T");
    auto in_box = [&](const Element& w) {
      for (const auto& [e, c] : w.terms())
        if (abs(c) > opt.pell_bound) return false;
      return true;
    };
    std::set<std::string> oracle;
    for (const Element& g : {eps, eps_inv})
      for (Element w = a->one(); in_box(w); w = w * g) {
        oracle.insert(w.to_string());
        oracle.insert((-w).to_string());
      }
    std::set<std::string> found;
    bool closed = true;
    Json list = Json::array();
    for (const auto& w : units) {
      found.insert(w.to_string());
      list.push_back(w.to_string());
      auto pq = split_by_generator(w, 0);
      pq.resize(2, a->zero());
      Element conj = pq[0] - pq[1] * a->sym("T");
      closed = closed && (w * conj).is_one() && std::find(units.begin(), units.end(), conj) != units.end();
    }
    rep.check("pell", "p^2 - 2q^2 = 1 with |p|, |q| <= bound is exactly +-(3+2T)^k", found == oracle && closed,
              {{"bound", opt.pell_bound}, {"units", list}});
  });

  rep.guarded("automorphism-scalar", "det u = 1 and F o u = F force u = multiplication by w with N(w) = 1", [&] {
    const char* anchor = "det u = 1 and F o u = F force u = multiplication by w with N(w) = 1";
    // Integral forms of discriminant 2 acted on by powers of 3 + 2T; rational forms by v / conj(v).
    static const long disc2[][3] = {{1, 0, -2}, {-1, 0, 2}, {1, 1, -1}, {-1, 1, 1}, {2, 0, -1}, {1, 2, 2}, {2, 2, 1}, {-2, 2, -1}};
    std::optional<Json> bad;
    std::size_t done = 0;
    while (done < opt.actions) {
      BinaryQuadraticForm F;
      if (done % 2 == 0) {
        const long* abc = disc2[rng.uniform(0, 7)];
        F = {zz, zz->constant(abc[0]), zz->constant(abc[1]), zz->constant(abc[2])};
      } else {
        RandomShape shape;
        shape.fractions = true;
        F = {qq, qq->constant(rng.scalar(qq->coeff(), 6, true, true)), random_element(rng, qq, shape),
             random_element(rng, qq, shape)};
      }
      QFModule m = module_from_form(F);
      Element w;
      if (done % 2 == 0) {
        long k = rng.uniform(-2, 2);
        Element eps = m.element(zz->constant(3), zz->constant(k < 0 ? -2 : 2));
        w = eps.pow(static_cast<unsigned>(std::abs(k))) * Scalar(rng.coin() ? 1 : -1);
      } else {
        Element r = qq->constant(rng.scalar(qq->coeff(), 5, false, true));
        Element s = qq->constant(rng.scalar(qq->coeff(), 5, true, true));
        Element n = r * r - F.discriminant() * s * s;
        if (n.is_zero()) continue;
        Element v = m.element(r, s);
        w = v * v * *inverse(lift(n, m.algebra));
      }
      Element got = automorphism_to_scalar(m, m.action(w));
      auto [p, q] = m.coordinates(got);
      if ((got != w || !(p * p - F.discriminant() * q * q).is_one()) && !bad)
        bad = Json{{"form", form_to_json(F)}, {"w", w.to_string()}, {"extracted", got.to_string()}};
      ++done;
    }
    rep.check("automorphism-scalar", anchor, !bad, bad ? *bad : Json{{"actions", done}});
  });

  rep.guarded("automorphism-rejects", "a shear preserves det but not X^2 + Y^2; det 2 is refused", [&] {
    QFModule m = module_from_form(BinaryQuadraticForm::parse(zz, "1", "0", "1"));
    std::string shear, scale;
    try {
      automorphism_to_scalar(m, Matrix::parse(zz, {{"1", "1"}, {"0", "1"}}));
    } catch (const Error& e) {
      shear = e.what();
    }
    try {
      automorphism_to_scalar(m, Matrix::parse(zz, {{"2", "0"}, {"0", "1"}}));
    } catch (const Error& e) {
      scale = e.what();
    }
    Element i = automorphism_to_scalar(m, m.f);
    rep.check("automorphism-rejects", "a shear preserves det but not X^2 + Y^2; det 2 is refused",
              !shear.empty() && !scale.empty() && i == m.sqrt_d(),
              {{"shear", shear}, {"det 2", scale}, {"f", i.to_string()}});
  });

  if (opt.form) {
    rep.guarded("input-charts", "local bases of the input form", [&] {
      try {
        PrimitiveCharts pc = properly_primitive_local_bases(*opt.form);
        Json charts = Json::array();
        for (const auto& c : pc.charts)
          charts.push_back({{"chart", c.denominator.to_string()},
                            {"z", Json::array({c.x.to_string(), c.y.to_string()})},
                            {"F(z)", c.value.to_string()}});
        rep.check("input-charts", "local bases of the input form", verify_bezout(pc.cover),
                  {{"form", form_to_json(*opt.form)}, {"global", pc.global}, {"charts", charts}});
      } catch (const CertificateError& e) {
        rep.add("input-charts", "local bases of the input form", Status::Inconclusive,
                {{"form", form_to_json(*opt.form)}, {"reason", e.what()}});
      }
    });
  }
  return rep;
}

}  // namespace picard
