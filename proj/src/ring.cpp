#include "picard/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  int da = 0;
  int db = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

TermMap rekey(const TermMap& t, std::size_t new_nvars, const std::vector<int>& source_of_slot) {
  TermMap out(MonomialOrder{new_nvars});
  for (const auto& [e, c] : t) {
    Exponents n(source_of_slot.size(), 0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (source_of_slot[i] >= 0) n[i] = e[static_cast<std::size_t>(source_of_slot[i])];
    }
    out.emplace(std::move(n), c);
  }
  return out;
}

// ------------------------------------------------------------------ parser

class Parser {
 public:
  Parser(const RingTower& ring, std::string_view text) : ring_(ring), text_(text) {}

  Element run() {
    Element e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  const RingTower& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw PresentationError("parse error at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) +
                            "': " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element acc = term();
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Element term() {
    Element acc = unary();
    for (;;) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        Element d = unary();
        auto q = d.constant_value();
        if (!q || *q == 0) fail("division only by non-zero scalars");
        acc *= ring_.coeff().normalize(Scalar(1) / *q);
      } else {
        return acc;
      }
    }
  }

  Element unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Element power() {
    Element base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned n = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(n);
    }
    return base;
  }

  Element primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ring_.constant(parse_scalar(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_.symbol_slot(name)) {
        pos_ = start;
        fail("unknown symbol '" + name + "'");
      }
      return ring_.sym(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

std::string monomial_string(const RingTower& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.slot_name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------------ builder

class TowerBuilder {
 public:
  static std::shared_ptr<RingTower> base(const CoeffDomain& coeff, const std::vector<std::string>& vars) {
    auto t = std::shared_ptr<RingTower>(new RingTower());
    t->coeff_ = coeff;
    t->vars_ = vars;
    return t;
  }

  static std::shared_ptr<RingTower> add_generator(const RingTower& cur, const std::string& name,
                                                  const std::string& relation, bool base_layer,
                                                  bool check_domain) {
    const std::size_t nv = cur.nvars();
    const std::size_t ng = cur.ngens();

    // Temporary tower where the new generator is a free variable appended after the others.
    auto temp = std::shared_ptr<RingTower>(new RingTower());
    temp->coeff_ = cur.coeff_;
    temp->vars_ = cur.vars_;
    temp->vars_.push_back(name);
    std::vector<int> to_temp(nv + 1 + ng);
    for (std::size_t i = 0; i < nv; ++i) to_temp[i] = static_cast<int>(i);
    to_temp[nv] = -1;
    for (std::size_t k = 0; k < ng; ++k) to_temp[nv + 1 + k] = static_cast<int>(nv + k);
    for (const auto& g : cur.gens_) {
      Generator h = g;
      for (auto& t : h.tail) t = rekey(t, nv + 1, to_temp);
      temp->gens_.push_back(std::move(h));
    }

    Element poly = temp->parse(relation);
    std::vector<Element> coeffs = split_by_var(poly, nv);
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) throw PresentationError("relation for '" + name + "' has degree < 1: " + relation);
    if (!coeffs.back().is_one()) throw PresentationError("relation for '" + name + "' is not monic: " + relation);

    // Back to the final layout [vars..., old gens..., new gen].
    std::vector<int> to_final(nv + ng + 1);
    for (std::size_t i = 0; i < nv; ++i) to_final[i] = static_cast<int>(i);
    for (std::size_t k = 0; k < ng; ++k) to_final[nv + k] = static_cast<int>(nv + 1 + k);
    to_final[nv + ng] = -1;

    Generator g;
    g.name = name;
    g.degree = d;
    g.base_layer = base_layer;
    for (int j = 0; j < d; ++j) {
      g.tail.push_back(rekey(coeffs[static_cast<std::size_t>(j)].terms(), nv, to_final));
    }
    if (base_layer) {
      for (const auto& t : g.tail) {
        for (const auto& [e, c] : t) {
          if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) {
            throw PresentationError("number-layer polynomial must have scalar coefficients: " + relation);
          }
        }
      }
    }
    if (check_domain && d == 2) check_quadratic(cur.coeff_, g, relation);

    auto out = std::shared_ptr<RingTower>(new RingTower());
    out->coeff_ = cur.coeff_;
    out->vars_ = cur.vars_;
    std::vector<int> extend(nv + ng + 1);
    for (std::size_t i = 0; i < nv + ng; ++i) extend[i] = static_cast<int>(i);
    extend[nv + ng] = -1;
    for (const auto& old : cur.gens_) {
      Generator h = old;
      for (auto& t : h.tail) t = rekey(t, nv, extend);
      out->gens_.push_back(std::move(h));
    }
    out->gens_.push_back(std::move(g));
    return out;
  }

 private:
  static std::optional<Scalar> scalar_of(const TermMap& t) {
    if (t.empty()) return Scalar(0);
    if (t.size() != 1) return std::nullopt;
    const auto& [e, c] = *t.begin();
    if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return std::nullopt;
    return c;
  }

  // T^2 + bT + c with scalar b, c: reject a split polynomial.
  static void check_quadratic(const CoeffDomain& dom, const Generator& g, const std::string& relation) {
    auto c = scalar_of(g.tail[0]);
    auto b = scalar_of(g.tail[1]);
    if (!c || !b) return;  // trusted input
    Scalar disc = (*b) * (*b) - 4 * (*c);
    bool splits = false;
    if (dom.kind == CoeffKind::PrimeField) {
      mpz_class p(dom.p);
      if (dom.p == 2) {
        // roots of T^2 + bT + c over F_2
        for (int t = 0; t < 2; ++t) {
          Scalar v = dom.normalize(Scalar(t * t) + (*b) * t + *c);
          if (v == 0) splits = true;
        }
      } else {
        mpz_class dn = dom.normalize(disc).get_num();
        splits = (dn == 0) || mpz_legendre(dn.get_mpz_t(), p.get_mpz_t()) == 1;
      }
    } else {
      if (disc >= 0) {
        mpz_class n = disc.get_num();
        mpz_class m = disc.get_den();
        splits = mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(m.get_mpz_t());
      }
    }
    if (splits) {
      throw PresentationError("relation '" + relation + "' splits; the tower would not be a domain");
    }
  }
};

Ring RingTower::create(const TowerSpec& spec) {
  std::set<std::string> seen;
  auto claim = [&](const std::string& n) {
    if (!valid_identifier(n)) throw PresentationError("invalid symbol name '" + n + "'");
    if (!seen.insert(n).second) throw PresentationError("duplicate symbol name '" + n + "'");
  };
  if (spec.base_generator) claim(spec.base_generator->first);
  for (const auto& v : spec.vars) claim(v);
  for (const auto& [n, r] : spec.extensions) claim(n);
  if (spec.base_generator && spec.coeff.kind != CoeffKind::Rationals) {
    throw PresentationError("number-layer base ring must be defined over the rationals");
  }

  std::shared_ptr<RingTower> t = TowerBuilder::base(spec.coeff, spec.vars);
  if (spec.base_generator) {
    t = TowerBuilder::add_generator(*t, spec.base_generator->first, spec.base_generator->second, true,
                                    spec.check_domain);
  }
  for (const auto& [n, r] : spec.extensions) {
    t = TowerBuilder::add_generator(*t, n, r, false, spec.check_domain);
  }
  t->spec_ = spec;
  return t;
}

std::optional<std::size_t> RingTower::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> RingTower::gen_index(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> RingTower::symbol_slot(std::string_view name) const {
  if (auto v = var_index(name)) return *v;
  if (auto g = gen_index(name)) return nvars() + *g;
  return std::nullopt;
}

std::string RingTower::slot_name(std::size_t slot) const {
  return slot < nvars() ? vars_[slot] : gens_.at(slot - nvars()).name;
}

bool RingTower::is_field_tower() const {
  if (!coeff_.is_field() || !vars_.empty()) return false;
  return true;
}

std::size_t RingTower::rank_over_polynomials() const {
  std::size_t r = 1;
  for (const auto& g : gens_) r *= static_cast<std::size_t>(g.degree);
  return r;
}

Element RingTower::zero() const { return Element(shared_from_this()); }
Element RingTower::one() const { return Element::constant(shared_from_this(), 1); }
Element RingTower::constant(const Scalar& q) const { return Element::constant(shared_from_this(), q); }
Element RingTower::sym(std::string_view name) const { return Element::symbol(shared_from_this(), name); }
Element RingTower::parse(std::string_view text) const { return Parser(*this, text).run(); }

bool RingTower::operator==(const RingTower& o) const {
  if (!(coeff_ == o.coeff_) || vars_ != o.vars_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& a = gens_[k];
    const auto& b = o.gens_[k];
    if (a.name != b.name || a.degree != b.degree || a.base_layer != b.base_layer || a.tail != b.tail) return false;
  }
  return true;
}

std::string RingTower::describe() const {
  std::ostringstream os;
  os << coeff_.name();
  if (has_base_generator()) os << "(" << gens_.front().name << ")";
  if (!vars_.empty()) {
    os << "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "]";
  }
  for (const auto& [n, r] : spec_.extensions) os << "[" << n << ": " << r << "]";
  return os.str();
}

void RingTower::add_into(TermMap& dst, const TermMap& src, const Scalar& factor) const {
  const bool modular = coeff_.kind == CoeffKind::PrimeField;
  for (const auto& [e, c] : src) {
    auto it = dst.find(e);
    Scalar v = c * factor;
    if (it == dst.end()) {
      if (modular) v = coeff_.normalize(v);
      if (v != 0) dst.emplace(e, std::move(v));
    } else {
      it->second += v;
      if (modular) it->second = coeff_.normalize(it->second);
      if (it->second == 0) dst.erase(it);
    }
  }
}

TermMap RingTower::multiply_plain(const TermMap& a, const TermMap& b) const {
  TermMap out = empty_terms();
  Exponents e(width());
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (coeff_.kind == CoeffKind::PrimeField) it->second = coeff_.normalize(it->second);
    if (it->second == 0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

namespace {

bool involves(const TermMap& t, std::size_t slot) {
  return std::any_of(t.begin(), t.end(), [slot](const auto& kv) { return kv.first[slot] != 0; });
}

}  // namespace

TermMap RingTower::multiply_level(const TermMap& a, const TermMap& b, std::size_t level) const {
  if (a.empty() || b.empty()) return empty_terms();
  std::size_t k = level;
  while (k > 0 && !involves(a, nvars() + k - 1) && !involves(b, nvars() + k - 1)) --k;
  if (k == 0) return multiply_plain(a, b);
  const std::size_t g = k - 1;
  const std::size_t slot = nvars() + g;
  const auto d = static_cast<std::size_t>(gens_[g].degree);

  auto split = [&](const TermMap& t) {
    std::vector<TermMap> parts(d, empty_terms());
    for (const auto& [e, c] : t) {
      Exponents f = e;
      auto j = static_cast<std::size_t>(f[slot]);
      f[slot] = 0;
      parts[j].emplace(std::move(f), c);
    }
    return parts;
  };
  auto as = split(a);
  auto bs = split(b);
  std::vector<TermMap> c(2 * d - 1, empty_terms());
  for (std::size_t i = 0; i < d; ++i) {
    if (as[i].empty()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (bs[j].empty()) continue;
      add_into(c[i + j], multiply_level(as[i], bs[j], g));
    }
  }
  // g^d = -sum tail_i g^i
  for (std::size_t m = 2 * d - 2; m >= d; --m) {
    if (!c[m].empty()) {
      for (std::size_t i = 0; i < d; ++i) {
        if (gens_[g].tail[i].empty()) continue;
        add_into(c[m - d + i], multiply_level(gens_[g].tail[i], c[m], g), Scalar(-1));
      }
    }
    if (m == d) break;
  }
  TermMap out = empty_terms();
  for (std::size_t j = 0; j < d; ++j) {
    for (auto& [e, v] : c[j]) {
      Exponents f = e;
      f[slot] = static_cast<int>(j);
      out.emplace(std::move(f), v);
    }
  }
  return out;
}

TermMap RingTower::multiply(const TermMap& a, const TermMap& b) const { return multiply_level(a, b, ngens()); }

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ------------------------------------------------------------------ Element

Element::Element(Ring ring) : ring_(std::move(ring)), terms_(ring_->empty_terms()) {}

Element::Element(Ring ring, TermMap terms) : ring_(std::move(ring)), terms_(ring_->empty_terms()) {
  for (auto& [e, c] : terms) {
    if (e.size() != ring_->width()) throw PresentationError("exponent vector has wrong length");
    for (std::size_t k = 0; k < ring_->ngens(); ++k) {
      int x = e[ring_->nvars() + k];
      if (x < 0 || x >= ring_->gen(k).degree) {
        throw PresentationError("generator exponent out of range for '" + ring_->gen(k).name + "'");
      }
    }
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (e[i] < 0) throw PresentationError("negative exponent");
    }
    Scalar v = ring_->coeff().normalize(c);
    if (v != 0) terms_.emplace(e, std::move(v));
  }
}

Element Element::constant(Ring ring, const Scalar& q) {
  Element out(ring);
  Scalar v = out.ring_->coeff().normalize(q);
  if (v != 0) out.terms_.emplace(out.ring_->unit_exponents(), std::move(v));
  return out;
}

Element Element::symbol(Ring ring, std::string_view name) {
  auto slot = ring->symbol_slot(name);
  if (!slot) throw PresentationError("unknown symbol '" + std::string(name) + "'");
  Exponents e = ring->unit_exponents();
  e[*slot] = 1;
  if (*slot >= ring->nvars() && ring->gen(*slot - ring->nvars()).degree == 1) {
    // Degree-one generator: g = -tail_0.
    Element out(ring);
    ring->add_into(out.terms_, ring->gen(*slot - ring->nvars()).tail[0], Scalar(-1));
    return out;
  }
  return monomial(std::move(ring), std::move(e));
}

Element Element::monomial(Ring ring, Exponents exps, const Scalar& coeff) {
  TermMap t = ring->empty_terms();
  t.emplace(std::move(exps), coeff);
  return Element(std::move(ring), std::move(t));
}

bool Element::is_one() const {
  auto c = constant_value();
  return c && *c == 1;
}

std::optional<Scalar> Element::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return std::nullopt;
  return c;
}

void Element::require_same(const Element& o) const {
  if (!ring_ || !o.ring_) throw RingMismatch("operation on an element without a ring");
  if (!same_ring(ring_, o.ring_)) {
    throw RingMismatch("elements live in different rings: " + ring_->describe() + " vs " + o.ring_->describe());
  }
}

Element Element::operator-() const {
  Element out(ring_);
  ring_->add_into(out.terms_, terms_, Scalar(-1));
  return out;
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  ring_->add_into(terms_, o.terms_);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(o);
  ring_->add_into(terms_, o.terms_, Scalar(-1));
  return *this;
}

Element& Element::operator*=(const Element& o) {
  require_same(o);
  terms_ = ring_->multiply(terms_, o.terms_);
  return *this;
}

Element& Element::operator*=(const Scalar& q) {
  Scalar f = ring_->coeff().normalize(q);
  TermMap out = ring_->empty_terms();
  ring_->add_into(out, terms_, f);
  terms_ = std::move(out);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  a.require_same(b);
  return Element(a.ring_, a.ring_->multiply(a.terms_, b.terms_));
}

Element Element::operator+(const Scalar& q) const { return *this + Element::constant(ring_, q); }
Element Element::operator-(const Scalar& q) const { return *this - Element::constant(ring_, q); }

Element Element::pow(unsigned n) const {
  Element result = ring_->one();
  Element base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

bool Element::operator==(const Element& o) const {
  require_same(o);
  return terms_ == o.terms_;
}

std::optional<std::size_t> Element::top_generator() const {
  for (std::size_t k = ring_->ngens(); k-- > 0;) {
    if (involves_slot(ring_->nvars() + k)) return k;
  }
  return std::nullopt;
}

bool Element::involves_slot(std::size_t slot) const { return involves(terms_, slot); }

int Element::var_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

int Element::degree_in_var(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Element::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

std::string Element::to_string() const {
  if (!ring_) return "<unset>";
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(*ring_, e);
    Scalar mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += scalar_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += scalar_to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

std::vector<Element> split_by_generator(const Element& e, std::size_t k) {
  const Ring& ring = e.ring();
  const std::size_t slot = ring->nvars() + k;
  std::vector<Element> out(static_cast<std::size_t>(ring->gen(k).degree), Element(ring));
  std::vector<TermMap> parts(out.size(), ring->empty_terms());
  for (const auto& [ex, c] : e.terms()) {
    Exponents f = ex;
    auto j = static_cast<std::size_t>(f[slot]);
    f[slot] = 0;
    parts[j].emplace(std::move(f), c);
  }
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = Element(ring, std::move(parts[j]));
  return out;
}

Element join_by_generator(const Ring& ring, const std::vector<Element>& coeffs, std::size_t k) {
  const std::size_t slot = ring->nvars() + k;
  if (coeffs.size() > static_cast<std::size_t>(ring->gen(k).degree)) {
    throw PreconditionError("too many coefficients for generator '" + ring->gen(k).name + "'");
  }
  TermMap t = ring->empty_terms();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    for (const auto& [ex, c] : coeffs[j].terms()) {
      if (ex[slot] != 0) throw PreconditionError("coefficient already involves the generator");
      Exponents f = ex;
      f[slot] = static_cast<int>(j);
      t.emplace(std::move(f), c);
    }
  }
  return Element(ring, std::move(t));
}

std::vector<Element> split_by_var(const Element& e, std::size_t v) {
  const Ring& ring = e.ring();
  int deg = std::max(e.degree_in_var(v), 0);
  std::vector<TermMap> parts(static_cast<std::size_t>(deg) + 1, ring->empty_terms());
  for (const auto& [ex, c] : e.terms()) {
    Exponents f = ex;
    auto j = static_cast<std::size_t>(f[v]);
    f[v] = 0;
    parts[j].emplace(std::move(f), c);
  }
  std::vector<Element> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  if (e.is_zero()) out.assign(1, Element(ring));
  return out;
}

Element join_by_var(const Ring& ring, const std::vector<Element>& coeffs, std::size_t v) {
  TermMap t = ring->empty_terms();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    for (const auto& [ex, c] : coeffs[j].terms()) {
      Exponents f = ex;
      f[v] += static_cast<int>(j);
      auto it = t.find(f);
      if (it == t.end()) {
        t.emplace(std::move(f), c);
      } else {
        it->second += c;
      }
    }
  }
  return Element(ring, std::move(t));
}

Element lift(const Element& e, const Ring& target) {
  const Ring& src = e.ring();
  if (same_ring(src, target)) return Element(target, e.terms());
  // Symbols the target lacks are allowed as long as e does not use them.
  std::vector<std::optional<std::size_t>> slot_map(src->width());
  for (std::size_t s = 0; s < src->width(); ++s) slot_map[s] = target->symbol_slot(src->slot_name(s));
  for (const auto& [ex, c] : e.terms())
    for (std::size_t s = 0; s < ex.size(); ++s)
      if (ex[s] > 0 && !slot_map[s])
        throw PresentationError("cannot lift: symbol '" + src->slot_name(s) + "' missing in " + target->describe());
  Element out(target);
  for (const auto& [ex, c] : e.terms()) {
    Exponents f = target->unit_exponents();
    bool direct = true;
    for (std::size_t s = 0; s < ex.size(); ++s) {
      if (!slot_map[s]) continue;
      f[*slot_map[s]] = ex[s];
      if (*slot_map[s] >= target->nvars() && ex[s] >= target->gen(*slot_map[s] - target->nvars()).degree) {
        direct = false;
      }
    }
    if (direct) {
      out += Element::monomial(target, std::move(f), target->coeff().normalize(c));
    } else {
      Element m = target->constant(c);
      for (std::size_t s = 0; s < ex.size(); ++s) {
        if (ex[s] > 0) m *= target->sym(src->slot_name(s)).pow(static_cast<unsigned>(ex[s]));
      }
      out += m;
    }
  }
  return out;
}

Ring adjoin_vars(const Ring& ring, const std::vector<std::string>& names) {
  TowerSpec spec = ring->spec();
  for (const auto& n : names) spec.vars.push_back(n);
  return RingTower::create(spec);
}

Ring adjoin_extension(const Ring& ring, const std::string& name, const std::string& relation, bool check_domain) {
  TowerSpec spec = ring->spec();
  spec.extensions.emplace_back(name, relation);
  spec.check_domain = spec.check_domain && check_domain;
  return RingTower::create(spec);
}

}  // namespace picard
