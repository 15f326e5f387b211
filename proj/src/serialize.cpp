#include "picard/serialize.hpp"

#include <fstream>
#include <sstream>

#include "picard/errors.hpp"

namespace picard {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw PresentationError(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw PresentationError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

}  // namespace

Json ring_to_json(const Ring& ring) {
  const TowerSpec& spec = ring->spec();
  Json base;
  if (spec.base_generator) {
    base["kind"] = "number-layer";
    base["generator"] = spec.base_generator->first;
    base["minimal_polynomial"] = spec.base_generator->second;
  } else {
    switch (spec.coeff.kind) {
      case CoeffKind::Integers:
        base["kind"] = "integers";
        break;
      case CoeffKind::Rationals:
        base["kind"] = "rationals";
        break;
      case CoeffKind::PrimeField:
        base["kind"] = "prime-field";
        base["p"] = spec.coeff.p;
        break;
    }
  }
  Json j;
  j["base"] = base;
  j["vars"] = spec.vars;
  Json ext = Json::array();
  for (const auto& [n, r] : spec.extensions) ext.push_back({{"name", n}, {"relation", r}});
  j["extensions"] = ext;
  if (!spec.check_domain) j["check_domain"] = false;
  return j;
}

Ring ring_from_json(const Json& j) {
  TowerSpec spec;
  const Json& base = field(j, "base", "ring");
  std::string kind = string_field(base, "kind", "ring.base");
  if (kind == "integers") {
    spec.coeff = CoeffDomain::integers();
  } else if (kind == "rationals") {
    spec.coeff = CoeffDomain::rationals();
  } else if (kind == "prime-field") {
    const Json& p = field(base, "p", "ring.base");
    if (!p.is_number_integer()) throw PresentationError("ring.base.p: expected an integer");
    spec.coeff = CoeffDomain::prime_field(p.get<long>());
  } else if (kind == "number-layer") {
    spec.coeff = CoeffDomain::rationals();
    spec.base_generator = std::make_pair(string_field(base, "generator", "ring.base"),
                                         string_field(base, "minimal_polynomial", "ring.base"));
  } else {
    throw PresentationError("ring.base.kind: unknown kind '" + kind + "'");
  }
  if (j.contains("vars")) {
    for (const auto& v : j.at("vars")) {
      if (!v.is_string()) throw PresentationError("ring.vars: expected strings");
      spec.vars.push_back(v.get<std::string>());
    }
  }
  if (j.contains("extensions")) {
    std::size_t i = 0;
    for (const auto& e : j.at("extensions")) {
      std::string where = "ring.extensions[" + std::to_string(i++) + "]";
      spec.extensions.emplace_back(string_field(e, "name", where), string_field(e, "relation", where));
    }
  }
  if (j.contains("check_domain")) spec.check_domain = j.at("check_domain").get<bool>();
  return RingTower::create(spec);
}

Json element_to_json(const Element& e) {
  Json out = Json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    out.push_back(Json::array({it->first, scalar_to_string(it->second)}));
  }
  return out;
}

Element element_from_json(const Ring& ring, const Json& j) {
  if (j.is_string()) return ring->parse(j.get<std::string>());
  if (j.is_number_integer()) return ring->constant(Scalar(j.get<long>()));
  if (!j.is_array()) throw PresentationError("element: expected a term list or an expression string");
  TermMap t = ring->empty_terms();
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array() || !term[1].is_string()) {
      throw PresentationError("element: each term must be [[exponents], \"coefficient\"]");
    }
    Exponents e = term[0].get<Exponents>();
    Scalar c = parse_scalar(term[1].get<std::string>());
    auto it = t.find(e);
    if (it != t.end()) throw PresentationError("element: repeated monomial");
    t.emplace(std::move(e), c);
  }
  return Element(ring, std::move(t));
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(element_to_json(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

Matrix matrix_from_json(const Ring& ring, const Json& j) {
  if (!j.is_array()) throw PresentationError("matrix: expected a list of rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& r : j) {
    auto& row = rows.emplace_back();
    for (const auto& e : r) row.push_back(element_from_json(ring, e));
  }
  return Matrix::from_rows(ring, rows);
}

Json localized_to_json(const LocalizedElement& x) {
  return {{"numerator", element_to_json(x.numerator)},
          {"base", element_to_json(x.base)},
          {"exponent", x.exponent}};
}

Json bezout_to_json(const BezoutCertificate& c) {
  Json els = Json::array();
  Json cos = Json::array();
  for (const auto& e : c.elements) els.push_back(element_to_json(e));
  for (const auto& e : c.coefficients) cos.push_back(element_to_json(e));
  return {{"elements", els}, {"coefficients", cos}};
}

Json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PresentationError(source_name + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace picard
