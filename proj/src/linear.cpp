#include "picard/linear.hpp"

#include <map>

#include "picard/errors.hpp"

namespace picard {

CoeffDomain field_of_fractions(const CoeffDomain& dom) {
  return dom.kind == CoeffKind::Integers ? CoeffDomain::rationals() : dom;
}

namespace {

// Reduced row echelon form in place; returns pivot columns (one per row kept).
std::vector<std::size_t> rref(std::vector<ScalarRow>& m, std::size_t ncols, const CoeffDomain& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Scalar inv = f.inverse(m[row][col]);
    for (auto& v : m[row]) v = f.normalize(v * inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Scalar k = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] = f.normalize(m[r][c] - k * m[row][c]);
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

std::vector<ScalarRow> nullspace(std::vector<ScalarRow> m, std::size_t ncols, const CoeffDomain& dom) {
  CoeffDomain f = field_of_fractions(dom);
  auto pivots = rref(m, ncols, f);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ScalarRow> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    ScalarRow v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.normalize(-m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<ScalarRow> solve_linear(std::vector<ScalarRow> m, ScalarRow rhs, std::size_t ncols,
                                      const CoeffDomain& dom) {
  CoeffDomain f = field_of_fractions(dom);
  if (rhs.size() != m.size()) throw PreconditionError("solve_linear: row count mismatch");
  for (std::size_t r = 0; r < m.size(); ++r) {
    m[r].resize(ncols, 0);
    m[r].push_back(rhs[r]);
  }
  auto pivots = rref(m, ncols + 1, f);
  ScalarRow u(ncols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == ncols) return std::nullopt;  // 0 = 1
    u[pivots[r]] = m[r][ncols];
  }
  return u;
}

std::vector<Element> monomials_up_to(const Ring& r, int degree) {
  std::vector<Exponents> acc{r->unit_exponents()};
  const std::size_t nv = r->nvars();
  auto weight = [&](const Exponents& e) {
    int w = 0;
    for (std::size_t s = 0; s < e.size(); ++s)
      if (s < nv || !r->gen(s - nv).base_layer) w += e[s];
    return w;
  };
  for (std::size_t s = 0; s < r->width(); ++s) {
    std::vector<Exponents> next;
    int cap = s < nv ? degree : r->gen(s - nv).degree - 1;
    for (const auto& e : acc)
      for (int k = 0; k <= cap; ++k) {
        Exponents f = e;
        f[s] = k;
        if (weight(f) <= degree) next.push_back(std::move(f));
      }
    acc = std::move(next);
  }
  std::vector<Element> out;
  out.reserve(acc.size());
  for (auto& e : acc) out.push_back(Element::monomial(r, std::move(e)));
  return out;
}

std::optional<std::vector<Element>> bounded_combination(const std::vector<Element>& elems, const Element& target,
                                                        int degree) {
  const Ring& r = target.ring();
  auto mons = monomials_up_to(r, degree);
  // Column (i, k) holds the coefficients of mons[k] * elems[i].
  std::map<Exponents, std::size_t, MonomialOrder> rows(MonomialOrder{r->nvars()});
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
  auto row_of = [&](const Exponents& e) {
    auto it = rows.find(e);
    if (it == rows.end()) it = rows.emplace(e, rows.size()).first;
    return it->second;
  };
  for (const auto& e : elems)
    for (const auto& m : mons) {
      std::vector<std::pair<std::size_t, Scalar>> col;
      Element prod = m * e;
      for (const auto& [ex, c] : prod.terms()) col.emplace_back(row_of(ex), c);
      cols.push_back(std::move(col));
    }
  for (const auto& [ex, c] : target.terms()) row_of(ex);
  std::vector<ScalarRow> m(rows.size(), ScalarRow(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [i, c] : cols[j]) m[i][j] = c;
  ScalarRow rhs(rows.size(), 0);
  for (const auto& [ex, c] : target.terms()) rhs[rows.at(ex)] = c;
  auto u = solve_linear(std::move(m), std::move(rhs), cols.size(), r->coeff());
  if (!u) return std::nullopt;
  std::vector<Element> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Element lam = r->zero();
    for (std::size_t k = 0; k < mons.size(); ++k) {
      const Scalar& c = (*u)[i * mons.size() + k];
      if (c == 0) continue;
      if (!r->coeff().divides(1, c)) return std::nullopt;  // non-integral over Z
      lam += mons[k] * c;
    }
    out.push_back(std::move(lam));
  }
  return out;
}

}  // namespace picard
