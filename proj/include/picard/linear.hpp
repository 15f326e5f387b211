#pragma once

// Linear algebra over the coefficient field (Q for Z towers, F_p otherwise),
// used for bounded-degree searches: unknowns are the coefficients of
// candidate elements on a finite monomial set.

#include <optional>
#include <vector>

#include "picard/ring.hpp"

namespace picard {

using ScalarRow = std::vector<Scalar>;

/// Q for Z, unchanged otherwise.
CoeffDomain field_of_fractions(const CoeffDomain& dom);

/// Basis of {u : M u = 0}; one vector per free column of the reduced echelon form.
std::vector<ScalarRow> nullspace(std::vector<ScalarRow> m, std::size_t ncols, const CoeffDomain& dom);

/// Some u with M u = rhs.
std::optional<ScalarRow> solve_linear(std::vector<ScalarRow> m, ScalarRow rhs, std::size_t ncols,
                                      const CoeffDomain& dom);

/// Normal-form monomials of degree <= d. Variables and polynomial-layer
/// generators count towards the degree; number-layer exponents do not.
std::vector<Element> monomials_up_to(const Ring& r, int degree);

/// Coefficients lambda_i, each of degree <= d, with sum lambda_i e_i = target.
/// Field coefficient domains only (nullopt over Z unless the solution is integral).
std::optional<std::vector<Element>> bounded_combination(const std::vector<Element>& elems, const Element& target,
                                                        int degree);

}  // namespace picard
