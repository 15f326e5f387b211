#pragma once

// Norms, units, exact division and gcd in ring towers.

#include <optional>
#include <utility>
#include <vector>

#include "picard/matrix.hpp"
#include "picard/ring.hpp"

namespace picard {

/// Matrix of multiplication by e on the basis 1, g_k, ..., g_k^{d-1} over the
/// layer below generator k. Entries do not involve g_k.
/// Precondition: e involves no generator above k.
Matrix multiplication_matrix(const Element& e, std::size_t k);

/// (trace, determinant) of multiplication by e over the layer below generator k.
std::pair<Element, Element> trace_and_norm(const Element& e, std::size_t k);

/// Norm pushed through every generator down to the polynomial layer.
Element full_norm(const Element& e);

/// Inverse of e if it is a unit. Layers are assumed to be domains or free
/// extensions of them; the decision goes through the norm.
std::optional<Element> inverse(const Element& e);
inline bool is_unit(const Element& e) { return inverse(e).has_value(); }

/// q with a*q == x, when it exists in the tower.
std::optional<Element> try_divide(const Element& x, const Element& a);
/// try_divide or PreconditionError.
Element exact_divide(const Element& x, const Element& a);
inline bool divides(const Element& a, const Element& x) { return try_divide(x, a).has_value(); }

/// True when the tower has no generators: a polynomial ring over Z, Q or F_p.
bool is_ufd_layer(const Ring& ring);

/// gcd in a polynomial ring over Z or a field, via primitive remainder
/// sequences in the main variable. Normalized: positive leading integer over
/// Z, monic over fields (graded-lex leading term).
Element gcd_ufd(const Element& a, const Element& b);
Element lcm_ufd(const Element& a, const Element& b);
/// gcd normalization applied to a single element (0 stays 0).
Element normalize_associate(const Element& a);
/// Content over the coefficient domain (gcd of integer coefficients over Z, 1 over fields).
Scalar scalar_content(const Element& a);

struct ExtGcd {
  Element g;
  Element u;
  Element v;  // u a + v b = g
};
/// Extended Euclid in Z or in F[x] (one variable, field coefficients, no generators).
ExtGcd ext_gcd(const Element& a, const Element& b);
bool is_pid_layer(const Ring& ring);

/// Rank by Gaussian elimination; every non-zero entry met as a pivot must be
/// invertible (field towers). PreconditionError otherwise.
std::size_t rank_over_field(const Matrix& m);
/// adj(M) det(M)^{-1} when det(M) is a unit.
std::optional<Matrix> inverse_matrix(const Matrix& m);

/// Leading coefficient and degree in one variable; remainder of pseudo-division.
Element pseudo_remainder(const Element& a, const Element& b, std::size_t var);

}  // namespace picard
