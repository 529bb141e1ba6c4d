#pragma once

#include <vector>

#include "quivchow/layout.hpp"
#include "quivchow/weyl.hpp"

namespace quivchow {

/// prod_i prod_{k<l} (xi_{i,l} - xi_{i,k})
ChernPoly discriminant(const VariableLayout& layout);

/// Exact quotient of f by (xi_{upper} - xi_{lower}); throws StructuralError
/// when the division leaves a remainder.
ChernPoly divide_by_difference(const ChernPoly& f, std::size_t upper, std::size_t lower);

/// rho(f) = (1/delta) sum_sigma sign(sigma) sigma.f, computed from the
/// definition: full Weyl-group sum, then division by every factor of delta.
ChernPoly symmetrize(const ChernPoly& f, const VariableLayout& layout);

/// Monomials prod xi_{i,k}^{e_{i,k}} with 0 <= e_{i,k} <= d_i - k.
std::vector<Exponents> descending_basis(const VariableLayout& layout);

bool is_weyl_invariant(const ChernPoly& f, const VariableLayout& layout);

/// Rewrite a W_d-invariant root polynomial in the x_{i,k}. Throws InputError
/// on non-invariant input.
ChernPoly to_elementary(const ChernPoly& f, const VariableLayout& layout);

/// Substitute x_{i,k} -> e_k(xi_{i,1..d_i}).
ChernPoly from_elementary(const ChernPoly& g, const VariableLayout& layout);

/// e_k(xi_{i,1}, ..., xi_{i,d_i}) as a root polynomial.
ChernPoly elementary_in_roots(const VariableLayout& layout, int vertex, int k);

/// Power sum p_k(xi_{i,.}) written in the x_{i,.} (Newton identities).
ChernPoly power_sum_in_chern(const VariableLayout& layout, int vertex, int k);

/// Schur polynomial s_lambda(xi_{i,.}) in the x_{i,.}; lambda has at most d_i parts.
ChernPoly schur_in_chern(const VariableLayout& layout, int vertex, const std::vector<int>& lambda);

/// to_elementary(rho(f)) via alternants: rho of a monomial is, per vertex,
/// a signed Schur polynomial or zero. Terms of the result above max_degree
/// (weighted) are dropped; pass -1 to keep all.
ChernPoly symmetrize_to_elementary(const ChernPoly& f, const VariableLayout& layout,
                                   int max_degree = -1);

/// Same as symmetrize_to_elementary(f * b) for every basis monomial b, without
/// forming the products; one result per entry of `basis`.
std::vector<ChernPoly> symmetrize_products(const ChernPoly& f, std::span<const Exponents> basis,
                                           const VariableLayout& layout, int max_degree);

}  // namespace quivchow
