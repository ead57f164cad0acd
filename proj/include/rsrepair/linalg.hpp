#pragma once

#include <span>
#include <vector>

#include "rsrepair/tower.hpp"

namespace rsrepair {

/// A list of F-elements treated as vectors over B. Bases produced by this
/// module are linearly independent over B by construction.
using BBasis = std::vector<Felem>;

/// Rank over B of the given elements.
std::size_t rank_over_b(const Tower& tw, std::span<const Felem> elems);

bool is_independent_over_b(const Tower& tw, std::span<const Felem> elems);

/// Coefficients c with x = sum c_i * basis_i over B. The basis may have
/// fewer than t elements. Throws NotInSpanError when x is outside the span
/// and std::invalid_argument when the basis is dependent.
std::vector<Belem> coords_in_basis(const Tower& tw, Felem x,
                                   std::span<const Felem> basis);

/// Basis of the trace kernel {x : Tr(x) = 0}, size t-1. Deterministic:
/// scans g, g^2, ... collecting rank-increasing elements of zero trace.
/// Throws std::domain_error for t = 1 (the trace is a bijection).
BBasis trace_kernel_basis(const Tower& tw);

/// Basis of K_{a,b} = {z : Tr(z(b-a)) = 0}, the trace kernel scaled by
/// 1/(b-a); size t-1. Throws std::domain_error when a = b.
BBasis root_space(const Tower& tw, Felem a, Felem b);

/// Trace-orthogonal dual {d_j} with Tr(u_i d_j) = delta_ij, for a full
/// basis of size t. Throws std::invalid_argument on dependent input.
BBasis dual_basis(const Tower& tw, std::span<const Felem> basis);

/// Inverse of x -> (Tr(u_i x))_i for a full basis {u_i}:
/// returns sum traces_i * u_i^perp. Throws std::invalid_argument when the
/// trace vector length does not match the basis.
Felem reconstruct_from_traces(const Tower& tw, std::span<const Belem> traces,
                              std::span<const Felem> basis);

/// Same, with the dual basis already at hand (plans cache it).
Felem reconstruct_with_dual(const Tower& tw, std::span<const Belem> traces,
                            std::span<const Felem> dual);

/// Appends the first element in the canonical scan order (g, g^2, ...)
/// that is independent of `partial`; returns the full list and the new
/// element. `partial` may be empty.
std::pair<BBasis, Felem> extend_basis(const Tower& tw,
                                      std::span<const Felem> partial);

/// extend_basis applied repeatedly until the basis has t elements.
BBasis complete_basis(const Tower& tw, std::span<const Felem> partial);

}  // namespace rsrepair
