#pragma once

#include <cstdint>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/parallel.hpp"
#include "sergeev/report.hpp"
#include "sergeev/tableaux.hpp"

namespace sergeev {

struct IdempotentRecord {
    ShiftedTableau tableau;
    AlgebraElement element;
    std::vector<Scalar> kappa; // kappa[a-1] = signed content of entry a
};

// Primitive idempotent e_U for a standard barred tableau, built by the
// one-box recursion e_U = e_V · prod_j (x_n - b_j)/(kappa - b_j) over the
// other addable signed contents b_j of the smaller shape. Memoized along
// the branching tree; the returned reference stays valid for the process.
const IdempotentRecord& idempotent(const ShiftedTableau& u);

struct CliffordIdempotent {
    std::vector<int> diagonal_entries; // d_1 < ... < d_l
    std::vector<int> sign_pattern;     // in {-1,+1}^m, m = floor(l/2)
    AlgebraElement element;            // prod_a (1 + eps_a i c_{d_{2a-1}} c_{d_{2a}})/2
};

// All 2^m sign-pattern idempotents for the diagonal entries of u. Pattern
// r-1 in binary, least significant bit = eps_1, set bit = -1; index 1 is
// the all-plus pattern.
std::vector<CliffordIdempotent> clifford_idempotents(const ShiftedTableau& u);

// e^{(r)}_U = E_r · e_U, 1 <= r <= 2^m.
AlgebraElement refined_idempotent(const ShiftedTableau& u, int r);

// e_U · y computed through the recursion's own factorization
// e_U = prod_k prod_j (x_k - b_{kj})/(kappa_k - b_{kj}), applying the sparse
// linear factors right to left onto y. Exactly multiply(e_U, y), associated
// differently; the quadratic orthogonality sweep depends on this being cheap
// when y is an eigenvector of every x_k.
AlgebraElement apply_idempotent_factors(const ShiftedTableau& u, const AlgebraElement& y);

// phi_a = s_a(x_a^2 - x_{a+1}^2) + x_a + x_{a+1} - c_a c_{a+1}(x_a - x_{a+1})
AlgebraElement intertwiner_phi(int n, int a);

// phi_w via the lexicographically smallest reduced word of w; the braid
// relations make any reduced word give the same element. phi_star_w is the
// reversed-word product, equal to both phi_w(w^{-1}) and star(phi_w(w)).
AlgebraElement phi_w(const Permutation& w);
AlgebraElement phi_star_w(const Permutation& w);

// zeta^beta_{TU} = phi_{d(T)} · e_{R^{lambda,beta}} · phi*_{d(U)} for
// standard unbarred T, U of one shape; beta is a set of non-diagonal boxes.
AlgebraElement zeta(const ShiftedTableau& t, const ShiftedTableau& u, const std::vector<Box>& beta);

// x_n = sum_U kappa_n(U) e_U over standard barred tableaux with n boxes.
// Returns the right-hand side; throws InternalError if it differs from x_n.
AlgebraElement jm_spectral_decomposition(int n);

// Materializes every idempotent with n boxes (level by level, parallel
// within a level) and checks idempotency, pairwise orthogonality,
// completeness, and both-sided JM eigen-relations.
CheckReport verify_idempotent_system(int n, Exec exec = Exec::Serial);

// Rank over the scalar field of {c^eps · zeta^beta_{TU}}: must be 2^n n!.
CheckReport verify_zeta_basis(int n, Exec exec = Exec::Serial);

// Rank of the right-multiplication operator v -> v·e on the whole algebra,
// by exact elimination on its 2^n n! coordinate matrix.
std::size_t right_ideal_rank(const AlgebraElement& e, Exec exec = Exec::Serial);

} // namespace sergeev
