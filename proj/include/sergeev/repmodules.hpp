#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/linalg.hpp"
#include "sergeev/parallel.hpp"
#include "sergeev/report.hpp"
#include "sergeev/tableaux.hpp"

namespace sergeev {

// Uhat:       full Clifford masks on v_T, dimension 2^n g.
// Seminormal: masks over the allowed letters of each T on xi_T, 2^{n-m} g.
// ThetaSpan:  full Clifford masks on theta_T, 2^n g (spin generators only).
// Spin:       F^delta theta_T, 2^{ceil((n-l)/2)} g.
enum class ModuleFlavor { Uhat, Seminormal, ThetaSpan, Spin };

// Index layout shared by all flavors: tableaux of the shape in enumeration
// order (outer), Clifford data (inner). Inner order: masks ascending by
// value; Spin delta codes with delta_1 the most significant bit (+ = 0,
// - = 1) and the trailing alpha bit, if present, the least significant.
class ModuleBasis {
  public:
    ModuleBasis(const StrictPartition& shape, ModuleFlavor flavor);

    ModuleFlavor flavor() const { return flavor_; }
    const StrictPartition& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    const std::vector<ShiftedTableau>& tableaux() const { return tableaux_; }
    std::size_t per_tableau() const { return per_tableau_; }
    std::size_t dim() const { return tableaux_.size() * per_tableau_; }
    std::size_t index_of(std::size_t tab, std::size_t inner) const { return tab * per_tableau_ + inner; }

    // Clifford letters usable with tableau `tab`; for the seminormal flavor
    // these exclude the even-position diagonal entries d_2, d_4, ...
    std::vector<int> allowed_letters(std::size_t tab) const;
    // Clifford mask of an inner index, over the full letter range 1..n.
    std::uint32_t mask_at(std::size_t tab, std::size_t inner) const;
    // Inverse of mask_at; the mask must be supported on allowed letters.
    std::size_t inner_of(std::size_t tab, std::uint32_t mask) const;

    std::size_t tableau_index(const ShiftedTableau& t) const;
    std::string label(std::size_t idx) const;

  private:
    StrictPartition shape_;
    ModuleFlavor flavor_;
    std::vector<ShiftedTableau> tableaux_;
    std::size_t per_tableau_ = 0;
};

struct RepMatrix {
    std::string generator; // "s1", "x2", "c3", "t1"
    StrictPartition shape;
    ModuleFlavor flavor;
    ScalarMatrix mat;
};

// Y_a(T) = sqrt(A(kappa_a, kappa_{a+1})) with A(u,v) = 1 - 1/(u-v)^2 - 1/(u+v)^2,
// computed as the rational 1 - 2(p+q)/(p-q)^2 for p = kappa_a^2, q = kappa_{a+1}^2.
// Nonnegative square-root branch; throws InternalError on a negative radicand.
Scalar module_y(const ShiftedTableau& t, int a);

// Matrix of one generator (s_a, x_a or c_a) on the basis {c^eps v_T}:
// s_a acts by the two-term rule with coefficients 1/(kappa_{a+1}-kappa_a),
// c_a c_{a+1}/(kappa_{a+1}+kappa_a) and off-diagonal Y_a(T); x_a is diagonal
// with eigenvalue (-1)^{[a in eps]} kappa_a(T); c_a left-multiplies the mask.
RepMatrix uhat_action(const StrictPartition& shape, const std::string& generator);

// Matrix of an arbitrary algebra element on the same basis, composed from
// the generator matrices term by term.
ScalarMatrix uhat_matrix(const StrictPartition& shape, const AlgebraElement& y);

// The constant b_T with phi_{d(T)} v_{R} = b_T v_T: the product of
// (kappa_a^2 - kappa_{a+1}^2) Y_a over the reduced-word walk from the row
// tableau up to T. Never zero.
Scalar normalization_b(const ShiftedTableau& t);

// Matrix of one generator on the seminormal basis {c^eta xi_T}, eta running
// over masks on the allowed letters of T. Masks landing on an excluded
// diagonal letter d_{2j} are rewritten through c_{d_{2j}} xi_T = i c_{d_{2j-1}} xi_T.
RepMatrix seminormal_action(const StrictPartition& shape, const std::string& generator);

// The sign epsilon_a(T) of the theta-basis swap term, from the inversion
// counts of the row word; requires s_a T standard.
int spin_epsilon(const ShiftedTableau& t, int a);

// theta_T = y_{a_r} ... y_{a_1} v_T for the canonical reduced word
// (a_1, ..., a_r) of d(T); this returns the Clifford factor y_{a_r} ... y_{a_1}.
AlgebraElement theta_word(const ShiftedTableau& t);

// F^delta for the non-diagonal entries b_1 < ... < b_k of the row tableau:
// factors 1 + i c c' (+) or c + i c' (-) per pair, times a trailing c_{b_k}
// power when k is odd. `code` uses the ModuleBasis delta bit layout.
AlgebraElement f_delta(const StrictPartition& shape, std::size_t code);

// Matrix of t_a on the basis {c^eps theta_T}, built by conjugating the
// Uhat matrix of t_a = y_a s_a with the theta change of basis.
RepMatrix spin_theta_action(const StrictPartition& shape, int a);

// Matrices of t_1, ..., t_{n-1} on the basis {F^delta theta_T}, derived by
// right multiplication inside Uhat and exact restriction to the span.
std::vector<RepMatrix> spin_module(const StrictPartition& shape);

// Full generator set of a flavor: s/x/c matrices for Uhat and Seminormal,
// t_1..t_{n-1} for ThetaSpan and Spin.
std::vector<RepMatrix> module_generators(const StrictPartition& shape, ModuleFlavor flavor);

// Checks the defining relations of the acting algebra on the given
// generator matrices, plus dimension formulas and, for Uhat/Seminormal,
// the x_a diagonality with signed-content eigenvalues and the recursion
// x_{a+1} = s_a x_a s_a + s_a + c_{a+1} c_a s_a.
CheckReport verify_module_relations(const std::vector<RepMatrix>& matrices, ModuleFlavor flavor);

// Dimension of {X : X t_a = t_a X for all a} by exact elimination.
std::size_t commutant_dimension(const std::vector<RepMatrix>& matrices, Exec exec = Exec::Serial);

} // namespace sergeev
