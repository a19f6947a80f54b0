#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sergeev/perm.hpp"
#include "sergeev/scalar.hpp"

namespace sergeev {

// Basis word w·c^mask of the algebra in normal form: permutation first, then
// the ascending Clifford monomial. Bit a-1 of mask means c_a is present.
// Ordering is lexicographic on the one-line word, then by mask value; packed
// permutation codes compare the same way as one-line words.
struct BasisWord {
    std::uint64_t perm;
    std::uint32_t mask;
    friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
};

enum class Parity { Even, Odd, Mixed };

// Element of the rank-n algebra: a finite sum of basis words with Scalar
// coefficients. Terms are kept sorted with no zero coefficients, so equal
// elements have identical term vectors.
class AlgebraElement {
  public:
    explicit AlgebraElement(int n);

    static AlgebraElement zero(int n) { return AlgebraElement(n); }
    static AlgebraElement one(int n);
    static AlgebraElement monomial(const Permutation& w, std::uint32_t mask, Scalar coeff);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<BasisWord, Scalar>>& terms() const { return terms_; }

    // Zero scalar when the word is absent.
    Scalar coefficient(const Permutation& w, std::uint32_t mask) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& s) const;

    bool operator==(const AlgebraElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    std::string to_string() const;

  private:
    int n_;
    std::vector<std::pair<BasisWord, Scalar>> terms_;

    friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&);
    friend AlgebraElement multiply_reference(const AlgebraElement&, const AlgebraElement&);
    friend AlgebraElement anti_involution_star(const AlgebraElement&);
    friend AlgebraElement embed(const AlgebraElement&, int);
};

// Normal-form product. Dense accumulation over the full basis for small n,
// ordered-map accumulation beyond that. Throws SizeMismatch on different n.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Always takes the ordered-map route; kept as the plain reference the dense
// kernel is tested against.
AlgebraElement multiply_reference(const AlgebraElement& a, const AlgebraElement& b);

// Generators. Indices are 1-based; s and t need 1 <= a <= n-1, c needs
// 1 <= a <= n.
AlgebraElement gen_s(int n, int a);
AlgebraElement gen_c(int n, int a);
AlgebraElement gen_y(int n, int a); // y_a = (c_{a+1} - c_a)/sqrt(2)
AlgebraElement gen_t(int n, int a); // t_a = y_a s_a

// t_{ab} = (-1)^{b-a-1} t_{b-1}...t_{a+1} t_a t_{a+1}...t_{b-1} for a < b,
// and t_{ba} = -t_{ab}. Memoized; requires a != b.
AlgebraElement gen_t_ab(int n, int a, int b);

AlgebraElement jm_m(int n, int a); // m_1 = 0, m_a = t_{1a} + ... + t_{a-1,a}
AlgebraElement jm_x(int n, int a); // x_a = sqrt(2) m_a c_a

// x_{rn} = sqrt(2)(t_{1n} + ... + t_{rn}) c_n, 1 <= r <= n-1.
AlgebraElement gen_jm_x(int r, int n);

// Image of a under the inclusion that fixes the extra letters: permutations
// extend by fixed points, masks are unchanged. Requires m >= a.n().
AlgebraElement embed(const AlgebraElement& a, int m);

Parity parity(const AlgebraElement& a);

// The anti-involution fixing every s_a and c_a and reversing products. On a
// basis word: star(w c^m) = (-1)^{k(k-1)/2} w^{-1} c^{w(m)}, k = popcount(m).
AlgebraElement anti_involution_star(const AlgebraElement& a);

// Relabel the normal-order monomial c^mask by w: c_{j1}···c_{jk} with
// j1 < ... < jk maps to c_{w(j1)}···c_{w(jk)}, which is then re-sorted into
// ascending order. The sign is the parity of that reordering.
std::pair<int, std::uint32_t> mask_image(const Permutation& w, std::uint32_t mask);

// Merge two normal-order Clifford monomials: c^a · c^b = sign · c^(a^b).
// Sign collects one flip per anticommuting pass plus one per c_j^2 = -1.
std::pair<int, std::uint32_t> clifford_merge(std::uint32_t a, std::uint32_t b);

// Packed codes of all of Sym_n in increasing (lexicographic) order.
std::vector<std::uint64_t> all_perm_codes(int n);

} // namespace sergeev
