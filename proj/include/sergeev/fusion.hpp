#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sergeev/algebra.hpp"
#include "sergeev/parallel.hpp"
#include "sergeev/report.hpp"
#include "sergeev/tableaux.hpp"

namespace sergeev {

// Polynomial in one central variable with Scalar coefficients, stored by
// ascending degree with trailing zeros trimmed.
class ScalarPoly {
  public:
    ScalarPoly() = default; // zero
    explicit ScalarPoly(std::vector<Scalar> coeffs);
    static ScalarPoly constant(const Scalar& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Zero beyond the degree.
    Scalar coeff(std::size_t k) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Scalar at(const Scalar& u) const;
    ScalarPoly scaled(const Scalar& s) const;
    // Exact quotient by (u - root); throws InternalError unless root is a root.
    ScalarPoly deflate(const Scalar& root) const;

    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    bool operator==(const ScalarPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Scalar> coeffs_;
    void trim();
};

// Polynomial with AlgebraElement coefficients. Multiplication keeps the
// factor order of the coefficients.
class AlgebraPoly {
  public:
    explicit AlgebraPoly(int n) : n_(n) {}
    explicit AlgebraPoly(int n, std::vector<AlgebraElement> coeffs);
    static AlgebraPoly constant(const AlgebraElement& e);

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    AlgebraElement coeff(std::size_t k) const;
    const std::vector<AlgebraElement>& coeffs() const { return coeffs_; }

    AlgebraElement at(const Scalar& u) const;
    AlgebraPoly scaled(const Scalar& s) const;
    AlgebraPoly times(const ScalarPoly& p) const;
    // Quotient and remainder of the division by (u - root).
    std::pair<AlgebraPoly, AlgebraElement> divide_linear(const Scalar& root) const;

    friend AlgebraPoly operator+(const AlgebraPoly& a, const AlgebraPoly& b);
    friend AlgebraPoly operator*(const AlgebraPoly& a, const AlgebraPoly& b);
    bool operator==(const AlgebraPoly& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

  private:
    int n_;
    std::vector<AlgebraElement> coeffs_;
    void trim();
};

// Quotient num/den with all noncommutativity in the numerator: denominators
// only ever arise from the central u^2 - kappa^2, so a scalar polynomial,
// kept monic and nonzero.
class RationalElement {
  public:
    RationalElement(AlgebraPoly num, ScalarPoly den);
    static RationalElement constant(const AlgebraElement& e);

    int n() const { return num_.n(); }
    const AlgebraPoly& numerator() const { return num_; }
    const ScalarPoly& denominator() const { return den_; }

    friend RationalElement operator*(const RationalElement& a, const RationalElement& b);

  private:
    AlgebraPoly num_;
    ScalarPoly den_;
};

enum class VariableSide { Left, Right };

// phi_ab(u, v) = 1 + t_ab sqrt(2) (u c_a - v c_b)/(u^2 - v^2), both arguments
// fixed. Throws PoleAtEvaluation when u^2 = v^2.
AlgebraElement phi_factor(int n, int a, int b, const Scalar& u, const Scalar& v);
// The same factor with one symbolic argument: Left keeps the first argument
// as the variable, Right the second; `value` fixes the other one.
RationalElement phi_factor(int n, int a, int b, VariableSide side, const Scalar& value);

// Value of r at the point: while the denominator vanishes there, divide
// numerator and denominator exactly by (u - kappa); a nonzero numerator
// remainder raises NonRemovablePole.
AlgebraElement evaluate_at(const RationalElement& r, const Scalar& kappa);

// Consecutive evaluation of the full product over pairs at the signed
// contents of the barred tableau: step k multiplies the previous value by
// prod_{a<k} phi_ak(kappa_a, u) and evaluates at u = kappa_k. Returns
// (n!/g_lambda) e_U.
AlgebraElement fusion_evaluate(const ShiftedTableau& u);

// Scalar rational function, same conventions as RationalElement.
struct ScalarRational {
    ScalarPoly num;
    ScalarPoly den;

    friend ScalarRational operator*(const ScalarRational& a, const ScalarRational& b) {
        return {a.num * b.num, a.den * b.den};
    }
};

// A(u, kappa) = 1 - 1/(u-kappa)^2 - 1/(u+kappa)^2 over the common denominator.
ScalarRational a_factor(const Scalar& kappa);
// Evaluation with the same cancellation loop as evaluate_at.
Scalar evaluate_scalar(const ScalarRational& r, const Scalar& kappa);

// Checks e_V phi_{n,r}(u,kappa_r) ... phi_{n,1}(u,kappa_1) = (u - x_{rn})/u e_V
// as a cross-multiplied polynomial identity, for the barred tableau V with
// r = V.n() < n boxes.
CheckReport verify_prjm_lemma(const ShiftedTableau& v, int n);

// For V with n-1 boxes and an addable target box (bar optional): checks the
// branching decomposition of e_V, the element evaluation
// (u-kappa_n)/(u-x_n) e_V |_{u=kappa_n} = e_U through the removable-pole
// machinery, and the scalar evaluation
// u/(u-kappa_n) prod_a A(u, kappa_a) |_{u=kappa_n} = n g_mu / g_lambda.
CheckReport verify_ratf_identities(const ShiftedTableau& v, const Box& target, bool barred = false);

// Sweep at level n: fusion_evaluate(U) = (n!/g) e_U for every standard
// barred U, plus the lemma and evaluation identities above for every
// admissible smaller tableau.
CheckReport verify_fusion(int n, Exec exec = Exec::Serial);

} // namespace sergeev
