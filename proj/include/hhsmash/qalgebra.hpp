#pragma once

// Skew-polynomial algebras k<x_1..x_n>/(x_j x_i − q_ij x_i x_j), Hopf actions on
// them, and the smash product A#H.

#include "hhsmash/hopf.hpp"
#include "hhsmash/linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace hhs {

/// PBW exponent vector x_1^{a_1}…x_n^{a_n}.
using Monomial = std::vector<std::uint32_t>;

unsigned monomial_degree(const Monomial& m);

class SkewPolyAlgebra {
public:
    /// q(i, j) for i < j encodes x_j x_i = q_ij x_i x_j; other entries are ignored.
    SkewPolyAlgebra(std::vector<std::string> labels, Matrix q);

    /// Two generators u, v with v u = q12 u v (q12 = −1 is the quantum (−1)-plane).
    static SkewPolyAlgebra plane(const Scalar& q12, std::vector<std::string> labels = {"u", "v"});

    [[nodiscard]] std::size_t n() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const Scalar& q(std::size_t i, std::size_t j) const { return q_(i, j); }
    [[nodiscard]] const Matrix& q_table() const { return q_; }

    /// Coefficient c with x^a · x^b = c · x^{a+b}.
    [[nodiscard]] Scalar commutation_factor(const Monomial& a, const Monomial& b) const;
    /// All monomials of a degree, in ascending lexicographic order of exponents.
    [[nodiscard]] std::vector<Monomial> monomials(unsigned degree) const;
    [[nodiscard]] Monomial generator(std::size_t i) const;
    [[nodiscard]] Monomial one() const { return Monomial(n(), 0); }
    [[nodiscard]] std::string format_monomial(const Monomial& m) const;

private:
    std::vector<std::string> labels_;
    Matrix q_;
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(Monomial m, Scalar c);

    void add(const Monomial& m, const Scalar& c);
    [[nodiscard]] const std::map<Monomial, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Scalar coeff(const Monomial& m) const;

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

private:
    std::map<Monomial, Scalar> terms_;
};

AlgebraElement multiply(const SkewPolyAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
std::string format(const SkewPolyAlgebra& a, const AlgebraElement& x);

/// R = span{x_j⊗x_i − q_ij x_i⊗x_j : i<j} inside V⊗V (index i*n + j for x_i⊗x_j).
Subspace relation_space(const SkewPolyAlgebra& a);

/// Homogeneous action of H on A given by its matrices on V = A_1.
/// matrix(b)(i, j) is the coefficient of x_i in b▷x_j.
class HAction {
public:
    HAction(std::shared_ptr<const SkewPolyAlgebra> algebra, std::shared_ptr<const HopfAlgebra> hopf,
            std::vector<Matrix> gen_action);

    [[nodiscard]] const SkewPolyAlgebra& algebra() const { return *algebra_; }
    [[nodiscard]] const HopfAlgebra& hopf() const { return *hopf_; }
    [[nodiscard]] const std::shared_ptr<const SkewPolyAlgebra>& algebra_ptr() const { return algebra_; }
    [[nodiscard]] const std::shared_ptr<const HopfAlgebra>& hopf_ptr() const { return hopf_; }
    [[nodiscard]] const Matrix& matrix(std::size_t b) const { return gen_action_.at(b); }
    /// Matrix of an arbitrary element h on V.
    [[nodiscard]] Matrix matrix_of(const HopfElement& h) const;

    /// b▷x^m for a basis element b, extended through h▷(xy) = (h₍₁₎▷x)(h₍₂₎▷y).
    [[nodiscard]] const AlgebraElement& act_basis(std::size_t b, const Monomial& m) const;
    [[nodiscard]] AlgebraElement act(const HopfElement& h, const AlgebraElement& x) const;

private:
    std::shared_ptr<const SkewPolyAlgebra> algebra_;
    std::shared_ptr<const HopfAlgebra> hopf_;
    std::vector<Matrix> gen_action_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<std::size_t, Monomial>, AlgebraElement> memo_;
};

/// Checks the representation property on V, 1▷v = v, h▷R ⊆ R under the
/// diagonal action, and h▷1 = ε(h)1.
AxiomReport check_module_algebra(const HAction& action);

struct SmashKey {
    Monomial mono;
    std::uint32_t h = 0;

    friend auto operator<=>(const SmashKey&, const SmashKey&) = default;
};

class SmashElement {
public:
    SmashElement() = default;
    SmashElement(Monomial m, std::uint32_t h, Scalar c);

    void add(const SmashKey& k, const Scalar& c);
    [[nodiscard]] const std::map<SmashKey, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    friend SmashElement operator+(SmashElement a, const SmashElement& b);
    friend SmashElement operator-(SmashElement a, const SmashElement& b);
    friend SmashElement operator*(const Scalar& s, const SmashElement& a);
    friend bool operator==(const SmashElement& a, const SmashElement& b) = default;

private:
    std::map<SmashKey, Scalar> terms_;
};

/// Multiplication in A#H: (a#h)(a'#h') = a(h₍₁₎▷a') # h₍₂₎h'.
class SmashProduct {
public:
    explicit SmashProduct(std::shared_ptr<const HAction> action);

    [[nodiscard]] const HAction& action() const { return *action_; }
    [[nodiscard]] const SkewPolyAlgebra& algebra() const { return action_->algebra(); }
    [[nodiscard]] const HopfAlgebra& hopf() const { return action_->hopf(); }

    [[nodiscard]] SmashElement multiply(const SmashElement& x, const SmashElement& y) const;
    /// Accumulates c·(a#h)(a2#h2) into out.
    void multiply_into(const Monomial& a, std::uint32_t h, const Monomial& a2, std::uint32_t h2, const Scalar& c,
                       SmashElement& out) const;

    [[nodiscard]] SmashElement from_algebra(const AlgebraElement& a) const;
    [[nodiscard]] SmashElement from_hopf(const HopfElement& h) const;
    [[nodiscard]] SmashElement one() const;
    [[nodiscard]] std::string format(const SmashElement& x) const;

private:
    struct Term {
        Monomial mono;
        std::uint32_t h;
        Scalar c;
    };
    // (1#b)(m#1) = Σ (b₍₁₎▷m) # b₍₂₎
    const std::vector<Term>& commute(std::uint32_t b, const Monomial& m) const;

    std::shared_ptr<const HAction> action_;
    mutable std::shared_mutex mutex_;
    mutable std::map<std::pair<std::uint32_t, Monomial>, std::vector<Term>> memo_;
};

} // namespace hhs
