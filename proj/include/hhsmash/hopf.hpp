#pragma once

// Finite-dimensional Hopf algebras given by structure constants.

#include "hhsmash/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hhs {

/// Element of a Hopf algebra in the coordinates of its fixed basis.
struct HopfElement {
    Vector coeffs;

    friend HopfElement operator+(HopfElement a, const HopfElement& b);
    friend HopfElement operator-(HopfElement a, const HopfElement& b);
    friend HopfElement operator*(const Scalar& s, HopfElement a);
    friend bool operator==(const HopfElement& a, const HopfElement& b) = default;
};

/// Iterated coproduct Δ^{(n-1)}(h): coefficient per tuple of basis indices.
struct SweedlerTensor {
    unsigned legs = 0;
    std::map<std::vector<std::uint32_t>, Scalar> terms;

    friend bool operator==(const SweedlerTensor& a, const SweedlerTensor& b) = default;
};

class HopfAlgebra {
public:
    /// mult[a][b]: coordinates of b_a·b_b. comult[a](i, j): coefficient of
    /// b_i⊗b_j in Δ(b_a). antipode(i, j): coefficient of b_i in S(b_j).
    HopfAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> mult, Vector unit,
                std::vector<Matrix> comult, Vector counit, Matrix antipode);

    [[nodiscard]] std::size_t dim() const { return labels_.size(); }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    [[nodiscard]] const std::string& label(std::size_t i) const { return labels_.at(i); }
    /// Index of a basis label; throws InvalidArgument when unknown.
    [[nodiscard]] std::size_t index_of(const std::string& label) const;

    [[nodiscard]] const Vector& mult(std::size_t a, std::size_t b) const { return mult_[a][b]; }
    [[nodiscard]] const Vector& unit_coeffs() const { return unit_; }
    [[nodiscard]] const Matrix& comult(std::size_t a) const { return comult_[a]; }
    [[nodiscard]] const Vector& counit_coeffs() const { return counit_; }
    [[nodiscard]] const Matrix& antipode_matrix() const { return antipode_; }

    [[nodiscard]] HopfElement basis(std::size_t i) const;
    [[nodiscard]] HopfElement unit() const { return {unit_}; }
    [[nodiscard]] HopfElement zero() const { return {Vector(dim())}; }
    [[nodiscard]] HopfElement multiply(const HopfElement& a, const HopfElement& b) const;
    [[nodiscard]] Scalar counit(const HopfElement& h) const;
    [[nodiscard]] HopfElement antipode(const HopfElement& h) const;
    /// Δ(h) as a dim×dim coefficient matrix.
    [[nodiscard]] Matrix comultiply(const HopfElement& h) const;
    /// Matrix of left multiplication by basis element a.
    [[nodiscard]] Matrix left_mult_matrix(std::size_t a) const;
    [[nodiscard]] Matrix right_mult_matrix(std::size_t a) const;
    /// Human-readable linear combination, e.g. "1/2*1 + 1/2*xy".
    [[nodiscard]] std::string format(const HopfElement& h) const;

    /// Builds an element from (coefficient, label) pairs.
    [[nodiscard]] HopfElement element(const std::vector<std::pair<Scalar, std::string>>& terms) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> mult_;
    Vector unit_;
    std::vector<Matrix> comult_;
    Vector counit_;
    Matrix antipode_;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const AxiomCheck* first_failure() const;
};

/// Evaluates associativity/unit, coassociativity/counit, Δ and ε being algebra
/// maps, and the antipode identity, all exactly on basis elements.
AxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// The 8-dimensional Kac–Paljutkin algebra with basis 1,x,y,z,xy,xz,yz,xyz.
HopfAlgebra kac_paljutkin();

/// Group algebra k[G] for a multiplication table table[i][j] = index of g_i g_j.
/// Throws NotAGroup when the table is not a group.
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                          std::vector<std::string> labels = {});

SweedlerTensor sweedler(const HopfAlgebra& h, const HopfElement& x, unsigned legs);

/// Applies ε to leg `leg` of t, producing a tensor with one leg fewer.
SweedlerTensor contract_counit(const HopfAlgebra& h, const SweedlerTensor& t, unsigned leg);

/// Two-sided integral Λ normalized by ε(Λ) = 1.
HopfElement integral(const HopfAlgebra& h);

} // namespace hhs
