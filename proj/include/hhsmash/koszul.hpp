#pragma once

// Koszul dual A^! = T(V*)/(R^⊥) degree by degree, its multiplication, the dual
// right H-action, and a certificate that the Koszul bimodule complex is exact.

#include "hhsmash/hopf.hpp"
#include "hhsmash/linalg.hpp"
#include "hhsmash/qalgebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hhs {

/// One graded piece A^!_m realised as a quotient of (V*)^{⊗m}.
struct DualDegree {
    unsigned m = 0;
    std::size_t ambient_dim = 0;
    Subspace rel_span;                    // Σ (V*)^{⊗u} ⊗ R^⊥ ⊗ (V*)^{⊗v}, u+v = m−2
    std::vector<std::size_t> rep_indices; // tensor positions of the quotient basis

    [[nodiscard]] std::size_t dim() const { return rep_indices.size(); }
};

struct DualElement {
    unsigned m = 0;
    Vector coords;

    friend bool operator==(const DualElement&, const DualElement&) = default;
};

class KoszulDual {
public:
    KoszulDual(std::shared_ptr<const SkewPolyAlgebra> algebra, unsigned m_max);

    [[nodiscard]] const SkewPolyAlgebra& algebra() const { return *algebra_; }
    [[nodiscard]] unsigned m_max() const { return m_max_; }
    /// Least degree with A^!_m = 0, when one occurs within the computed range.
    [[nodiscard]] std::optional<unsigned> top_degree() const { return top_; }
    [[nodiscard]] std::vector<std::size_t> dims() const;
    /// dim A^!_m; zero above the top degree, DegreeOverflow outside the known range.
    [[nodiscard]] std::size_t dim(unsigned m) const;
    [[nodiscard]] bool known(unsigned m) const { return m <= m_max_ || top_.has_value(); }
    [[nodiscard]] const DualDegree& degree(unsigned m) const { return degrees_.at(m); }

    /// Coordinates of a tensor in (V*)^{⊗m} modulo relations.
    [[nodiscard]] Vector reduce(unsigned m, const Vector& tensor) const;
    [[nodiscard]] Vector lift(unsigned m, const Vector& coords) const;

    [[nodiscard]] DualElement one() const;
    /// Generator e^i of A^!_1.
    [[nodiscard]] DualElement generator(std::size_t i) const;
    [[nodiscard]] DualElement basis_element(unsigned m, std::size_t k) const;
    [[nodiscard]] DualElement multiply(const DualElement& x, const DualElement& y) const;
    /// Coordinates of (basis k1 of degree m1)·(basis k2 of degree m2).
    [[nodiscard]] const Vector& basis_product(unsigned m1, std::size_t k1, unsigned m2, std::size_t k2) const;

    /// Label of the quotient basis tensor, e.g. "v*u*".
    [[nodiscard]] std::string basis_label(unsigned m, std::size_t k) const;

    /// (A^!_m)^* ⊆ V^{⊗m} computed as ∩ V^{⊗u} ⊗ R ⊗ V^{⊗v}.
    [[nodiscard]] Subspace dual_subspace(unsigned m) const;

private:
    std::shared_ptr<const SkewPolyAlgebra> algebra_;
    unsigned m_max_;
    std::optional<unsigned> top_;
    std::vector<DualDegree> degrees_;
    Subspace r_perp_;
    std::map<std::tuple<unsigned, std::size_t, unsigned, std::size_t>, Vector> products_;
};

/// Right action (ξ◁h)(v) = ξ(h▷v), extended diagonally; descends to A^!.
class DualAction {
public:
    /// Throws RelationNotPreserved when some rel_span is not stable.
    DualAction(const KoszulDual& dual, const HAction& action);

    /// Matrix of ◁b on A^!_m coordinates (acting on column vectors).
    [[nodiscard]] const Matrix& matrix(std::size_t b, unsigned m) const { return matrices_.at(m).at(b); }
    [[nodiscard]] DualElement act(const DualElement& x, const HopfElement& h) const;

private:
    std::vector<std::vector<Matrix>> matrices_; // [m][b]
};

struct KoszulStrandReport {
    unsigned weight = 0;
    std::vector<std::size_t> chain_dims; // dim K_m at this weight, m = 0,1,…
    std::vector<std::size_t> homology;   // [0] at A_w, [m+1] at K_m
    bool exact = true;
};

struct KoszulCheckReport {
    std::vector<std::size_t> dims_quotient;
    std::vector<std::size_t> dims_intersection;
    bool dims_agree = true;
    bool d_squared_zero = true;
    std::vector<KoszulStrandReport> strands;
    unsigned certified_m_max = 0;
    unsigned certified_weight_max = 0;

    [[nodiscard]] bool exact() const;
    [[nodiscard]] bool passed() const { return dims_agree && d_squared_zero && exact(); }
};

KoszulCheckReport koszul_complex_check(std::shared_ptr<const SkewPolyAlgebra> algebra, unsigned m_max,
                                       unsigned weight_max);

} // namespace hhs
