#pragma once

// Explicit invariant classes for the Kac–Paljutkin action on the quantum
// (−1)-plane, the expected cup-product laws among them, and the two class
// identities in H^1 and H^2.

#include "hhsmash/cochain.hpp"
#include "hhsmash/cohomology.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hhs {

enum class Family { Eps, Eta, Om, OmPrime, OmDouble };

/// eps_r^{i,j}, eta_r^{i,j}, om_r^{i,j} (r = 1..4), om'_r (r = 1..3), om''_r (r = 1, 3).
struct FamilyLabel {
    Family family = Family::Eps;
    int r = 1;
    unsigned i = 0;
    unsigned j = 0;

    [[nodiscard]] unsigned degree() const;
    [[nodiscard]] int weight() const;
    [[nodiscard]] std::string text() const;

    friend auto operator<=>(const FamilyLabel&, const FamilyLabel&) = default;
};

/// Rewrites c·F^{a,b} using F^{b,a} = ±F^{a,b} so that indices are in basis range.
void add_normalized(LabelCombination& out, const FamilyLabel& label, const Scalar& c);

/// Value of left ⌣ right predicted by the multiplication tables, normalized.
/// Defined for eps⌣eps, eta⌣eps, om/om'/om''⌣eps and eta⌣eta.
LabelCombination expected_product(const FamilyLabel& left, const FamilyLabel& right);

class KPFamilies {
public:
    /// ctx must be the Kac–Paljutkin quantum-plane setup with parameter q.
    KPFamilies(const DGContext& ctx, Scalar q);

    [[nodiscard]] const DGContext& context() const { return *ctx_; }
    [[nodiscard]] const Scalar& q() const { return q_; }

    /// The cochain given by the family formula; valid for any i, j.
    [[nodiscard]] Cochain element(const FamilyLabel& label) const;
    /// Basis labels at one bidegree (i ≤ j or i < j as each family requires).
    [[nodiscard]] std::vector<FamilyLabel> basis_labels(unsigned m, int w) const;
    /// Frame over basis_labels(m, w); nullptr when empty. Built once.
    [[nodiscard]] const ClassFrame* frame(unsigned m, int w) const;

    /// Checks the listed classes at (m, w) are invariant cocycles forming a
    /// basis of the invariant cohomology. Throws BasisMismatch otherwise.
    void verify_basis(unsigned m, int w) const;

private:
    const DGContext* ctx_;
    Scalar q_;
    std::vector<HopfElement> k_; // (1+xy)/2, (1−xy)/2, (x+y)/2, (x−y)/2, (z+xyz)/2, (xz+yz)/2
    mutable std::mutex mutex_;
    mutable std::map<std::pair<unsigned, int>, std::unique_ptr<ClassFrame>> frames_;
};

struct TableCell {
    int table = 0;
    FamilyLabel left;
    FamilyLabel right;
    LabelCombination expected;
    LabelCombination computed;

    [[nodiscard]] bool matches() const { return expected == computed; }
};

struct TablesResult {
    unsigned index_max = 0;
    std::vector<std::string> verified_bases; // "m=.., w=.." entries checked by verify_basis
    std::vector<TableCell> cells;

    [[nodiscard]] std::size_t mismatches() const;
};

/// All four tables for indices ≤ index_max, computed with `threads` workers.
TablesResult compute_tables(const KPFamilies& families, unsigned index_max, unsigned threads);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

/// Both class identities for i, j ≤ index_max and every h₁ ∈ {z, xz, yz, xyz}.
std::vector<IdentityCheck> check_class_identities(const KPFamilies& families, unsigned index_max);

} // namespace hhs
