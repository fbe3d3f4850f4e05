#pragma once

// Cohomology of weight strands, the ◄∫ projection onto invariants, class
// comparison and cup-product structure constants.

#include "hhsmash/cochain.hpp"
#include "hhsmash/linalg.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hhs {

/// Coordinates against a fixed list of independent vectors.
class SpanSolver {
public:
    SpanSolver() = default;
    /// Throws InvalidArgument when the vectors are dependent.
    SpanSolver(const std::vector<Vector>& vectors, std::size_t ambient_dim);

    [[nodiscard]] std::size_t size() const { return count_; }
    [[nodiscard]] std::optional<Vector> solve(const Vector& v) const;

private:
    std::size_t count_ = 0;
    std::size_t ambient_ = 0;
    std::vector<Vector> rows_;   // echelon rows spanning the same space
    std::vector<std::size_t> pivots_;
    std::vector<Vector> combos_; // rows_[r] = Σ combos_[r][i] · vectors[i]
};

/// H^m at one weight: cocycles, coboundaries and canonical class representatives.
struct CohomologyBasis {
    unsigned m = 0;
    int w = 0;
    std::shared_ptr<const WeightStrand> strand;
    Subspace cocycles;
    Subspace coboundaries;
    /// Coordinate vectors in the strand basis; reduced modulo coboundaries and echelonized.
    std::vector<Vector> representatives;

    [[nodiscard]] std::size_t dim() const { return representatives.size(); }
    [[nodiscard]] std::vector<Cochain> cochains() const;
};

CohomologyBasis cohomology_at(const DGContext& ctx, int w, unsigned m);

/// Classes spanned by the images of the representatives under ◄Λ.
CohomologyBasis invariants(const DGContext& ctx, const CohomologyBasis& basis, const HopfElement& lambda);
/// Same space computed from invariant cocycles first (Z◄Λ, then modulo coboundaries).
CohomologyBasis invariants_from_cocycles(const DGContext& ctx, const CohomologyBasis& basis,
                                         const HopfElement& lambda);

/// True when x − y is a coboundary. Throws NotACocycle when either side is not closed.
bool class_equal(const DGContext& ctx, const Cochain& x, const Cochain& y);

/// A labeled family of cocycles whose classes are independent at one (m, w).
class ClassFrame {
public:
    /// Throws NotACocycle for an open cochain and BasisMismatch for dependent classes.
    ClassFrame(const DGContext& ctx, unsigned m, int w, std::vector<std::pair<std::string, Cochain>> members);

    [[nodiscard]] unsigned m() const { return m_; }
    [[nodiscard]] int w() const { return w_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] const std::vector<std::pair<std::string, Cochain>>& members() const { return members_; }
    /// Class of the members' span, as reduced vectors.
    [[nodiscard]] Subspace class_span() const;
    /// Coordinates of the class of a cocycle, or nullopt outside the span.
    [[nodiscard]] std::optional<Vector> coordinates(const Cochain& c) const;

private:
    const DGContext* ctx_;
    unsigned m_;
    int w_;
    std::shared_ptr<const WeightStrand> strand_;
    Subspace coboundaries_;
    std::vector<std::pair<std::string, Cochain>> members_;
    std::vector<Vector> reduced_;
    SpanSolver solver_;
};

/// Linear combination of labels with exact coefficients; zero coefficients are dropped.
using LabelCombination = std::map<std::string, Scalar>;

std::string format_combination(const LabelCombination& c);

struct CupEntry {
    std::string left;
    std::string right;
    LabelCombination value;
};

struct CupTable {
    std::vector<CupEntry> entries;
};

/// Looks up the frame for a product's bidegree; nullptr when that bidegree has no classes.
using FrameLookup = std::function<const ClassFrame*(unsigned m, int w)>;

/// Products of every left member with every right member, expressed in the
/// target frames. Throws TargetBasisIncomplete if a product class escapes them.
CupTable cup_structure(const DGContext& ctx, const std::vector<std::pair<std::string, Cochain>>& left,
                       const std::vector<std::pair<std::string, Cochain>>& right, const FrameLookup& targets);

} // namespace hhs
