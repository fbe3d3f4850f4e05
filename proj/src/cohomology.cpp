#include "hhsmash/cohomology.hpp"

#include "hhsmash/error.hpp"

#include <sstream>

namespace hhs {

SpanSolver::SpanSolver(const std::vector<Vector>& vectors, std::size_t ambient_dim)
    : count_(vectors.size()), ambient_(ambient_dim) {
    Matrix aug(count_, ambient_ + count_);
    for (std::size_t i = 0; i < count_; ++i) {
        for (std::size_t c = 0; c < ambient_; ++c)
            aug(i, c) = vectors[i].at(c);
        aug(i, ambient_ + i) = Scalar(1);
    }
    auto [reduced, pivots] = rref(std::move(aug));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= ambient_)
            throw Error(ErrorCode::InvalidArgument, "vectors are linearly dependent");
        const auto row = reduced.row(r);
        rows_.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(ambient_));
        combos_.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(ambient_), row.end());
        pivots_.push_back(pivots[r]);
    }
}

std::optional<Vector> SpanSolver::solve(const Vector& v) const {
    Vector residual = v;
    Vector coords(count_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = residual[pivots_[r]];
        if (c.is_zero())
            continue;
        for (std::size_t k = 0; k < ambient_; ++k)
            if (!rows_[r][k].is_zero())
                residual[k].submul(c, rows_[r][k]);
        for (std::size_t i = 0; i < count_; ++i)
            if (!combos_[r][i].is_zero())
                coords[i].addmul(c, combos_[r][i]);
    }
    if (!is_zero(residual))
        return std::nullopt;
    return coords;
}

// ---------------------------------------------------------------- cohomology

namespace {

Subspace coboundaries_of(const WeightStrand& strand, unsigned m) {
    if (m == 0 || m >= strand.degrees())
        return Subspace(strand.dim(m));
    return image_basis(strand.differential(m - 1));
}

Subspace cocycles_of(const WeightStrand& strand, unsigned m) {
    if (m >= strand.degrees())
        return Subspace(0);
    return kernel_basis(strand.differential(m));
}

Subspace classes_of(const std::vector<Vector>& vectors, const Subspace& coboundaries, std::size_t ambient) {
    std::vector<Vector> reduced;
    reduced.reserve(vectors.size());
    for (const auto& v : vectors) {
        Vector r = coboundaries.reduce(v);
        if (!is_zero(r))
            reduced.push_back(std::move(r));
    }
    return Subspace::span(reduced, ambient);
}

void require_cocycle(const DGContext& ctx, const Cochain& c, const char* which) {
    if (!ctx.differential(c).is_zero())
        throw Error(ErrorCode::NotACocycle, std::string(which) + " is not a cocycle: " + ctx.format(c));
}

} // namespace

std::vector<Cochain> CohomologyBasis::cochains() const {
    std::vector<Cochain> out;
    for (const auto& r : representatives)
        out.push_back(strand->cochain(m, r));
    return out;
}

CohomologyBasis cohomology_at(const DGContext& ctx, int w, unsigned m) {
    CohomologyBasis out;
    out.m = m;
    out.w = w;
    out.strand = ctx.strand(w);
    out.cocycles = cocycles_of(*out.strand, m);
    out.coboundaries = coboundaries_of(*out.strand, m);
    out.representatives = classes_of(out.cocycles.basis(), out.coboundaries, out.strand->dim(m)).basis();
    if (out.representatives.size() + out.coboundaries.dim() != out.cocycles.dim())
        throw Error(ErrorCode::InvalidArgument, "coboundaries are not contained in cocycles");
    return out;
}

CohomologyBasis invariants(const DGContext& /*ctx*/, const CohomologyBasis& basis, const HopfElement& lambda) {
    CohomologyBasis out = basis;
    if (basis.dim() == 0)
        return out;
    const Matrix p = basis.strand->action_matrix(basis.m, lambda);
    std::vector<Vector> images;
    for (const auto& r : basis.representatives)
        images.push_back(p.apply(r));
    out.representatives = classes_of(images, basis.coboundaries, basis.strand->dim(basis.m)).basis();
    return out;
}

CohomologyBasis invariants_from_cocycles(const DGContext& /*ctx*/, const CohomologyBasis& basis,
                                         const HopfElement& lambda) {
    CohomologyBasis out = basis;
    if (basis.cocycles.dim() == 0)
        return out;
    const Matrix p = basis.strand->action_matrix(basis.m, lambda);
    std::vector<Vector> images;
    for (const auto& z : basis.cocycles.basis())
        images.push_back(p.apply(z));
    out.representatives = classes_of(images, basis.coboundaries, basis.strand->dim(basis.m)).basis();
    return out;
}

bool class_equal(const DGContext& ctx, const Cochain& x, const Cochain& y) {
    require_cocycle(ctx, x, "left cochain");
    require_cocycle(ctx, y, "right cochain");
    if (x.m() != y.m() && !x.is_zero() && !y.is_zero())
        throw Error(ErrorCode::InvalidArgument, "cochains of different degree");
    const Cochain diff = x - y;
    if (diff.is_zero())
        return true;
    const auto w = ctx.weight_of(diff);
    if (!w)
        throw Error(ErrorCode::InvalidArgument, "cochain difference is not bihomogeneous");
    const auto strand = ctx.strand(*w);
    return coboundaries_of(*strand, x.m()).contains(strand->coords(diff));
}

// ---------------------------------------------------------------- frames

ClassFrame::ClassFrame(const DGContext& ctx, unsigned m, int w, std::vector<std::pair<std::string, Cochain>> members)
    : ctx_(&ctx), m_(m), w_(w), strand_(ctx.strand(w)), coboundaries_(coboundaries_of(*strand_, m)),
      members_(std::move(members)) {
    for (const auto& [label, c] : members_) {
        if (c.m() != m_)
            throw Error(ErrorCode::InvalidArgument, label + " has the wrong degree");
        if (!c.is_zero() && ctx.weight_of(c) != w_)
            throw Error(ErrorCode::InvalidArgument, label + " has the wrong weight");
        require_cocycle(ctx, c, label.c_str());
        reduced_.push_back(coboundaries_.reduce(strand_->coords(c)));
    }
    try {
        solver_ = SpanSolver(reduced_, strand_->dim(m_));
    } catch (const Error&) {
        throw Error(ErrorCode::BasisMismatch, "classes at m=" + std::to_string(m_) + ", w=" + std::to_string(w_) +
                                                  " are linearly dependent");
    }
}

Subspace ClassFrame::class_span() const { return Subspace::span(reduced_, strand_->dim(m_)); }

std::optional<Vector> ClassFrame::coordinates(const Cochain& c) const {
    if (c.is_zero())
        return Vector(members_.size());
    if (c.m() != m_ || ctx_->weight_of(c) != w_)
        return std::nullopt;
    return solver_.solve(coboundaries_.reduce(strand_->coords(c)));
}

// ---------------------------------------------------------------- cup products

std::string format_combination(const LabelCombination& c) {
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, coef] : c) {
        const bool negative = coef.sign() < 0;
        const Scalar mag = negative ? -coef : coef;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (!mag.is_one())
            os << mag << '*';
        os << label;
    }
    return os.str();
}

CupTable cup_structure(const DGContext& ctx, const std::vector<std::pair<std::string, Cochain>>& left,
                       const std::vector<std::pair<std::string, Cochain>>& right, const FrameLookup& targets) {
    CupTable table;
    for (const auto& [ll, lc] : left)
        for (const auto& [rl, rc] : right) {
            CupEntry entry{ll, rl, {}};
            const Cochain p = ctx.product(lc, rc);
            if (!p.is_zero()) {
                require_cocycle(ctx, p, "product");
                const unsigned m = p.m();
                const auto w = ctx.weight_of(p);
                if (!w)
                    throw Error(ErrorCode::InvalidArgument, "product is not bihomogeneous");
                const ClassFrame* frame = targets(m, *w);
                if (frame == nullptr) {
                    const auto strand = ctx.strand(*w);
                    if (!coboundaries_of(*strand, m).contains(strand->coords(p)))
                        throw Error(ErrorCode::TargetBasisIncomplete,
                                    ll + " * " + rl + " has no target classes at m=" + std::to_string(m) +
                                        ", w=" + std::to_string(*w));
                } else {
                    const auto coords = frame->coordinates(p);
                    if (!coords)
                        throw Error(ErrorCode::TargetBasisIncomplete,
                                    ll + " * " + rl + " is outside the target classes");
                    for (std::size_t i = 0; i < coords->size(); ++i)
                        if (!(*coords)[i].is_zero())
                            entry.value[frame->members()[i].first] = (*coords)[i];
                }
            }
            table.entries.push_back(std::move(entry));
        }
    return table;
}

} // namespace hhs
