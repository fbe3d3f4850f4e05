#include "hhsmash/koszul.hpp"

#include "hhsmash/error.hpp"

#include <sstream>

namespace hhs {

namespace {

std::size_t ipow(std::size_t base, unsigned e) {
    std::size_t r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

// Span of prefix ⊗ r ⊗ suffix over all positions, for r ranging over `middle`.
Subspace embed_quadratic(const Subspace& middle, std::size_t n, unsigned m) {
    const std::size_t ambient = ipow(n, m);
    std::vector<Vector> gens;
    for (unsigned u = 0; u + 2 <= m; ++u) {
        const unsigned v = m - 2 - u;
        const std::size_t nu = ipow(n, u), nv = ipow(n, v);
        for (const auto& r : middle.basis())
            for (std::size_t p = 0; p < nu; ++p)
                for (std::size_t s = 0; s < nv; ++s) {
                    Vector t(ambient);
                    for (std::size_t idx = 0; idx < n * n; ++idx)
                        if (!r[idx].is_zero())
                            t[(p * n * n + idx) * nv + s] = r[idx];
                    gens.push_back(std::move(t));
                }
    }
    return Subspace::span(gens, ambient);
}

} // namespace

KoszulDual::KoszulDual(std::shared_ptr<const SkewPolyAlgebra> algebra, unsigned m_max)
    : algebra_(std::move(algebra)), m_max_(m_max) {
    if (m_max_ < 2)
        throw Error(ErrorCode::InvalidArgument, "Koszul dual needs m_max >= 2");
    const std::size_t n = algebra_->n();
    const Subspace rel = relation_space(*algebra_);
    if (rel.dim() == 0) {
        r_perp_ = Subspace::full(n * n);
    } else {
        // Annihilator under (ξ₁⊗ξ₂)(v₁⊗v₂) = ξ₁(v₁)ξ₂(v₂): same index layout on both sides.
        r_perp_ = kernel_basis(Matrix::from_rows(rel.basis(), n * n));
    }
    for (unsigned m = 0; m <= m_max_; ++m) {
        DualDegree d;
        d.m = m;
        d.ambient_dim = ipow(n, m);
        d.rel_span = m >= 2 ? embed_quadratic(r_perp_, n, m) : Subspace(d.ambient_dim);
        d.rep_indices = quotient_coordinates(d.rel_span);
        const bool vanishes = d.dim() == 0;
        degrees_.push_back(std::move(d));
        if (vanishes) {
            top_ = m;
            break;
        }
    }
    const auto known_max = static_cast<unsigned>(degrees_.size() - 1);
    for (unsigned m1 = 0; m1 <= known_max; ++m1)
        for (unsigned m2 = 0; m1 + m2 <= known_max; ++m2) {
            const std::size_t nm2 = degrees_[m2].ambient_dim;
            for (std::size_t k1 = 0; k1 < degrees_[m1].dim(); ++k1)
                for (std::size_t k2 = 0; k2 < degrees_[m2].dim(); ++k2) {
                    const std::size_t idx = degrees_[m1].rep_indices[k1] * nm2 + degrees_[m2].rep_indices[k2];
                    products_[{m1, k1, m2, k2}] = reduce(m1 + m2, unit_vector(degrees_[m1 + m2].ambient_dim, idx));
                }
        }
}

std::vector<std::size_t> KoszulDual::dims() const {
    std::vector<std::size_t> out;
    for (const auto& d : degrees_)
        out.push_back(d.dim());
    return out;
}

std::size_t KoszulDual::dim(unsigned m) const {
    if (m < degrees_.size())
        return degrees_[m].dim();
    if (top_)
        return 0;
    throw Error(ErrorCode::DegreeOverflow, "A^! degree " + std::to_string(m) + " beyond computed range");
}

Vector KoszulDual::reduce(unsigned m, const Vector& tensor) const {
    if (m >= degrees_.size()) {
        if (top_)
            return {};
        throw Error(ErrorCode::DegreeOverflow, "A^! degree " + std::to_string(m) + " beyond computed range");
    }
    const DualDegree& d = degrees_[m];
    const Vector residual = d.rel_span.reduce(tensor);
    Vector coords(d.dim());
    for (std::size_t k = 0; k < d.dim(); ++k)
        coords[k] = residual[d.rep_indices[k]];
    return coords;
}

Vector KoszulDual::lift(unsigned m, const Vector& coords) const {
    const DualDegree& d = degrees_.at(m);
    Vector t(d.ambient_dim);
    for (std::size_t k = 0; k < d.dim(); ++k)
        t[d.rep_indices[k]] = coords.at(k);
    return t;
}

DualElement KoszulDual::one() const { return {0, Vector{Scalar(1)}}; }

DualElement KoszulDual::generator(std::size_t i) const { return {1, reduce(1, unit_vector(algebra_->n(), i))}; }

DualElement KoszulDual::basis_element(unsigned m, std::size_t k) const { return {m, unit_vector(dim(m), k)}; }

const Vector& KoszulDual::basis_product(unsigned m1, std::size_t k1, unsigned m2, std::size_t k2) const {
    static const Vector empty;
    if (m1 + m2 >= degrees_.size()) {
        if (top_)
            return empty;
        throw Error(ErrorCode::DegreeOverflow, "A^! product lands beyond computed range");
    }
    return products_.at({m1, k1, m2, k2});
}

DualElement KoszulDual::multiply(const DualElement& x, const DualElement& y) const {
    const unsigned m = x.m + y.m;
    DualElement out{m, Vector(dim(m))};
    if (out.coords.empty())
        return out;
    for (std::size_t k1 = 0; k1 < x.coords.size(); ++k1) {
        if (x.coords[k1].is_zero())
            continue;
        for (std::size_t k2 = 0; k2 < y.coords.size(); ++k2) {
            if (y.coords[k2].is_zero())
                continue;
            const Scalar c = x.coords[k1] * y.coords[k2];
            const Vector& p = basis_product(x.m, k1, y.m, k2);
            for (std::size_t k = 0; k < p.size(); ++k)
                out.coords[k].addmul(c, p[k]);
        }
    }
    return out;
}

std::string KoszulDual::basis_label(unsigned m, std::size_t k) const {
    if (m == 0)
        return "1";
    const std::size_t n = algebra_->n();
    std::size_t idx = degrees_.at(m).rep_indices.at(k);
    std::vector<std::size_t> digits(m);
    for (unsigned p = m; p-- > 0;) {
        digits[p] = idx % n;
        idx /= n;
    }
    std::string out;
    for (auto d : digits)
        out += algebra_->labels()[d] + "*";
    return out;
}

Subspace KoszulDual::dual_subspace(unsigned m) const {
    const std::size_t n = algebra_->n();
    if (m < 2)
        return Subspace::full(ipow(n, m));
    const Subspace rel = relation_space(*algebra_);
    Subspace acc;
    bool first = true;
    for (unsigned u = 0; u + 2 <= m; ++u) {
        const unsigned v = m - 2 - u;
        const std::size_t nu = ipow(n, u), nv = ipow(n, v);
        std::vector<Vector> gens;
        for (const auto& r : rel.basis())
            for (std::size_t p = 0; p < nu; ++p)
                for (std::size_t s = 0; s < nv; ++s) {
                    Vector t(ipow(n, m));
                    for (std::size_t idx = 0; idx < n * n; ++idx)
                        if (!r[idx].is_zero())
                            t[(p * n * n + idx) * nv + s] = r[idx];
                    gens.push_back(std::move(t));
                }
        Subspace piece = Subspace::span(gens, ipow(n, m));
        acc = first ? piece : intersect(acc, piece);
        first = false;
    }
    return acc;
}

// ---------------------------------------------------------------- DualAction

namespace {

// Applies Σ c · N_{b₍₁₎}⊗…⊗N_{b₍ₘ₎} to a tensor, where ξ◁h has rows of the action matrix.
Vector act_on_tensor(const HAction& action, const SweedlerTensor& sw, const Vector& tensor, unsigned m) {
    const std::size_t n = action.algebra().n();
    Vector out(tensor.size());
    for (std::size_t idx = 0; idx < tensor.size(); ++idx) {
        if (tensor[idx].is_zero())
            continue;
        std::vector<std::size_t> digits(m);
        std::size_t rest = idx;
        for (unsigned p = m; p-- > 0;) {
            digits[p] = rest % n;
            rest /= n;
        }
        for (const auto& [legs, c] : sw.terms) {
            // Expand ⊗_p (e^{digits[p]} ◁ b_{legs[p]}) = ⊗_p Σ_j M(digits[p], j) e^j.
            std::vector<std::pair<std::size_t, Scalar>> acc{{0, tensor[idx] * c}};
            for (unsigned p = 0; p < m && !acc.empty(); ++p) {
                const Matrix& mat = action.matrix(legs[p]);
                std::vector<std::pair<std::size_t, Scalar>> next;
                for (const auto& [pos, val] : acc)
                    for (std::size_t j = 0; j < n; ++j)
                        if (!mat(digits[p], j).is_zero())
                            next.emplace_back(pos * n + j, val * mat(digits[p], j));
                acc = std::move(next);
            }
            for (const auto& [pos, val] : acc)
                out[pos] += val;
        }
    }
    return out;
}

} // namespace

DualAction::DualAction(const KoszulDual& dual, const HAction& action) {
    const HopfAlgebra& h = action.hopf();
    const auto known = static_cast<unsigned>(dual.dims().size());
    matrices_.resize(known);
    for (unsigned m = 0; m < known; ++m) {
        const DualDegree& deg = dual.degree(m);
        for (std::size_t b = 0; b < h.dim(); ++b) {
            Matrix mat(deg.dim(), deg.dim());
            if (m == 0) {
                if (deg.dim() == 1)
                    mat(0, 0) = h.counit_coeffs()[b];
                matrices_[m].push_back(std::move(mat));
                continue;
            }
            const SweedlerTensor sw = sweedler(h, h.basis(b), m);
            for (const auto& r : deg.rel_span.basis())
                if (!deg.rel_span.contains(act_on_tensor(action, sw, r, m)))
                    throw Error(ErrorCode::RelationNotPreserved,
                                "relations of A^! in degree " + std::to_string(m) + " are not stable under " +
                                    h.label(b));
            for (std::size_t k = 0; k < deg.dim(); ++k) {
                const Vector img = act_on_tensor(action, sw, unit_vector(deg.ambient_dim, deg.rep_indices[k]), m);
                mat.set_column(k, dual.reduce(m, img));
            }
            matrices_[m].push_back(std::move(mat));
        }
    }
}

DualElement DualAction::act(const DualElement& x, const HopfElement& h) const {
    if (x.m >= matrices_.size())
        return x;
    Vector out(x.coords.size());
    for (std::size_t b = 0; b < h.coeffs.size(); ++b) {
        if (h.coeffs[b].is_zero())
            continue;
        const Vector img = matrices_[x.m][b].apply(x.coords);
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k].addmul(h.coeffs[b], img[k]);
    }
    return {x.m, out};
}

// ---------------------------------------------------------------- Koszul complex

bool KoszulCheckReport::exact() const {
    for (const auto& s : strands)
        if (!s.exact)
            return false;
    return true;
}

namespace {

struct KBasis {
    Monomial left;
    std::size_t alpha;
    Monomial right;
};

} // namespace

KoszulCheckReport koszul_complex_check(std::shared_ptr<const SkewPolyAlgebra> algebra, unsigned m_max,
                                       unsigned weight_max) {
    const KoszulDual dual(algebra, m_max);
    const SkewPolyAlgebra& a = *algebra;
    const std::size_t n = a.n();
    KoszulCheckReport report;
    report.dims_quotient = dual.dims();
    const auto degrees = static_cast<unsigned>(report.dims_quotient.size());

    std::vector<Subspace> dual_sub;
    for (unsigned m = 0; m < degrees; ++m) {
        dual_sub.push_back(dual.dual_subspace(m));
        report.dims_intersection.push_back(dual_sub.back().dim());
    }
    report.dims_agree = report.dims_quotient == report.dims_intersection;
    report.certified_m_max = degrees - 1;
    report.certified_weight_max = weight_max;

    // Highest m with (A^!_m)^* ≠ 0.
    unsigned mtop = 0;
    for (unsigned m = 0; m < degrees; ++m)
        if (dual_sub[m].dim() > 0)
            mtop = m;

    for (unsigned t = 0; t <= weight_max; ++t) {
        KoszulStrandReport strand;
        strand.weight = t;
        std::vector<std::vector<KBasis>> basis(mtop + 1);
        std::vector<std::map<std::tuple<Monomial, std::size_t, Monomial>, std::size_t>> index(mtop + 1);
        for (unsigned m = 0; m <= mtop && m <= t; ++m)
            for (unsigned p = 0; p + m <= t; ++p)
                for (const auto& l : a.monomials(p))
                    for (std::size_t k = 0; k < dual_sub[m].dim(); ++k)
                        for (const auto& r : a.monomials(t - m - p)) {
                            index[m][{l, k, r}] = basis[m].size();
                            basis[m].push_back({l, k, r});
                        }
        for (const auto& b : basis)
            strand.chain_dims.push_back(b.size());

        const auto target = a.monomials(t);
        std::map<Monomial, std::size_t> target_index;
        for (std::size_t i = 0; i < target.size(); ++i)
            target_index[target[i]] = i;

        // Augmentation K_0 → A_t.
        std::vector<Matrix> d(mtop + 2);
        d[0] = Matrix(target.size(), basis[0].size());
        for (std::size_t c = 0; c < basis[0].size(); ++c) {
            const auto& e = basis[0][c];
            const AlgebraElement prod =
                multiply(a, AlgebraElement(e.left, Scalar(1)), AlgebraElement(e.right, Scalar(1)));
            for (const auto& [mono, coef] : prod.terms())
                d[0](target_index.at(mono), c) += coef;
        }
        // d_K^m = d_l − (−1)^{m−1} d_r : K_m → K_{m−1}.
        for (unsigned m = 1; m <= mtop; ++m) {
            d[m] = Matrix(basis[m - 1].size(), basis[m].size());
            const std::size_t tail = [&] {
                std::size_t r = 1;
                for (unsigned i = 1; i < m; ++i)
                    r *= n;
                return r;
            }();
            const Scalar sign_r = (m - 1) % 2 == 0 ? Scalar(-1) : Scalar(1);
            for (std::size_t c = 0; c < basis[m].size(); ++c) {
                const auto& e = basis[m][c];
                const Vector& alpha = dual_sub[m].basis()[e.alpha];
                for (std::size_t j = 0; j < n; ++j) {
                    // Contract the first factor (d_l) and the last factor (d_r) at index j.
                    Vector first(tail), last(tail);
                    for (std::size_t s = 0; s < tail; ++s) {
                        first[s] = alpha[j * tail + s];
                        last[s] = alpha[s * n + j];
                    }
                    const AlgebraElement gen(a.generator(j), Scalar(1));
                    auto emit = [&](const Vector& contracted, const AlgebraElement& left,
                                    const AlgebraElement& right, const Scalar& sign) {
                        if (is_zero(contracted))
                            return;
                        const auto coords = express_in_span(contracted, dual_sub[m - 1]);
                        if (!coords)
                            throw Error(ErrorCode::InvalidArgument, "Koszul contraction left the dual subspace");
                        for (std::size_t k = 0; k < coords->size(); ++k) {
                            if ((*coords)[k].is_zero())
                                continue;
                            for (const auto& [lm, lc] : left.terms())
                                for (const auto& [rm, rc] : right.terms())
                                    d[m](index[m - 1].at({lm, k, rm}), c) += sign * (*coords)[k] * lc * rc;
                        }
                    };
                    emit(first, multiply(a, AlgebraElement(e.left, Scalar(1)), gen),
                         AlgebraElement(e.right, Scalar(1)), Scalar(1));
                    emit(last, AlgebraElement(e.left, Scalar(1)),
                         multiply(a, gen, AlgebraElement(e.right, Scalar(1))), sign_r);
                }
            }
        }
        for (unsigned m = 1; m <= mtop; ++m)
            if (!(d[m - 1] * d[m]).is_zero())
                report.d_squared_zero = false;

        // Homology: at A_t (cokernel of ε), then at each K_m.
        strand.homology.push_back(target.size() - rank(d[0]));
        for (unsigned m = 0; m <= mtop; ++m) {
            const std::size_t dim_k = basis[m].size();
            const std::size_t rk_out = rank(d[m]);
            const std::size_t rk_in = m + 1 <= mtop ? rank(d[m + 1]) : 0;
            strand.homology.push_back(dim_k - rk_out - rk_in);
        }
        for (auto h : strand.homology)
            if (h != 0)
                strand.exact = false;
        report.strands.push_back(std::move(strand));
    }
    return report;
}

} // namespace hhs
