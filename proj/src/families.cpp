#include "hhsmash/families.hpp"

#include "hhsmash/error.hpp"

#include <atomic>
#include <thread>

namespace hhs {

unsigned FamilyLabel::degree() const {
    switch (family) {
    case Family::Eps:
        return 0;
    case Family::Eta:
        return 1;
    default:
        return 2;
    }
}

int FamilyLabel::weight() const {
    if (family == Family::OmPrime || family == Family::OmDouble)
        return -2;
    return 2 * static_cast<int>(i + j);
}

std::string FamilyLabel::text() const {
    const std::string idx = "^{" + std::to_string(i) + "," + std::to_string(j) + "}";
    switch (family) {
    case Family::Eps:
        return "eps" + std::to_string(r) + idx;
    case Family::Eta:
        return "eta" + std::to_string(r) + idx;
    case Family::Om:
        return "om" + std::to_string(r) + idx;
    case Family::OmPrime:
        return "om'" + std::to_string(r);
    case Family::OmDouble:
        return "om''" + std::to_string(r);
    }
    return {};
}

namespace {

// +1 symmetric in (i, j), −1 antisymmetric, 0 no identification.
int index_symmetry(const FamilyLabel& l) {
    switch (l.family) {
    case Family::Eps:
        return l.r == 4 ? -1 : 1;
    case Family::Om:
        return l.r == 4 ? 1 : -1;
    default:
        return 0;
    }
}

// Product of the H-factors (1+xy)/2, (1−xy)/2, (x+y)/2, (x−y)/2 as a family
// index, or 0 when it vanishes.
int k_product(int r, int c) {
    static const int table[4][4] = {{1, 0, 3, 0}, {0, 2, 0, 4}, {3, 0, 1, 0}, {0, 4, 0, 2}};
    return table[r - 1][c - 1];
}

void accumulate(LabelCombination& out, const std::string& label, const Scalar& c) {
    auto [it, inserted] = out.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            out.erase(it);
    }
}

} // namespace

void add_normalized(LabelCombination& out, const FamilyLabel& label, const Scalar& c) {
    if (c.is_zero())
        return;
    FamilyLabel l = label;
    Scalar coef = c;
    const int sym = index_symmetry(l);
    if (sym != 0 && l.i > l.j) {
        std::swap(l.i, l.j);
        if (sym < 0)
            coef = -coef;
    }
    if (sym < 0 && l.i == l.j)
        return;
    accumulate(out, l.text(), coef);
}

LabelCombination expected_product(const FamilyLabel& left, const FamilyLabel& right) {
    LabelCombination out;
    const auto& [i, j] = std::pair{left.i, left.j};
    const auto& [s, t] = std::pair{right.i, right.j};
    if (right.family == Family::Eps) {
        const int f = left.family == Family::OmDouble && (right.r == 2 || right.r == 4) ? 0 : k_product(left.r, right.r);
        if (f == 0)
            return out;
        switch (left.family) {
        case Family::Eps:
        case Family::Eta:
        case Family::Om: {
            const Scalar second = left.family == Family::Om && right.r == 4 ? Scalar(-1) : Scalar(1);
            add_normalized(out, {left.family, f, i + s, j + t}, Scalar(1));
            add_normalized(out, {left.family, f, i + t, j + s}, second);
            return out;
        }
        case Family::OmPrime:
        case Family::OmDouble:
            if (s + t != 0 || f == 4)
                return out;
            add_normalized(out, {left.family, f, 0, 0}, Scalar(2));
            return out;
        }
    }
    if (left.family == Family::Eta && right.family == Family::Eta) {
        const int f = k_product(left.r, right.r);
        if (f != 0)
            add_normalized(out, {Family::Om, f, i + t, j + s}, right.r == 4 ? Scalar(-1) : Scalar(1));
        return out;
    }
    throw Error(ErrorCode::InvalidArgument, "no table for " + left.text() + " * " + right.text());
}

// ---------------------------------------------------------------- KPFamilies

KPFamilies::KPFamilies(const DGContext& ctx, Scalar q) : ctx_(&ctx), q_(std::move(q)) {
    const HopfAlgebra& h = ctx.hopf();
    const Scalar half(1, 2);
    k_ = {
        h.element({{half, "1"}, {half, "xy"}}),  h.element({{half, "1"}, {-half, "xy"}}),
        h.element({{half, "x"}, {half, "y"}}),   h.element({{half, "x"}, {-half, "y"}}),
        h.element({{half, "z"}, {half, "xyz"}}), h.element({{half, "xz"}, {half, "yz"}}),
    };
}

Cochain KPFamilies::element(const FamilyLabel& label) const {
    const KoszulDual& dual = ctx_->dual();
    const DualElement one = dual.one();
    const DualElement us = dual.generator(0);
    const DualElement vs = dual.generator(1);
    const DualElement uv = dual.multiply(us, vs);
    const HopfElement& k = [&]() -> const HopfElement& {
        if (label.family == Family::OmDouble)
            return k_.at(label.r == 1 ? 4 : 5);
        return k_.at(static_cast<std::size_t>(label.r - 1));
    }();
    auto times_k = [&](const AlgebraElement& a) {
        SmashElement out;
        for (const auto& [mono, c] : a.terms())
            for (std::size_t g = 0; g < k.coeffs.size(); ++g)
                if (!k.coeffs[g].is_zero())
                    out.add({mono, static_cast<std::uint32_t>(g)}, c * k.coeffs[g]);
        return out;
    };
    const long i = label.i, j = label.j;
    auto mono = [](long a, long b) { return Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}; };
    const Scalar qi = q_.pow(2 * i), qj = q_.pow(2 * j);
    switch (label.family) {
    case Family::Eps: {
        const Scalar sign = label.r == 4 ? Scalar(-1) : Scalar(1);
        AlgebraElement a(mono(2 * i, 2 * j), qi);
        a.add(mono(2 * j, 2 * i), sign * qj);
        return ctx_->make(one, times_k(a));
    }
    case Family::Eta: {
        const Scalar sign = label.r == 4 ? Scalar(-1) : Scalar(1);
        return ctx_->make(us, times_k(AlgebraElement(mono(2 * i + 1, 2 * j), qi))) +
               ctx_->make(vs, times_k(AlgebraElement(mono(2 * j, 2 * i + 1), sign * qj)));
    }
    case Family::Om: {
        const Scalar sign = label.r == 4 ? Scalar(1) : Scalar(-1);
        AlgebraElement a(mono(2 * i + 1, 2 * j + 1), qi);
        a.add(mono(2 * j + 1, 2 * i + 1), sign * qj);
        return ctx_->make(uv, times_k(a));
    }
    case Family::OmPrime:
    case Family::OmDouble:
        return ctx_->make(uv, times_k(AlgebraElement(mono(0, 0), Scalar(1))));
    }
    return Cochain(label.degree());
}

std::vector<FamilyLabel> KPFamilies::basis_labels(unsigned m, int w) const {
    std::vector<FamilyLabel> out;
    if (w == -2 && m == 2) {
        for (int r = 1; r <= 3; ++r)
            out.push_back({Family::OmPrime, r, 0, 0});
        out.push_back({Family::OmDouble, 1, 0, 0});
        out.push_back({Family::OmDouble, 3, 0, 0});
        return out;
    }
    if (w < 0 || w % 2 != 0 || m > 2)
        return out;
    const auto k = static_cast<unsigned>(w / 2);
    const Family fam = m == 0 ? Family::Eps : (m == 1 ? Family::Eta : Family::Om);
    for (int r = 1; r <= 4; ++r)
        for (unsigned i = 0; i <= k; ++i) {
            const unsigned j = k - i;
            FamilyLabel l{fam, r, i, j};
            const int sym = index_symmetry(l);
            if (sym > 0 && i > j)
                continue;
            if (sym < 0 && i >= j)
                continue;
            out.push_back(l);
        }
    return out;
}

const ClassFrame* KPFamilies::frame(unsigned m, int w) const {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(m, w);
    if (auto it = frames_.find(key); it != frames_.end())
        return it->second.get();
    std::unique_ptr<ClassFrame> built;
    const auto labels = basis_labels(m, w);
    if (!labels.empty()) {
        std::vector<std::pair<std::string, Cochain>> members;
        for (const auto& l : labels)
            members.emplace_back(l.text(), element(l));
        built = std::make_unique<ClassFrame>(*ctx_, m, w, std::move(members));
    }
    return frames_.emplace(key, std::move(built)).first->second.get();
}

void KPFamilies::verify_basis(unsigned m, int w) const {
    const std::string where = "m=" + std::to_string(m) + ", w=" + std::to_string(w);
    const CohomologyBasis canonical = invariants(*ctx_, cohomology_at(*ctx_, w, m), ctx_->integral());
    const ClassFrame* f = frame(m, w);
    const std::size_t listed = f == nullptr ? 0 : f->size();
    if (listed != canonical.dim())
        throw Error(ErrorCode::BasisMismatch, where + ": " + std::to_string(listed) + " listed classes, invariant dim " +
                                                  std::to_string(canonical.dim()));
    if (f == nullptr)
        return;
    for (const auto& [label, c] : f->members())
        if (!class_equal(*ctx_, ctx_->integral_project(c), c))
            throw Error(ErrorCode::BasisMismatch, where + ": " + label + " is not invariant");
    for (const auto& rep : canonical.cochains())
        if (!f->coordinates(rep))
            throw Error(ErrorCode::BasisMismatch, where + ": invariant class outside the listed span");
}

// ---------------------------------------------------------------- tables

std::size_t TablesResult::mismatches() const {
    std::size_t n = 0;
    for (const auto& c : cells)
        if (!c.matches())
            ++n;
    return n;
}

TablesResult compute_tables(const KPFamilies& families, unsigned index_max, unsigned threads) {
    TablesResult result;
    result.index_max = index_max;
    const unsigned n = index_max;

    // Basis members only: the table laws are stated for i ≤ j or i < j as listed.
    auto family_range = [&](Family f) {
        std::vector<FamilyLabel> out;
        for (int r = 1; r <= 4; ++r)
            for (unsigned i = 0; i <= n; ++i)
                for (unsigned j = 0; j <= n; ++j) {
                    const FamilyLabel l{f, r, i, j};
                    const int sym = index_symmetry(l);
                    if ((sym > 0 && i > j) || (sym < 0 && i >= j))
                        continue;
                    out.push_back(l);
                }
        return out;
    };
    const auto eps = family_range(Family::Eps);
    const auto eta = family_range(Family::Eta);
    auto om = family_range(Family::Om);
    for (int r = 1; r <= 3; ++r)
        om.push_back({Family::OmPrime, r, 0, 0});
    om.push_back({Family::OmDouble, 1, 0, 0});
    om.push_back({Family::OmDouble, 3, 0, 0});

    const std::vector<std::tuple<int, const std::vector<FamilyLabel>*, const std::vector<FamilyLabel>*>> tables = {
        {1, &eps, &eps}, {2, &eta, &eps}, {3, &om, &eps}, {4, &eta, &eta}};
    for (const auto& [t, rows, cols] : tables)
        for (const auto& l : *rows)
            for (const auto& r : *cols)
                result.cells.push_back({t, l, r, expected_product(l, r), {}});

    // Every bidegree a factor or a product can land in.
    const int wtop = 8 * static_cast<int>(n);
    std::vector<std::pair<unsigned, int>> bidegrees{{2, -2}};
    for (unsigned m = 0; m <= 2; ++m)
        for (int w = 0; w <= wtop; w += 2)
            bidegrees.emplace_back(m, w);
    for (const auto& [m, w] : bidegrees) {
        families.verify_basis(m, w);
        result.verified_bases.push_back("m=" + std::to_string(m) + ", w=" + std::to_string(w));
    }

    const DGContext& ctx = families.context();
    const FrameLookup lookup = [&](unsigned m, int w) { return families.frame(m, w); };
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t k = next++; k < result.cells.size(); k = next++) {
                TableCell& cell = result.cells[k];
                const CupTable t = cup_structure(ctx, {{cell.left.text(), families.element(cell.left)}},
                                                 {{cell.right.text(), families.element(cell.right)}}, lookup);
                cell.computed = t.entries.front().value;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = result.cells.size();
        }
    };
    const unsigned count = std::max(1U, threads);
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < count; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return result;
}

std::vector<IdentityCheck> check_class_identities(const KPFamilies& families, unsigned index_max) {
    const DGContext& ctx = families.context();
    const HopfAlgebra& h = ctx.hopf();
    const KoszulDual& dual = ctx.dual();
    const DualElement us = dual.generator(0);
    const DualElement vs = dual.generator(1);
    const DualElement uv = dual.multiply(us, vs);
    const Scalar& q = families.q();
    auto term = [&](const DualElement& xi, long a, long b, const Scalar& c, std::size_t g) {
        return ctx.make(xi, SmashElement({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)},
                                         static_cast<std::uint32_t>(g), c));
    };
    std::vector<IdentityCheck> out;
    for (const std::string hl : {"z", "xz", "yz", "xyz"}) {
        const std::size_t g = h.index_of(hl);
        for (long i = 0; i <= static_cast<long>(index_max); ++i)
            for (long j = 0; j <= static_cast<long>(index_max); ++j) {
                const Cochain x1 = term(us, 2 * i, 2 * j, Scalar(1), g) - term(vs, 2 * i, 2 * j, q, g);
                const Cochain y1 =
                    term(us, 0, 2 * i + 2 * j, q.pow(-2 * i), g) - term(vs, 0, 2 * i + 2 * j, q.pow(1 - 2 * i), g);
                out.push_back({"first i=" + std::to_string(i) + " j=" + std::to_string(j) + " h=" + hl,
                               class_equal(ctx, x1, y1)});
                const Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
                const Cochain x2 = term(uv, i, j, Scalar(1), g);
                const Cochain y2 = term(uv, 0, i + j, sign * q.pow(-i), g);
                out.push_back({"second i=" + std::to_string(i) + " j=" + std::to_string(j) + " h=" + hl,
                               class_equal(ctx, x2, y2)});
            }
    }
    return out;
}

} // namespace hhs
