#include "hhsmash/cochain.hpp"

#include "hhsmash/error.hpp"

#include <sstream>

namespace hhs {

void Cochain::add(const CochainKey& k, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Cochain operator+(Cochain a, const Cochain& b) {
    if (a.is_zero())
        a.m_ = b.m_;
    for (const auto& [k, c] : b.terms_)
        a.add(k, c);
    return a;
}

Cochain operator-(Cochain a, const Cochain& b) {
    if (a.is_zero())
        a.m_ = b.m_;
    for (const auto& [k, c] : b.terms_)
        a.add(k, -c);
    return a;
}

Cochain operator*(const Scalar& s, const Cochain& a) {
    Cochain out(a.m_);
    if (s.is_zero())
        return out;
    for (const auto& [k, c] : a.terms_)
        out.terms_.emplace(k, s * c);
    return out;
}

// ---------------------------------------------------------------- DGContext

namespace {

unsigned find_top(const KoszulDual& dual) {
    if (!dual.top_degree())
        throw Error(ErrorCode::DegreeOverflow, "Koszul dual has no top degree in the computed range");
    return *dual.top_degree();
}

} // namespace

DGContext::DGContext(std::shared_ptr<const HAction> action)
    : action_(std::move(action)),
      smash_(action_),
      dual_(action_->algebra_ptr(), static_cast<unsigned>(action_->algebra().n() + 1)),
      dual_action_(dual_, *action_),
      integral_(hhs::integral(action_->hopf())),
      top_(find_top(dual_)) {
    const HopfAlgebra& h = hopf();
    for (std::size_t b = 0; b < h.dim(); ++b) {
        sweedler3_.push_back(sweedler(h, h.basis(b), 3));
        antipodes_.push_back(h.antipode(h.basis(b)));
    }
}

Cochain DGContext::make(const DualElement& xi, const SmashElement& b) const {
    Cochain out(xi.m);
    for (std::size_t k = 0; k < xi.coords.size(); ++k) {
        if (xi.coords[k].is_zero())
            continue;
        for (const auto& [key, c] : b.terms())
            out.add({static_cast<std::uint32_t>(k), key.mono, key.h}, xi.coords[k] * c);
    }
    return out;
}

Cochain DGContext::unit() const { return make(dual_.one(), smash_.one()); }

Cochain DGContext::differential(const Cochain& c) const {
    const unsigned m = c.m();
    Cochain out(m + 1);
    if (m + 1 >= top_)
        return out;
    const SkewPolyAlgebra& a = algebra();
    const Vector& unit = hopf().unit_coeffs();
    const Scalar right_sign = m % 2 == 0 ? Scalar(-1) : Scalar(1);
    for (const auto& [key, coef] : c.terms()) {
        for (std::size_t i = 0; i < a.n(); ++i) {
            const Monomial gen = a.generator(i);
            SmashElement left, right;
            for (std::size_t u = 0; u < unit.size(); ++u) {
                if (unit[u].is_zero())
                    continue;
                const auto uu = static_cast<std::uint32_t>(u);
                smash_.multiply_into(gen, uu, key.mono, key.h, coef * unit[u], left);
                smash_.multiply_into(key.mono, key.h, gen, uu, coef * unit[u], right);
            }
            const Vector& pl = dual_.basis_product(1, i, m, key.xi);
            const Vector& pr = dual_.basis_product(m, key.xi, 1, i);
            for (std::size_t k = 0; k < pl.size(); ++k) {
                if (!pl[k].is_zero())
                    for (const auto& [sk, sc] : left.terms())
                        out.add({static_cast<std::uint32_t>(k), sk.mono, sk.h}, pl[k] * sc);
                if (!pr[k].is_zero())
                    for (const auto& [sk, sc] : right.terms())
                        out.add({static_cast<std::uint32_t>(k), sk.mono, sk.h}, right_sign * pr[k] * sc);
            }
        }
    }
    return out;
}

Cochain DGContext::product(const Cochain& x, const Cochain& y) const {
    const unsigned m = x.m() + y.m();
    Cochain out(m);
    if (dual_.dim(m) == 0)
        return out;
    for (const auto& [k1, c1] : x.terms())
        for (const auto& [k2, c2] : y.terms()) {
            const Vector& p = dual_.basis_product(x.m(), k1.xi, y.m(), k2.xi);
            SmashElement s;
            smash_.multiply_into(k1.mono, k1.h, k2.mono, k2.h, c1 * c2, s);
            for (std::size_t k = 0; k < p.size(); ++k)
                if (!p[k].is_zero())
                    for (const auto& [sk, sc] : s.terms())
                        out.add({static_cast<std::uint32_t>(k), sk.mono, sk.h}, p[k] * sc);
        }
    return out;
}

void DGContext::h_act_basis(const CochainKey& key, unsigned m, std::size_t b, const Scalar& c, Cochain& out) const {
    const HopfAlgebra& h = hopf();
    const Monomial one = algebra().one();
    for (const auto& [legs, coef] : sweedler3_[b].terms) {
        const Matrix& act = dual_action_.matrix(legs[1], m);
        // S(b₍₁₎)·(mono#h)
        SmashElement left;
        const Vector& s = antipodes_[legs[0]].coeffs;
        for (std::size_t g = 0; g < s.size(); ++g)
            if (!s[g].is_zero())
                smash_.multiply_into(one, static_cast<std::uint32_t>(g), key.mono, key.h, c * coef * s[g], left);
        // ·(1#b₍₃₎)
        SmashElement full;
        for (const auto& [sk, sc] : left.terms()) {
            const Vector& prod = h.mult(sk.h, legs[2]);
            for (std::size_t g = 0; g < prod.size(); ++g)
                if (!prod[g].is_zero())
                    full.add({sk.mono, static_cast<std::uint32_t>(g)}, sc * prod[g]);
        }
        for (std::size_t k = 0; k < act.rows(); ++k) {
            const Scalar& a = act(k, key.xi);
            if (a.is_zero())
                continue;
            for (const auto& [sk, sc] : full.terms())
                out.add({static_cast<std::uint32_t>(k), sk.mono, sk.h}, a * sc);
        }
    }
}

Cochain DGContext::h_act(const Cochain& c, const HopfElement& h) const {
    Cochain out(c.m());
    if (dual_.dim(c.m()) == 0)
        return out;
    for (std::size_t b = 0; b < h.coeffs.size(); ++b) {
        if (h.coeffs[b].is_zero())
            continue;
        for (const auto& [key, coef] : c.terms())
            h_act_basis(key, c.m(), b, h.coeffs[b] * coef, out);
    }
    return out;
}

std::optional<int> DGContext::weight_of(const Cochain& c) const {
    std::optional<int> w;
    for (const auto& [key, coef] : c.terms()) {
        const int here = static_cast<int>(monomial_degree(key.mono)) - static_cast<int>(c.m());
        if (w && *w != here)
            return std::nullopt;
        w = here;
    }
    return w;
}

std::string DGContext::format(const Cochain& c) const {
    if (c.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coef] : c.terms()) {
        const bool negative = coef.sign() < 0;
        const Scalar mag = negative ? -coef : coef;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (!mag.is_one())
            os << mag << '*';
        os << dual_.basis_label(c.m(), key.xi) << "(x)" << algebra().format_monomial(key.mono) << '#'
           << hopf().label(key.h);
    }
    return os.str();
}

std::shared_ptr<const WeightStrand> DGContext::strand(int w) const {
    {
        std::lock_guard lock(strand_mutex_);
        if (auto it = strands_.find(w); it != strands_.end())
            return it->second;
    }
    auto built = std::make_shared<const WeightStrand>(*this, w);
    std::lock_guard lock(strand_mutex_);
    auto [it, inserted] = strands_.try_emplace(w, std::move(built));
    return it->second;
}

// ---------------------------------------------------------------- WeightStrand

WeightStrand::WeightStrand(const DGContext& ctx, int w) : ctx_(&ctx), w_(w) {
    const unsigned top = ctx.top_degree();
    basis_.resize(top);
    index_.resize(top);
    for (unsigned m = 0; m < top; ++m) {
        const int d = static_cast<int>(m) + w;
        if (d < 0)
            continue;
        const auto monos = ctx.algebra().monomials(static_cast<unsigned>(d));
        for (std::size_t k = 0; k < ctx.dual().dim(m); ++k)
            for (const auto& mono : monos)
                for (std::size_t h = 0; h < ctx.hopf().dim(); ++h) {
                    CochainKey key{static_cast<std::uint32_t>(k), mono, static_cast<std::uint32_t>(h)};
                    index_[m].emplace(key, basis_[m].size());
                    basis_[m].push_back(std::move(key));
                }
    }
    for (unsigned m = 0; m < top; ++m) {
        Matrix dm(dim(m + 1), dim(m));
        for (std::size_t c = 0; c < dim(m); ++c) {
            Cochain e(m);
            e.add(basis_[m][c], Scalar(1));
            const Cochain img = ctx.differential(e);
            if (dim(m + 1) > 0)
                dm.set_column(c, coords(img));
        }
        d_.push_back(std::move(dm));
    }
}

Vector WeightStrand::coords(const Cochain& c) const {
    Vector out(dim(c.m()));
    for (const auto& [key, coef] : c.terms()) {
        if (c.m() >= index_.size())
            throw Error(ErrorCode::InvalidArgument, "cochain degree outside the strand");
        auto it = index_[c.m()].find(key);
        if (it == index_[c.m()].end())
            throw Error(ErrorCode::InvalidArgument,
                        "cochain term not in weight strand " + std::to_string(w_) + ": " + ctx_->format(c));
        out[it->second] = coef;
    }
    return out;
}

Cochain WeightStrand::cochain(unsigned m, const Vector& coords) const {
    Cochain out(m);
    for (std::size_t i = 0; i < coords.size(); ++i)
        out.add(basis_.at(m)[i], coords[i]);
    return out;
}

Matrix WeightStrand::action_matrix(unsigned m, const HopfElement& h) const {
    Matrix out(dim(m), dim(m));
    for (std::size_t c = 0; c < dim(m); ++c) {
        Cochain e(m);
        e.add(basis_[m][c], Scalar(1));
        out.set_column(c, coords(ctx_->h_act(e, h)));
    }
    return out;
}

} // namespace hhs
