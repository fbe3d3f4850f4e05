#include "hhsmash/qalgebra.hpp"

#include "hhsmash/error.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hhs {

unsigned monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

// ---------------------------------------------------------------- SkewPolyAlgebra

SkewPolyAlgebra::SkewPolyAlgebra(std::vector<std::string> labels, Matrix q) : labels_(std::move(labels)), q_(std::move(q)) {
    const std::size_t n = labels_.size();
    if (n == 0)
        throw Error(ErrorCode::ValidationError, "algebra needs at least one generator");
    if (q_.rows() != n || q_.cols() != n)
        throw Error(ErrorCode::ValidationError, "q table must be n x n");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (q_(i, j).is_zero())
                throw Error(ErrorCode::ValidationError,
                            "q must be nonzero (q_" + labels_[i] + labels_[j] + " = 0)");
}

SkewPolyAlgebra SkewPolyAlgebra::plane(const Scalar& q12, std::vector<std::string> labels) {
    Matrix q(2, 2);
    q(0, 0) = q(1, 1) = Scalar(1);
    q(0, 1) = q12;
    q(1, 0) = q12.is_zero() ? Scalar(0) : q12.inverse();
    return {std::move(labels), std::move(q)};
}

Scalar SkewPolyAlgebra::commutation_factor(const Monomial& a, const Monomial& b) const {
    Scalar c(1);
    for (std::size_t i = 0; i < n(); ++i) {
        if (b[i] == 0)
            continue;
        for (std::size_t j = i + 1; j < n(); ++j)
            if (a[j] != 0)
                c *= q_(i, j).pow(static_cast<long>(a[j]) * static_cast<long>(b[i]));
    }
    return c;
}

std::vector<Monomial> SkewPolyAlgebra::monomials(unsigned degree) const {
    std::vector<Monomial> out;
    Monomial cur(n(), 0);
    // Enumerate in ascending lexicographic order of the exponent vector.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n()) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, degree);
    return out;
}

Monomial SkewPolyAlgebra::generator(std::size_t i) const {
    Monomial m(n(), 0);
    m.at(i) = 1;
    return m;
}

std::string SkewPolyAlgebra::format_monomial(const Monomial& m) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < n(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << ' ';
        first = false;
        os << labels_[i];
        if (m[i] > 1)
            os << '^' << m[i];
    }
    return first ? "1" : os.str();
}

// ---------------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(Monomial m, Scalar c) { add(m, c); }

void AlgebraElement::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [m, c] : b.terms_)
        a.add(m, c);
    return a;
}

AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    for (const auto& [m, c] : b.terms_)
        a.add(m, -c);
    return a;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
    AlgebraElement out;
    for (const auto& [m, c] : a.terms_)
        out.add(m, s * c);
    return out;
}

AlgebraElement multiply(const SkewPolyAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [m1, c1] : x.terms())
        for (const auto& [m2, c2] : y.terms()) {
            Monomial m(a.n());
            for (std::size_t i = 0; i < a.n(); ++i)
                m[i] = m1[i] + m2[i];
            out.add(m, c1 * c2 * a.commutation_factor(m1, m2));
        }
    return out;
}

std::string format(const SkewPolyAlgebra& a, const AlgebraElement& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c << '*' << a.format_monomial(m);
    }
    return os.str();
}

Subspace relation_space(const SkewPolyAlgebra& a) {
    const std::size_t n = a.n();
    std::vector<Vector> rels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector r(n * n);
            r[j * n + i] = Scalar(1);
            r[i * n + j] = -a.q(i, j);
            rels.push_back(std::move(r));
        }
    return Subspace::span(rels, n * n);
}

// ---------------------------------------------------------------- HAction

HAction::HAction(std::shared_ptr<const SkewPolyAlgebra> algebra, std::shared_ptr<const HopfAlgebra> hopf,
                 std::vector<Matrix> gen_action)
    : algebra_(std::move(algebra)), hopf_(std::move(hopf)), gen_action_(std::move(gen_action)) {
    if (gen_action_.size() != hopf_->dim())
        throw Error(ErrorCode::ValidationError, "action needs one matrix per Hopf basis element");
    for (const auto& m : gen_action_)
        if (m.rows() != algebra_->n() || m.cols() != algebra_->n())
            throw Error(ErrorCode::ValidationError, "action matrices must be n x n");
}

Matrix HAction::matrix_of(const HopfElement& h) const {
    Matrix m(algebra_->n(), algebra_->n());
    for (std::size_t b = 0; b < hopf_->dim(); ++b)
        if (!h.coeffs[b].is_zero())
            m = m + h.coeffs[b] * gen_action_[b];
    return m;
}

const AlgebraElement& HAction::act_basis(std::size_t b, const Monomial& m) const {
    auto key = std::make_pair(b, m);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    AlgebraElement result;
    const SkewPolyAlgebra& alg = *algebra_;
    const std::size_t first = static_cast<std::size_t>(
        std::find_if(m.begin(), m.end(), [](std::uint32_t e) { return e != 0; }) - m.begin());
    if (first == m.size()) {
        result.add(m, hopf_->counit_coeffs()[b]);
    } else {
        Monomial rest = m;
        rest[first] -= 1;
        const Matrix& d = hopf_->comult(b);
        for (std::size_t j = 0; j < hopf_->dim(); ++j)
            for (std::size_t k = 0; k < hopf_->dim(); ++k) {
                if (d(j, k).is_zero())
                    continue;
                AlgebraElement head;
                for (std::size_t r = 0; r < alg.n(); ++r)
                    head.add(alg.generator(r), gen_action_[j](r, first));
                if (head.is_zero())
                    continue;
                const AlgebraElement& tail = act_basis(k, rest);
                result = result + d(j, k) * multiply(alg, head, tail);
            }
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = memo_.try_emplace(std::move(key), std::move(result));
    return it->second;
}

AlgebraElement HAction::act(const HopfElement& h, const AlgebraElement& x) const {
    AlgebraElement out;
    for (std::size_t b = 0; b < hopf_->dim(); ++b) {
        if (h.coeffs[b].is_zero())
            continue;
        for (const auto& [m, c] : x.terms())
            out = out + (h.coeffs[b] * c) * act_basis(b, m);
    }
    return out;
}

AxiomReport check_module_algebra(const HAction& action) {
    const HopfAlgebra& h = action.hopf();
    const SkewPolyAlgebra& a = action.algebra();
    const std::size_t n = a.n();
    AxiomReport report;

    {
        AxiomCheck c{"representation on V", true, ""};
        for (std::size_t x = 0; x < h.dim() && c.passed; ++x)
            for (std::size_t y = 0; y < h.dim() && c.passed; ++y) {
                const Matrix lhs = action.matrix(x) * action.matrix(y);
                const Matrix rhs = action.matrix_of(h.multiply(h.basis(x), h.basis(y)));
                if (!(lhs == rhs)) {
                    c.passed = false;
                    c.witness = h.label(x) + " acting after " + h.label(y) + " differs from (" + h.label(x) + "*" +
                                h.label(y) + ") acting";
                }
            }
        if (c.passed && !(action.matrix_of(h.unit()) == Matrix::identity(n))) {
            c.passed = false;
            c.witness = "the unit does not act as the identity on V";
        }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"relations preserved", true, ""};
        const Subspace rel = relation_space(a);
        for (std::size_t b = 0; b < h.dim() && c.passed; ++b) {
            // Diagonal action Σ b₍₁₎ ⊗ b₍₂₎ on V⊗V.
            Matrix diag(n * n, n * n);
            const Matrix& d = h.comult(b);
            for (std::size_t i = 0; i < h.dim(); ++i)
                for (std::size_t j = 0; j < h.dim(); ++j)
                    if (!d(i, j).is_zero())
                        diag = diag + d(i, j) * kronecker(action.matrix(i), action.matrix(j));
            for (const auto& r : rel.basis())
                if (!rel.contains(diag.apply(r))) {
                    c.passed = false;
                    c.witness = h.label(b) + " maps relation " + to_string(r) + " outside R";
                    break;
                }
        }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"h acts on 1 by the counit", true, ""};
        for (std::size_t b = 0; b < h.dim() && c.passed; ++b) {
            const AlgebraElement& img = action.act_basis(b, a.one());
            if (!(img == AlgebraElement(a.one(), h.counit_coeffs()[b]))) {
                c.passed = false;
                c.witness = h.label(b) + " acting on 1";
            }
        }
        report.checks.push_back(c);
    }
    return report;
}

// ---------------------------------------------------------------- smash product

SmashElement::SmashElement(Monomial m, std::uint32_t h, Scalar c) { add(SmashKey{std::move(m), h}, c); }

void SmashElement::add(const SmashKey& k, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SmashElement operator+(SmashElement a, const SmashElement& b) {
    for (const auto& [k, c] : b.terms_)
        a.add(k, c);
    return a;
}

SmashElement operator-(SmashElement a, const SmashElement& b) {
    for (const auto& [k, c] : b.terms_)
        a.add(k, -c);
    return a;
}

SmashElement operator*(const Scalar& s, const SmashElement& a) {
    SmashElement out;
    for (const auto& [k, c] : a.terms_)
        out.add(k, s * c);
    return out;
}

SmashProduct::SmashProduct(std::shared_ptr<const HAction> action) : action_(std::move(action)) {}

const std::vector<SmashProduct::Term>& SmashProduct::commute(std::uint32_t b, const Monomial& m) const {
    auto key = std::make_pair(b, m);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    const HopfAlgebra& h = hopf();
    SmashElement acc;
    const Matrix& d = h.comult(b);
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (d(i, j).is_zero())
                continue;
            for (const auto& [mono, c] : action_->act_basis(i, m).terms())
                acc.add(SmashKey{mono, static_cast<std::uint32_t>(j)}, d(i, j) * c);
        }
    std::vector<Term> terms;
    for (const auto& [k, c] : acc.terms())
        terms.push_back(Term{k.mono, k.h, c});
    std::unique_lock lock(mutex_);
    auto [it, inserted] = memo_.try_emplace(std::move(key), std::move(terms));
    return it->second;
}

void SmashProduct::multiply_into(const Monomial& a, std::uint32_t h, const Monomial& a2, std::uint32_t h2,
                                 const Scalar& c, SmashElement& out) const {
    const SkewPolyAlgebra& alg = algebra();
    const HopfAlgebra& hopf_alg = hopf();
    for (const auto& t : commute(h, a2)) {
        Monomial m(alg.n());
        for (std::size_t i = 0; i < alg.n(); ++i)
            m[i] = a[i] + t.mono[i];
        const Scalar coef = c * t.c * alg.commutation_factor(a, t.mono);
        const Vector& prod = hopf_alg.mult(t.h, h2);
        for (std::size_t k = 0; k < hopf_alg.dim(); ++k)
            if (!prod[k].is_zero())
                out.add(SmashKey{m, static_cast<std::uint32_t>(k)}, coef * prod[k]);
    }
}

SmashElement SmashProduct::multiply(const SmashElement& x, const SmashElement& y) const {
    SmashElement out;
    for (const auto& [k1, c1] : x.terms())
        for (const auto& [k2, c2] : y.terms())
            multiply_into(k1.mono, k1.h, k2.mono, k2.h, c1 * c2, out);
    return out;
}

SmashElement SmashProduct::from_algebra(const AlgebraElement& a) const {
    SmashElement out;
    const auto unit = hopf().unit_coeffs();
    for (const auto& [m, c] : a.terms())
        for (std::size_t k = 0; k < unit.size(); ++k)
            out.add(SmashKey{m, static_cast<std::uint32_t>(k)}, c * unit[k]);
    return out;
}

SmashElement SmashProduct::from_hopf(const HopfElement& h) const {
    SmashElement out;
    for (std::size_t k = 0; k < h.coeffs.size(); ++k)
        out.add(SmashKey{algebra().one(), static_cast<std::uint32_t>(k)}, h.coeffs[k]);
    return out;
}

SmashElement SmashProduct::one() const { return from_hopf(hopf().unit()); }

std::string SmashProduct::format(const SmashElement& x) const {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << c << '*' << algebra().format_monomial(k.mono) << '#' << hopf().label(k.h);
    }
    return os.str();
}

} // namespace hhs
