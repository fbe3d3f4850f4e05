#include "hhsmash/hopf.hpp"

#include "hhsmash/error.hpp"

#include <array>
#include <sstream>

namespace hhs {

HopfElement operator+(HopfElement a, const HopfElement& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        a.coeffs[i] += b.coeffs.at(i);
    return a;
}

HopfElement operator-(HopfElement a, const HopfElement& b) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        a.coeffs[i] -= b.coeffs.at(i);
    return a;
}

HopfElement operator*(const Scalar& s, HopfElement a) {
    for (auto& c : a.coeffs)
        c *= s;
    return a;
}

HopfAlgebra::HopfAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> mult, Vector unit,
                         std::vector<Matrix> comult, Vector counit, Matrix antipode)
    : labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)), comult_(std::move(comult)),
      counit_(std::move(counit)), antipode_(std::move(antipode)) {
    const std::size_t n = labels_.size();
    auto bad = [](const std::string& what) { throw Error(ErrorCode::ValidationError, "Hopf data: " + what); };
    if (n == 0)
        bad("dimension must be positive");
    if (mult_.size() != n)
        bad("multiplication table must have dim rows");
    for (const auto& row : mult_) {
        if (row.size() != n)
            bad("multiplication table must be dim x dim");
        for (const auto& v : row)
            if (v.size() != n)
                bad("multiplication entries must have length dim");
    }
    if (unit_.size() != n || counit_.size() != n)
        bad("unit and counit must have length dim");
    if (comult_.size() != n)
        bad("comultiplication must list one table per basis element");
    for (const auto& c : comult_)
        if (c.rows() != n || c.cols() != n)
            bad("comultiplication tables must be dim x dim");
    if (antipode_.rows() != n || antipode_.cols() != n)
        bad("antipode must be dim x dim");
}

std::size_t HopfAlgebra::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    throw Error(ErrorCode::InvalidArgument, "unknown Hopf basis label \"" + label + "\"");
}

HopfElement HopfAlgebra::basis(std::size_t i) const { return {unit_vector(dim(), i)}; }

HopfElement HopfAlgebra::multiply(const HopfElement& a, const HopfElement& b) const {
    HopfElement out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a.coeffs[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b.coeffs[j].is_zero())
                continue;
            const Scalar c = a.coeffs[i] * b.coeffs[j];
            const Vector& p = mult_[i][j];
            for (std::size_t k = 0; k < dim(); ++k)
                out.coeffs[k].addmul(c, p[k]);
        }
    }
    return out;
}

Scalar HopfAlgebra::counit(const HopfElement& h) const {
    Scalar s;
    for (std::size_t i = 0; i < dim(); ++i)
        s.addmul(h.coeffs[i], counit_[i]);
    return s;
}

HopfElement HopfAlgebra::antipode(const HopfElement& h) const { return {antipode_.apply(h.coeffs)}; }

Matrix HopfAlgebra::comultiply(const HopfElement& h) const {
    Matrix out(dim(), dim());
    for (std::size_t a = 0; a < dim(); ++a)
        if (!h.coeffs[a].is_zero())
            out = out + h.coeffs[a] * comult_[a];
    return out;
}

Matrix HopfAlgebra::left_mult_matrix(std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        m.set_column(j, mult_[a][j]);
    return m;
}

Matrix HopfAlgebra::right_mult_matrix(std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        m.set_column(j, mult_[j][a]);
    return m;
}

std::string HopfAlgebra::format(const HopfElement& h) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (h.coeffs[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << h.coeffs[i] << '*' << labels_[i];
    }
    return first ? "0" : os.str();
}

HopfElement HopfAlgebra::element(const std::vector<std::pair<Scalar, std::string>>& terms) const {
    HopfElement h = zero();
    for (const auto& [c, l] : terms)
        h.coeffs[index_of(l)] += c;
    return h;
}

// ---------------------------------------------------------------- axioms

bool AxiomReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

namespace {

// Product in H⊗H of coefficient matrices.
Matrix tensor_multiply(const HopfAlgebra& h, const Matrix& a, const Matrix& b) {
    const std::size_t n = h.dim();
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (b(k, l).is_zero())
                        continue;
                    const Scalar c = a(i, j) * b(k, l);
                    const Vector& left = h.mult(i, k);
                    const Vector& right = h.mult(j, l);
                    for (std::size_t r = 0; r < n; ++r) {
                        if (left[r].is_zero())
                            continue;
                        const Scalar cl = c * left[r];
                        for (std::size_t s = 0; s < n; ++s)
                            out(r, s).addmul(cl, right[s]);
                    }
                }
        }
    return out;
}

std::string bl(const HopfAlgebra& h, std::size_t i) { return h.label(i); }

} // namespace

AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    AxiomReport report;

    {
        AxiomCheck c{"associativity and unit", true, ""};
        for (std::size_t a = 0; a < n && c.passed; ++a)
            for (std::size_t b = 0; b < n && c.passed; ++b)
                for (std::size_t d = 0; d < n && c.passed; ++d) {
                    const HopfElement ab = h.multiply(h.basis(a), h.basis(b));
                    const HopfElement bd = h.multiply(h.basis(b), h.basis(d));
                    if (!(h.multiply(ab, h.basis(d)) == h.multiply(h.basis(a), bd))) {
                        c.passed = false;
                        c.witness = "(" + bl(h, a) + "*" + bl(h, b) + ")*" + bl(h, d) + " != " + bl(h, a) + "*(" +
                                    bl(h, b) + "*" + bl(h, d) + ")";
                    }
                }
        for (std::size_t a = 0; a < n && c.passed; ++a) {
            if (!(h.multiply(h.unit(), h.basis(a)) == h.basis(a)) || !(h.multiply(h.basis(a), h.unit()) == h.basis(a))) {
                c.passed = false;
                c.witness = "unit fails on " + bl(h, a);
            }
        }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"coassociativity and counit", true, ""};
        for (std::size_t a = 0; a < n && c.passed; ++a) {
            const Matrix& d = h.comult(a);
            // (Δ⊗I)Δ versus (I⊗Δ)Δ, compared as tensors indexed (i,j,k).
            std::map<std::array<std::size_t, 3>, Scalar> left, right;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (d(i, j).is_zero())
                        continue;
                    const Matrix& di = h.comult(i);
                    const Matrix& dj = h.comult(j);
                    for (std::size_t p = 0; p < n; ++p)
                        for (std::size_t r = 0; r < n; ++r) {
                            if (!di(p, r).is_zero())
                                left[{p, r, j}].addmul(d(i, j), di(p, r));
                            if (!dj(p, r).is_zero())
                                right[{i, p, r}].addmul(d(i, j), dj(p, r));
                        }
                }
            std::erase_if(left, [](const auto& kv) { return kv.second.is_zero(); });
            std::erase_if(right, [](const auto& kv) { return kv.second.is_zero(); });
            if (left != right) {
                c.passed = false;
                c.witness = "(D(x)I)D != (I(x)D)D on " + bl(h, a);
                break;
            }
            Vector lc(n), rc(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    lc[j].addmul(h.counit_coeffs()[i], d(i, j));
                    rc[i].addmul(d(i, j), h.counit_coeffs()[j]);
                }
            if (lc != h.basis(a).coeffs || rc != h.basis(a).coeffs) {
                c.passed = false;
                c.witness = "counit law fails on " + bl(h, a);
            }
        }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"comultiplication is an algebra map", true, ""};
        Matrix unit_tensor(n, n);
        const Vector& u = h.unit_coeffs();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                unit_tensor(i, j) = u[i] * u[j];
        if (!(h.comultiply(h.unit()) == unit_tensor)) {
            c.passed = false;
            c.witness = "D(1) != 1(x)1";
        }
        for (std::size_t a = 0; a < n && c.passed; ++a)
            for (std::size_t b = 0; b < n && c.passed; ++b) {
                const Matrix lhs = h.comultiply(h.multiply(h.basis(a), h.basis(b)));
                const Matrix rhs = tensor_multiply(h, h.comult(a), h.comult(b));
                if (!(lhs == rhs)) {
                    c.passed = false;
                    c.witness = "D(" + bl(h, a) + "*" + bl(h, b) + ") != D(" + bl(h, a) + ")D(" + bl(h, b) + ")";
                }
            }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"counit is an algebra map", true, ""};
        if (!h.counit(h.unit()).is_one()) {
            c.passed = false;
            c.witness = "e(1) != 1";
        }
        for (std::size_t a = 0; a < n && c.passed; ++a)
            for (std::size_t b = 0; b < n && c.passed; ++b)
                if (h.counit(h.multiply(h.basis(a), h.basis(b))) !=
                    h.counit(h.basis(a)) * h.counit(h.basis(b))) {
                    c.passed = false;
                    c.witness = "e(" + bl(h, a) + "*" + bl(h, b) + ") != e(" + bl(h, a) + ")e(" + bl(h, b) + ")";
                }
        report.checks.push_back(c);
    }

    {
        AxiomCheck c{"antipode", true, ""};
        for (std::size_t a = 0; a < n && c.passed; ++a) {
            const Matrix& d = h.comult(a);
            HopfElement left = h.zero(), right = h.zero();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (d(i, j).is_zero())
                        continue;
                    left = left + d(i, j) * h.multiply(h.antipode(h.basis(i)), h.basis(j));
                    right = right + d(i, j) * h.multiply(h.basis(i), h.antipode(h.basis(j)));
                }
            const HopfElement expected = h.counit(h.basis(a)) * h.unit();
            if (!(left == expected) || !(right == expected)) {
                c.passed = false;
                c.witness = "m(S(x)I)D != 1e on " + bl(h, a);
            }
        }
        report.checks.push_back(c);
    }
    return report;
}

// ---------------------------------------------------------------- built-ins

HopfAlgebra kac_paljutkin() {
    // Basis x^a y^b z^c in the fixed order 1,x,y,z,xy,xz,yz,xyz.
    const std::vector<std::string> labels{"1", "x", "y", "z", "xy", "xz", "yz", "xyz"};
    const std::array<std::array<int, 3>, 8> exps{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                                   {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}};
    auto index = [&](int a, int b, int c) -> std::size_t {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i][0] == a && exps[i][1] == b && exps[i][2] == c)
                return i;
        throw Error(ErrorCode::InvalidArgument, "bad Kac-Paljutkin monomial");
    };
    const std::size_t n = 8;
    std::vector<std::vector<Vector>> mult(n, std::vector<Vector>(n, Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto [a, b, c] = exps[i];
            auto [a2, b2, c2] = exps[j];
            // z x = y z and z y = x z.
            if (c == 1)
                std::swap(a2, b2);
            const int xa = a ^ a2;
            const int yb = b ^ b2;
            Vector& out = mult[i][j];
            if (c + c2 < 2) {
                out[index(xa, yb, c + c2)] += Scalar(1);
            } else {
                // z^2 = (1 + x + y - xy)/2
                const Scalar half(1, 2);
                out[index(xa, yb, 0)] += half;
                out[index(xa ^ 1, yb, 0)] += half;
                out[index(xa, yb ^ 1, 0)] += half;
                out[index(xa ^ 1, yb ^ 1, 0)] -= half;
            }
        }
    Vector unit = unit_vector(n, 0);
    Vector counit(n, Scalar(1));

    // Temporary algebra (coalgebra slots filled with placeholders) to multiply tensors.
    std::vector<Matrix> placeholder(n, Matrix(n, n));
    const HopfAlgebra algebra(labels, mult, unit, placeholder, counit, Matrix::identity(n));

    auto pure = [&](std::size_t i, std::size_t j) {
        Matrix m(n, n);
        m(i, j) = Scalar(1);
        return m;
    };
    const std::size_t ix = index(1, 0, 0), iy = index(0, 1, 0), iz = index(0, 0, 1);
    const Matrix dx = pure(ix, ix);
    const Matrix dy = pure(iy, iy);
    Matrix dz(n, n);
    {
        // Δ(z) = ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)
        const Scalar half(1, 2);
        dz(iz, iz) += half;
        dz(iz, index(1, 0, 1)) += half;
        dz(index(0, 1, 1), iz) += half;
        dz(index(0, 1, 1), index(1, 0, 1)) -= half;
    }
    std::vector<Matrix> comult;
    Matrix antipode(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [a, b, c] = exps[i];
        Matrix d = pure(0, 0);
        if (a)
            d = tensor_multiply(algebra, d, dx);
        if (b)
            d = tensor_multiply(algebra, d, dy);
        if (c)
            d = tensor_multiply(algebra, d, dz);
        comult.push_back(std::move(d));
        // S(x^a y^b z^c) = z^c y^b x^a with S(x)=x, S(y)=y, S(z)=z.
        HopfElement s = algebra.unit();
        if (c)
            s = algebra.multiply(s, algebra.basis(iz));
        if (b)
            s = algebra.multiply(s, algebra.basis(iy));
        if (a)
            s = algebra.multiply(s, algebra.basis(ix));
        antipode.set_column(i, s.coeffs);
    }
    return {labels, std::move(mult), std::move(unit), std::move(comult), std::move(counit), std::move(antipode)};
}

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
    const std::size_t n = table.size();
    auto fail = [](const std::string& why) { throw Error(ErrorCode::NotAGroup, why); };
    if (n == 0)
        fail("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n)
            fail("multiplication table must be square");
        for (auto e : row)
            if (e >= n)
                fail("table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    fail("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g)
            ok = table[e][g] == g && table[g][e] == g;
        if (ok)
            identity = e;
    }
    if (identity == n)
        fail("no identity element");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] == identity && table[h][g] == identity)
                inverse[g] = h;
        if (inverse[g] == n)
            fail("element " + std::to_string(g) + " has no inverse");
    }
    if (labels.empty()) {
        for (std::size_t g = 0; g < n; ++g)
            labels.push_back(g == identity ? std::string("1") : "g" + std::to_string(g));
    } else if (labels.size() != n) {
        throw Error(ErrorCode::InvalidArgument, "group label count does not match table");
    }
    std::vector<std::vector<Vector>> mult(n, std::vector<Vector>(n));
    std::vector<Matrix> comult;
    Matrix antipode(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            mult[a][b] = unit_vector(n, table[a][b]);
        Matrix d(n, n);
        d(a, a) = Scalar(1);
        comult.push_back(std::move(d));
        antipode(inverse[a], a) = Scalar(1);
    }
    return {std::move(labels), std::move(mult), unit_vector(n, identity), std::move(comult), Vector(n, Scalar(1)),
            std::move(antipode)};
}

// ---------------------------------------------------------------- Sweedler / integral

SweedlerTensor sweedler(const HopfAlgebra& h, const HopfElement& x, unsigned legs) {
    if (legs == 0)
        throw Error(ErrorCode::InvalidArgument, "sweedler needs at least one leg");
    SweedlerTensor t;
    t.legs = 1;
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!x.coeffs.at(i).is_zero())
            t.terms[{static_cast<std::uint32_t>(i)}] = x.coeffs[i];
    while (t.legs < legs) {
        SweedlerTensor next;
        next.legs = t.legs + 1;
        for (const auto& [key, c] : t.terms) {
            const Matrix& d = h.comult(key.back());
            for (std::size_t i = 0; i < h.dim(); ++i)
                for (std::size_t j = 0; j < h.dim(); ++j) {
                    if (d(i, j).is_zero())
                        continue;
                    auto k = key;
                    k.back() = static_cast<std::uint32_t>(i);
                    k.push_back(static_cast<std::uint32_t>(j));
                    next.terms[k].addmul(c, d(i, j));
                }
        }
        std::erase_if(next.terms, [](const auto& kv) { return kv.second.is_zero(); });
        t = std::move(next);
    }
    return t;
}

SweedlerTensor contract_counit(const HopfAlgebra& h, const SweedlerTensor& t, unsigned leg) {
    if (leg >= t.legs || t.legs < 2)
        throw Error(ErrorCode::InvalidArgument, "contract_counit: bad leg");
    SweedlerTensor out;
    out.legs = t.legs - 1;
    for (const auto& [key, c] : t.terms) {
        const Scalar& e = h.counit_coeffs()[key[leg]];
        if (e.is_zero())
            continue;
        auto k = key;
        k.erase(k.begin() + leg);
        out.terms[k].addmul(c, e);
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

HopfElement integral(const HopfAlgebra& h) {
    const std::size_t n = h.dim();
    // Stack (L_a − ε(a)I) for all basis a.
    Matrix system(n * n, n);
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix l = h.left_mult_matrix(a) - h.counit_coeffs()[a] * Matrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                system(a * n + r, c) = l(r, c);
    }
    const Subspace ker = kernel_basis(system);
    if (ker.dim() == 0)
        throw Error(ErrorCode::NoIntegral, "the space of left integrals is trivial");
    HopfElement lambda;
    bool found = false;
    for (const auto& v : ker.basis()) {
        HopfElement cand{v};
        const Scalar e = h.counit(cand);
        if (!e.is_zero()) {
            lambda = e.inverse() * cand;
            found = true;
            break;
        }
    }
    if (!found)
        throw Error(ErrorCode::NotSemisimple, "every integral is annihilated by the counit");
    for (std::size_t a = 0; a < n; ++a)
        if (!(h.multiply(lambda, h.basis(a)) == h.counit(h.basis(a)) * lambda))
            throw Error(ErrorCode::IntegralNotTwoSided, "left integral is not a right integral (at " + h.label(a) + ")");
    return lambda;
}

} // namespace hhs
