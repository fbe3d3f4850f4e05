#include "hhsmash/error.hpp"
#include "hhsmash/linalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hhs;
using hhs::test::random_matrix;

namespace {

// Gaussian elimination on the augmented system [m | v], written independently
// of the library's reduction routines.
bool solvable(const Matrix& m, const Vector& v) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<Vector> a(rows, Vector(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m(r, c);
        a[r][cols] = v[r];
    }
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[lead]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a[r][c].is_zero())
                continue;
            const Scalar f = a[r][c] / a[lead][c];
            for (std::size_t k = c; k <= cols; ++k)
                a[r][k] -= f * a[lead][k];
        }
        ++lead;
    }
    for (std::size_t r = lead; r < rows; ++r)
        if (!a[r][cols].is_zero())
            return false;
    return true;
}

} // namespace

TEST_CASE("scalars stay in lowest terms") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(3, -6).to_string() == "-1/2");
    CHECK(Scalar(0, 5).to_string() == "0");
    CHECK(Scalar::parse(" -3/2 ") == Scalar(-3, 2));
    CHECK(Scalar::parse("+7") == Scalar(7));
    CHECK_THROWS_AS((void)Scalar::parse("1/0"), Error);
    CHECK_THROWS_AS((void)Scalar::parse("abc"), Error);
    CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
    CHECK(Scalar(-2, 3).inverse() == Scalar(-3, 2));
}

TEST_CASE("rref of the identity and a rank-one matrix") {
    const auto id = rref(Matrix::identity(3));
    CHECK(id.reduced == Matrix::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    const auto r1 = rref(Matrix::from_ints({{2, 4}, {1, 2}}));
    CHECK(r1.reduced == Matrix::from_ints({{1, 2}, {0, 0}}));
    CHECK(r1.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref rows span the original row space") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 6, 6, trial % 3);
        const auto [red, piv] = rref(m);
        CHECK(rank(m) == piv.size());
        for (std::size_t k = 1; k < piv.size(); ++k)
            CHECK(piv[k - 1] < piv[k]);
        // Every original row is a combination of the reduced rows, read off at the pivots.
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Vector rebuilt(m.cols());
            for (std::size_t k = 0; k < piv.size(); ++k)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    rebuilt[c] += m(r, piv[k]) * red(k, c);
            CHECK(rebuilt == m.row_vector(r));
        }
        // And conversely each reduced row lies in the original row space.
        for (std::size_t k = 0; k < piv.size(); ++k)
            CHECK(solvable(m.transpose(), red.row_vector(k)));
    }
}

TEST_CASE("kernel and image") {
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
    CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
    CHECK(image_basis(Matrix(3, 2)).dim() == 0);
    CHECK(image_basis(Matrix::identity(3)) == Subspace::full(3));

    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, 4 + trial % 3, 5 + trial % 4, 2);
        const Subspace k = kernel_basis(m);
        const Subspace im = image_basis(m);
        CHECK(k.dim() + im.dim() == m.cols());
        for (const auto& v : k.basis())
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("express_in_span") {
    const Subspace s = Subspace::span({{Scalar(1), Scalar(0), Scalar(2)}, {Scalar(0), Scalar(1), Scalar(-1)}}, 3);
    const auto& b = s.basis();
    CHECK(*express_in_span(b[0], s) == Vector{Scalar(1), Scalar(0)});
    CHECK(*express_in_span(Vector(3), s) == Vector{Scalar(0), Scalar(0)});
    Vector v(3);
    for (std::size_t c = 0; c < 3; ++c)
        v[c] = b[0][c] + Scalar(2) * b[1][c];
    CHECK(*express_in_span(v, s) == Vector{Scalar(1), Scalar(2)});
    CHECK_FALSE(express_in_span(Vector{Scalar(0), Scalar(0), Scalar(1)}, s).has_value());
}

TEST_CASE("membership in an image agrees with direct solving") {
    std::mt19937 rng(13);
    int in = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = random_matrix(rng, 5, 3, 1);
        Vector v(5);
        if (trial % 2 == 0) {
            Vector x(3);
            for (auto& e : x)
                e = test::random_rational(rng);
            v = m.apply(x);
        } else {
            for (auto& e : v)
                e = test::random_rational(rng);
        }
        const bool expect = solvable(m, v);
        in += expect ? 1 : 0;
        const Subspace im = image_basis(m);
        const auto coords = express_in_span(v, im);
        CHECK(coords.has_value() == expect);
        if (coords) {
            Vector back(5);
            for (std::size_t k = 0; k < coords->size(); ++k)
                for (std::size_t c = 0; c < 5; ++c)
                    back[c] += (*coords)[k] * im.basis()[k][c];
            CHECK(back == v);
        }
    }
    CHECK(in >= 25);
}

TEST_CASE("quotient bases") {
    CHECK(quotient_basis(Subspace(3), 3).size() == 3);
    CHECK(quotient_basis(Subspace::full(3), 3).empty());
    const Subspace s = Subspace::span({{Scalar(1), Scalar(1), Scalar(0)}}, 3);
    const auto q = quotient_basis(s, 3);
    CHECK(q.size() == 2);
    std::vector<Vector> all = q;
    all.push_back(s.basis()[0]);
    CHECK(Subspace::span(all, 3).dim() == 3);
}

TEST_CASE("intersections and sums") {
    const Subspace a = Subspace::span({{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}}, 3);
    const Subspace b = Subspace::span({{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}, 3);
    CHECK(intersect(a, b).dim() == 1);
    CHECK(intersect(a, b).contains(Vector{Scalar(0), Scalar(5), Scalar(0)}));
    CHECK(sum(a, b).dim() == 3);
}

TEST_CASE("solve_combination rejects dependent vectors") {
    const std::vector<Vector> dep{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
    CHECK_THROWS_AS((void)solve_combination(dep, Vector{Scalar(1), Scalar(2)}), Error);
    const std::vector<Vector> ind{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
    CHECK(*solve_combination(ind, Vector{Scalar(2), Scalar(7)}) == Vector{Scalar(2), Scalar(3)});
}

TEST_CASE("results are reproducible") {
    std::mt19937 a(99);
    std::mt19937 b(99);
    const Matrix m1 = random_matrix(a, 7, 9, 1);
    const Matrix m2 = random_matrix(b, 7, 9, 1);
    CHECK(rref(m1).reduced == rref(m2).reduced);
    CHECK(kernel_basis(m1) == kernel_basis(m2));
}
