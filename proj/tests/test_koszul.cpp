#include "hhsmash/error.hpp"
#include "hhsmash/koszul.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hhs;

namespace {

std::shared_ptr<const SkewPolyAlgebra> plane(long q12) {
    return std::make_shared<const SkewPolyAlgebra>(SkewPolyAlgebra::plane(Scalar(q12)));
}

std::shared_ptr<const SkewPolyAlgebra> all_minus(std::size_t n) {
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q(i, j) = Scalar(-1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i));
    return std::make_shared<const SkewPolyAlgebra>(labels, q);
}

DualElement scaled(const Scalar& c, DualElement e) {
    for (auto& x : e.coords)
        x *= c;
    return e;
}

} // namespace

TEST_CASE("Koszul dual dimensions") {
    const KoszulDual d(plane(-1), 4);
    CHECK(d.dims() == std::vector<std::size_t>{1, 2, 1, 0});
    REQUIRE(d.top_degree().has_value());
    CHECK(*d.top_degree() == 3);
    CHECK(d.dim(7) == 0);

    const KoszulDual line(std::make_shared<const SkewPolyAlgebra>(std::vector<std::string>{"u"}, Matrix(1, 1)), 3);
    CHECK(line.dims() == std::vector<std::size_t>{1, 1, 0});

    const KoszulDual three(all_minus(3), 5);
    CHECK(three.dims() == std::vector<std::size_t>{1, 3, 3, 1, 0});

    CHECK_THROWS_AS(KoszulDual(plane(-1), 1), Error);
}

TEST_CASE("A^! of the quantum (-1)-plane is commutative with square-zero generators") {
    const KoszulDual d(plane(-1), 3);
    const auto us = d.generator(0);
    const auto vs = d.generator(1);
    CHECK(d.multiply(us, vs) == d.multiply(vs, us));
    CHECK(is_zero(d.multiply(us, us).coords));
    CHECK(is_zero(d.multiply(vs, vs).coords));
    CHECK_FALSE(is_zero(d.multiply(us, vs).coords));
    CHECK(d.multiply(d.one(), us) == us);
    CHECK(d.multiply(vs, d.one()) == vs);
    CHECK(d.basis_label(2, 0) == "v*u*");
    // For the commutative plane u*v* = -v*u*.
    const KoszulDual e(plane(1), 3);
    CHECK(e.multiply(e.generator(0), e.generator(1)) == scaled(Scalar(-1), e.multiply(e.generator(1), e.generator(0))));
}

TEST_CASE("A^! multiplication is associative and unital") {
    const KoszulDual d(all_minus(3), 5);
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; a + b <= 3; ++b)
            for (unsigned c = 0; a + b + c <= 3; ++c)
                for (std::size_t i = 0; i < d.dim(a); ++i)
                    for (std::size_t j = 0; j < d.dim(b); ++j)
                        for (std::size_t k = 0; k < d.dim(c); ++k) {
                            const auto x = d.basis_element(a, i);
                            const auto y = d.basis_element(b, j);
                            const auto z = d.basis_element(c, k);
                            CHECK(d.multiply(d.multiply(x, y), z) == d.multiply(x, d.multiply(y, z)));
                        }
    for (unsigned m = 0; m <= 3; ++m)
        for (std::size_t i = 0; i < d.dim(m); ++i)
            CHECK(d.multiply(d.one(), d.basis_element(m, i)) == d.basis_element(m, i));
}

TEST_CASE("quotient and intersection dimensions agree") {
    for (const auto& alg : {plane(-1), plane(1), all_minus(3)}) {
        const KoszulDual d(alg, static_cast<unsigned>(alg->n()) + 1);
        for (unsigned m = 0; m <= alg->n() + 1; ++m)
            CHECK(d.dual_subspace(m).dim() == d.dim(m));
    }
}

TEST_CASE("dual action") {
    const Scalar q(2);
    const auto act = test::kp_action(q);
    const HopfAlgebra& h = act->hopf();
    const KoszulDual d(act->algebra_ptr(), 3);
    const DualAction da(d, *act);
    const auto z = h.basis(h.index_of("z"));
    const auto us = d.generator(0);
    const auto vs = d.generator(1);
    CHECK(da.act(us, z) == scaled(q, vs));
    const auto uv = d.multiply(us, vs);
    CHECK(da.act(uv, z) == uv);
    for (unsigned m = 0; m <= 2; ++m)
        for (std::size_t i = 0; i < d.dim(m); ++i)
            CHECK(da.act(d.basis_element(m, i), h.unit()) == d.basis_element(m, i));

    // Right action: (ξ◁h)◁h' = ξ◁(hh').
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, h.dim() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = h.basis(pick(rng));
        const auto b = h.basis(pick(rng));
        for (unsigned m = 0; m <= 2; ++m)
            for (std::size_t i = 0; i < d.dim(m); ++i) {
                const auto xi = d.basis_element(m, i);
                CHECK(da.act(da.act(xi, a), b) == da.act(xi, h.multiply(a, b)));
            }
    }
}

TEST_CASE("Koszul complex is exact") {
    const auto r = koszul_complex_check(plane(-1), 3, 6);
    CHECK(r.dims_agree);
    CHECK(r.d_squared_zero);
    CHECK(r.exact());
    CHECK(r.passed());
    CHECK(r.certified_weight_max == 6);
    REQUIRE(!r.strands.empty());
    CHECK(r.strands.front().weight == 0);
    for (const auto& s : r.strands)
        for (auto hdim : s.homology)
            CHECK(hdim == 0);
    CHECK(koszul_complex_check(plane(1), 3, 5).passed());
    CHECK(koszul_complex_check(all_minus(3), 4, 3).passed());
}
