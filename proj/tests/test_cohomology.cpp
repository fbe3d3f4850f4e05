#include "hhsmash/cohomology.hpp"
#include "hhsmash/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hhs;
using hhs::test::mono;

namespace {

// Dimension of H^m(A, A#H) at weight w, counted from the explicit spans of
// cocycle classes for the Kac-Paljutkin action. dim H_0 = dim H_1 = 4.
std::size_t full_oracle(unsigned m, int w) {
    const auto pairs = [](int total) -> std::size_t {
        // #{(i, j) >= 0 : 2i + 2j = total}
        if (total < 0 || total % 2 != 0)
            return 0;
        return static_cast<std::size_t>(total / 2 + 1);
    };
    std::size_t count = 0;
    switch (m) {
    case 0:
        // (1 (x) u^{2i} v^{2j}) H_0
        count += 4 * pairs(w);
        break;
    case 1:
        // (u* (x) u^{2i+1} v^{2j}) H_0 and (v* (x) u^{2i} v^{2j+1}) H_0, A-degree w + 1
        count += 2 * 4 * pairs(w);
        // (u* (x) v^{2j} - v* (x) q v^{2j}) H_1, A-degree 2j = w + 1
        if (w + 1 >= 0 && (w + 1) % 2 == 0)
            count += 4;
        break;
    case 2:
        // (u*v* (x) 1) H_0 and (u*v* (x) 1) H_1 at A-degree 0
        if (w == -2)
            count += 8;
        // (u*v* (x) u^{2i+1} v^{2j+1}) H_0, A-degree w + 2
        count += 4 * pairs(w);
        // (u*v* (x) v^{2j+1}) H_1, A-degree w + 2 odd
        if (w + 2 >= 1 && (w + 2) % 2 == 1)
            count += 4;
        break;
    default:
        break;
    }
    return count;
}

// Dimension of the invariant part, counted from the listed families.
std::size_t invariant_oracle(unsigned m, int w) {
    if (m == 2 && w == -2)
        return 5;
    if (w < 0 || w % 2 != 0)
        return 0;
    const unsigned k = static_cast<unsigned>(w / 2);
    std::size_t le = 0; // #{i <= j : i + j = k}
    std::size_t lt = 0; // #{i < j : i + j = k}
    for (unsigned i = 0; i <= k; ++i) {
        le += i <= k - i ? 1 : 0;
        lt += i < k - i ? 1 : 0;
    }
    switch (m) {
    case 0:
        return 3 * le + lt;
    case 1:
        return 4 * static_cast<std::size_t>(k + 1);
    case 2:
        return 3 * lt + le;
    default:
        return 0;
    }
}

SmashElement sm(const DGContext& ctx, std::uint32_t s, std::uint32_t t, const char* h, const Scalar& c = Scalar(1)) {
    return {mono(s, t), static_cast<std::uint32_t>(ctx.hopf().index_of(h)), c};
}

} // namespace

TEST_CASE("full cohomology dimensions match the class enumeration") {
    const auto ctx = test::kp_context(Scalar(2));
    for (int w = -3; w <= 10; ++w)
        for (unsigned m = 0; m < 3; ++m) {
            CAPTURE(w);
            CAPTURE(m);
            CHECK(cohomology_at(*ctx, w, m).dim() == full_oracle(m, w));
        }
    CHECK(cohomology_at(*ctx, 4, 0).dim() == 12);
    CHECK(cohomology_at(*ctx, 0, 1).dim() == 8);
    CHECK(cohomology_at(*ctx, -1, 1).dim() == 4);
    CHECK(cohomology_at(*ctx, 3, 0).dim() == 0);
}

TEST_CASE("invariant dimensions match the listed families") {
    const auto ctx = test::kp_context(Scalar(2));
    for (int w = -2; w <= 10; ++w)
        for (unsigned m = 0; m < 3; ++m) {
            CAPTURE(w);
            CAPTURE(m);
            CHECK(invariants(*ctx, cohomology_at(*ctx, w, m), ctx->integral()).dim() == invariant_oracle(m, w));
        }
    CHECK(invariants(*ctx, cohomology_at(*ctx, -2, 2), ctx->integral()).dim() == 5);
    CHECK(invariants(*ctx, cohomology_at(*ctx, 0, 2), ctx->integral()).dim() == 1);
    CHECK(invariants(*ctx, cohomology_at(*ctx, 0, 0), ctx->integral()).dim() == 3);
}

TEST_CASE("dimensions do not depend on q") {
    for (long qv : {1L, 3L, -1L}) {
        const auto ctx = test::kp_context(Scalar(qv));
        for (int w = -2; w <= 4; ++w)
            for (unsigned m = 0; m < 3; ++m) {
                const auto full = cohomology_at(*ctx, w, m);
                CHECK(full.dim() == full_oracle(m, w));
                CHECK(invariants(*ctx, full, ctx->integral()).dim() == invariant_oracle(m, w));
            }
    }
}

TEST_CASE("Euler characteristic of each strand") {
    const auto ctx = test::kp_context(Scalar(2));
    for (int w = -2; w <= 8; ++w) {
        long chain = 0;
        long homology = 0;
        for (unsigned m = 0; m < 3; ++m) {
            const long sign = m % 2 == 0 ? 1 : -1;
            chain += sign * static_cast<long>(ctx->strand(w)->dim(m));
            homology += sign * static_cast<long>(cohomology_at(*ctx, w, m).dim());
        }
        CHECK(chain == homology);
    }
}

TEST_CASE("representatives are canonical and invariants are stable") {
    const auto ctx = test::kp_context(Scalar(2));
    for (int w = -2; w <= 4; ++w)
        for (unsigned m = 0; m < 3; ++m) {
            const auto b = cohomology_at(*ctx, w, m);
            // Each representative is reduced against the coboundaries and is a cocycle.
            for (const auto& r : b.representatives) {
                CHECK(b.coboundaries.reduce(r) == r);
                CHECK(b.cocycles.contains(r));
            }
            CHECK(Subspace::span(b.representatives, b.strand->dim(m)).basis() == b.representatives);
            const auto inv = invariants(*ctx, b, ctx->integral());
            const auto other = invariants_from_cocycles(*ctx, b, ctx->integral());
            CHECK(inv.representatives == other.representatives);
            // Projecting twice changes nothing.
            CHECK(invariants(*ctx, inv, ctx->integral()).representatives == inv.representatives);
            // Rebuilding gives the same bytes.
            CHECK(cohomology_at(*ctx, w, m).representatives == b.representatives);
        }
}

TEST_CASE("class identities in degree 1 and 2") {
    const Scalar q(2);
    const auto ctx = test::kp_context(q);
    const KoszulDual& d = ctx->dual();
    const auto us = d.generator(0);
    const auto vs = d.generator(1);
    const auto uv = d.multiply(us, vs);

    // i = j = 1, h1 = z
    const Cochain lhs1 = ctx->make(us, sm(*ctx, 2, 2, "z")) - ctx->make(vs, sm(*ctx, 2, 2, "z", q));
    const Cochain rhs1 = ctx->make(us, sm(*ctx, 0, 4, "z", q.pow(-2))) - ctx->make(vs, sm(*ctx, 0, 4, "z", q.pow(-1)));
    CHECK(class_equal(*ctx, lhs1, rhs1));
    CHECK_FALSE(class_equal(*ctx, lhs1, Scalar(2) * rhs1));

    // i = 1, j = 2, h1 = z
    const Cochain lhs2 = ctx->make(uv, sm(*ctx, 1, 2, "z"));
    const Cochain rhs2 = ctx->make(uv, sm(*ctx, 0, 3, "z", Scalar(-1) * q.pow(-1)));
    CHECK(class_equal(*ctx, lhs2, rhs2));
    CHECK(class_equal(*ctx, lhs2, lhs2));

    // A coboundary is equal to zero.
    const Cochain b = ctx->differential(ctx->make(d.one(), sm(*ctx, 1, 0, "xz")));
    CHECK_FALSE(b.is_zero());
    CHECK(class_equal(*ctx, b, Cochain()));

    // An open cochain is rejected.
    const Cochain open = ctx->make(d.one(), sm(*ctx, 1, 0, "1"));
    try {
        (void)class_equal(*ctx, open, open);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotACocycle);
    }
}

TEST_CASE("class frames") {
    const auto ctx = test::kp_context(Scalar(2));
    const auto inv = invariants(*ctx, cohomology_at(*ctx, -2, 2), ctx->integral());
    std::vector<std::pair<std::string, Cochain>> members;
    for (std::size_t k = 0; k < inv.dim(); ++k)
        members.emplace_back("c" + std::to_string(k), inv.cochains()[k]);
    const ClassFrame frame(*ctx, 2, -2, members);
    CHECK(frame.size() == 5);
    CHECK(frame.class_span().dim() == 5);
    for (std::size_t k = 0; k < members.size(); ++k)
        CHECK(*frame.coordinates(members[k].second) == unit_vector(5, k));
    CHECK(*frame.coordinates(Cochain()) == Vector(5));

    // A non-invariant class is outside the span.
    const auto full = cohomology_at(*ctx, -2, 2);
    bool outside = false;
    for (const auto& c : full.cochains())
        outside = outside || !frame.coordinates(c).has_value();
    CHECK(outside);

    auto dup = members;
    dup.push_back({"again", Scalar(3) * members[0].second});
    try {
        const ClassFrame bad(*ctx, 2, -2, dup);
        FAIL("expected BasisMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BasisMismatch);
    }
}

TEST_CASE("cup structure with the unit class") {
    const auto ctx = test::kp_context(Scalar(2));
    const auto inv0 = invariants(*ctx, cohomology_at(*ctx, 0, 1), ctx->integral());
    std::vector<std::pair<std::string, Cochain>> members;
    for (std::size_t k = 0; k < inv0.dim(); ++k)
        members.emplace_back("b" + std::to_string(k), inv0.cochains()[k]);
    const ClassFrame frame(*ctx, 1, 0, members);
    const FrameLookup lookup = [&](unsigned m, int w) -> const ClassFrame* {
        return m == 1 && w == 0 ? &frame : nullptr;
    };
    const CupTable t = cup_structure(*ctx, {{"1", ctx->unit()}}, members, lookup);
    REQUIRE(t.entries.size() == members.size());
    for (const auto& e : t.entries)
        CHECK(e.value == LabelCombination{{e.right, Scalar(1)}});

    // A product whose class is missing from the target frame is reported.
    const ClassFrame partial(*ctx, 1, 0, {members[0]});
    const FrameLookup small = [&](unsigned, int) -> const ClassFrame* { return &partial; };
    try {
        (void)cup_structure(*ctx, {{"1", ctx->unit()}}, {members[1]}, small);
        FAIL("expected TargetBasisIncomplete");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TargetBasisIncomplete);
    }
}

TEST_CASE("combination formatting") {
    CHECK(format_combination({}) == "0");
    CHECK(format_combination({{"a", Scalar(1)}, {"b", Scalar(-2)}}) == "a - 2*b");
    CHECK(format_combination({{"a", Scalar(-1, 2)}}) == "-1/2*a");
}
