#pragma once

// Shared fixtures for the unit tests.

#include "hhsmash/cochain.hpp"
#include "hhsmash/scenario.hpp"

#include <memory>
#include <random>

namespace hhs::test {

inline Scalar random_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    return Scalar(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias = 0) {
    Matrix m(rows, cols);
    std::uniform_int_distribution<int> keep(0, zero_bias);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng) == 0)
                m(r, c) = random_rational(rng);
    return m;
}

inline std::shared_ptr<const HAction> kp_action(const Scalar& q = Scalar(2)) {
    auto alg = std::make_shared<const SkewPolyAlgebra>(SkewPolyAlgebra::plane(Scalar(-1)));
    auto hopf = std::make_shared<const HopfAlgebra>(kac_paljutkin());
    return std::make_shared<const HAction>(alg, hopf, kp_plane_action(*hopf, q));
}

inline std::shared_ptr<const DGContext> kp_context(const Scalar& q = Scalar(2)) {
    return std::make_shared<const DGContext>(kp_action(q));
}

inline Monomial mono(std::uint32_t a, std::uint32_t b) { return {a, b}; }

} // namespace hhs::test
