#pragma once

// The DG algebra A^!⊗(A#H): cochains, differential, product, the right
// H-action ◄ and finite weight strands.

#include "hhsmash/hopf.hpp"
#include "hhsmash/koszul.hpp"
#include "hhsmash/linalg.hpp"
#include "hhsmash/qalgebra.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hhs {

/// Basis tensor (A^!_m basis k) ⊗ (monomial # H-basis h).
struct CochainKey {
    std::uint32_t xi = 0;
    Monomial mono;
    std::uint32_t h = 0;

    friend auto operator<=>(const CochainKey&, const CochainKey&) = default;
};

class Cochain {
public:
    Cochain() = default;
    explicit Cochain(unsigned m) : m_(m) {}

    [[nodiscard]] unsigned m() const { return m_; }
    [[nodiscard]] const std::map<CochainKey, Scalar>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    void add(const CochainKey& k, const Scalar& c);

    friend Cochain operator+(Cochain a, const Cochain& b);
    friend Cochain operator-(Cochain a, const Cochain& b);
    friend Cochain operator*(const Scalar& s, const Cochain& a);
    friend bool operator==(const Cochain& a, const Cochain& b) = default;

private:
    unsigned m_ = 0;
    std::map<CochainKey, Scalar> terms_;
};

class WeightStrand;

/// Everything the DG algebra needs: A, H, the action, A#H, A^! and ◁.
class DGContext {
public:
    explicit DGContext(std::shared_ptr<const HAction> action);

    [[nodiscard]] const SkewPolyAlgebra& algebra() const { return action_->algebra(); }
    [[nodiscard]] const HopfAlgebra& hopf() const { return action_->hopf(); }
    [[nodiscard]] const HAction& action() const { return *action_; }
    [[nodiscard]] const SmashProduct& smash() const { return smash_; }
    [[nodiscard]] const KoszulDual& dual() const { return dual_; }
    [[nodiscard]] const DualAction& dual_action() const { return dual_action_; }
    [[nodiscard]] const HopfElement& integral() const { return integral_; }
    /// Least m with A^!_m = 0.
    [[nodiscard]] unsigned top_degree() const { return top_; }

    /// ξ⊗b for a dual element and a smash element.
    [[nodiscard]] Cochain make(const DualElement& xi, const SmashElement& b) const;
    [[nodiscard]] Cochain differential(const Cochain& c) const;
    [[nodiscard]] Cochain product(const Cochain& x, const Cochain& y) const;
    /// (ξ⊗b)◄h = ξ◁h₍₂₎ ⊗ S(h₍₁₎) b h₍₃₎.
    [[nodiscard]] Cochain h_act(const Cochain& c, const HopfElement& h) const;
    [[nodiscard]] Cochain integral_project(const Cochain& c) const { return h_act(c, integral_); }
    [[nodiscard]] Cochain unit() const;

    /// Bihomogeneity check; returns the weight d − m when all terms agree.
    [[nodiscard]] std::optional<int> weight_of(const Cochain& c) const;
    [[nodiscard]] std::string format(const Cochain& c) const;

    /// Strand at weight w; built once and shared.
    [[nodiscard]] std::shared_ptr<const WeightStrand> strand(int w) const;

private:
    // (1#S(b₍₁₎)) (mono#h) (1#b₍₃₎) with ◁b₍₂₎ on ξ, for one basis element b.
    void h_act_basis(const CochainKey& key, unsigned m, std::size_t b, const Scalar& c, Cochain& out) const;

    std::shared_ptr<const HAction> action_;
    SmashProduct smash_;
    KoszulDual dual_;
    DualAction dual_action_;
    HopfElement integral_;
    unsigned top_;
    std::vector<SweedlerTensor> sweedler3_;
    std::vector<HopfElement> antipodes_;
    mutable std::mutex strand_mutex_;
    mutable std::map<int, std::shared_ptr<const WeightStrand>> strands_;
};

/// The finite piece ⊕_m A^!_m ⊗ A_{m+w} ⊗ H with its differentials.
class WeightStrand {
public:
    WeightStrand(const DGContext& ctx, int w);

    [[nodiscard]] int weight() const { return w_; }
    /// Degrees m with a nonempty space run over 0..top−1; dim is zero elsewhere.
    [[nodiscard]] std::size_t dim(unsigned m) const { return m < basis_.size() ? basis_[m].size() : 0; }
    [[nodiscard]] unsigned degrees() const { return static_cast<unsigned>(basis_.size()); }
    [[nodiscard]] const std::vector<CochainKey>& basis(unsigned m) const { return basis_.at(m); }
    /// ∂^m : space m → space m+1 (dim(m+1) × dim(m)).
    [[nodiscard]] const Matrix& differential(unsigned m) const { return d_.at(m); }

    [[nodiscard]] Vector coords(const Cochain& c) const;
    [[nodiscard]] Cochain cochain(unsigned m, const Vector& coords) const;
    /// Matrix of ◄h on space m.
    [[nodiscard]] Matrix action_matrix(unsigned m, const HopfElement& h) const;

private:
    const DGContext* ctx_;
    int w_;
    std::vector<std::vector<CochainKey>> basis_;
    std::vector<std::map<CochainKey, std::size_t>> index_;
    std::vector<Matrix> d_;
};

} // namespace hhs
