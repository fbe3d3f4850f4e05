#pragma once

// Scenario documents: the algebra, the Hopf algebra, the action and the run
// parameters, loaded from JSON.

#include "hhsmash/hopf.hpp"
#include "hhsmash/linalg.hpp"
#include "hhsmash/qalgebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hhs {

struct ScenarioParams {
    Scalar q{2};
    unsigned weight_max = 8;
    unsigned index_max = 2;
    /// Cup products of invariant classes are tabulated for factor weights up to this.
    unsigned cup_weight_max = 2;
    unsigned seed = 20240601;
};

struct Scenario {
    std::string name;
    std::string source;  // the JSON document as given
    std::string hopf_name; // builtin name, "group" or "inline"
    std::shared_ptr<const SkewPolyAlgebra> algebra;
    std::shared_ptr<const HopfAlgebra> hopf;
    std::vector<Matrix> action; // per H basis element
    std::optional<std::vector<int>> grading; // ℤ₂ degree per H basis element
    ScenarioParams params;

    /// True for the Kac–Paljutkin action on the quantum (−1)-plane at params.q.
    [[nodiscard]] bool kp_plane() const;
};

/// Names accepted by builtin_scenario.
std::vector<std::string> builtin_names();
/// JSON text of a builtin scenario; throws InvalidArgument for unknown names.
std::string builtin_source(const std::string& name);

/// Parses and shape-checks a scenario. A q override replaces the document's q.
/// Throws ParseError for malformed input and ValidationError for q = 0 or
/// inconsistent shapes. Algebraic axioms are not checked here.
Scenario parse_scenario(const std::string& json_text, std::optional<Scalar> q_override = std::nullopt);
Scenario load_scenario(const std::string& path, std::optional<Scalar> q_override = std::nullopt);
Scenario builtin_scenario(const std::string& name, std::optional<Scalar> q_override = std::nullopt);

/// Hopf axioms, semisimplicity and the module-algebra conditions.
AxiomReport scenario_checks(const Scenario& s);
/// Throws ValidationError naming the first failed check and its witness.
void validate_scenario(const Scenario& s);

/// Action matrices of the Kac–Paljutkin algebra on the quantum plane:
/// x, y act trivially, z▷u = q⁻¹v, z▷v = qu.
std::vector<Matrix> kp_plane_action(const HopfAlgebra& h, const Scalar& q);

} // namespace hhs
