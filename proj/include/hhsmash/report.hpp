#pragma once

// Result documents and their JSON / text renderings.

#include "hhsmash/cohomology.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace hhs {

struct StrandSummary {
    int w = 0;
    std::vector<std::size_t> space_dims;     // dim of A^!_m ⊗ A_{m+w} ⊗ H per m
    std::vector<std::size_t> full_dims;      // H^m(A, A#H) at this weight
    std::vector<std::size_t> invariant_dims; // HH^m(A#H) at this weight
    /// [even, odd] per m when the Hopf algebra carries a ℤ₂ grading.
    std::vector<std::array<std::size_t, 2>> full_parity;
    std::vector<std::vector<std::string>> full_basis;      // per m
    std::vector<std::vector<std::string>> invariant_basis; // per m

    friend bool operator==(const StrandSummary&, const StrandSummary&) = default;
};

struct CupLine {
    std::string left;
    std::string right;
    LabelCombination value;

    friend bool operator==(const CupLine&, const CupLine&) = default;
};

struct CheckLine {
    std::string name;
    bool passed = true;
    std::string detail;

    friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct TableLine {
    int table = 0;
    std::string left;
    std::string right;
    LabelCombination expected;
    LabelCombination computed;

    [[nodiscard]] bool matches() const { return expected == computed; }

    friend bool operator==(const TableLine&, const TableLine&) = default;
};

struct CohomologyReport {
    std::string mode;
    std::string scenario_name;
    std::string scenario_source;
    std::string q;
    unsigned weight_max = 0;
    unsigned index_max = 0;
    std::vector<std::size_t> dual_dims;
    std::vector<StrandSummary> strands;
    std::vector<std::string> class_labels; // labels used in `cup`, with their cochains
    std::vector<std::string> class_cochains;
    std::vector<CupLine> cup;
    std::vector<CheckLine> checks;
    std::vector<std::string> verified_bases;
    std::vector<TableLine> tables;
    bool success = true;

    friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

std::string report_to_json(const CohomologyReport& r);
/// Throws ParseError for documents not produced by report_to_json.
CohomologyReport report_from_json(const std::string& text);
std::string report_to_text(const CohomologyReport& r);

} // namespace hhs
