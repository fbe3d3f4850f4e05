#include "hhsmash/report.hpp"

#include "hhsmash/error.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace hhs {

namespace {

using ojson = nlohmann::ordered_json;

ojson combination_json(const LabelCombination& c) {
    ojson out = ojson::array();
    for (const auto& [label, coef] : c)
        out.push_back(ojson::array({label, coef.to_string()}));
    return out;
}

LabelCombination combination_from(const ojson& j) {
    LabelCombination out;
    for (const auto& e : j)
        out.emplace(e.at(0).get<std::string>(), Scalar::parse(e.at(1).get<std::string>()));
    return out;
}

} // namespace

std::string report_to_json(const CohomologyReport& r) {
    ojson doc;
    doc["mode"] = r.mode;
    doc["scenario"] = {{"name", r.scenario_name}, {"q", r.q}, {"source", r.scenario_source}};
    doc["weight_max"] = r.weight_max;
    doc["index_max"] = r.index_max;
    doc["dual_dims"] = r.dual_dims;
    ojson strands = ojson::array();
    for (const auto& s : r.strands) {
        ojson js;
        js["w"] = s.w;
        js["space_dims"] = s.space_dims;
        js["full_dims"] = s.full_dims;
        js["invariant_dims"] = s.invariant_dims;
        ojson parity = ojson::array();
        for (const auto& p : s.full_parity)
            parity.push_back({p[0], p[1]});
        js["full_parity"] = parity;
        js["full_basis"] = s.full_basis;
        js["invariant_basis"] = s.invariant_basis;
        strands.push_back(std::move(js));
    }
    doc["strands"] = std::move(strands);
    ojson classes = ojson::array();
    for (std::size_t i = 0; i < r.class_labels.size(); ++i)
        classes.push_back({{"label", r.class_labels[i]}, {"cochain", r.class_cochains.at(i)}});
    doc["classes"] = std::move(classes);
    ojson cup = ojson::array();
    for (const auto& c : r.cup)
        cup.push_back({{"left", c.left}, {"right", c.right}, {"value", combination_json(c.value)}});
    doc["cup"] = std::move(cup);
    ojson checks = ojson::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    doc["checks"] = std::move(checks);
    doc["verified_bases"] = r.verified_bases;
    ojson tables = ojson::array();
    for (const auto& t : r.tables)
        tables.push_back({{"table", t.table},
                          {"left", t.left},
                          {"right", t.right},
                          {"expected", combination_json(t.expected)},
                          {"computed", combination_json(t.computed)},
                          {"match", t.matches()}});
    doc["tables"] = std::move(tables);
    doc["success"] = r.success;
    return doc.dump(2) + "\n";
}

CohomologyReport report_from_json(const std::string& text) {
    CohomologyReport r;
    try {
        const ojson doc = ojson::parse(text);
        r.mode = doc.at("mode").get<std::string>();
        r.scenario_name = doc.at("scenario").at("name").get<std::string>();
        r.q = doc.at("scenario").at("q").get<std::string>();
        r.scenario_source = doc.at("scenario").at("source").get<std::string>();
        r.weight_max = doc.at("weight_max").get<unsigned>();
        r.index_max = doc.at("index_max").get<unsigned>();
        r.dual_dims = doc.at("dual_dims").get<std::vector<std::size_t>>();
        for (const auto& js : doc.at("strands")) {
            StrandSummary s;
            s.w = js.at("w").get<int>();
            s.space_dims = js.at("space_dims").get<std::vector<std::size_t>>();
            s.full_dims = js.at("full_dims").get<std::vector<std::size_t>>();
            s.invariant_dims = js.at("invariant_dims").get<std::vector<std::size_t>>();
            for (const auto& p : js.at("full_parity"))
                s.full_parity.push_back({p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>()});
            s.full_basis = js.at("full_basis").get<std::vector<std::vector<std::string>>>();
            s.invariant_basis = js.at("invariant_basis").get<std::vector<std::vector<std::string>>>();
            r.strands.push_back(std::move(s));
        }
        for (const auto& c : doc.at("classes")) {
            r.class_labels.push_back(c.at("label").get<std::string>());
            r.class_cochains.push_back(c.at("cochain").get<std::string>());
        }
        for (const auto& c : doc.at("cup"))
            r.cup.push_back({c.at("left").get<std::string>(), c.at("right").get<std::string>(),
                             combination_from(c.at("value"))});
        for (const auto& c : doc.at("checks"))
            r.checks.push_back(
                {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
        r.verified_bases = doc.at("verified_bases").get<std::vector<std::string>>();
        for (const auto& t : doc.at("tables"))
            r.tables.push_back({t.at("table").get<int>(), t.at("left").get<std::string>(),
                                t.at("right").get<std::string>(), combination_from(t.at("expected")),
                                combination_from(t.at("computed"))});
        r.success = doc.at("success").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("report: ") + e.what());
    }
    return r;
}

std::string report_to_text(const CohomologyReport& r) {
    std::ostringstream os;
    os << "mode: " << r.mode << "\n";
    os << "scenario: " << r.scenario_name << " (q = " << r.q << ")\n";
    os << "dual dims:";
    for (auto d : r.dual_dims)
        os << ' ' << d;
    os << "\n";
    if (!r.strands.empty()) {
        os << "\n" << std::setw(5) << "w" << "  " << std::setw(16) << "cochains" << "  " << std::setw(16)
           << "H^m(A,A#H)" << "  " << std::setw(16) << "HH^m(A#H)" << "\n";
        auto join = [](const std::vector<std::size_t>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? " " : "") + std::to_string(v[i]);
            return s;
        };
        for (const auto& s : r.strands) {
            os << std::setw(5) << s.w << "  " << std::setw(16) << join(s.space_dims) << "  " << std::setw(16)
               << join(s.full_dims) << "  " << std::setw(16) << join(s.invariant_dims);
            if (!s.full_parity.empty()) {
                os << "   parity (even/odd):";
                for (const auto& p : s.full_parity)
                    os << ' ' << p[0] << '/' << p[1];
            }
            os << "\n";
        }
    }
    if (!r.cup.empty()) {
        os << "\nclasses:\n";
        for (std::size_t i = 0; i < r.class_labels.size(); ++i)
            os << "  " << r.class_labels[i] << " = " << r.class_cochains[i] << "\n";
        os << "\ncup products:\n";
        for (const auto& c : r.cup)
            os << "  " << c.left << " * " << c.right << " = " << format_combination(c.value) << "\n";
    }
    if (!r.verified_bases.empty()) {
        os << "\nlisted bases verified at:";
        for (const auto& b : r.verified_bases)
            os << " [" << b << "]";
        os << "\n";
    }
    if (!r.tables.empty()) {
        std::size_t bad = 0;
        for (const auto& t : r.tables)
            bad += t.matches() ? 0 : 1;
        os << "\ntable cells: " << r.tables.size() << ", differing: " << bad << "\n";
        for (const auto& t : r.tables) {
            if (t.matches())
                continue;
            os << "  table " << t.table << "  " << t.left << " * " << t.right << "\n"
               << "    expected: " << format_combination(t.expected) << "\n"
               << "    computed: " << format_combination(t.computed) << "\n";
        }
    }
    if (!r.checks.empty()) {
        os << "\nchecks:\n";
        for (const auto& c : r.checks) {
            os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.detail.empty())
                os << " - " << c.detail;
            os << "\n";
        }
    }
    os << "\nresult: " << (r.success ? "ok" : "FAILED") << "\n";
    return os.str();
}

} // namespace hhs
