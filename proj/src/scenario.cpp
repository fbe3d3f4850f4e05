#include "hhsmash/scenario.hpp"

#include "hhsmash/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace hhs {

namespace {

using nlohmann::json;

const char* const kKacPaljutkinPlane = R"({
  "name": "kac-paljutkin-qplane",
  "q": "2",
  "weight_max": 8,
  "index_max": 2,
  "algebra": {
    "generators": ["u", "v"],
    "q_table": [["1", "-1"], ["-1", "1"]]
  },
  "hopf": "kac-paljutkin",
  "grading": [0, 0, 0, 1, 0, 1, 1, 1],
  "action": {
    "x": [["1", "0"], ["0", "1"]],
    "y": [["1", "0"], ["0", "1"]],
    "z": [["0", "q"], ["1/q", "0"]]
  }
})";

const char* const kTrivialPlane = R"({
  "name": "trivial-qplane",
  "q": "2",
  "weight_max": 10,
  "algebra": {
    "generators": ["u", "v"],
    "q_table": [["1", "-1"], ["-1", "1"]]
  },
  "hopf": "trivial",
  "action": {
    "1": [["1", "0"], ["0", "1"]]
  }
})";

const char* const kCommutativeSwap = R"({
  "name": "commutative-plane-swap",
  "q": "2",
  "weight_max": 6,
  "algebra": {
    "generators": ["u", "v"],
    "q_table": [["1", "1"], ["1", "1"]]
  },
  "hopf": {"group": [[0, 1], [1, 0]], "labels": ["1", "g"]},
  "action": {
    "g": [["0", "1"], ["1", "0"]]
  }
})";

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw Error(ErrorCode::ParseError, "field " + path + ": " + what);
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

Scalar parse_rational(const json& j, const std::string& path) {
    try {
        if (j.is_number_integer())
            return Scalar(j.get<long>());
        if (j.is_string())
            return Scalar::parse(j.get<std::string>());
    } catch (const Error& e) {
        field_error(path, e.what());
    }
    field_error(path, "expected a rational as a string or an integer");
}

// "p/r", "q", "-q", "1/q", "q^-1", "3/2*q^2".
Scalar parse_qexpr(const json& j, const Scalar& q, const std::string& path) {
    if (!j.is_string() || j.get<std::string>().find('q') == std::string::npos)
        return parse_rational(j, path);
    const std::string text = trim(j.get<std::string>());
    const auto p = text.find('q');
    std::string prefix = trim(std::string_view(text).substr(0, p));
    const std::string suffix = trim(std::string_view(text).substr(p + 1));
    try {
        Scalar coef(1);
        long direction = 1;
        if (prefix == "-") {
            coef = Scalar(-1);
        } else if (prefix == "+" || prefix.empty()) {
        } else if (prefix.back() == '*' || prefix.back() == '/') {
            direction = prefix.back() == '/' ? -1 : 1;
            prefix = trim(std::string_view(prefix).substr(0, prefix.size() - 1));
            coef = prefix == "-" ? Scalar(-1) : Scalar::parse(prefix);
        } else {
            field_error(path, "cannot read \"" + text + "\"");
        }
        long exponent = 1;
        if (!suffix.empty()) {
            if (suffix.front() != '^')
                field_error(path, "cannot read \"" + text + "\"");
            std::size_t used = 0;
            const std::string e = trim(std::string_view(suffix).substr(1));
            exponent = std::stol(e, &used);
            if (used != e.size())
                field_error(path, "bad exponent in \"" + text + "\"");
        }
        return coef * q.pow(direction * exponent);
    } catch (const std::logic_error&) {
        field_error(path, "cannot read \"" + text + "\"");
    }
}

Vector parse_vector(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n)
        field_error(path, "expected an array of length " + std::to_string(n));
    Vector out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(parse_rational(j[i], path + "/" + std::to_string(i)));
    return out;
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path, const Scalar* q) {
    if (!j.is_array() || j.size() != rows)
        field_error(path, "expected " + std::to_string(rows) + " rows");
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            field_error(path + "/" + std::to_string(r), "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string at = path + "/" + std::to_string(r) + "/" + std::to_string(c);
            out(r, c) = q != nullptr ? parse_qexpr(j[r][c], *q, at) : parse_rational(j[r][c], at);
        }
    }
    return out;
}

const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key))
        field_error(path + "/" + key, "missing");
    return obj.at(key);
}

std::vector<std::string> parse_labels(const json& j, const std::string& path) {
    if (!j.is_array())
        field_error(path, "expected an array of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string())
            field_error(path + "/" + std::to_string(i), "expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

HopfAlgebra parse_group(const json& spec, const std::string& path) {
    std::vector<std::vector<std::size_t>> table;
    const json& t = require(spec, "group", path);
    if (!t.is_array())
        field_error(path + "/group", "expected a square table");
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (!t[r].is_array())
            field_error(path + "/group/" + std::to_string(r), "expected a row");
        std::vector<std::size_t> row;
        for (const auto& e : t[r]) {
            if (!e.is_number_unsigned())
                field_error(path + "/group/" + std::to_string(r), "entries must be indices");
            row.push_back(e.get<std::size_t>());
        }
        table.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    if (spec.contains("labels"))
        labels = parse_labels(spec.at("labels"), path + "/labels");
    try {
        return group_algebra(table, labels);
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, std::string("hopf: ") + e.what());
    }
}

HopfAlgebra cyclic_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return group_algebra(table);
}

HopfAlgebra parse_inline_hopf(const json& spec, const std::string& path) {
    const auto labels = parse_labels(require(spec, "labels", path), path + "/labels");
    const std::size_t n = labels.size();
    const json& mj = require(spec, "mult", path);
    if (!mj.is_array() || mj.size() != n)
        field_error(path + "/mult", "expected dim rows");
    std::vector<std::vector<Vector>> mult(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (!mj[a].is_array() || mj[a].size() != n)
            field_error(path + "/mult/" + std::to_string(a), "expected dim entries");
        for (std::size_t b = 0; b < n; ++b)
            mult[a].push_back(
                parse_vector(mj[a][b], n, path + "/mult/" + std::to_string(a) + "/" + std::to_string(b)));
    }
    const Vector unit = parse_vector(require(spec, "unit", path), n, path + "/unit");
    const Vector counit = parse_vector(require(spec, "counit", path), n, path + "/counit");
    const json& cj = require(spec, "comult", path);
    if (!cj.is_array() || cj.size() != n)
        field_error(path + "/comult", "expected one table per basis element");
    std::vector<Matrix> comult;
    for (std::size_t a = 0; a < n; ++a)
        comult.push_back(parse_matrix(cj[a], n, n, path + "/comult/" + std::to_string(a), nullptr));
    const json& sj = require(spec, "antipode", path);
    if (!sj.is_array() || sj.size() != n)
        field_error(path + "/antipode", "expected one image per basis element");
    Matrix antipode(n, n);
    for (std::size_t b = 0; b < n; ++b)
        antipode.set_column(b, parse_vector(sj[b], n, path + "/antipode/" + std::to_string(b)));
    return {labels, std::move(mult), unit, std::move(comult), counit, std::move(antipode)};
}

// Fills in matrices for basis elements that are scalar multiples of products
// of known ones, starting from the unit.
std::vector<Matrix> complete_action(const HopfAlgebra& h, std::map<std::size_t, Matrix> known, std::size_t n) {
    const Vector& unit = h.unit_coeffs();
    for (std::size_t e = 0; e < h.dim(); ++e)
        if (unit == unit_vector(h.dim(), e) && !known.contains(e))
            known.emplace(e, Matrix::identity(n));
    bool grew = true;
    while (grew && known.size() < h.dim()) {
        grew = false;
        const auto snapshot = known;
        for (const auto& [a, ma] : snapshot)
            for (const auto& [b, mb] : snapshot) {
                const Vector& p = h.mult(a, b);
                std::size_t hits = 0, g = 0;
                for (std::size_t k = 0; k < p.size(); ++k)
                    if (!p[k].is_zero()) {
                        ++hits;
                        g = k;
                    }
                if (hits == 1 && !known.contains(g)) {
                    known.emplace(g, p[g].inverse() * (ma * mb));
                    grew = true;
                }
            }
    }
    std::vector<Matrix> out;
    for (std::size_t b = 0; b < h.dim(); ++b) {
        auto it = known.find(b);
        if (it == known.end())
            throw Error(ErrorCode::ValidationError, "action on \"" + h.label(b) + "\" is not determined");
        out.push_back(it->second);
    }
    return out;
}

unsigned parse_count(const json& doc, const char* key, unsigned fallback) {
    if (!doc.contains(key))
        return fallback;
    if (!doc.at(key).is_number_unsigned())
        field_error(std::string("/") + key, "expected a nonnegative integer");
    return doc.at(key).get<unsigned>();
}

} // namespace

bool Scenario::kp_plane() const {
    if (hopf_name != "kac-paljutkin" || algebra->n() != 2 || algebra->q(0, 1) != Scalar(-1))
        return false;
    return action == kp_plane_action(*hopf, params.q);
}

std::vector<std::string> builtin_names() { return {"kac-paljutkin-qplane", "trivial-qplane", "commutative-plane-swap"}; }

std::string builtin_source(const std::string& name) {
    if (name == "kac-paljutkin-qplane")
        return kKacPaljutkinPlane;
    if (name == "trivial-qplane")
        return kTrivialPlane;
    if (name == "commutative-plane-swap")
        return kCommutativeSwap;
    throw Error(ErrorCode::InvalidArgument, "unknown builtin scenario \"" + name + "\"");
}

std::vector<Matrix> kp_plane_action(const HopfAlgebra& h, const Scalar& q) {
    Matrix z(2, 2);
    z(1, 0) = q.inverse();
    z(0, 1) = q;
    return complete_action(h, {{h.index_of("x"), Matrix::identity(2)}, {h.index_of("y"), Matrix::identity(2)},
                               {h.index_of("z"), z}},
                           2);
}

Scenario parse_scenario(const std::string& json_text, std::optional<Scalar> q_override) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object())
        field_error("/", "scenario must be a JSON object");
    Scenario s;
    s.source = json_text;
    if (doc.contains("name")) {
        if (!doc.at("name").is_string())
            field_error("/name", "expected a string");
        s.name = doc.at("name").get<std::string>();
    }
    s.params.q = q_override ? *q_override : (doc.contains("q") ? parse_rational(doc.at("q"), "/q") : Scalar(2));
    if (s.params.q.is_zero())
        throw Error(ErrorCode::ValidationError, "q must be nonzero");
    s.params.weight_max = parse_count(doc, "weight_max", s.params.weight_max);
    s.params.index_max = parse_count(doc, "index_max", s.params.index_max);
    s.params.cup_weight_max = parse_count(doc, "cup_weight_max", s.params.cup_weight_max);
    s.params.seed = parse_count(doc, "seed", s.params.seed);

    const json& alg = require(doc, "algebra", "");
    const auto gens = parse_labels(require(alg, "generators", "/algebra"), "/algebra/generators");
    if (gens.empty())
        field_error("/algebra/generators", "need at least one generator");
    const Matrix qt = parse_matrix(require(alg, "q_table", "/algebra"), gens.size(), gens.size(), "/algebra/q_table",
                                   &s.params.q);
    s.algebra = std::make_shared<const SkewPolyAlgebra>(gens, qt);

    const json& hj = require(doc, "hopf", "");
    if (hj.is_string()) {
        const std::string name = hj.get<std::string>();
        if (name == "kac-paljutkin") {
            s.hopf = std::make_shared<const HopfAlgebra>(kac_paljutkin());
            s.hopf_name = name;
        } else if (name == "trivial") {
            s.hopf = std::make_shared<const HopfAlgebra>(group_algebra({{0}}));
            s.hopf_name = "group";
        } else if (name.starts_with("group:Z")) {
            std::size_t order = 0;
            try {
                order = std::stoul(name.substr(7));
            } catch (const std::logic_error&) {
                field_error("/hopf", "bad cyclic group \"" + name + "\"");
            }
            if (order == 0)
                field_error("/hopf", "group order must be positive");
            s.hopf = std::make_shared<const HopfAlgebra>(cyclic_group(order));
            s.hopf_name = "group";
        } else {
            field_error("/hopf", "unknown Hopf algebra \"" + name + "\"");
        }
    } else if (hj.is_object() && hj.contains("group")) {
        s.hopf = std::make_shared<const HopfAlgebra>(parse_group(hj, "/hopf"));
        s.hopf_name = "group";
    } else if (hj.is_object()) {
        s.hopf = std::make_shared<const HopfAlgebra>(parse_inline_hopf(hj, "/hopf"));
        s.hopf_name = "inline";
    } else {
        field_error("/hopf", "expected a name or an object");
    }

    if (doc.contains("grading")) {
        const json& g = doc.at("grading");
        if (!g.is_array() || g.size() != s.hopf->dim())
            field_error("/grading", "expected one degree per Hopf basis element");
        std::vector<int> grading;
        for (const auto& e : g) {
            if (!e.is_number_integer() || (e.get<int>() != 0 && e.get<int>() != 1))
                field_error("/grading", "degrees must be 0 or 1");
            grading.push_back(e.get<int>());
        }
        s.grading = std::move(grading);
    }

    const json& aj = require(doc, "action", "");
    if (!aj.is_object())
        field_error("/action", "expected an object keyed by Hopf basis labels");
    std::map<std::size_t, Matrix> given;
    for (const auto& [label, mat] : aj.items()) {
        std::size_t b = 0;
        try {
            b = s.hopf->index_of(label);
        } catch (const Error&) {
            field_error("/action/" + label, "not a Hopf basis label");
        }
        given.emplace(b, parse_matrix(mat, gens.size(), gens.size(), "/action/" + label, &s.params.q));
    }
    s.action = complete_action(*s.hopf, std::move(given), gens.size());
    return s;
}

Scenario load_scenario(const std::string& path, std::optional<Scalar> q_override) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Scenario s = parse_scenario(buf.str(), std::move(q_override));
    if (s.name.empty())
        s.name = path;
    return s;
}

Scenario builtin_scenario(const std::string& name, std::optional<Scalar> q_override) {
    return parse_scenario(builtin_source(name), std::move(q_override));
}

AxiomReport scenario_checks(const Scenario& s) {
    AxiomReport report = check_hopf_axioms(*s.hopf);
    AxiomCheck semisimple{"semisimple with two-sided integral", true, {}};
    try {
        (void)integral(*s.hopf);
    } catch (const Error& e) {
        semisimple.passed = false;
        semisimple.witness = e.what();
    }
    report.checks.push_back(semisimple);
    const HAction action(s.algebra, s.hopf, s.action);
    for (auto& c : check_module_algebra(action).checks)
        report.checks.push_back(std::move(c));
    return report;
}

void validate_scenario(const Scenario& s) {
    const AxiomReport report = scenario_checks(s);
    if (const AxiomCheck* f = report.first_failure())
        throw Error(ErrorCode::ValidationError, f->name + " fails: " + f->witness);
}

} // namespace hhs
