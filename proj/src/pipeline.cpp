#include "hhsmash/pipeline.hpp"

#include "hhsmash/error.hpp"
#include "hhsmash/families.hpp"
#include "hhsmash/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace hhs {

namespace {

// Runs fn(k) for k < n on `threads` workers; the first exception is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t k = next++; k < n; k = next++)
                fn(k);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = n;
        }
    };
    const auto count = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), std::max<std::size_t>(n, 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < count; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

int lowest_weight(const DGContext& ctx) { return -static_cast<int>(ctx.top_degree()) + 1; }

CohomologyReport report_header(const Scenario& s, const std::string& mode) {
    CohomologyReport r;
    r.mode = mode;
    r.scenario_name = s.name;
    r.scenario_source = s.source;
    r.q = s.params.q.to_string();
    r.weight_max = s.params.weight_max;
    r.index_max = s.params.index_max;
    return r;
}

std::string class_label(unsigned m, int w, std::size_t k) {
    return "HH^" + std::to_string(m) + "(w=" + std::to_string(w) + ")[" + std::to_string(k) + "]";
}

// Invariant classes as labeled frames, keyed by (w, m).
struct InvariantFrames {
    std::map<std::pair<int, unsigned>, std::unique_ptr<ClassFrame>> frames;

    [[nodiscard]] const ClassFrame* find(unsigned m, int w) const {
        const auto it = frames.find({w, m});
        return it == frames.end() ? nullptr : it->second.get();
    }
};

InvariantFrames build_frames(const DGContext& ctx, const std::vector<StrandCohomology>& strands) {
    InvariantFrames out;
    for (const auto& sc : strands)
        for (unsigned m = 0; m < sc.invariant.size(); ++m) {
            const auto& basis = sc.invariant[m];
            if (basis.dim() == 0)
                continue;
            std::vector<std::pair<std::string, Cochain>> members;
            const auto cochains = basis.cochains();
            for (std::size_t k = 0; k < cochains.size(); ++k)
                members.emplace_back(class_label(m, sc.w, k), cochains[k]);
            out.frames.emplace(std::make_pair(sc.w, m), std::make_unique<ClassFrame>(ctx, m, sc.w, std::move(members)));
        }
    return out;
}

// All invariant classes of weight ≤ w_max, ordered by weight, then degree.
std::vector<std::pair<std::string, Cochain>> factor_classes(const InvariantFrames& f, int w_max) {
    std::vector<std::pair<std::string, Cochain>> out;
    for (const auto& [key, frame] : f.frames)
        if (key.first <= w_max)
            for (const auto& member : frame->members())
                out.push_back(member);
    return out;
}

std::vector<CupEntry> cup_pairs(const DGContext& ctx, const std::vector<std::pair<std::string, Cochain>>& factors,
                                const InvariantFrames& frames, unsigned threads) {
    const std::size_t n = factors.size();
    std::vector<CupEntry> entries(n * n);
    const FrameLookup lookup = [&](unsigned m, int w) { return frames.find(m, w); };
    parallel_for(n * n, threads, [&](std::size_t k) {
        const CupTable t = cup_structure(ctx, {factors[k / n]}, {factors[k % n]}, lookup);
        entries[k] = t.entries.front();
    });
    return entries;
}

std::pair<std::size_t, std::size_t> parity_split(const CohomologyBasis& b, const std::vector<int>& grading) {
    const WeightStrand& strand = *b.strand;
    const std::size_t dim = strand.dim(b.m);
    std::vector<Vector> even;
    std::vector<Vector> odd;
    for (std::size_t k = 0; k < dim; ++k)
        (grading.at(strand.basis(b.m)[k].h) == 0 ? even : odd).push_back(unit_vector(dim, k));
    auto part = [&](const std::vector<Vector>& coords) {
        const Subspace e = Subspace::span(coords, dim);
        return intersect(b.cocycles, e).dim() - intersect(b.coboundaries, e).dim();
    };
    return {part(even), part(odd)};
}

StrandSummary summarize(const DGContext& ctx, const StrandCohomology& sc, const Scenario& s) {
    StrandSummary out;
    out.w = sc.w;
    const auto strand = ctx.strand(sc.w);
    for (unsigned m = 0; m < sc.full.size(); ++m) {
        out.space_dims.push_back(strand->dim(m));
        out.full_dims.push_back(sc.full[m].dim());
        out.invariant_dims.push_back(sc.invariant[m].dim());
        if (s.grading) {
            const auto [e, o] = parity_split(sc.full[m], *s.grading);
            out.full_parity.push_back({e, o});
        }
        std::vector<std::string> full;
        for (const auto& c : sc.full[m].cochains())
            full.push_back(ctx.format(c));
        out.full_basis.push_back(std::move(full));
        std::vector<std::string> inv;
        for (const auto& c : sc.invariant[m].cochains())
            inv.push_back(ctx.format(c));
        out.invariant_basis.push_back(std::move(inv));
    }
    return out;
}

// ---------------------------------------------------------------- verification helpers

class Checks {
public:
    explicit Checks(std::vector<CheckLine>& out) : out_(out) {}

    // Runs fn, which returns an empty string on success or a witness.
    template <class F>
    void run(const std::string& name, F&& fn) {
        std::string witness;
        try {
            witness = fn();
        } catch (const std::exception& e) {
            witness = std::string("raised ") + e.what();
        }
        out_.push_back({name, witness.empty(), witness});
    }

private:
    std::vector<CheckLine>& out_;
};

Cochain random_cochain(const WeightStrand& strand, unsigned m, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> keep(0, 2);
    Vector v(strand.dim(m));
    for (auto& x : v)
        if (keep(rng) == 0)
            x = Scalar(coef(rng));
    if (!v.empty() && is_zero(v))
        v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)] = Scalar(1);
    return strand.cochain(m, v);
}

// A random nonzero strand position (w, m) with w in [w_min, w_max].
std::pair<int, unsigned> random_position(const DGContext& ctx, int w_min, int w_max, std::mt19937& rng) {
    std::uniform_int_distribution<int> wd(w_min, w_max);
    std::uniform_int_distribution<unsigned> md(0, ctx.top_degree() - 1);
    for (;;) {
        const int w = wd(rng);
        const unsigned m = md(rng);
        if (ctx.strand(w)->dim(m) > 0)
            return {w, m};
    }
}

std::vector<std::vector<std::size_t>> dimension_table(const std::vector<StrandCohomology>& strands, bool invariant) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& sc : strands) {
        std::vector<std::size_t> row;
        for (const auto& b : invariant ? sc.invariant : sc.full)
            row.push_back(b.dim());
        out.push_back(std::move(row));
    }
    return out;
}

std::string dims_text(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return "[" + s + "]";
}

} // namespace

std::shared_ptr<const DGContext> make_context(const Scenario& s) {
    return std::make_shared<const DGContext>(std::make_shared<const HAction>(s.algebra, s.hopf, s.action));
}

std::vector<StrandCohomology> compute_strands(const DGContext& ctx, int w_min, int w_max, unsigned threads) {
    if (w_max < w_min)
        return {};
    std::vector<StrandCohomology> out(static_cast<std::size_t>(w_max - w_min + 1));
    parallel_for(out.size(), threads, [&](std::size_t k) {
        StrandCohomology sc;
        sc.w = w_min + static_cast<int>(k);
        for (unsigned m = 0; m < ctx.top_degree(); ++m) {
            sc.full.push_back(cohomology_at(ctx, sc.w, m));
            sc.invariant.push_back(invariants(ctx, sc.full.back(), ctx.integral()));
        }
        out[k] = std::move(sc);
    });
    return out;
}

std::size_t center_dimension(const SmashProduct& smash, unsigned degree) {
    const SkewPolyAlgebra& a = smash.algebra();
    const HopfAlgebra& h = smash.hopf();
    const auto monos = a.monomials(degree);
    std::vector<SmashElement> gens;
    for (std::size_t i = 0; i < a.n(); ++i)
        gens.push_back(smash.from_algebra(AlgebraElement(a.generator(i), Scalar(1))));
    for (std::size_t b = 0; b < h.dim(); ++b)
        gens.push_back(smash.from_hopf(h.basis(b)));
    std::map<std::pair<std::size_t, SmashKey>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns;
    for (const auto& mono : monos)
        for (std::size_t b = 0; b < h.dim(); ++b) {
            const SmashElement x(mono, static_cast<std::uint32_t>(b), Scalar(1));
            std::vector<std::pair<std::size_t, Scalar>> col;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const SmashElement c = smash.multiply(gens[g], x) - smash.multiply(x, gens[g]);
                for (const auto& [key, coef] : c.terms()) {
                    const auto it = rows.try_emplace({g, key}, rows.size()).first;
                    col.emplace_back(it->second, coef);
                }
            }
            columns.push_back(std::move(col));
        }
    Matrix mat(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c])
            mat(r, c) = v;
    return columns.size() - rank(mat);
}

CohomologyReport run_compute(const Scenario& s, const RunOptions& opt) {
    validate_scenario(s);
    CohomologyReport r = report_header(s, "compute");
    const auto ctx = make_context(s);
    r.dual_dims = ctx->dual().dims();
    const int w_min = lowest_weight(*ctx);
    const int w_report = static_cast<int>(s.params.weight_max);
    const int w_cup = static_cast<int>(s.params.cup_weight_max);
    const auto strands = compute_strands(*ctx, w_min, std::max(w_report, 2 * w_cup), opt.threads);
    for (const auto& sc : strands)
        if (sc.w <= w_report)
            r.strands.push_back(summarize(*ctx, sc, s));

    const InvariantFrames frames = build_frames(*ctx, strands);
    const auto factors = factor_classes(frames, w_cup);
    for (const auto& [key, frame] : frames.frames)
        for (const auto& [label, c] : frame->members()) {
            r.class_labels.push_back(label);
            r.class_cochains.push_back(ctx->format(c));
        }
    for (auto& e : cup_pairs(*ctx, factors, frames, opt.threads))
        r.cup.push_back({std::move(e.left), std::move(e.right), std::move(e.value)});
    r.success = true;
    return r;
}

CohomologyReport run_verify(const Scenario& s, const RunOptions& opt) {
    CohomologyReport r = report_header(s, "verify");
    Checks checks(r.checks);

    const AxiomReport axioms = scenario_checks(s);
    for (const auto& a : axioms.checks)
        r.checks.push_back({"axiom: " + a.name, a.passed, a.witness});
    if (!axioms.all_passed()) {
        r.success = false;
        return r;
    }

    const auto ctx = make_context(s);
    r.dual_dims = ctx->dual().dims();
    const int w_min = lowest_weight(*ctx);
    const int w_max = static_cast<int>(s.params.weight_max);
    const int w_small = std::min(w_max, 4);
    std::mt19937 rng(s.params.seed);

    checks.run("Koszul complex exact for weights <= " + std::to_string(std::min(w_max, 6)), [&]() -> std::string {
        const auto k = koszul_complex_check(s.algebra, static_cast<unsigned>(s.algebra->n()) + 1,
                                            static_cast<unsigned>(std::min(w_max, 6)));
        if (!k.dims_agree)
            return "quotient and intersection dimensions differ";
        if (!k.d_squared_zero)
            return "d^2 != 0";
        for (const auto& st : k.strands)
            if (!st.exact)
                return "homology at weight " + std::to_string(st.weight) + ": " + dims_text(st.homology);
        return {};
    });

    const auto strands = compute_strands(*ctx, w_min, w_max, opt.threads);

    checks.run("d^2 = 0 on every strand for weights " + std::to_string(w_min) + ".." + std::to_string(w_max),
               [&]() -> std::string {
                   for (int w = w_min; w <= w_max; ++w) {
                       const auto st = ctx->strand(w);
                       for (unsigned m = 0; m + 1 < st->degrees(); ++m)
                           if (!(st->differential(m + 1) * st->differential(m)).is_zero())
                               return "w=" + std::to_string(w) + ", m=" + std::to_string(m);
                   }
                   return {};
               });

    checks.run("Leibniz rule on 100 random pairs", [&]() -> std::string {
        for (int k = 0; k < 100; ++k) {
            const auto [w1, m1] = random_position(*ctx, w_min, w_small, rng);
            const auto [w2, m2] = random_position(*ctx, w_min, w_small, rng);
            const Cochain x = random_cochain(*ctx->strand(w1), m1, rng);
            const Cochain y = random_cochain(*ctx->strand(w2), m2, rng);
            const Scalar sign = m1 % 2 == 0 ? Scalar(1) : Scalar(-1);
            const Cochain lhs = ctx->differential(ctx->product(x, y));
            const Cochain rhs =
                ctx->product(ctx->differential(x), y) + sign * ctx->product(x, ctx->differential(y));
            if (!(lhs - rhs).is_zero())
                return "x = " + ctx->format(x) + ", y = " + ctx->format(y);
        }
        return {};
    });

    checks.run("action commutes with d for every H basis element on 50 random cochains", [&]() -> std::string {
        for (int k = 0; k < 50; ++k) {
            const auto [w, m] = random_position(*ctx, w_min, w_small, rng);
            const Cochain x = random_cochain(*ctx->strand(w), m, rng);
            for (std::size_t b = 0; b < s.hopf->dim(); ++b) {
                const HopfElement hb = s.hopf->basis(b);
                if (!(ctx->h_act(ctx->differential(x), hb) - ctx->differential(ctx->h_act(x, hb))).is_zero())
                    return "h = " + s.hopf->label(b) + ", x = " + ctx->format(x);
            }
        }
        return {};
    });

    checks.run("Euler characteristic per strand", [&]() -> std::string {
        for (const auto& sc : strands) {
            long lhs = 0;
            long rhs = 0;
            const auto st = ctx->strand(sc.w);
            for (unsigned m = 0; m < sc.full.size(); ++m) {
                const long sign = m % 2 == 0 ? 1 : -1;
                lhs += sign * static_cast<long>(sc.full[m].dim());
                rhs += sign * static_cast<long>(st->dim(m));
            }
            if (lhs != rhs)
                return "w=" + std::to_string(sc.w) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
        }
        return {};
    });

    checks.run("integral projection is idempotent on cohomology", [&]() -> std::string {
        for (const auto& sc : strands)
            for (unsigned m = 0; m < sc.invariant.size(); ++m) {
                const auto again = invariants(*ctx, sc.invariant[m], ctx->integral());
                if (again.representatives != sc.invariant[m].representatives)
                    return "w=" + std::to_string(sc.w) + ", m=" + std::to_string(m);
            }
        return {};
    });

    checks.run("projecting classes and projecting cocycles agree", [&]() -> std::string {
        for (const auto& sc : strands)
            for (unsigned m = 0; m < sc.full.size(); ++m) {
                const auto other = invariants_from_cocycles(*ctx, sc.full[m], ctx->integral());
                if (other.representatives != sc.invariant[m].representatives)
                    return "w=" + std::to_string(sc.w) + ", m=" + std::to_string(m);
            }
        return {};
    });

    checks.run("centre of A#H equals HH^0 for weights 0.." + std::to_string(w_max), [&]() -> std::string {
        for (const auto& sc : strands) {
            if (sc.w < 0)
                continue;
            const std::size_t c = center_dimension(ctx->smash(), static_cast<unsigned>(sc.w));
            if (c != sc.invariant[0].dim())
                return "w=" + std::to_string(sc.w) + ": centre " + std::to_string(c) + ", HH^0 " +
                       std::to_string(sc.invariant[0].dim());
        }
        return {};
    });

    if (s.hopf->dim() == 1)
        checks.run("full and invariant cohomology coincide", [&]() -> std::string {
            for (const auto& sc : strands)
                for (unsigned m = 0; m < sc.full.size(); ++m)
                    if (sc.full[m].representatives != sc.invariant[m].representatives)
                        return "w=" + std::to_string(sc.w) + ", m=" + std::to_string(m);
            return {};
        });

    // Cup products of invariant classes of small weight.
    const int w_cup = static_cast<int>(s.params.cup_weight_max);
    std::vector<StrandCohomology> cup_strands = compute_strands(*ctx, w_min, 2 * w_cup, opt.threads);
    std::unique_ptr<InvariantFrames> frames;
    std::vector<CupEntry> entries;
    checks.run("products of invariant classes are invariant", [&]() -> std::string {
        frames = std::make_unique<InvariantFrames>(build_frames(*ctx, cup_strands));
        entries = cup_pairs(*ctx, factor_classes(*frames, w_cup), *frames, opt.threads);
        return {};
    });
    if (frames) {
        const auto factors = factor_classes(*frames, w_cup);
        const std::size_t n = factors.size();
        checks.run("graded commutativity of invariant cup products", [&]() -> std::string {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar sign = (factors[a].second.m() * factors[b].second.m()) % 2 == 0 ? Scalar(1)
                                                                                                  : Scalar(-1);
                    LabelCombination flipped;
                    for (const auto& [label, c] : entries[b * n + a].value)
                        flipped[label] = sign * c;
                    if (flipped != entries[a * n + b].value)
                        return factors[a].first + " * " + factors[b].first;
                }
            return {};
        });
        checks.run("unit class is a two-sided identity", [&]() -> std::string {
            const Cochain one = ctx->unit();
            for (const auto& [label, c] : factors)
                if (!class_equal(*ctx, ctx->product(one, c), c) || !class_equal(*ctx, ctx->product(c, one), c))
                    return label;
            return {};
        });
    }

    checks.run("dimensions are independent of q in {1, 2, 3, -1}", [&]() -> std::string {
        const int w_q = std::min(w_max, 6);
        std::vector<StrandCohomology> base(strands.begin(),
                                           strands.begin() + static_cast<std::ptrdiff_t>(w_q - w_min + 1));
        const auto full = dimension_table(base, false);
        const auto inv = dimension_table(base, true);
        for (long qv : {1L, 2L, 3L, -1L}) {
            const Scenario other = parse_scenario(s.source, Scalar(qv));
            validate_scenario(other);
            const auto octx = make_context(other);
            const auto os = compute_strands(*octx, w_min, w_q, opt.threads);
            if (dimension_table(os, false) != full || dimension_table(os, true) != inv)
                return "q = " + std::to_string(qv);
        }
        return {};
    });

    if (s.kp_plane()) {
        const KPFamilies families(*ctx, s.params.q);
        std::vector<std::pair<unsigned, int>> bidegrees{{2, -2}};
        for (unsigned m = 0; m <= 2; ++m)
            for (int w = 0; w <= std::min(w_max, 8); w += 2)
                bidegrees.emplace_back(m, w);
        checks.run("listed invariant classes form a basis", [&]() -> std::string {
            for (const auto& [m, w] : bidegrees)
                families.verify_basis(m, w);
            return {};
        });
        checks.run("class identities for i, j <= " + std::to_string(s.params.index_max), [&]() -> std::string {
            for (const auto& id : check_class_identities(families, s.params.index_max))
                if (!id.holds)
                    return id.name;
            return {};
        });
    }

    r.success = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckLine& c) { return c.passed; });
    return r;
}

CohomologyReport run_tables(const Scenario& s, const RunOptions& opt) {
    if (!s.kp_plane())
        throw Error(ErrorCode::InvalidArgument,
                    "tables need the Kac-Paljutkin action on the quantum (-1)-plane (builtin kac-paljutkin-qplane)");
    validate_scenario(s);
    CohomologyReport r = report_header(s, "tables");
    const auto ctx = make_context(s);
    r.dual_dims = ctx->dual().dims();
    r.weight_max = 8 * s.params.index_max;
    const KPFamilies families(*ctx, s.params.q);
    const TablesResult t = compute_tables(families, s.params.index_max, opt.threads);
    r.verified_bases = t.verified_bases;
    for (const auto& c : t.cells)
        r.tables.push_back({c.table, c.left.text(), c.right.text(), c.expected, c.computed});
    bool identities = true;
    for (const auto& id : check_class_identities(families, s.params.index_max)) {
        r.checks.push_back({"identity " + id.name, id.holds, {}});
        identities = identities && id.holds;
    }
    r.checks.push_back({"table cells match expected laws", t.mismatches() == 0,
                        t.mismatches() == 0 ? std::string()
                                            : std::to_string(t.mismatches()) + " of " +
                                                  std::to_string(t.cells.size()) + " cells differ"});
    r.success = identities && t.mismatches() == 0;
    return r;
}

} // namespace hhs
