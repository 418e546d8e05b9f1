#include "tuttelab/cache.hpp"
#include "tuttelab/classpoly.hpp"
#include "tuttelab/config.hpp"
#include "tuttelab/counting.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/fitting.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/montecarlo.hpp"
#include "tuttelab/observable.hpp"
#include "tuttelab/reduction.hpp"
#include "tuttelab/reference_tables.hpp"
#include "tuttelab/serialize.hpp"
#include "tuttelab/thermo.hpp"
#include "tuttelab/tutte.hpp"
#include "tuttelab/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace tuttelab;
using nlohmann::json;

namespace {

// Symbolic expansions carry up to 2^m terms; past this the CLI refuses
// rather than letting the process balloon.
constexpr int kPrintEdgeCap = 20;
constexpr int kPeriodEdgeCap = 16;

FieldSpec field_from_size(uint64_t size) {
    if (size < 2) throw UsageError("field size must be at least 2");
    uint64_t p = 2;
    while (size % p != 0) {
        ++p;
        if (p * p > size) {
            p = size;
            break;
        }
    }
    uint32_t r = 0;
    uint64_t rest = size;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1)
        throw UsageError("field size " + std::to_string(size) + " is not a prime power");
    return make_field(static_cast<uint32_t>(p), r);
}

MultiPoly specialized_z(const Graph& g, long long q) {
    if (g.edge_count() > kPrintEdgeCap)
        throw UsageError("graph has " + std::to_string(g.edge_count()) +
                         " edges; the symbolic partition function is capped at " +
                         std::to_string(kPrintEdgeCap));
    return tutte_delcon(g).with_q_set(BigInt(q));
}

// tutte_count through the cache; the key mirrors the record the counter
// produces, including the q = 0 mod p collapse to the zero polynomial.
CountRecord cached_tutte_count(CountCache& cache, const Graph& g, long long q,
                               const FieldSpec& field) {
    if (!cache.enabled()) return tutte_count(g, q, field);
    std::string hash;
    const long long p = field.p();
    if (g.vertex_count() > 0 && ((q % p) + p) % p == 0) {
        MultiPoly zero(g.edge_count());
        hash = PolySystem(std::move(zero)).hash();
    } else {
        hash = PolySystem(specialized_z(g, q)).hash();
    }
    return cache.get_or_compute(CountCache::key_of(hash, q, field.p(), field.r()),
                                [&] { return tutte_count(g, q, field); });
}

std::vector<std::pair<Graph, std::string>> chain_blocks(const FamilySpec& fam) {
    std::vector<std::pair<Graph, std::string>> blocks;
    if (fam.kind == FamilySpec::Kind::TetraChain) {
        Graph k4 = build_family({FamilySpec::Kind::Complete, 4});
        for (int i = 0; i < fam.a; ++i) blocks.emplace_back(k4, "k4");
        return blocks;
    }
    if (fam.kind == FamilySpec::Kind::PolygonChain) {
        Graph poly = build_family({FamilySpec::Kind::Polygon, fam.a + 1});
        Graph bridge = build_family({FamilySpec::Kind::Tree, 1});
        for (int i = 0; i < fam.c; ++i) {
            blocks.emplace_back(poly, "polygon:" + std::to_string(fam.a + 1));
            if (i + 1 < fam.c)
                for (int j = 0; j < fam.b; ++j) blocks.emplace_back(bridge, "bridge");
        }
        return blocks;
    }
    throw UsageError("the chain method needs a tetrachain or polychain family");
}

std::vector<std::string> count_annotations(const std::optional<FamilySpec>& fam, long long q,
                                           const FieldSpec& field, const BigInt& count) {
    std::vector<std::string> notes;
    if (!fam || field.r() != 1) return notes;
    const bool is_k4 = (fam->kind == FamilySpec::Kind::Complete && fam->a == 4) ||
                       (fam->kind == FamilySpec::Kind::TetraChain && fam->a == 1);
    if (is_k4 && q == 2) {
        if (auto n = reference::k4_ising_lookup(field.p())) {
            notes.push_back(count == BigInt(*n)
                                ? "matches the published tetrahedron count table (q=2, p=" +
                                      std::to_string(field.p()) + ")"
                                : "CONTRADICTS the published tetrahedron count table value " +
                                      std::to_string(*n));
        }
    }
    if (is_k4 && field.p() == 11 && q >= 0 && q <= 10) {
        long long published = reference::k4_per_q_f11[q].published;
        if (q == 2) {
            notes.push_back(
                "published fibration table prints 173799 here, contradicting both the "
                "published count table and direct enumeration (180333)");
        } else {
            notes.push_back(count == BigInt(published)
                                ? "matches the published fibration table (q=" +
                                      std::to_string(q) + ")"
                                : "CONTRADICTS the published fibration table value " +
                                      std::to_string(published));
        }
    }
    if (fam->kind == FamilySpec::Kind::Polygon && q == 2 && field.p() != 2 && fam->a >= 2 &&
        fam->a <= 6) {
        const int m = fam->a - 1;
        BigInt expect = 0, power = 1, size(static_cast<long long>(field.size()));
        for (int i = 0; i <= m; ++i) {
            expect += BigInt(reference::polygon_q2_counts[m - 1][i]) * power;
            power *= size;
        }
        notes.push_back(count == expect
                            ? "matches the polygon closed form"
                            : "CONTRADICTS the polygon closed form value " + expect.str());
    }
    return notes;
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    throw std::logic_error("emit called for non-json format");
}

int run_poly(const std::string& graph_arg, const std::string& which,
             const std::string& observable, const std::string& format) {
    Graph g = load_graph_arg(graph_arg);
    json out;
    std::string text;
    if (which == "second") {
        if (observable.empty())
            throw UsageError("poly ... second needs --observable");
        RatPoly f = parse_observable(observable, g.edge_count());
        if (g.edge_count() > kPrintEdgeCap)
            throw UsageError("edge count exceeds the symbolic cap");
        RatPoly p = second_polynomial(g, f);
        out = jsonio::poly_json(p);
        text = p.str();
    } else {
        MultiPoly p(0);
        if (which == "tutte") {
            if (g.edge_count() > kPrintEdgeCap)
                throw UsageError("edge count exceeds the symbolic cap");
            p = tutte_delcon(g);
        } else if (which == "kirchhoff") {
            p = kirchhoff(g);
        } else if (which == "phi") {
            p = phi(g);
        } else {
            if (g.edge_count() > kPrintEdgeCap)
                throw UsageError("edge count exceeds the symbolic cap");
            p = normalized_tutte(g);
        }
        out = jsonio::poly_json(p);
        text = p.str();
    }
    if (format == "json") {
        emit(json{{"command", "poly"},
                  {"inputs", json{{"graph", graph_arg}, {"which", which}}},
                  {"polynomial", out}},
             format);
    } else {
        std::cout << text << "\n";
    }
    return 0;
}

int run_count(const std::string& graph_arg, long long q, uint32_t p, uint32_t r,
              std::string method, const std::string& cache_dir, const std::string& format) {
    Graph g = load_graph_arg(graph_arg);
    FieldSpec field = make_field(p, r);
    std::optional<FamilySpec> fam = parse_family(graph_arg);
    CountCache cache(cache_dir);

    if (method == "auto") {
        const bool chainable = fam && (fam->kind == FamilySpec::Kind::TetraChain ||
                                       fam->kind == FamilySpec::Kind::PolygonChain) &&
                               q % static_cast<long long>(p) != 0;
        method = chainable ? "chain" : "brute";
    }

    CountRecord rec;
    if (method == "brute") {
        rec = cached_tutte_count(cache, g, q, field);
    } else if (method == "reduced") {
        PolySystem sys(specialized_z(g, q));
        std::string key = CountCache::key_of(sys.hash(), std::nullopt, p, r);
        rec = cache.enabled() ? cache.get_or_compute(key, [&] { return reduced_count(sys, field); })
                              : reduced_count(sys, field);
    } else if (method == "chain") {
        if (!fam) throw UsageError("the chain method needs a family argument");
        std::vector<std::pair<Graph, CountRecord>> blocks;
        for (const auto& [bg, blabel] : chain_blocks(*fam))
            blocks.emplace_back(bg, cached_tutte_count(cache, bg, q, field));
        rec = chain_count(blocks, q, field);
        rec.label = graph_arg;
    } else if (method == "class") {
        ClassPoly cls;
        int ambient = g.edge_count();
        if (q == 1) {
            cls = class_q1(g.edge_count());
        } else if (fam && fam->kind == FamilySpec::Kind::Polygon) {
            if (q % static_cast<long long>(p) == 0 || q % static_cast<long long>(p) == 1)
                throw UsageError("the polygon class formula needs q distinct from 0 and 1 "
                                 "in the base field");
            cls = class_polygon(fam->a - 1);
        } else if (fam && fam->kind == FamilySpec::Kind::Tree) {
            if (q % static_cast<long long>(p) == 0)
                throw UsageError("the tree class formula needs q nonzero in the base field");
            cls = class_tree(fam->a);
        } else if (fam && fam->kind == FamilySpec::Kind::PolygonChain) {
            if (q % static_cast<long long>(p) == 0 || q % static_cast<long long>(p) == 1)
                throw UsageError("the chain class formula needs q distinct from 0 and 1 "
                                 "in the base field");
            std::vector<ClassPoly> pieces(fam->c, class_polygon(fam->a));
            cls = class_chain(pieces, fam->b * (fam->c - 1));
        } else {
            throw UsageError("no class formula is available for this input "
                             "(polygons, trees, polychains, or q = 1)");
        }
        rec.label = graph_arg;
        rec.spin_q = q;
        rec.p = p;
        rec.r = r;
        rec.arity = ambient;
        rec.count = evaluate_class(cls, BigInt(static_cast<long long>(field.size())), ambient);
        rec.method = "class-formula";
    } else {
        throw UsageError("unknown method: " + method);
    }

    auto notes = count_annotations(fam, q, field, rec.count);
    if (format == "json") {
        json j{{"command", "count"},
               {"inputs", json{{"graph", graph_arg},
                               {"q", q},
                               {"p", p},
                               {"r", r},
                               {"method", method}}},
               {"record", jsonio::record_json(rec)},
               {"annotations", notes}};
        if (cache.enabled())
            j["cache"] = json{{"hits", cache.hits}, {"misses", cache.misses},
                              {"audits", cache.audits}};
        emit(j, format);
    } else {
        std::cout << "N = " << rec.count.str() << "   (method " << rec.method << ", field F_"
                  << field.size() << ", " << rec.wall_ms << " ms)\n";
        for (const std::string& n : notes) std::cout << "note: " << n << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, double max_points, const std::string& format) {
    VerifyReport rep;
    if (suite == "identities")
        rep = verify_identities();
    else if (suite == "reference-tables")
        rep = verify_reference_tables();
    else if (suite == "oracle")
        rep = verify_oracle(max_points);
    else
        throw UsageError("unknown suite: " + suite +
                         " (expected identities, reference-tables, or oracle)");

    if (format == "json") {
        json checks = json::array();
        for (const CheckLine& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        emit(json{{"command", "verify"},
                  {"suite", rep.suite},
                  {"checks", std::move(checks)},
                  {"failures", rep.failures()}},
             format);
    } else {
        for (const CheckLine& c : rep.checks)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  " << c.detail << "\n";
        std::cout << rep.checks.size() << " checks, " << rep.failures() << " failures\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int run_mc(const std::string& graph_arg, long long q, uint32_t p, uint32_t r, uint64_t trials,
           double delta, uint64_t seed, bool per_q, const std::string& cache_dir,
           const std::string& format) {
    Graph g = load_graph_arg(graph_arg);
    FieldSpec field = make_field(p, r);
    McConfig cfg;
    cfg.trials = trials;
    cfg.delta = delta;
    cfg.seed = seed;

    if (per_q) {
        McFibrationReport rep = fibration_mc_probe(g, field, cfg);
        if (format == "json") {
            emit(json{{"command", "mc"},
                      {"inputs", json{{"graph", graph_arg}, {"p", p}, {"r", r},
                                      {"trials", trials}, {"delta", delta}, {"seed", seed},
                                      {"per_q", true}}},
                      {"probe", jsonio::mc_probe_json(rep)}},
                 format);
        } else if (format == "csv") {
            std::cout << "q,estimate,epsilon,trials,seed\n";
            for (size_t i = 0; i < rep.per_q.size(); ++i)
                std::cout << i + 2 << "," << rep.per_q[i].estimate << ","
                          << rep.per_q[i].epsilon << "," << rep.per_q[i].trials << ","
                          << rep.per_q[i].seed << "\n";
        } else {
            for (size_t i = 0; i < rep.per_q.size(); ++i)
                std::cout << "q=" << i + 2 << ": estimate " << rep.per_q[i].estimate
                          << ", epsilon " << rep.per_q[i].epsilon << "\n";
            std::cout << rep.detail << "\n";
        }
        return 0;
    }

    PolySystem sys(specialized_z(g, q));
    CountCache cache(cache_dir);
    std::optional<BigInt> hint;
    if (cache.enabled())
        hint = cache
                   .get_or_compute(CountCache::key_of(sys.hash(), q, p, r),
                                   [&] { return tutte_count(g, q, field); })
                   .count;
    McComparisonRow row = mc_vs_exact(sys, field, cfg, hint);
    if (format == "json") {
        emit(json{{"command", "mc"},
                  {"inputs", json{{"graph", graph_arg}, {"q", q}, {"p", p}, {"r", r},
                                  {"trials", trials}, {"delta", delta}, {"seed", seed}}},
                  {"row", jsonio::mc_row_json(row)}},
             format);
    } else if (format == "csv") {
        std::cout << "trials,p,exact,estimate,error,bound,absolute,seed\n";
        std::cout << row.trials << "," << row.p << "," << row.exact.str() << "," << row.estimate
                  << "," << row.error << "," << row.bound << "," << (row.absolute ? 1 : 0) << ","
                  << row.seed << "\n";
    } else {
        std::cout << "estimate " << row.estimate << " vs exact " << row.exact.str() << ": "
                  << (row.absolute ? "absolute" : "relative") << " error " << row.error
                  << ", bound " << row.bound << " (" << row.trials << " trials, seed "
                  << row.seed << ")\n";
    }
    return 0;
}

int run_fit(const std::string& graph_arg, std::optional<long long> q, int degree,
            const std::vector<uint64_t>& field_sizes, const std::vector<std::string>& raw_points,
            const std::vector<uint64_t>& exclude, bool auto_exclude,
            const std::string& cache_dir, const std::string& format) {
    std::vector<FitPoint> points;
    std::vector<BigInt> excluded;
    for (uint64_t e : exclude) excluded.push_back(BigInt(static_cast<long long>(e)));

    if (!raw_points.empty()) {
        if (!graph_arg.empty() || q)
            throw UsageError("--point mode and graph mode are mutually exclusive");
        for (const std::string& s : raw_points) {
            auto eq = s.find('=');
            if (eq == std::string::npos)
                throw UsageError("--point expects SIZE=COUNT, got: " + s);
            points.push_back({BigInt(s.substr(0, eq)), BigInt(s.substr(eq + 1))});
        }
    } else {
        if (graph_arg.empty() || !q)
            throw UsageError("fit needs either --point entries or a graph with --q");
        if (field_sizes.empty()) throw UsageError("fit needs --fields");
        Graph g = load_graph_arg(graph_arg);
        CountCache cache(cache_dir);
        for (uint64_t size : field_sizes) {
            FieldSpec field = field_from_size(size);
            if (auto_exclude && *q % static_cast<long long>(field.p()) == 0) {
                excluded.push_back(BigInt(static_cast<long long>(size)));
                continue;
            }
            CountRecord rec = cached_tutte_count(cache, g, *q, field);
            points.push_back({BigInt(static_cast<long long>(size)), rec.count});
        }
    }

    CountabilityVerdict verdict = fit_count_polynomial(points, degree, excluded);
    if (format == "json") {
        json pts = json::array();
        for (const FitPoint& pt : points)
            pts.push_back(json{{"size", pt.q.str()}, {"count", pt.n.str()}});
        emit(json{{"command", "fit"},
                  {"inputs", json{{"degree", degree}, {"points", std::move(pts)}}},
                  {"verdict", jsonio::verdict_json(verdict)}},
             format);
    } else {
        const char* status = verdict.status == CountabilityVerdict::Status::PolynomialCandidate
                                 ? "polynomial candidate"
                             : verdict.status == CountabilityVerdict::Status::NonPolynomial
                                 ? "non-polynomial"
                                 : "inconclusive";
        std::cout << "verdict: " << status << " (" << verdict.points_used << " points)\n";
        if (verdict.candidate()) std::cout << "N(p) = " << UniPoly(verdict.coeffs).str("p") << "\n";
        if (!verdict.witness.empty()) std::cout << "witness: " << verdict.witness << "\n";
        if (!verdict.excluded.empty()) {
            std::cout << "excluded sizes:";
            for (const BigInt& e : verdict.excluded) std::cout << " " << e.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int run_fibration(const std::string& graph_arg, uint32_t p, uint32_t r,
                  const std::string& format) {
    Graph g = load_graph_arg(graph_arg);
    FieldSpec field = make_field(p, r);
    FibrationReport rep = fibration_test(g, field);
    if (format == "json") {
        emit(json{{"command", "fibration"},
                  {"inputs", json{{"graph", graph_arg}, {"p", p}, {"r", r}}},
                  {"report", jsonio::fibration_json(rep)}},
             format);
    } else {
        for (size_t q = 0; q < rep.counts.size(); ++q)
            std::cout << "q=" << q << ": " << rep.counts[q].str() << "\n";
        std::cout << "anchors: q=0 " << (rep.q0_ok ? "ok" : "WRONG") << ", q=1 "
                  << (rep.q1_ok ? "ok" : "WRONG") << "\n"
                  << rep.detail << "\n";
    }
    return 0;
}

int run_class(const std::string& which, int m, int k, int blocks,
              std::optional<uint64_t> eval_size, const std::string& format) {
    ClassPoly cls;
    int ambient = 0;
    if (which == "polygon") {
        cls = class_polygon(m);
        ambient = m + 1;
    } else if (which == "q1") {
        cls = class_q1(m);
        ambient = m;
    } else if (which == "tree") {
        cls = class_tree(m);
        ambient = m;
    } else if (which == "chain") {
        std::vector<ClassPoly> pieces(blocks, class_polygon(m));
        cls = class_chain(pieces, k * (blocks - 1));
        ambient = blocks * (m + 1) + k * (blocks - 1);
    } else {
        throw UsageError("unknown class: " + which + " (expected polygon, q1, tree, chain)");
    }

    std::optional<BigInt> predicted;
    if (eval_size) {
        FieldSpec field = field_from_size(*eval_size);  // validates prime power
        predicted = evaluate_class(cls, BigInt(static_cast<long long>(field.size())), ambient);
    }
    if (format == "json") {
        json j{{"command", "class"},
               {"inputs", json{{"which", which}, {"m", m}, {"k", k}, {"blocks", blocks}}},
               {"class", jsonio::class_json(cls)},
               {"ambient_dim", ambient}};
        if (predicted) j["predicted_count"] = predicted->str();
        emit(j, format);
    } else {
        std::cout << "class(T) = " << cls.in_t.str("T") << "\n";
        std::cout << "class(L) = " << cls.in_l().str("L") << "\n";
        if (predicted)
            std::cout << "predicted count over F_" << *eval_size << " in dimension " << ambient
                      << ": " << predicted->str() << "\n";
    }
    return 0;
}

int run_period(const std::string& graph_arg, long long q, const std::string& observable,
               uint64_t samples, uint64_t seed, bool normalized,
               const std::vector<std::string>& batch, const std::string& format) {
    auto estimate_one = [&](const Graph& g, const std::string& label) {
        if (g.edge_count() > kPeriodEdgeCap)
            throw UsageError("period estimation expands the partition function; capped at " +
                             std::to_string(kPeriodEdgeCap) + " edges");
        RatPoly f = observable.empty()
                        ? [&] {
                              RatPoly sum(g.edge_count());
                              for (int e = 0; e < g.edge_count(); ++e)
                                  sum += RatPoly::var_t(g.edge_count(), e);
                              return sum;
                          }()
                        : parse_observable(observable, g.edge_count());
        PeriodEstimate est = normalized ? normalized_period(g, q, f, samples, seed)
                                        : period_estimate(g, q, f, samples, seed);
        json j = jsonio::period_json(est);
        j["graph"] = label;
        j["normalized"] = normalized;
        return std::pair<PeriodEstimate, json>(est, std::move(j));
    };

    if (!batch.empty()) {
        json rows = json::array();
        for (const std::string& triple : batch) {
            int m = 0, k = 0, n = 0;
            if (std::sscanf(triple.c_str(), "%d:%d:%d", &m, &k, &n) != 3)
                throw UsageError("--batch expects m:k:N triples, got: " + triple);
            FamilySpec fam{FamilySpec::Kind::PolygonChain, m, k, n};
            std::string label = "polychain:m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                                ",N=" + std::to_string(n);
            auto [est, j] = estimate_one(build_family(fam), label);
            rows.push_back(std::move(j));
            if (format != "json")
                std::cout << label << ": " << est.value << " +- " << est.std_error << "\n";
        }
        if (format == "json")
            emit(json{{"command", "period"},
                      {"inputs", json{{"q", q}, {"samples", samples}, {"seed", seed}}},
                      {"batch", std::move(rows)}},
                 format);
        return 0;
    }

    if (graph_arg.empty()) throw UsageError("period needs a graph or --batch");
    auto [est, j] = estimate_one(load_graph_arg(graph_arg), graph_arg);
    if (format == "json") {
        emit(json{{"command", "period"},
                  {"inputs", json{{"graph", graph_arg}, {"q", q}, {"observable", observable},
                                  {"samples", samples}, {"seed", seed}}},
                  {"estimate", std::move(j)}},
             format);
    } else {
        std::cout << (normalized ? "normalized period" : "period") << " = " << est.value
                  << " +- " << est.std_error << "  (" << est.samples << " samples, seed "
                  << est.seed << ", integrand in [" << est.integrand_min << ", "
                  << est.integrand_max << "], measure " << est.measure << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph polynomials, hypersurface point counts, class formulas, and periods"};
    app.require_subcommand(1);

    int threads = 0;
    std::string cache_dir;
    std::string format = "text";
    app.add_option("--threads", threads, "cap the worker pool");
    app.add_option("--cache-dir", cache_dir, "count cache directory")
        ->envname("TUTTELAB_CACHE_DIR");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* poly = app.add_subcommand("poly", "print a graph polynomial");
    std::string poly_graph, poly_which, poly_obs;
    poly->add_option("graph", poly_graph, "family spec or graph JSON file")->required();
    poly->add_option("which", poly_which, "polynomial to print")
        ->required()
        ->check(CLI::IsMember({"tutte", "kirchhoff", "phi", "normalized", "second"}));
    poly->add_option("--observable", poly_obs, "observable F for `second`");

    auto* count = app.add_subcommand("count", "count points of the hypersurface");
    std::string count_graph, count_method = "auto";
    long long count_q = 2;
    uint32_t count_p = 0, count_r = 1;
    count->add_option("graph", count_graph)->required();
    count->add_option("--q", count_q, "spin count")->required();
    count->add_option("--p", count_p, "field characteristic")->required();
    count->add_option("--r", count_r, "field extension degree");
    count->add_option("--method", count_method)
        ->check(CLI::IsMember({"auto", "brute", "reduced", "class", "chain"}));

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    std::string verify_suite;
    double verify_max_points = 1e6;
    verify->add_option("suite", verify_suite)
        ->required()
        ->check(CLI::IsMember({"identities", "reference-tables", "oracle"}));
    verify->add_option("--max-points", verify_max_points, "evaluation-space cap (oracle)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo count estimate");
    std::string mc_graph;
    long long mc_q = 2;
    uint32_t mc_p = 0, mc_r = 1;
    uint64_t mc_trials = 10000, mc_seed = 0;
    double mc_delta = 0.05;
    bool mc_per_q = false;
    mc->add_option("graph", mc_graph)->required();
    mc->add_option("--q", mc_q, "spin count (ignored with --per-q)");
    mc->add_option("--p", mc_p)->required();
    mc->add_option("--r", mc_r);
    mc->add_option("--trials", mc_trials);
    mc->add_option("--delta", mc_delta, "confidence parameter");
    mc->add_option("--seed", mc_seed);
    mc->add_flag("--per-q", mc_per_q, "probe every spin value in 2..p-1");

    auto* fit = app.add_subcommand("fit", "fit an integer count polynomial");
    std::string fit_graph;
    long long fit_q_raw = -424242;
    int fit_degree = 0;
    std::vector<uint64_t> fit_fields, fit_exclude;
    std::vector<std::string> fit_points;
    bool fit_auto_exclude = false;
    fit->add_option("graph", fit_graph);
    fit->add_option("--q", fit_q_raw, "spin count");
    fit->add_option("--degree", fit_degree)->required();
    fit->add_option("--fields", fit_fields, "field sizes to count over")->delimiter(',');
    fit->add_option("--point", fit_points, "raw SIZE=COUNT data point (repeatable)");
    fit->add_option("--exclude", fit_exclude, "sizes recorded as excluded")->delimiter(',');
    fit->add_flag("--auto-exclude", fit_auto_exclude,
                  "drop field sizes whose characteristic divides q");

    auto* fib = app.add_subcommand("fibration", "per-spin-count fibration test");
    std::string fib_graph;
    uint32_t fib_p = 0, fib_r = 1;
    fib->add_option("graph", fib_graph)->required();
    fib->add_option("--p", fib_p)->required();
    fib->add_option("--r", fib_r);

    auto* cls = app.add_subcommand("class", "closed-form class predictions");
    std::string cls_which;
    int cls_m = 1, cls_k = 1, cls_blocks = 1;
    std::optional<uint64_t> cls_eval;
    cls->add_option("which", cls_which)
        ->required()
        ->check(CLI::IsMember({"polygon", "q1", "tree", "chain"}));
    cls->add_option("--m", cls_m, "size parameter")->required();
    cls->add_option("--k", cls_k, "connector length (chain)");
    cls->add_option("--blocks", cls_blocks, "block count (chain)");
    cls->add_option("--eval", cls_eval, "also evaluate the predicted count at this field size");

    auto* period = app.add_subcommand("period", "simplex average of the Boltzmann mean");
    std::string period_graph, period_obs;
    long long period_q = 2;
    uint64_t period_samples = 100000, period_seed = 0;
    bool period_normalized = false;
    std::vector<std::string> period_batch;
    period->add_option("graph", period_graph);
    period->add_option("--q", period_q);
    period->add_option("--observable", period_obs,
                       "expression over t_e (defaults to the coordinate sum)");
    period->add_option("--samples", period_samples);
    period->add_option("--seed", period_seed);
    period->add_flag("--normalized", period_normalized, "divide by the simplex volume");
    period->add_option("--batch", period_batch, "polychain m:k:N triples")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (threads > 0) config::set_threads(threads);
        if (poly->parsed()) return run_poly(poly_graph, poly_which, poly_obs, format);
        if (count->parsed())
            return run_count(count_graph, count_q, count_p, count_r, count_method, cache_dir,
                             format);
        if (verify->parsed()) return run_verify(verify_suite, verify_max_points, format);
        if (mc->parsed())
            return run_mc(mc_graph, mc_q, mc_p, mc_r, mc_trials, mc_delta, mc_seed, mc_per_q,
                          cache_dir, format);
        if (fit->parsed()) {
            std::optional<long long> fq;
            if (fit_q_raw != -424242) fq = fit_q_raw;
            return run_fit(fit_graph, fq, fit_degree, fit_fields, fit_points, fit_exclude,
                           fit_auto_exclude, cache_dir, format);
        }
        if (fib->parsed()) return run_fibration(fib_graph, fib_p, fib_r, format);
        if (cls->parsed()) return run_class(cls_which, cls_m, cls_k, cls_blocks, cls_eval, format);
        if (period->parsed())
            return run_period(period_graph, period_q, period_obs, period_samples, period_seed,
                              period_normalized, period_batch, format);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
