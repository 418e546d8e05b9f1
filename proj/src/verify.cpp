#include "tuttelab/verify.hpp"

#include "tuttelab/classpoly.hpp"
#include "tuttelab/config.hpp"
#include "tuttelab/counting.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/reduction.hpp"
#include "tuttelab/reference_tables.hpp"
#include "tuttelab/tutte.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace tuttelab {

int VerifyReport::failures() const {
    int n = 0;
    for (const CheckLine& c : checks)
        if (!c.pass) ++n;
    return n;
}

namespace {

struct NamedGraph {
    std::string name;
    Graph g;
};

std::vector<NamedGraph> identity_corpus() {
    std::vector<NamedGraph> out;
    for (int m : {3, 4, 5}) out.push_back({"polygon:" + std::to_string(m),
                                           build_family({FamilySpec::Kind::Polygon, m})});
    for (int m : {2, 3}) out.push_back({"tree:" + std::to_string(m),
                                        build_family({FamilySpec::Kind::Tree, m})});
    out.push_back({"k4", build_family({FamilySpec::Kind::Complete, 4})});
    out.push_back({"bowtie", Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})});
    out.push_back({"loop+bridge", Graph(2, {{0, 0}, {0, 1}})});
    return out;
}

MultiPoly q_power(int arity, int k) {
    MultiPoly p(arity);
    Exps e(arity + 1, 0);
    e[arity] = static_cast<uint32_t>(k);
    p.add_term(std::move(e), BigInt(1));
    return p;
}

void push(VerifyReport& rep, std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
}

MultiPoly z_at(const Graph& g, long long q) {
    return tutte_delcon(g).with_q_set(BigInt(q));
}

}  // namespace

VerifyReport verify_identities() {
    VerifyReport rep;
    rep.suite = "identities";
    const auto corpus = identity_corpus();

    for (const auto& [name, g] : corpus) {
        bool same = tutte_subset(g).key() == tutte_delcon(g).key();
        push(rep, "delcon-symbolic/" + name, same,
             same ? "subset expansion equals deletion-contraction term for term"
                  : "expansions differ");
    }

    for (const auto& [name, g] : corpus) {
        MultiPoly lhs = tutte_delcon(g);
        MultiPoly rhs = normalized_tutte(g) * q_power(g.edge_count(), g.components_count());
        bool same = lhs.key() == rhs.key();
        push(rep, "normalization/" + name, same,
             same ? "Z equals q^k(G) times the normalized polynomial" : "mismatch");
    }

    for (const auto& [name, g] : corpus) {
        if (g.edge_count() == 0) continue;
        bool ok = cremona_identity_check(g);
        push(rep, "kirchhoff-phi-reciprocity/" + name, ok,
             ok ? "Psi(t) = Phi(1/t) * prod t_e" : "reciprocity fails");
    }

    {
        std::mt19937_64 gen(0xF0C5);
        for (const auto& [name, g] : corpus) {
            if (g.vertex_count() > 6) continue;
            for (long long q : {1, 2, 3}) {
                bool all_ok = true;
                std::string bad;
                for (int rep_i = 0; rep_i < 5; ++rep_i) {
                    std::vector<BigInt> w;
                    for (int i = 0; i < g.edge_count(); ++i)
                        w.push_back(BigInt(static_cast<long long>(gen() % 9) - 3));
                    BigInt lhs = potts_state_sum(g, q, w);
                    BigInt rhs = tutte_subset(g).evaluate<BigInt>(BigInt(q), w);
                    if (lhs != rhs) {
                        all_ok = false;
                        bad = "state sum " + lhs.str() + " vs subset expansion " + rhs.str();
                        break;
                    }
                }
                push(rep, "fk-state-sum/" + name + "/q=" + std::to_string(q), all_ok,
                     all_ok ? "5 random integer weight vectors agree" : bad);
            }
        }
    }

    {
        const NamedGraph sweep[] = {
            {"polygon:3", build_family({FamilySpec::Kind::Polygon, 3})},
            {"polygon:4", build_family({FamilySpec::Kind::Polygon, 4})},
            {"k4", build_family({FamilySpec::Kind::Complete, 4})},
        };
        for (const auto& [name, g] : sweep)
            for (uint32_t p : {3u, 5u, 7u})
                for (long long q : {2, 3}) {
                    FieldSpec f = make_field(p);
                    BigRat inv_q(1, static_cast<long long>(p));
                    bool plain_ok = true, complement_ok = true, count_ok = true;
                    for (int e = 0; e < g.edge_count(); ++e) {
                        MultiPoly zg = z_at(g, q);
                        MultiPoly zc = z_at(g.contracted(e), q);
                        MultiPoly zd = z_at(g.deleted(e), q);
                        PolySystem joint(std::vector<MultiPoly>{zc, zd});
                        BigRat lhs = zfrak(PolySystem(zg), f);
                        BigRat rhs = inv_q - inv_q * zfrak(PolySystem(zc), f) +
                                     zfrak(joint, f);
                        if (lhs != rhs) plain_ok = false;
                        BigRat lhs_c = zfrak_complement(PolySystem(zg), f);
                        BigRat rhs_c = zfrak_complement(joint, f) -
                                       inv_q * zfrak_complement(PolySystem(zc), f);
                        if (lhs_c != rhs_c) complement_ok = false;
                        if (!delcon_count_identity(g, e, q, f).holds) count_ok = false;
                    }
                    std::string tag = name + "/p=" + std::to_string(p) +
                                      "/q=" + std::to_string(q);
                    push(rep, "zfrak-delcon/" + tag, plain_ok,
                         plain_ok ? "all edges" : "an edge violates the fraction identity");
                    push(rep, "zfrak-delcon-complement/" + tag, complement_ok,
                         complement_ok ? "all edges" : "an edge violates the complement form");
                    push(rep, "count-delcon/" + tag, count_ok,
                         count_ok ? "all edges" : "an edge violates the count identity");
                }
    }

    for (uint32_t p : {3u, 5u}) {
        FieldSpec f = make_field(p);
        Graph tri = build_family({FamilySpec::Kind::Polygon, 3});
        Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
        CountRecord block = tutte_count(tri, 2, f);
        CountRecord chained = chain_count({{tri, block}, {tri, block}}, 2, f);
        CountRecord direct = tutte_count(bowtie, 2, f);
        bool same = chained.count == direct.count;
        push(rep, "chain-factorization/bowtie/p=" + std::to_string(p), same,
             same ? "wedge formula equals direct enumeration (" + direct.count.str() + ")"
                  : "formula " + chained.count.str() + " vs direct " + direct.count.str());
    }

    for (uint32_t p : {3u, 5u}) {
        FieldSpec f = make_field(p);
        Graph tri = build_family({FamilySpec::Kind::Polygon, 3});
        BigInt total = 0;
        for (long long q = 0; q < p; ++q) total += tutte_count(tri, q, f).count;
        BigInt joint = tutte_count_joint(tri, f).count;
        bool same = joint == total;
        push(rep, "joint-vs-per-q-sum/polygon:3/p=" + std::to_string(p), same,
             same ? "joint (q,t) count equals the sum over residues"
                  : "joint " + joint.str() + " vs sum " + total.str());
    }

    return rep;
}

VerifyReport verify_reference_tables() {
    VerifyReport rep;
    rep.suite = "reference-tables";
    Graph k4 = build_family({FamilySpec::Kind::Complete, 4});

    for (const reference::IsingRow& row : reference::k4_ising) {
        CountRecord rec = tutte_count(k4, 2, make_field(row.p));
        bool same = rec.count == BigInt(row.n);
        std::ostringstream detail;
        detail << "computed " << rec.count.str() << ", published " << row.n << ": "
               << (same ? "matches the published count table" : "CONTRADICTS the published count table");
        push(rep, "ising-table/p=" + std::to_string(row.p), same, detail.str());
    }

    {
        FieldSpec f11 = make_field(11);
        for (const reference::PerQRow& row : reference::k4_per_q_f11) {
            CountRecord rec = tutte_count(k4, row.q, f11);
            std::ostringstream detail;
            bool pass;
            if (row.q == 2) {
                // The audited value: direct enumeration and the count table
                // agree on 180333; the fibration table prints 173799.
                pass = rec.count == BigInt(180333);
                detail << "computed " << rec.count.str()
                       << " contradicts the published fibration-table entry " << row.published
                       << "; the published count table and direct enumeration both give 180333";
            } else {
                pass = rec.count == BigInt(row.published);
                detail << "computed " << rec.count.str() << ", published " << row.published
                       << ": " << (pass ? "matches the published fibration table"
                                        : "CONTRADICTS the published fibration table");
            }
            push(rep, "per-q-table/q=" + std::to_string(row.q), pass, detail.str());
        }
    }

    for (const reference::McRow& row : reference::k4_monte_carlo) {
        auto exact = reference::k4_ising_lookup(row.p);
        double recomputed = row.estimate / static_cast<double>(*exact) - 1.0;
        bool column_ok = std::abs(recomputed - row.error) <= 1e-6;
        bool within = std::abs(recomputed) <= row.bound;
        std::ostringstream detail;
        detail << "published estimate " << row.estimate << " vs exact " << *exact
               << ": relative error " << recomputed
               << (within ? " lies within" : " EXCEEDS") << " the printed bound " << row.bound
               << (column_ok ? "; printed error column consistent"
                             : "; printed error column inconsistent");
        push(rep,
             "mc-table/N=" + std::to_string(row.trials) + "/p=" + std::to_string(row.p),
             column_ok && within, detail.str());
    }

    {
        // Polygon closed forms at q = 2 against enumeration over small fields.
        bool all_ok = true;
        std::string bad;
        for (int m = 1; m <= 4 && all_ok; ++m) {
            Graph poly = build_family({FamilySpec::Kind::Polygon, m + 1});
            for (uint32_t p : {3u, 5u, 7u}) {
                BigInt size(p), expect = 0, power = 1;
                for (int i = 0; i <= m; ++i) {
                    expect += BigInt(reference::polygon_q2_counts[m - 1][i]) * power;
                    power *= size;
                }
                BigInt got = tutte_count(poly, 2, make_field(p)).count;
                if (got != expect) {
                    all_ok = false;
                    bad = "m=" + std::to_string(m) + ", p=" + std::to_string(p) + ": computed " +
                          got.str() + " vs closed form " + expect.str();
                    break;
                }
            }
        }
        push(rep, "polygon-closed-forms/q=2", all_ok,
             all_ok ? "m = 1..4 over F_3, F_5, F_7" : bad);
    }

    return rep;
}

VerifyReport verify_oracle(double max_points) {
    VerifyReport rep;
    rep.suite = "oracle";
    if (max_points < 2) throw UsageError("max-points must allow at least one evaluation");

    const FieldSpec fields[] = {make_field(3), make_field(2, 2), make_field(5), make_field(7)};

    {
        const auto corpus = identity_corpus();
        int ran = 0, skipped = 0;
        bool all_ok = true;
        std::string bad;
        for (const auto& [name, g] : corpus)
            for (long long q : {2, 3})
                for (const FieldSpec& f : fields) {
                    double space = std::pow(static_cast<double>(f.size()), g.edge_count());
                    if (space > max_points) {
                        ++skipped;
                        continue;
                    }
                    PolySystem sys(z_at(g, q));
                    BigInt a = reduced_count(sys, f).count;
                    BigInt b = brute_count(sys, f).count;
                    ++ran;
                    if (a != b && all_ok) {
                        all_ok = false;
                        bad = name + " q=" + std::to_string(q) + " over F_" +
                              std::to_string(f.size()) + ": reduced " + a.str() + " vs brute " +
                              b.str();
                    }
                }
        std::ostringstream detail;
        if (all_ok)
            detail << ran << " instances agree, " << skipped << " above the point cap";
        else
            detail << bad;
        push(rep, "oracle/corpus-hypersurfaces", all_ok, detail.str());
    }

    {
        std::mt19937_64 gen(0x0DDC0DE);
        int ran = 0, skipped = 0;
        bool all_ok = true;
        std::string bad;
        for (int round = 0; round < 40; ++round) {
            const FieldSpec& f = fields[round % 4];
            int m = 4 + static_cast<int>(gen() % 4);
            int npolys = 1 + static_cast<int>(gen() % 2);
            std::vector<MultiPoly> polys;
            for (int i = 0; i < npolys; ++i) {
                MultiPoly p(m);
                int terms = 2 + static_cast<int>(gen() % 6);
                for (int t = 0; t < terms; ++t) {
                    Exps e(m + 1, 0);
                    for (int s = 0, n = 1 + static_cast<int>(gen() % 3); s < n; ++s)
                        e[gen() % m] += gen() % 2;
                    p.add_term(std::move(e), BigInt(static_cast<long long>(gen() % 9) - 4));
                }
                polys.push_back(std::move(p));
            }
            if (std::pow(static_cast<double>(f.size()), m) > max_points) {
                ++skipped;
                continue;
            }
            PolySystem sys(polys);
            BigInt a = reduced_count(sys, f).count;
            BigInt b = brute_count(sys, f).count;
            ++ran;
            if (a != b && all_ok) {
                all_ok = false;
                bad = "round " + std::to_string(round) + " over F_" + std::to_string(f.size()) +
                      ": reduced " + a.str() + " vs brute " + b.str();
            }
        }
        std::ostringstream detail;
        if (all_ok)
            detail << ran << " randomized systems agree, " << skipped << " above the point cap";
        else
            detail << bad;
        push(rep, "oracle/randomized-systems", all_ok, detail.str());
    }

    return rep;
}

}  // namespace tuttelab
