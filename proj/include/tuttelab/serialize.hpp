#pragma once

#include "tuttelab/classpoly.hpp"
#include "tuttelab/counting.hpp"
#include "tuttelab/decomposition.hpp"
#include "tuttelab/fitting.hpp"
#include "tuttelab/montecarlo.hpp"
#include "tuttelab/multipoly.hpp"
#include "tuttelab/thermo.hpp"

#include <json.hpp>

#include <string>

// JSON views of the result types. nlohmann objects keep keys sorted, so a
// record serialized twice yields the same bytes; big integers and rationals
// travel as decimal strings to avoid precision loss.
namespace tuttelab::jsonio {

using nlohmann::json;

template <class C>
json poly_json(const SparsePoly<C>& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coeff"] = c.str();
        t["q"] = e[p.arity()];
        json exps = json::array();
        for (int v = 0; v < p.arity(); ++v) exps.push_back(e[v]);
        t["t"] = exps;
        terms.push_back(std::move(t));
    }
    return json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

inline json record_json(const CountRecord& rec) {
    json j;
    j["label"] = rec.label;
    j["poly_hash"] = rec.poly_hash;
    if (rec.spin_q) j["spin_q"] = *rec.spin_q;
    j["p"] = rec.p;
    j["r"] = rec.r;
    j["arity"] = rec.arity;
    j["count"] = rec.count.str();
    j["method"] = rec.method;
    j["wall_ms"] = rec.wall_ms;
    if (rec.seed) j["seed"] = *rec.seed;
    return j;
}

inline CountRecord record_from_json(const json& j) {
    CountRecord rec;
    rec.label = j.at("label").get<std::string>();
    rec.poly_hash = j.at("poly_hash").get<std::string>();
    if (j.contains("spin_q")) rec.spin_q = j.at("spin_q").get<long long>();
    rec.p = j.at("p").get<uint32_t>();
    rec.r = j.at("r").get<uint32_t>();
    rec.arity = j.at("arity").get<int>();
    rec.count = BigInt(j.at("count").get<std::string>());
    rec.method = j.at("method").get<std::string>();
    rec.wall_ms = j.at("wall_ms").get<double>();
    if (j.contains("seed")) rec.seed = j.at("seed").get<uint64_t>();
    return rec;
}

inline json fibration_json(const FibrationReport& rep) {
    json counts = json::array();
    for (const BigInt& c : rep.counts) counts.push_back(c.str());
    const char* verdict = rep.verdict == FibrationReport::Verdict::NotRefuted ? "not-refuted"
                          : rep.verdict == FibrationReport::Verdict::Fails    ? "fails"
                                                                              : "inconclusive";
    return json{{"p", rep.p},           {"r", rep.r},
                {"field_size", rep.field_size.str()},
                {"counts", std::move(counts)},
                {"q0_ok", rep.q0_ok},   {"q1_ok", rep.q1_ok},
                {"verdict", verdict},   {"detail", rep.detail}};
}

inline json verdict_json(const CountabilityVerdict& v) {
    const char* status = v.status == CountabilityVerdict::Status::PolynomialCandidate
                             ? "polynomial-candidate"
                         : v.status == CountabilityVerdict::Status::NonPolynomial
                             ? "non-polynomial"
                             : "inconclusive";
    json coeffs = json::array();
    for (const BigInt& c : v.coeffs) coeffs.push_back(c.str());
    json excluded = json::array();
    for (const BigInt& c : v.excluded) excluded.push_back(c.str());
    return json{{"status", status},
                {"coeffs", std::move(coeffs)},
                {"witness", v.witness},
                {"excluded", std::move(excluded)},
                {"points_used", v.points_used}};
}

inline json mc_json(const McResult& res) {
    return json{{"b_hat", res.b_hat.str()}, {"hits", res.hits},
                {"estimate", res.estimate}, {"epsilon", res.epsilon},
                {"trials", res.trials},     {"seed", res.seed}};
}

inline json mc_row_json(const McComparisonRow& row) {
    return json{{"p", row.p},
                {"r", row.r},
                {"exact", row.exact.str()},
                {"estimate", row.estimate},
                {"error", row.error},
                {"absolute", row.absolute},
                {"bound", row.bound},
                {"trials", row.trials},
                {"seed", row.seed}};
}

inline json mc_probe_json(const McFibrationReport& rep) {
    json per_q = json::array();
    for (const McResult& r : rep.per_q) per_q.push_back(mc_json(r));
    json j{{"p", rep.p}, {"r", rep.r}, {"per_q", std::move(per_q)}, {"detail", rep.detail}};
    if (rep.non_constant) j["non_constant"] = *rep.non_constant;
    return j;
}

inline json class_json(const ClassPoly& c) {
    return json{{"in_t", c.in_t.str("T")},
                {"in_l", c.in_l().str("L")},
                {"complement", c.complement}};
}

inline json period_json(const PeriodEstimate& est) {
    return json{{"value", est.value},
                {"std_error", est.std_error},
                {"samples", est.samples},
                {"seed", est.seed},
                {"integrand_min", est.integrand_min},
                {"integrand_max", est.integrand_max},
                {"measure", est.measure}};
}

inline json delcon_json(const DelconCountReport& rep) {
    return json{{"lhs", rep.lhs.str()},
                {"n_intersection", rep.n_intersection.str()},
                {"n_contracted", rep.n_contracted.str()},
                {"power_term", rep.power_term.str()},
                {"rhs", rep.rhs.str()},
                {"holds", rep.holds},
                {"detail", rep.detail}};
}

inline json decomposition_json(const K4DecompositionReport& rep) {
    json terms = json::array();
    for (const ZTermReport& t : rep.terms)
        terms.push_back(json{{"label", t.label},
                             {"z", t.z.str()},
                             {"scale_value", t.scale_value.str()},
                             {"contribution", t.contribution.str()}});
    return json{{"p", rep.p},
                {"r", rep.r},
                {"terms", std::move(terms)},
                {"formula_value", rep.formula_value.str()},
                {"brute_value", rep.brute_value.str()},
                {"match", rep.match},
                {"detail", rep.detail}};
}

}  // namespace tuttelab::jsonio
