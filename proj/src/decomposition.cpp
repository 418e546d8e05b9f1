#include "tuttelab/decomposition.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/graph.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tuttelab {

namespace {

// Canonical serialization the checksum covers. The generator of the fixture
// file and this reconstruction must agree byte for byte.
std::string canonical(const DecompositionFixture& fx,
                      const std::vector<std::vector<std::pair<BigInt, Exps>>>& raw_polys) {
    std::ostringstream os;
    size_t poly_cursor = 0;
    for (const DecompositionTerm& term : fx.terms) {
        os << "L=" << term.label << ";S=";
        for (size_t i = 0; i < term.scale.size(); ++i) {
            if (i) os << ",";
            os << term.scale[i].str();
        }
        os << ";";
        for (const MultiPoly& poly : term.system) {
            os << "P=" << poly.arity() << ":";
            const auto& raw = raw_polys[poly_cursor++];
            for (size_t ti = 0; ti < raw.size(); ++ti) {
                if (ti) os << "+";
                os << raw[ti].first.str() << "[";
                for (size_t ei = 0; ei < raw[ti].second.size(); ++ei) {
                    if (ei) os << ",";
                    os << raw[ti].second[ei];
                }
                os << "]";
            }
            os << ";";
        }
        os << "|";
    }
    return os.str();
}

}  // namespace

DecompositionFixture load_decomposition_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open fixture file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("fixture parse failure: " + std::string(e.what()));
    }

    DecompositionFixture fx;
    // Term order and monomial order inside each polynomial are part of the
    // checksummed content, so keep the raw file order while loading.
    std::vector<std::vector<std::pair<BigInt, Exps>>> raw_polys;
    try {
        fx.name = doc.at("name").get<std::string>();
        fx.checksum = doc.at("checksum").get<std::string>();
        for (const auto& jt : doc.at("terms")) {
            DecompositionTerm term;
            term.label = jt.at("label").get<std::string>();
            for (const auto& c : jt.at("scale")) term.scale.push_back(BigInt(c.get<long long>()));
            for (const auto& jp : jt.at("system")) {
                const int arity = jp.at("arity").get<int>();
                if (arity < 0) throw UsageError("negative arity in fixture");
                MultiPoly poly(arity);
                std::vector<std::pair<BigInt, Exps>> raw;
                for (const auto& jm : jp.at("terms")) {
                    BigInt coeff(jm.at(0).get<long long>());
                    Exps exps(arity + 1, 0);  // trailing spin slot stays zero
                    const auto& je = jm.at(1);
                    if (static_cast<int>(je.size()) != arity)
                        throw UsageError("exponent arity mismatch in fixture");
                    for (int i = 0; i < arity; ++i) exps[i] = je.at(i).get<uint32_t>();
                    raw.emplace_back(coeff, Exps(exps.begin(), exps.begin() + arity));
                    poly.add_term(std::move(exps), coeff);
                }
                raw_polys.push_back(std::move(raw));
                term.system.push_back(std::move(poly));
            }
            fx.terms.push_back(std::move(term));
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("fixture shape problem: " + std::string(e.what()));
    }

    const std::string expect = hex64(fnv1a64(canonical(fx, raw_polys)));
    if (expect != fx.checksum)
        throw UsageError("fixture checksum mismatch: computed " + expect + ", file says " +
                         fx.checksum);
    return fx;
}

std::string k4_fixture_path() {
    return std::string(TUTTELAB_SOURCE_DATA_DIR) + "/k4_decomposition.json";
}

K4DecompositionReport k4_decomposition_check(const FieldSpec& field) {
    return k4_decomposition_check(field, load_decomposition_fixture(k4_fixture_path()));
}

K4DecompositionReport k4_decomposition_check(const FieldSpec& field,
                                             const DecompositionFixture& fixture) {
    if (field.p() == 2) throw UsageError("the decomposition audit needs odd characteristic");

    K4DecompositionReport rep;
    rep.p = field.p();
    rep.r = field.r();

    const BigInt s(field.size());
    BigRat total = 0;
    for (const DecompositionTerm& term : fixture.terms) {
        ZTermReport row;
        row.label = term.label;

        BigInt scale = 0;
        for (auto it = term.scale.rbegin(); it != term.scale.rend(); ++it)
            scale = scale * s + *it;
        row.scale_value = scale;

        if (term.system.empty()) {
            row.z = 1;
        } else {
            row.z = zfrak(PolySystem(term.system), field);
        }
        row.contribution = BigRat(scale) * row.z;
        total += row.contribution;
        rep.terms.push_back(std::move(row));
    }

    if (boost::multiprecision::denominator(total) != 1)
        throw UsageError("decomposition sum is not an integer: " + total.str());
    rep.formula_value = boost::multiprecision::numerator(total);

    Graph k4 = build_family({FamilySpec::Kind::Complete, 4, 1, 1});
    rep.brute_value = tutte_count(k4, 2, field).count;
    rep.match = rep.formula_value == rep.brute_value;

    std::ostringstream os;
    os << (rep.match ? "decomposition reproduces" : "decomposition DISAGREES with")
       << " the direct count (formula " << rep.formula_value.str() << ", direct "
       << rep.brute_value.str() << ")";
    rep.detail = os.str();
    return rep;
}

}  // namespace tuttelab
