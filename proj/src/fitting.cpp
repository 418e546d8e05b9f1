#include "tuttelab/fitting.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/counting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tuttelab {

namespace {

std::string point_list(const std::set<size_t>& idx, const std::vector<FitPoint>& pts) {
    std::ostringstream os;
    bool first = true;
    for (size_t i : idx) {
        if (!first) os << ", ";
        os << "(" << pts[i].q.str() << ", " << pts[i].n.str() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace

CountabilityVerdict fit_count_polynomial(std::vector<FitPoint> points, int max_degree,
                                         std::vector<BigInt> excluded) {
    if (max_degree < 0) throw UsageError("negative degree bound");

    CountabilityVerdict v;
    v.excluded = std::move(excluded);

    // Collapse duplicates; a contradiction among inputs is caller error, not
    // evidence about the counting function.
    std::map<BigInt, BigInt> dedup;
    for (const FitPoint& pt : points) {
        auto [it, fresh] = dedup.emplace(pt.q, pt.n);
        if (!fresh && it->second != pt.n)
            throw UsageError("conflicting counts supplied for field size " + pt.q.str());
    }
    points.clear();
    for (auto& [q, n] : dedup) points.push_back({q, n});
    v.points_used = static_cast<int>(points.size());

    const int cols = max_degree + 1;
    if (static_cast<int>(points.size()) < cols) {
        std::ostringstream os;
        os << "need " << cols << " distinct field sizes for degree " << max_degree
           << ", got " << points.size();
        v.status = CountabilityVerdict::Status::Inconclusive;
        v.witness = os.str();
        return v;
    }

    // Augmented rows [1, q, .., q^d | n], each tagged with the set of source
    // points folded into it so an inconsistency can name its witnesses.
    struct Row {
        std::vector<BigRat> a;
        BigRat rhs;
        std::set<size_t> from;
    };
    std::vector<Row> rows;
    for (size_t i = 0; i < points.size(); ++i) {
        Row row;
        row.a.resize(cols);
        BigInt power = 1;
        for (int jc = 0; jc < cols; ++jc) {
            row.a[jc] = BigRat(power);
            power *= points[i].q;
        }
        row.rhs = BigRat(points[i].n);
        row.from = {i};
        rows.push_back(std::move(row));
    }

    // Rational Gaussian elimination. Distinct abscissas make the coefficient
    // block full column rank, so the pivots always exist; the extra rows act
    // as consistency probes.
    size_t pivot_row = 0;
    std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
    for (int col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = SIZE_MAX;
        for (size_t rix = pivot_row; rix < rows.size(); ++rix)
            if (rows[rix].a[col] != 0) {
                sel = rix;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Row& piv = rows[pivot_row];
        for (size_t rix = pivot_row + 1; rix < rows.size(); ++rix) {
            Row& target = rows[rix];
            if (target.a[col] == 0) continue;
            BigRat factor = target.a[col] / piv.a[col];
            for (int jc = col; jc < cols; ++jc) target.a[jc] -= factor * piv.a[jc];
            target.rhs -= factor * piv.rhs;
            target.from.insert(piv.from.begin(), piv.from.end());
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
    }

    for (size_t rix = pivot_row; rix < rows.size(); ++rix) {
        if (rows[rix].rhs != 0) {
            v.status = CountabilityVerdict::Status::NonPolynomial;
            v.witness = "no degree-" + std::to_string(max_degree) +
                        " polynomial passes through the points " +
                        point_list(rows[rix].from, points);
            return v;
        }
    }

    if (pivot_row < static_cast<size_t>(cols)) {
        // Unreachable with distinct abscissas; surfaced for robustness.
        v.status = CountabilityVerdict::Status::Inconclusive;
        v.witness = "coefficient system is rank deficient";
        return v;
    }

    std::vector<BigRat> sol(cols);
    for (int col = cols - 1; col >= 0; --col) {
        const Row& row = rows[pivot_of_col[col]];
        BigRat acc = row.rhs;
        for (int jc = col + 1; jc < cols; ++jc) acc -= row.a[jc] * sol[jc];
        sol[col] = acc / row.a[col];
    }

    for (int col = 0; col < cols; ++col) {
        if (boost::multiprecision::denominator(sol[col]) != 1) {
            v.status = CountabilityVerdict::Status::NonPolynomial;
            std::ostringstream os;
            os << "unique interpolant has non-integer coefficient a_" << col << " = "
               << sol[col].str();
            v.witness = os.str();
            return v;
        }
    }

    v.coeffs.resize(cols);
    for (int col = 0; col < cols; ++col)
        v.coeffs[col] = boost::multiprecision::numerator(sol[col]);
    while (!v.coeffs.empty() && v.coeffs.back() == 0) v.coeffs.pop_back();

    // The elimination already enforced every row, but the verdict promises
    // exact reproduction, so re-check directly against the raw points.
    for (const FitPoint& pt : points) {
        BigInt acc = 0;
        for (auto it = v.coeffs.rbegin(); it != v.coeffs.rend(); ++it)
            acc = acc * pt.q + *it;
        if (acc != pt.n) {
            v.status = CountabilityVerdict::Status::NonPolynomial;
            v.witness = "solution fails to reproduce (" + pt.q.str() + ", " +
                        pt.n.str() + ")";
            v.coeffs.clear();
            return v;
        }
    }

    v.status = CountabilityVerdict::Status::PolynomialCandidate;
    return v;
}

FibrationReport fibration_test(const Graph& g, const FieldSpec& field) {
    FibrationReport rep;
    rep.p = field.p();
    rep.r = field.r();
    rep.field_size = BigInt(field.size());

    const int m = g.edge_count();
    const BigInt space = ipow(rep.field_size, m);

    for (uint32_t q = 0; q < field.p(); ++q)
        rep.counts.push_back(tutte_count(g, q, field).count);

    rep.q0_ok = rep.counts[0] == space;
    if (field.p() >= 2)
        rep.q1_ok = rep.counts[1] == space - ipow(rep.field_size - 1, m);

    std::ostringstream os;
    if (field.p() < 4) {
        rep.verdict = FibrationReport::Verdict::Inconclusive;
        os << "only " << (field.p() >= 3 ? 1 : 0)
           << " spin value(s) outside {0,1}; nothing to compare";
    } else {
        bool all_equal = true;
        for (uint32_t q = 3; q < field.p(); ++q)
            if (rep.counts[q] != rep.counts[2]) all_equal = false;
        if (all_equal) {
            rep.verdict = FibrationReport::Verdict::NotRefuted;
            os << "counts agree across q = 2.." << (field.p() - 1)
               << "; equality at one field does not prove the condition";
        } else {
            rep.verdict = FibrationReport::Verdict::Fails;
            os << "counts differ across q = 2.." << (field.p() - 1)
               << "; the class cannot be independent of q";
        }
    }
    rep.detail = os.str();
    return rep;
}

}  // namespace tuttelab
