#include "locpos/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "locpos/refute.hpp"

namespace locpos {

BoxScan box_minimum(const SparsePolynomial& f, const Rat& box, unsigned step_exponent,
                    std::size_t evaluation_cap) {
    if (box <= 0) throw std::invalid_argument("box must be positive");
    const unsigned n = f.arity();
    const long denom = 1L << step_exponent;
    const std::size_t per_axis = static_cast<std::size_t>(2 * denom + 1);

    std::size_t lattice = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (lattice > evaluation_cap / per_axis + 1)
            throw std::invalid_argument("lattice exceeds the evaluation cap");
        lattice *= per_axis;
    }
    if (lattice > evaluation_cap)
        throw std::invalid_argument("lattice exceeds the evaluation cap");

    BoxScan scan;
    scan.box = box;
    scan.step_exponent = step_exponent;

    std::vector<long> idx(n, -denom);
    bool first = true;
    for (;;) {
        std::vector<Rat> point(n);
        for (unsigned i = 0; i < n; ++i) point[i] = box * make_rat(idx[i], denom);
        Rat value = f.evaluate(point);
        ++scan.evaluations;
        if (first || value < scan.minimum) {
            scan.minimum = value;
            scan.argmin = point;
            first = false;
        }
        std::size_t j = n;
        bool advanced = false;
        while (j-- > 0) {
            if (idx[j] < denom) {
                ++idx[j];
                for (std::size_t l = j + 1; l < n; ++l) idx[l] = -denom;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return scan;
}

SparsePolynomial random_polynomial(std::uint64_t seed, unsigned arity,
                                   unsigned max_degree, unsigned max_terms) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> term_count(1, max_terms);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-5, 5);

    SparsePolynomial p(arity);
    unsigned terms = term_count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        ExponentVector alpha(arity, 0);
        unsigned budget = deg(rng);
        for (unsigned i = 0; i < arity; ++i) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            unsigned e = part(rng);
            alpha[i] = e;
            budget -= e;
        }
        long c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(alpha, Rat(c));
    }
    return p;
}

CrossValidateReport cross_validate(const std::vector<SparsePolynomial>& corpus,
                                   const CrossValidateConfig& config) {
    CrossValidateReport report;
    for (const auto& f : corpus) {
        CrossValidateRow row;
        row.polynomial = f.format();

        Verdict verdict = certify_local_nonnegative(f, config.certify);
        std::optional<CurveWitness> curve;
        std::optional<PointWitness> point;
        if (!f.is_zero()) {
            curve = curve_search(f, config.curve_max_weight);
            GridResult grid = grid_search(f, Rat(1), config.grid_depth,
                                          config.evaluation_cap);
            point = grid.witness;
        }

        switch (verdict.kind) {
            case Verdict::Kind::Certified: row.verdict = "certified"; break;
            case Verdict::Kind::Refuted: row.verdict = "refuted"; break;
            case Verdict::Kind::Unknown: row.verdict = "unknown"; break;
        }

        // (b) never both certified and refuted. A curve witness shows
        // negativity arbitrarily close to the origin; a point witness only
        // contradicts the certificate when it lies inside the certified box.
        if (verdict.kind == Verdict::Kind::Certified) {
            bool contradicted = curve.has_value();
            if (point && verdict.certificate) {
                Rat max_abs(0);
                for (const Rat& p : point->point)
                    if (abs(p) > max_abs) max_abs = abs(p);
                if (max_abs <= Rat(verdict.certificate->radius)) contradicted = true;
            }
            if (contradicted) {
                row.consistent = false;
                row.note = "certified but a refutation witness exists";
            }
        }

        // (c) witnesses re-verify exactly.
        if (curve) {
            CurveCheck check = curve_condition(f, curve->curve());
            if (check.outcome != CurveOutcome::Fail ||
                *check.lowest_degree != curve->lowest_degree ||
                *check.lowest_coefficient != curve->lowest_coefficient) {
                row.consistent = false;
                row.note = "curve witness failed re-verification";
            }
        }
        if (point && f.evaluate(point->point) >= 0) {
            row.consistent = false;
            row.note = "point witness failed re-verification";
        }
        if (verdict.kind == Verdict::Kind::Refuted && verdict.witness &&
            verdict.witness->point &&
            f.evaluate(verdict.witness->point->point) >= 0) {
            row.consistent = false;
            row.note = "certifier point witness failed re-verification";
        }

        // (a) certified implies the scan inside the radius is nonnegative.
        if (verdict.kind == Verdict::Kind::Certified && verdict.certificate &&
            verdict.certificate->radius > 0) {
            Rat eps(verdict.certificate->radius);  // exact binary rational
            BoxScan scan = box_minimum(f, eps, config.scan_step_exponent,
                                       config.evaluation_cap);
            if (scan.minimum < 0) {
                row.consistent = false;
                row.note = "negative value inside the certified radius";
            }
        }

        report.all_pass = report.all_pass && row.consistent;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string report_to_tsv(const CrossValidateReport& report) {
    std::ostringstream out;
    out << "polynomial\tverdict\tconsistent\tnote\n";
    for (const auto& row : report.rows)
        out << row.polynomial << "\t" << row.verdict << "\t"
            << (row.consistent ? "pass" : "FAIL") << "\t" << row.note << "\n";
    return out.str();
}

}  // namespace locpos
