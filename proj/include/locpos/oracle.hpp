#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locpos/certify.hpp"
#include "locpos/poly.hpp"

namespace locpos {

struct BoxScan {
    Rat box;
    unsigned step_exponent = 0;
    Rat minimum;
    std::vector<Rat> argmin;
    std::size_t evaluations = 0;
};

// Exact minimum of f over the lattice { i * box / 2^k : |i| <= 2^k } per
// coordinate. Throws when the lattice exceeds the evaluation cap.
BoxScan box_minimum(const SparsePolynomial& f, const Rat& box, unsigned step_exponent,
                    std::size_t evaluation_cap = 1000000);

struct CrossValidateConfig {
    CertifyOptions certify;
    unsigned curve_max_weight = 6;
    unsigned grid_depth = 2;
    unsigned scan_step_exponent = 2;
    std::size_t evaluation_cap = 1000000;
};

struct CrossValidateRow {
    std::string polynomial;
    std::string verdict;
    bool consistent = true;
    std::string note;
};

struct CrossValidateReport {
    std::vector<CrossValidateRow> rows;
    bool all_pass = true;
};

// Runs certify, refute and box scanning on each corpus entry and checks
// they never contradict: a certified polynomial scans nonnegative inside
// its radius, a refutation witness re-verifies and blocks certification.
CrossValidateReport cross_validate(const std::vector<SparsePolynomial>& corpus,
                                   const CrossValidateConfig& config = {});

// Seeded random sparse polynomial, used for corpus-wide property runs.
SparsePolynomial random_polynomial(std::uint64_t seed, unsigned arity,
                                   unsigned max_degree, unsigned max_terms);

std::string report_to_tsv(const CrossValidateReport& report);

}  // namespace locpos
