#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locpos/poly.hpp"

namespace locpos {

enum class CurveFailureMode { NegativeCoefficient, OddDegree };

// Monomial curve x_i = signs[i] * coeffs[i] * t^{weights[i]} whose
// substitution into f has an offending lowest term.
struct CurveWitness {
    SignVector signs;
    std::vector<unsigned> weights;
    std::vector<long> coeffs;
    unsigned lowest_degree = 0;
    Rat lowest_coefficient;
    CurveFailureMode failure_mode = CurveFailureMode::NegativeCoefficient;

    std::vector<UnivariatePolynomial> curve() const;
};

struct PointWitness {
    std::vector<Rat> point;
    Rat value;  // f(point) < 0
};

struct Witness {
    std::optional<CurveWitness> curve;
    std::optional<PointWitness> point;
};

enum class CurveOutcome { Pass, Vanishes, Fail };

struct CurveCheck {
    CurveOutcome outcome = CurveOutcome::Pass;
    std::optional<unsigned> lowest_degree;
    std::optional<Rat> lowest_coefficient;
    std::optional<CurveFailureMode> failure_mode;
};

// Necessary condition along one curve through the origin: the composition
// must vanish or have an even lowest degree with a positive coefficient.
CurveCheck curve_condition(const SparsePolynomial& f,
                           const std::vector<UnivariatePolynomial>& phi);

// Enumerates monomial curves with weights 1..max_weight and coefficients
// 1..max_coeff in increasing weight-sum order; returns the first failure.
std::optional<CurveWitness> curve_search(const SparsePolynomial& f,
                                         unsigned max_weight,
                                         unsigned max_coeff = 1);

struct GridResult {
    std::optional<PointWitness> witness;
    bool cap_exceeded = false;
    std::size_t evaluations = 0;
};

// Exact evaluation on nested dyadic grids { +/- box * i / 2^k }, k <= depth;
// returns the first strictly negative value found.
GridResult grid_search(const SparsePolynomial& f, const Rat& box, unsigned depth,
                       std::size_t evaluation_cap = 1000000);

}  // namespace locpos
