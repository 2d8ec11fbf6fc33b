#include "locpos/refute.hpp"

#include <algorithm>
#include <numeric>

namespace locpos {

std::vector<UnivariatePolynomial> CurveWitness::curve() const {
    std::vector<UnivariatePolynomial> phi;
    for (std::size_t i = 0; i < weights.size(); ++i)
        phi.push_back(UnivariatePolynomial::monomial(
            weights[i], Rat(signs[i] * coeffs[i])));
    return phi;
}

CurveCheck curve_condition(const SparsePolynomial& f,
                           const std::vector<UnivariatePolynomial>& phi) {
    UnivariatePolynomial composed = f.substitute_curve(phi);
    CurveCheck check;
    auto lowest = composed.lowest_term();
    if (!lowest) {
        check.outcome = CurveOutcome::Vanishes;
        return check;
    }
    check.lowest_degree = lowest->first;
    check.lowest_coefficient = lowest->second;
    if (lowest->second < 0) {
        check.outcome = CurveOutcome::Fail;
        check.failure_mode = CurveFailureMode::NegativeCoefficient;
    } else if (lowest->first % 2 == 1) {
        check.outcome = CurveOutcome::Fail;
        check.failure_mode = CurveFailureMode::OddDegree;
    }
    return check;
}

namespace {

// All vectors in {1..limit}^n, in lexicographic order.
std::vector<std::vector<unsigned>> weight_vectors(unsigned n, unsigned limit) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> w(n, 1);
    for (;;) {
        out.push_back(w);
        std::size_t k = n;
        while (k-- > 0) {
            if (w[k] < limit) {
                ++w[k];
                for (std::size_t j = k + 1; j < n; ++j) w[j] = 1;
                break;
            }
            if (k == 0) return out;
        }
    }
}

std::vector<SignVector> sign_patterns(unsigned n) {
    std::vector<SignVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        SignVector s(n, 1);
        for (unsigned i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s[i] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::optional<CurveWitness> curve_search(const SparsePolynomial& f,
                                         unsigned max_weight, unsigned max_coeff) {
    if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
    const unsigned n = f.arity();

    std::vector<std::vector<unsigned>> weights = weight_vectors(n, max_weight);
    std::stable_sort(weights.begin(), weights.end(),
                     [](const auto& a, const auto& b) {
                         unsigned sa = std::accumulate(a.begin(), a.end(), 0u);
                         unsigned sb = std::accumulate(b.begin(), b.end(), 0u);
                         if (sa != sb) return sa < sb;
                         return a < b;
                     });
    std::vector<SignVector> signs = sign_patterns(n);
    std::vector<std::vector<unsigned>> coeffs = weight_vectors(n, max_coeff);

    for (const auto& w : weights)
        for (const auto& sigma : signs)
            for (const auto& c : coeffs) {
                CurveWitness candidate;
                candidate.signs = sigma;
                candidate.weights = w;
                candidate.coeffs.assign(c.begin(), c.end());
                CurveCheck check = curve_condition(f, candidate.curve());
                if (check.outcome == CurveOutcome::Fail) {
                    candidate.lowest_degree = *check.lowest_degree;
                    candidate.lowest_coefficient = *check.lowest_coefficient;
                    candidate.failure_mode = *check.failure_mode;
                    return candidate;
                }
            }
    return std::nullopt;
}

GridResult grid_search(const SparsePolynomial& f, const Rat& box, unsigned depth,
                       std::size_t evaluation_cap) {
    const unsigned n = f.arity();
    GridResult result;
    for (unsigned k = 0; k <= depth; ++k) {
        long denom = 1L << k;
        // Coordinates box * i / 2^k for i in [-2^k, 2^k]; skip points whose
        // indices are all even when k > 0 (already visited at level k-1).
        std::vector<long> idx(n, -denom);
        for (;;) {
            bool fresh = (k == 0);
            for (unsigned i = 0; i < n && !fresh; ++i)
                if (idx[i] % 2 != 0) fresh = true;
            if (fresh) {
                if (++result.evaluations > evaluation_cap) {
                    result.cap_exceeded = true;
                    return result;
                }
                std::vector<Rat> point(n);
                for (unsigned i = 0; i < n; ++i)
                    point[i] = box * make_rat(idx[i], denom);
                Rat value = f.evaluate(point);
                if (value < 0) {
                    result.witness = PointWitness{std::move(point), std::move(value)};
                    return result;
                }
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
    }
    return result;
}

}  // namespace locpos
