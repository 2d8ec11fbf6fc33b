#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locpos/rational.hpp"

namespace locpos {

// Exponent vector alpha of a monomial x^alpha. Length equals the arity of
// the polynomial it belongs to; entries are natural numbers.
using ExponentVector = std::vector<unsigned>;

// Orthant sign pattern, one entry of +1/-1 per variable.
using SignVector = std::vector<int>;

unsigned total_degree(const ExponentVector& alpha);

// Graded lexicographic order: lower total degree first, then lexicographically
// larger exponent vector first (so x^2 prints before y^2).
struct GrlexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;

    static UnivariatePolynomial monomial(unsigned degree, const Rat& coeff);

    void add_term(unsigned degree, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<unsigned, Rat>& terms() const { return terms_; }
    Rat coefficient(unsigned degree) const;
    bool has_zero_constant_term() const { return coefficient(0) == 0; }

    UnivariatePolynomial operator+(const UnivariatePolynomial& rhs) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& rhs) const;
    UnivariatePolynomial pow(unsigned exponent) const;

    Rat evaluate(const Rat& t) const;

    // Minimum-degree nonzero term; absent for the zero polynomial.
    std::optional<std::pair<unsigned, Rat>> lowest_term() const;

private:
    std::map<unsigned, Rat> terms_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero; the zero polynomial is the
// empty term map. Immutable in spirit: operations return new values.
class SparsePolynomial {
public:
    SparsePolynomial() : SparsePolynomial(0) {}
    explicit SparsePolynomial(unsigned arity,
                              std::vector<std::string> variable_names = {});

    unsigned arity() const { return arity_; }
    const std::vector<std::string>& variable_names() const { return vars_; }
    const std::map<ExponentVector, Rat, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const ExponentVector& alpha) const;
    Rat constant_term() const;
    unsigned degree() const;  // 0 for the zero polynomial
    bool is_homogeneous() const;

    std::vector<ExponentVector> support() const;

    // Merges into the term map, dropping an entry that cancels to zero.
    void add_term(const ExponentVector& alpha, const Rat& coeff);

    SparsePolynomial operator+(const SparsePolynomial& rhs) const;
    SparsePolynomial operator-(const SparsePolynomial& rhs) const;
    SparsePolynomial operator*(const SparsePolynomial& rhs) const;
    SparsePolynomial pow(unsigned exponent) const;
    bool operator==(const SparsePolynomial& rhs) const;

    Rat evaluate(const std::vector<Rat>& point) const;

    // p = plus + minus; plus carries the positive coefficients, minus the
    // negative ones.
    std::pair<SparsePolynomial, SparsePolynomial> split_signs() const;

    // p_sigma(x) = p(sigma_1 x_1, ..., sigma_n x_n); an involution.
    SparsePolynomial apply_signs(const SignVector& sigma) const;

    // f(phi_1(t), ..., phi_n(t)); each phi_i must vanish at t = 0.
    UnivariatePolynomial substitute_curve(
        const std::vector<UnivariatePolynomial>& phi) const;

    std::string format() const;

private:
    void check_arity(const SparsePolynomial& rhs) const;

    unsigned arity_;
    std::vector<std::string> vars_;
    std::map<ExponentVector, Rat, GrlexLess> terms_;
};

// Parses the polynomial grammar:
//   poly = term , { ("+"|"-") , term }
//   term = [sign] , ( coeff , ["*"] , [mono] | mono )
//   mono = factor , { "*" , factor } ; factor = var , ["^", nat]
// Variables are ordered by first appearance unless variable_order is given.
// Throws std::invalid_argument with a character position on syntax errors.
SparsePolynomial parse_polynomial(
    const std::string& text,
    const std::optional<std::vector<std::string>>& variable_order = std::nullopt);

}  // namespace locpos
