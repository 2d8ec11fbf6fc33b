#include "locpos/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace locpos {

unsigned total_degree(const ExponentVector& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0u);
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial UnivariatePolynomial::monomial(unsigned degree, const Rat& coeff) {
    UnivariatePolynomial u;
    u.add_term(degree, coeff);
    return u;
}

void UnivariatePolynomial::add_term(unsigned degree, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(degree, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat UnivariatePolynomial::coefficient(unsigned degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rat(0) : it->second;
}

UnivariatePolynomial UnivariatePolynomial::operator+(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out = *this;
    for (const auto& [d, c] : rhs.terms_) out.add_term(d, c);
    return out;
}

UnivariatePolynomial UnivariatePolynomial::operator*(const UnivariatePolynomial& rhs) const {
    UnivariatePolynomial out;
    for (const auto& [da, ca] : terms_)
        for (const auto& [db, cb] : rhs.terms_)
            out.add_term(da + db, ca * cb);
    return out;
}

UnivariatePolynomial UnivariatePolynomial::pow(unsigned exponent) const {
    UnivariatePolynomial result = monomial(0, Rat(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

Rat UnivariatePolynomial::evaluate(const Rat& t) const {
    Rat value(0);
    for (const auto& [d, c] : terms_) value += c * rat_pow(t, d);
    return value;
}

std::optional<std::pair<unsigned, Rat>> UnivariatePolynomial::lowest_term() const {
    if (terms_.empty()) return std::nullopt;
    return *terms_.begin();
}

// ---------------------------------------------------------------------------
// SparsePolynomial

SparsePolynomial::SparsePolynomial(unsigned arity, std::vector<std::string> variable_names)
    : arity_(arity), vars_(std::move(variable_names)) {
    if (vars_.empty()) {
        static const char* defaults[] = {"x", "y", "z", "w", "u", "v"};
        for (unsigned i = 0; i < arity_; ++i)
            vars_.push_back(i < 6 ? defaults[i] : "x" + std::to_string(i + 1));
    }
    if (vars_.size() != arity_)
        throw std::invalid_argument("variable name count does not match arity");
}

Rat SparsePolynomial::coefficient(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat SparsePolynomial::constant_term() const {
    return coefficient(ExponentVector(arity_, 0));
}

unsigned SparsePolynomial::degree() const {
    unsigned d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, total_degree(alpha));
    return d;
}

bool SparsePolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [alpha, c] : terms_)
        if (total_degree(alpha) != d) return false;
    return true;
}

std::vector<ExponentVector> SparsePolynomial::support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [alpha, c] : terms_) out.push_back(alpha);
    return out;
}

void SparsePolynomial::add_term(const ExponentVector& alpha, const Rat& coeff) {
    if (alpha.size() != arity_)
        throw std::invalid_argument("exponent vector length does not match arity");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::check_arity(const SparsePolynomial& rhs) const {
    if (rhs.arity_ != arity_)
        throw std::invalid_argument("arity mismatch between polynomials");
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    check_arity(rhs);
    SparsePolynomial out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, c);
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
    check_arity(rhs);
    SparsePolynomial out = *this;
    for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, -c);
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    check_arity(rhs);
    SparsePolynomial out(arity_, vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : rhs.terms_) {
            ExponentVector sum(arity_);
            for (unsigned i = 0; i < arity_; ++i) sum[i] = a[i] + b[i];
            out.add_term(sum, ca * cb);
        }
    return out;
}

SparsePolynomial SparsePolynomial::pow(unsigned exponent) const {
    SparsePolynomial result(arity_, vars_);
    result.add_term(ExponentVector(arity_, 0), Rat(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

bool SparsePolynomial::operator==(const SparsePolynomial& rhs) const {
    return arity_ == rhs.arity_ && terms_ == rhs.terms_;
}

Rat SparsePolynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != arity_)
        throw std::invalid_argument("evaluation point length does not match arity");
    Rat value(0);
    for (const auto& [alpha, c] : terms_) {
        Rat term = c;
        for (unsigned i = 0; i < arity_; ++i)
            if (alpha[i] > 0) term *= rat_pow(point[i], alpha[i]);
        value += term;
    }
    return value;
}

std::pair<SparsePolynomial, SparsePolynomial> SparsePolynomial::split_signs() const {
    SparsePolynomial plus(arity_, vars_), minus(arity_, vars_);
    for (const auto& [alpha, c] : terms_)
        (c > 0 ? plus : minus).add_term(alpha, c);
    return {plus, minus};
}

SparsePolynomial SparsePolynomial::apply_signs(const SignVector& sigma) const {
    if (sigma.size() != arity_)
        throw std::invalid_argument("sign vector length does not match arity");
    SparsePolynomial out(arity_, vars_);
    for (const auto& [alpha, c] : terms_) {
        int sign = 1;
        for (unsigned i = 0; i < arity_; ++i)
            if (sigma[i] < 0 && alpha[i] % 2 == 1) sign = -sign;
        out.add_term(alpha, sign < 0 ? Rat(-c) : c);
    }
    return out;
}

UnivariatePolynomial SparsePolynomial::substitute_curve(
    const std::vector<UnivariatePolynomial>& phi) const {
    if (phi.size() != arity_)
        throw std::invalid_argument("curve component count does not match arity");
    for (const auto& component : phi)
        if (!component.has_zero_constant_term())
            throw std::invalid_argument("curve component has nonzero constant term");
    UnivariatePolynomial out;
    for (const auto& [alpha, c] : terms_) {
        UnivariatePolynomial term = UnivariatePolynomial::monomial(0, c);
        for (unsigned i = 0; i < arity_; ++i)
            if (alpha[i] > 0) term = term * phi[i].pow(alpha[i]);
        out = out + term;
    }
    return out;
}

std::string SparsePolynomial::format() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = total_degree(alpha) > 0;
        bool wrote_coeff = false;
        if (mag != 1 || !has_vars) {
            out << rat_to_string(mag);
            wrote_coeff = true;
        }
        for (unsigned i = 0; i < arity_; ++i) {
            if (alpha[i] == 0) continue;
            if (wrote_coeff) out << "*";
            out << vars_[i];
            if (alpha[i] > 1) out << "^" << alpha[i];
            wrote_coeff = true;
        }
    }
    return out.str();
}

}  // namespace locpos
