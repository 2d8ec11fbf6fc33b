#include <algorithm>
#include <cctype>
#include <map>

#include "locpos/poly.hpp"

namespace locpos {

namespace {

struct ParsedTerm {
    Rat coeff;
    std::map<std::string, unsigned> exponents;
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    std::vector<ParsedTerm> run(std::vector<std::string>& order) {
        std::vector<ParsedTerm> terms;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
        terms.push_back(term(sign, order));
        skip_ws();
        while (pos_ < text_.size()) {
            char op = take();
            if (op != '+' && op != '-') fail("expected '+' or '-'", pos_ - 1);
            terms.push_back(term(op == '-' ? -1 : 1, order));
            skip_ws();
        }
        return terms;
    }

private:
    ParsedTerm term(int sign, std::vector<std::string>& order) {
        skip_ws();
        ParsedTerm t{Rat(sign), {}};
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rat c(natural());
            skip_ws();
            if (peek() == '/') {
                take();
                skip_ws();
                std::size_t at = pos_;
                mpz_class den = natural();
                if (den == 0) fail("zero denominator", at);
                c /= Rat(den);
            }
            t.coeff *= c;
            saw_anything = true;
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
                if (!is_var_start(peek())) fail("expected variable after '*'", pos_);
            }
        }
        while (is_var_start(peek())) {
            std::string name = identifier();
            unsigned exp = 1;
            skip_ws();
            if (peek() == '^') {
                take();
                skip_ws();
                std::size_t at = pos_;
                if (peek() == '-') fail("negative exponent", at);
                mpz_class e = natural();
                skip_ws();
                if (peek() == '/') fail("fractional exponent", pos_);
                if (!e.fits_uint_p()) fail("exponent too large", at);
                exp = e.get_ui();
            }
            t.exponents[name] += exp;
            if (std::find(order.begin(), order.end(), name) == order.end())
                order.push_back(name);
            saw_anything = true;
            skip_ws();
            if (peek() == '*') {
                take();
                skip_ws();
                if (!is_var_start(peek())) fail("expected variable after '*'", pos_);
            } else {
                break;
            }
        }
        if (!saw_anything) fail("expected a term", pos_);
        return t;
    }

    mpz_class natural() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number", pos_);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
        return mpz_class(digits);
    }

    std::string identifier() {
        std::string name;
        name += take();
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += take();
        return name;
    }

    static bool is_var_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw std::invalid_argument("parse error at position " + std::to_string(at) +
                                    ": " + what);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(
    const std::string& text,
    const std::optional<std::vector<std::string>>& variable_order) {
    std::vector<std::string> order;
    Parser parser(text);
    std::vector<ParsedTerm> terms = parser.run(order);

    std::vector<std::string> vars = variable_order ? *variable_order : order;
    if (variable_order) {
        for (const auto& name : order)
            if (std::find(vars.begin(), vars.end(), name) == vars.end())
                throw std::invalid_argument("unknown variable: " + name);
    }
    if (vars.empty()) vars.push_back("x");  // constant input still needs arity 1

    SparsePolynomial p(static_cast<unsigned>(vars.size()), vars);
    for (const auto& t : terms) {
        ExponentVector alpha(vars.size(), 0);
        for (const auto& [name, exp] : t.exponents) {
            auto it = std::find(vars.begin(), vars.end(), name);
            alpha[static_cast<unsigned>(it - vars.begin())] = exp;
        }
        p.add_term(alpha, t.coeff);
    }
    return p;
}

}  // namespace locpos
