#include "locpos/rational.hpp"

namespace locpos {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& value) {
    return value.get_str();
}

Rat rat_pow(const Rat& base, unsigned long exponent) {
    Rat result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;  // base was canonical, so powers share no factor
}

std::size_t rat_bit_size(const Rat& value) {
    std::size_t num_bits = mpz_sizeinbase(value.get_num_mpz_t(), 2);
    std::size_t den_bits = mpz_sizeinbase(value.get_den_mpz_t(), 2);
    return std::max(num_bits, den_bits);
}

}  // namespace locpos
