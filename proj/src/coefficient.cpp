#include "vgb/coefficient.hpp"

#include <cctype>

#include "vgb/errors.hpp"

namespace vgb {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Coefficient parse_coefficient(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
        throw DomainError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
    mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den));
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Coefficient c(n, d);
    c.canonicalize();
    return c;
}

std::size_t bit_size(const Coefficient& c) {
    std::size_t n = mpz_sizeinbase(c.get_num_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(c.get_den_mpz_t(), 2);
    return n > d ? n : d;
}

}  // namespace vgb
