#include "sdet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sdet {

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
    }
    // mpz_class rejects a leading '+'
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
        throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
    }
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace sdet
