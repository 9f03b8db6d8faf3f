#include "distgeom/rational.hpp"

#include <cctype>

namespace distgeom {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
        r.canonicalize();
        return r;
    }

    // Decimal / scientific form.
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("bad rational literal: " + text);
            seen_dot = true;
        } else {
            digits.push_back(s[i]);
            if (seen_dot) ++frac_digits;
        }
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        exp10 = std::stol(s.substr(i + 1));
        i = s.size();
    }
    if (i != s.size() || digits.empty()) throw std::invalid_argument("bad rational literal: " + text);

    mpz_class num(digits, 10);
    if (neg) num = -num;
    long e = exp10 - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r = e >= 0 ? Rational(num * pow10) : Rational(num, pow10);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace distgeom
