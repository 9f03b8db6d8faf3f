#include "distgeom/expr.hpp"

#include <cctype>

namespace distgeom {
namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    const SymbolTablePtr& table;

    Parser(const std::string& t, const SymbolTablePtr& tab) : text(t), table(tab) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what +
                                    " in \"" + text + "\"");
    }

    RationalFunction parse() {
        RationalFunction r = expr();
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return r;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos;
                acc = acc / factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                // implicit multiplication, e.g. "2 c" or "3(x+1)"
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RationalFunction base = atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            bool neg = eat('-');
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) fail("expected integer exponent");
            unsigned long n = std::stoul(text.substr(start, pos - start));
            RationalFunction p = base.pow(static_cast<unsigned>(n));
            return neg ? RationalFunction::constant(table, Rational(1)) / p : p;
        }
        return base;
    }

    RationalFunction atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
                ++pos;
            return RationalFunction::constant(table, parse_rational(text.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_'))
                ++pos;
            std::string name = text.substr(start, pos - start);
            auto idx = table->find(name);
            if (!idx) fail("unknown symbol '" + name + "'");
            return RationalFunction::variable(table, *idx);
        }
        fail("unexpected character");
    }
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const SymbolTablePtr& table) {
    Parser p(text, table);
    return p.parse();
}

MultiPoly parse_polynomial(const std::string& text, const SymbolTablePtr& table) {
    RationalFunction r = parse_expression(text, table);
    if (!r.is_polynomial())
        throw std::invalid_argument("expected polynomial, got denominator: " + r.den().to_string());
    // Fold the constant denominator into the coefficients.
    Rational d(r.den().is_zero() ? Rational(1) : r.den().leading().coeff);
    return r.num() * (Rational(1) / d);
}

}  // namespace distgeom
