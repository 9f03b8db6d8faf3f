#include "distgeom/ratfunc.hpp"

#include <sstream>

namespace distgeom {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.table(), Rational(1))) {
    canonicalize();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    num_.check_same_table(den_);
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    canonicalize();
}

RationalFunction RationalFunction::zero(SymbolTablePtr table) {
    return RationalFunction(MultiPoly::zero(std::move(table)));
}

RationalFunction RationalFunction::constant(SymbolTablePtr table, const Rational& c) {
    return RationalFunction(MultiPoly::constant(std::move(table), c));
}

RationalFunction RationalFunction::variable(SymbolTablePtr table, std::size_t var) {
    return RationalFunction(MultiPoly::variable(std::move(table), var));
}

void RationalFunction::canonicalize() {
    auto table = num_.table();
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(table, Rational(1));
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g).value();
        den_ = exact_divide(den_, g).value();
    }
    Rational cn, cd;
    MultiPoly pn = num_.primitive_part(&cn);
    MultiPoly pd = den_.primitive_part(&cd);
    Rational scale = cn / cd;  // num/den == scale * pn/pd
    num_ = pn * Rational(scale.get_num());
    den_ = pd * Rational(scale.get_den());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::pow(unsigned n) const {
    return RationalFunction(num_.pow(n), den_.pow(n));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    if (den_.is_constant())
        return RationalFunction(num_.derivative(var), den_);
    MultiPoly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalFunction(std::move(top), den_ * den_);
}

RationalFunction RationalFunction::substitute(std::size_t var, const RationalFunction& value) const {
    RationalFunction n = substitute_poly(num_, var, value);
    RationalFunction d = substitute_poly(den_, var, value);
    if (d.is_zero()) throw std::domain_error("substitution makes denominator vanish identically");
    return n / d;
}

std::optional<Rational> RationalFunction::eval(const std::vector<Rational>& values) const {
    Rational d = den_.eval(values);
    if (distgeom::is_zero(d)) return std::nullopt;
    return num_.eval(values) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.term_count() == 1 && is_one(den_.leading().coeff))
        return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ") / (" << den_.to_string() << ")";
    return os.str();
}

RationalFunction substitute_poly(const MultiPoly& p, std::size_t var, const RationalFunction& value) {
    unsigned d = p.degree_in(var);
    auto table = p.table();
    if (d == 0) return RationalFunction(p);
    // Horner in var.
    RationalFunction acc(p.coeff_of(var, d));
    for (unsigned k = d; k-- > 0;) {
        acc = acc * value + RationalFunction(p.coeff_of(var, k));
    }
    return acc;
}

std::pair<RationalFunction, RationalFunction> reduce_mod_quadratic(const MultiPoly& f,
                                                                   std::size_t var,
                                                                   const RationalFunction& rhs) {
    if (rhs.num().depends_on(var) || rhs.den().depends_on(var))
        throw std::invalid_argument("quadratic relation right side depends on the adjoined symbol");
    auto table = f.table();
    unsigned d = f.degree_in(var);
    RationalFunction even = RationalFunction::zero(table);
    RationalFunction odd = RationalFunction::zero(table);
    RationalFunction rhs_pow = RationalFunction::constant(table, Rational(1));
    for (unsigned k = 0; 2 * k <= d; ++k) {
        MultiPoly ce = f.coeff_of(var, 2 * k);
        if (!ce.is_zero()) even = even + RationalFunction(ce) * rhs_pow;
        if (2 * k + 1 <= d) {
            MultiPoly co = f.coeff_of(var, 2 * k + 1);
            if (!co.is_zero()) odd = odd + RationalFunction(co) * rhs_pow;
        }
        rhs_pow = rhs_pow * rhs;
    }
    return {even, odd};
}

}  // namespace distgeom
