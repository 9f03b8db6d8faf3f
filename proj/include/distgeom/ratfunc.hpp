#ifndef DISTGEOM_RATFUNC_HPP
#define DISTGEOM_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>

#include "distgeom/multipoly.hpp"

namespace distgeom {

// Reduced fraction of MultiPolys: gcd(num,den)=1, both integer-content-free,
// den with positive leading coefficient. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() = default;
    explicit RationalFunction(MultiPoly num);              // num / 1
    RationalFunction(MultiPoly num, MultiPoly den);        // canonicalizes

    static RationalFunction zero(SymbolTablePtr table);
    static RationalFunction constant(SymbolTablePtr table, const Rational& c);
    static RationalFunction variable(SymbolTablePtr table, std::size_t var);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const SymbolTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;

    RationalFunction pow(unsigned n) const;

    // Exact quotient-rule derivative, canonicalized.
    RationalFunction derivative(std::size_t var) const;

    // Replace one symbol by a rational function of the others.
    RationalFunction substitute(std::size_t var, const RationalFunction& value) const;

    // nullopt at a pole of the denominator.
    std::optional<Rational> eval(const std::vector<Rational>& values) const;

    std::string to_string() const;

private:
    MultiPoly num_;
    MultiPoly den_;
    void canonicalize();
};

// Substitute var by `value` in a single polynomial (Horner in var).
RationalFunction substitute_poly(const MultiPoly& p, std::size_t var, const RationalFunction& value);

// Rewrite f as (even + odd*var) under the relation var^2 = rhs, where rhs does
// not involve var. Exact; throws if rhs depends on var.
std::pair<RationalFunction, RationalFunction> reduce_mod_quadratic(const MultiPoly& f,
                                                                   std::size_t var,
                                                                   const RationalFunction& rhs);

}  // namespace distgeom

#endif
