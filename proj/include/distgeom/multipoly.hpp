#ifndef DISTGEOM_MULTIPOLY_HPP
#define DISTGEOM_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "distgeom/rational.hpp"
#include "distgeom/symtab.hpp"

namespace distgeom {

// Exponent vector, fixed capacity. Unused slots stay zero.
struct Monomial {
    std::array<std::uint16_t, SymbolTable::kMaxSymbols> e{};

    unsigned total_degree() const {
        unsigned d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Sparse multivariate polynomial over Q. Terms are kept sorted by graded
// lexicographic order (curve variables ranked above parameters), leading
// term first, with no zero coefficients stored.
class MultiPoly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    MultiPoly() = default;
    explicit MultiPoly(SymbolTablePtr table) : table_(std::move(table)) {}

    static MultiPoly zero(SymbolTablePtr table) { return MultiPoly(std::move(table)); }
    static MultiPoly constant(SymbolTablePtr table, const Rational& c);
    static MultiPoly variable(SymbolTablePtr table, std::size_t var, unsigned power = 1);

    const SymbolTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.total_degree() == 0); }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term under the monomial order.
    const Term& leading() const;
    unsigned degree_in(std::size_t var) const;
    unsigned total_degree() const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly pow(unsigned n) const;
    MultiPoly derivative(std::size_t var) const;

    // Coefficient of s^s_deg t^t_deg as a polynomial in the other symbols
    // (the two curve variables of the table).
    MultiPoly coeff_st(unsigned s_deg, unsigned t_deg) const;
    // Coefficient of var^deg, variable slot zeroed in the result.
    MultiPoly coeff_of(std::size_t var, unsigned deg) const;

    // Integer content of the coefficient list (gcd of numerators over lcm of
    // denominators); zero polynomial gives 0.
    Rational content() const;
    // content removed, leading coefficient made positive; returns the factor
    // c such that *this == c * primitive_part.
    MultiPoly primitive_part(Rational* factor = nullptr) const;

    Rational eval(const std::vector<Rational>& values) const;
    // Partial evaluation: assign values to a subset of the symbols.
    MultiPoly eval_partial(const std::vector<std::optional<Rational>>& values) const;

    std::string to_string() const;

    // Build a term list without sorting guarantees, then normalize.
    static MultiPoly from_terms(SymbolTablePtr table, std::vector<Term> terms);

    void check_same_table(const MultiPoly& o) const;

private:
    SymbolTablePtr table_;
    std::vector<Term> terms_;

    void normalize();  // sort, merge, drop zeros
    friend class PolyBuilder;
};

// Order comparison used for sorting (true if a < b).
bool mono_less(const SymbolTable& tab, const Monomial& a, const Monomial& b);

// q with a == q*b exactly, or nullopt.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// lambda != 0 with a == lambda*b, or nullopt. Two zero polynomials give 1.
std::optional<Rational> equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b);

// Multivariate gcd over Q, result primitive with positive leading coefficient.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace distgeom

#endif
