#ifndef DISTGEOM_DERIVTEST_HPP
#define DISTGEOM_DERIVTEST_HPP

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "distgeom/bigfloat.hpp"
#include "distgeom/curves.hpp"

namespace distgeom {

// Squared distance between gamma1(s) and gamma2(t) as an exact rational
// function of the two curve variables and the parameters.
struct DistanceFunction {
    RationalFunction rho;
    std::size_t s = 0, t = 1;
};

// Thrown when rho_s or rho_t vanishes identically: one arc lies on a circle
// whose axis contains the other.
struct CircleAxisDegeneracy : std::runtime_error {
    CircleAxisDegeneracy() : std::runtime_error("rho_s or rho_t vanishes identically") {}
};

DistanceFunction distance_function(const SymbolicCurve& c1, const SymbolicCurve& c2);

// Distance function for curves in the planes z=0 and y=0 whose off-plane
// components enter only through their squares: rho = (x1(s)-x2(t))^2 + fsq(s) + gsq(t).
DistanceFunction distance_function_perp_planes(const RationalFunction& x1,
                                               const RationalFunction& fsq,
                                               const RationalFunction& x2,
                                               const RationalFunction& gsq);

struct RhoNumerator {
    MultiPoly rho_n;  // canonical numerator of d^2 ln|rho_s/rho_t| / ds dt
    MultiPoly den;    // matching denominator
};

// Full symbolic computation with complete cancellation.
RhoNumerator rho_numerator(const DistanceFunction& d);

// Serves individual (s,t)-coefficients of rho_N without forming the full
// product, after certifying that the assembled fraction is already reduced.
// Coefficients are of a fixed nonzero scalar multiple of canonical rho_N.
class RhoCoeffEngine {
public:
    explicit RhoCoeffEngine(const DistanceFunction& d);

    MultiPoly coeff(unsigned s_deg, unsigned t_deg) const;
    MultiPoly combination(const std::vector<std::tuple<unsigned, unsigned, Rational>>& weighted) const;

    unsigned s_degree_bound() const { return max_s_; }
    unsigned t_degree_bound() const { return max_t_; }
    bool used_fallback() const { return fallback_; }

    // Exact value of the test expression rho_N/den at a full assignment;
    // nullopt on a pole or when rho_s/rho_t vanish there.
    std::optional<Rational> eval_exact(const std::vector<Rational>& at) const;

private:
    SymbolTablePtr table_;
    std::size_t s_, t_;
    using CellMap = std::unordered_map<std::uint32_t, MultiPoly>;
    CellMap a_, b_, us2_, ut2_;
    unsigned max_s_ = 0, max_t_ = 0;
    bool fallback_ = false;
    MultiPoly full_, full_den_;  // populated on the fallback path
    MultiPoly us_, ut_, us_s_, us_t_, us_st_, ut_s_, ut_t_, ut_st_;

    MultiPoly cell_sum(const CellMap& f, const CellMap& g, unsigned a, unsigned b, bool negate) const;
};

// |exact test expression - central finite difference of d^2 ln|rho_s/rho_t|/ds dt|
// at the given rational point, relative to max(1, |exact|).
BigFloat numeric_crosscheck(const RhoCoeffEngine& engine, const DistanceFunction& d,
                            const std::vector<Rational>& assignment, const BigFloat& step);
BigFloat numeric_crosscheck(const DistanceFunction& d, const std::vector<Rational>& assignment,
                            const BigFloat& step);

// Evaluate a polynomial at high precision.
BigFloat eval_poly_big(const MultiPoly& p, const std::vector<BigFloat>& values);

}  // namespace distgeom

#endif
