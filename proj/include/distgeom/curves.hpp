#ifndef DISTGEOM_CURVES_HPP
#define DISTGEOM_CURVES_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distgeom/bigfloat.hpp"
#include "distgeom/ratfunc.hpp"

namespace distgeom {

enum class ConicKind { Parabola, Hyperbola, Ellipse };

// A space curve with rational-function components in a single curve variable;
// the remaining symbols of the table act as free parameters.
struct SymbolicCurve {
    RationalFunction x, y, z;
    std::size_t var = 0;

    const SymbolTablePtr& table() const { return x.table(); }
    SymbolicCurve substitute(std::size_t symbol, const RationalFunction& value) const {
        return {x.substitute(symbol, value), y.substitute(symbol, value), z.substitute(symbol, value), var};
    }
    // Component values at a rational parameter and rational parameter values;
    // nullopt at a pole.
    std::optional<std::array<Rational, 3>> eval(const std::vector<Rational>& values) const;
};

// gamma1 in the paper's normal position: parabola (s,s^2,0),
// hyperbola ((s^2+1)/2s, c(1-s^2)/2s, 0), ellipse ((1-s^2)/(1+s^2), 2cs/(1+s^2), 0).
SymbolicCurve standard_first_curve(ConicKind kind, const SymbolTablePtr& table);

// gamma2 = origin + phi1(t) v1 + phi2(t) v2 with the kind's basis functions.
// Component entries are symbol names, or "0" for an absent component.
SymbolicCurve standard_second_curve(ConicKind kind, const SymbolTablePtr& table,
                                    const std::array<std::string, 3>& origin,
                                    const std::array<std::string, 3>& v1,
                                    const std::array<std::string, 3>& v2,
                                    bool swap_basis = false);

// The three appendix-analysis configurations. The general ellipse pair takes
// v2 = (x2, y2, 0); the centered pair drops the translation and takes
// v2 = (x2, 0, z2); the hyperbola pair keeps all components.
struct AppendixBase {
    SymbolTablePtr table;
    SymbolicCurve c1, c2;
};
AppendixBase appendix_base_ellipse_general();
AppendixBase appendix_base_ellipse_centered(bool swap_basis = false);
AppendixBase appendix_base_hyperbola();

// ---------------------------------------------------------------------------

struct Vec3 {
    std::array<Rational, 3> v{Rational(0), Rational(0), Rational(0)};
    Rational& operator[](std::size_t i) { return v[i]; }
    const Rational& operator[](std::size_t i) const { return v[i]; }
};

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 sub(const Vec3& a, const Vec3& b);
Vec3 add(const Vec3& a, const Vec3& b);
Vec3 scale(const Vec3& a, const Rational& c);

// Origin plus triad. For exact-rational inputs the triad is exactly
// orthonormal; inputs parsed from rounded decimals carry a small residual and
// classification falls back to tolerances.
struct Frame {
    Vec3 origin;
    Vec3 e1, e2, e3;
    // max |<ei,ej> - delta_ij|
    Rational orthonormality_residual() const;
};

struct RigidMotion {
    std::array<Vec3, 3> rows;  // rotation, row-major
    Vec3 translation;
    Vec3 apply(const Vec3& p) const;
    Vec3 rotate(const Vec3& p) const;
};

// Exact rational rotation via the Cayley transform of a skew matrix.
RigidMotion random_rational_motion(std::uint64_t seed);

enum class CurveKindTag { Line, Circle, Parabola, Ellipse, Hyperbola, LogCircle };

std::string curve_kind_name(CurveKindTag k);
CurveKindTag curve_kind_from_name(const std::string& name);

struct Point3 {
    std::array<BigFloat, 3> x;
    std::optional<std::array<Rational, 3>> exact;
};

struct PointSet {
    std::vector<Point3> pts;
    bool all_exact() const;
};

// Numeric curve: kind-specific parameters in an ambient frame.
//   Line      — origin + u e1
//   Circle    — origin + r cos(2 pi u) e1 + r sin(2 pi u) e2      (radius)
//   Parabola  — origin + u e1 + u^2/(4 f) e2                      (focal f; axis e2)
//   Ellipse   — origin + a cos(2 pi u) e1 + b sin(2 pi u) e2      (a, b)
//   Hyperbola — origin + a cosh(u) e1 + b sinh(u) e2              (a, b)
//   LogCircle — origin + u e1 + y e2, y^2 = D + A ln|u - B| - u^2 (A, B, D;
//               arc=+1 needs u > B, arc=-1 needs u < B; ybranch selects the sign of y)
struct NumericCurve {
    CurveKindTag kind;
    Frame frame;
    std::map<std::string, Rational> params;
    int arc = +1;      // log-circle arc selector
    int ybranch = +1;  // log-circle y sign

    Rational param(const std::string& name) const;
    Point3 evaluate(const BigFloat& u) const;
    // Exact evaluation for kinds with rational parameterizations at rational
    // arguments (line always; others via tangent half-angle where noted).
    std::optional<std::array<Rational, 3>> evaluate_exact_line(const Rational& u) const;

    NumericCurve transformed(const RigidMotion& m) const;
};

// Residual of the curve's defining equation at a point, in the curve's frame.
BigFloat implicit_residual(const NumericCurve& c, const Point3& p);

}  // namespace distgeom

#endif
