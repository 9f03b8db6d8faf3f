#include "distgeom/curves.hpp"

#include <stdexcept>

namespace distgeom {

std::optional<std::array<Rational, 3>> SymbolicCurve::eval(const std::vector<Rational>& values) const {
    auto ex = x.eval(values);
    auto ey = y.eval(values);
    auto ez = z.eval(values);
    if (!ex || !ey || !ez) return std::nullopt;
    return std::array<Rational, 3>{*ex, *ey, *ez};
}

SymbolicCurve standard_first_curve(ConicKind kind, const SymbolTablePtr& table) {
    auto s = RationalFunction::variable(table, table->s_index());
    auto c = RationalFunction::variable(table, table->index_of("c"));
    auto one = RationalFunction::constant(table, Rational(1));
    auto two = RationalFunction::constant(table, Rational(2));
    auto zero = RationalFunction::zero(table);
    switch (kind) {
        case ConicKind::Parabola:
            return {s, s * s, zero, table->s_index()};
        case ConicKind::Hyperbola:
            return {(s * s + one) / (two * s), c * (one - s * s) / (two * s), zero, table->s_index()};
        case ConicKind::Ellipse:
            return {(one - s * s) / (one + s * s), two * c * s / (one + s * s), zero, table->s_index()};
    }
    throw std::invalid_argument("unsupported curve kind");
}

SymbolicCurve standard_second_curve(ConicKind kind, const SymbolTablePtr& table,
                                    const std::array<std::string, 3>& origin,
                                    const std::array<std::string, 3>& v1,
                                    const std::array<std::string, 3>& v2,
                                    bool swap_basis) {
    auto t = RationalFunction::variable(table, table->t_index());
    auto one = RationalFunction::constant(table, Rational(1));
    auto two = RationalFunction::constant(table, Rational(2));
    RationalFunction phi1, phi2;
    switch (kind) {
        case ConicKind::Parabola:
            phi1 = t;
            phi2 = t * t;
            break;
        case ConicKind::Hyperbola:
            phi1 = (t * t + one) / (two * t);
            phi2 = (t * t - one) / (two * t);
            break;
        case ConicKind::Ellipse:
            phi1 = (t * t - one) / (t * t + one);
            phi2 = two * t / (t * t + one);
            break;
        default:
            throw std::invalid_argument("unsupported curve kind");
    }
    if (swap_basis) std::swap(phi1, phi2);

    auto component = [&](const std::string& name) {
        if (name == "0") return RationalFunction::zero(table);
        return RationalFunction::variable(table, table->index_of(name));
    };
    std::array<RationalFunction, 3> comps;
    for (int i = 0; i < 3; ++i)
        comps[i] = component(origin[i]) + phi1 * component(v1[i]) + phi2 * component(v2[i]);
    return {comps[0], comps[1], comps[2], table->t_index()};
}

AppendixBase appendix_base_ellipse_general() {
    auto table = SymbolTable::make("s", "t", {"c", "p", "q", "r", "x1", "y1", "z1", "x2", "y2"});
    AppendixBase b;
    b.table = table;
    b.c1 = standard_first_curve(ConicKind::Ellipse, table);
    b.c2 = standard_second_curve(ConicKind::Ellipse, table, {"p", "q", "r"}, {"x1", "y1", "z1"},
                                 {"x2", "y2", "0"});
    return b;
}

AppendixBase appendix_base_ellipse_centered(bool swap_basis) {
    auto table = SymbolTable::make("s", "t", {"c", "x1", "y1", "z1", "x2", "z2"});
    AppendixBase b;
    b.table = table;
    b.c1 = standard_first_curve(ConicKind::Ellipse, table);
    b.c2 = standard_second_curve(ConicKind::Ellipse, table, {"0", "0", "0"}, {"x1", "y1", "z1"},
                                 {"x2", "0", "z2"}, swap_basis);
    return b;
}

AppendixBase appendix_base_hyperbola() {
    auto table = SymbolTable::make("s", "t", {"c", "p", "q", "r", "x1", "y1", "z1", "x2", "y2", "z2"});
    AppendixBase b;
    b.table = table;
    b.c1 = standard_first_curve(ConicKind::Hyperbola, table);
    b.c2 = standard_second_curve(ConicKind::Hyperbola, table, {"p", "q", "r"}, {"x1", "y1", "z1"},
                                 {"x2", "y2", "z2"});
    return b;
}

// ---------------------------------------------------------------------------

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    Vec3 r;
    r[0] = a[1] * b[2] - a[2] * b[1];
    r[1] = a[2] * b[0] - a[0] * b[2];
    r[2] = a[0] * b[1] - a[1] * b[0];
    return r;
}
Vec3 sub(const Vec3& a, const Vec3& b) { return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}}; }
Vec3 scale(const Vec3& a, const Rational& c) { return {{a[0] * c, a[1] * c, a[2] * c}}; }

Rational Frame::orthonormality_residual() const {
    const Vec3* e[3] = {&e1, &e2, &e3};
    Rational worst(0);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            Rational d = dot(*e[i], *e[j]) - (i == j ? Rational(1) : Rational(0));
            if (sgn(d) < 0) d = -d;
            if (d > worst) worst = d;
        }
    return worst;
}

Vec3 RigidMotion::rotate(const Vec3& p) const {
    return {{dot(rows[0], p), dot(rows[1], p), dot(rows[2], p)}};
}
Vec3 RigidMotion::apply(const Vec3& p) const { return add(rotate(p), translation); }

RigidMotion random_rational_motion(std::uint64_t seed) {
    auto next = [&seed]() {
        seed += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = seed;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    auto small_rat = [&]() {
        long n = static_cast<long>(next() % 21) - 10;
        long d = 1 + static_cast<long>(next() % 7);
        return rational_from_long(n, static_cast<unsigned long>(d));
    };
    // Cayley transform of a skew matrix: exactly orthogonal and rational.
    Rational a = small_rat(), b = small_rat(), c = small_rat();
    Rational det = Rational(1) + a * a + b * b + c * c;
    auto entry = [&](const Rational& num) { return num / det; };
    RigidMotion m;
    m.rows[0] = {{entry(Rational(1) + a * a - b * b - c * c), entry(Rational(2) * (a * b - c)),
                  entry(Rational(2) * (a * c + b))}};
    m.rows[1] = {{entry(Rational(2) * (a * b + c)), entry(Rational(1) - a * a + b * b - c * c),
                  entry(Rational(2) * (b * c - a))}};
    m.rows[2] = {{entry(Rational(2) * (a * c - b)), entry(Rational(2) * (b * c + a)),
                  entry(Rational(1) - a * a - b * b + c * c)}};
    m.translation = {{small_rat(), small_rat(), small_rat()}};
    return m;
}

std::string curve_kind_name(CurveKindTag k) {
    switch (k) {
        case CurveKindTag::Line: return "line";
        case CurveKindTag::Circle: return "circle";
        case CurveKindTag::Parabola: return "parabola";
        case CurveKindTag::Ellipse: return "ellipse";
        case CurveKindTag::Hyperbola: return "hyperbola";
        case CurveKindTag::LogCircle: return "log_circle";
    }
    throw std::logic_error("bad curve kind");
}

CurveKindTag curve_kind_from_name(const std::string& name) {
    if (name == "line") return CurveKindTag::Line;
    if (name == "circle") return CurveKindTag::Circle;
    if (name == "parabola") return CurveKindTag::Parabola;
    if (name == "ellipse") return CurveKindTag::Ellipse;
    if (name == "hyperbola") return CurveKindTag::Hyperbola;
    if (name == "log_circle") return CurveKindTag::LogCircle;
    throw std::invalid_argument("unknown curve kind: " + name);
}

bool PointSet::all_exact() const {
    for (const auto& p : pts)
        if (!p.exact) return false;
    return true;
}

Rational NumericCurve::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument("curve missing parameter " + name);
    return it->second;
}

namespace {
std::array<BigFloat, 3> to_big(const Vec3& v) {
    return {BigFloat(v[0]), BigFloat(v[1]), BigFloat(v[2])};
}

Point3 frame_point(const Frame& f, const BigFloat& u1, const BigFloat& u2, const BigFloat& u3) {
    auto o = to_big(f.origin), a = to_big(f.e1), b = to_big(f.e2), c = to_big(f.e3);
    Point3 p;
    for (int i = 0; i < 3; ++i) p.x[i] = o[i] + u1 * a[i] + u2 * b[i] + u3 * c[i];
    return p;
}
}  // namespace

Point3 NumericCurve::evaluate(const BigFloat& u) const {
    const BigFloat zero(0L);
    switch (kind) {
        case CurveKindTag::Line:
            return frame_point(frame, u, zero, zero);
        case CurveKindTag::Circle: {
            BigFloat r(param("radius"));
            BigFloat ang = BigFloat(2L) * BigFloat::pi() * u;
            return frame_point(frame, r * ang.cos(), r * ang.sin(), zero);
        }
        case CurveKindTag::Parabola: {
            BigFloat f(param("focal"));
            return frame_point(frame, u, u * u / (BigFloat(4L) * f), zero);
        }
        case CurveKindTag::Ellipse: {
            BigFloat a(param("a")), b(param("b"));
            BigFloat ang = BigFloat(2L) * BigFloat::pi() * u;
            return frame_point(frame, a * ang.cos(), b * ang.sin(), zero);
        }
        case CurveKindTag::Hyperbola: {
            BigFloat a(param("a")), b(param("b"));
            BigFloat eu = u.exp(), emu = (-u).exp();
            BigFloat half(Rational(1, 2));
            return frame_point(frame, a * (eu + emu) * half, b * (eu - emu) * half, zero);
        }
        case CurveKindTag::LogCircle: {
            BigFloat A(param("A")), B(param("B")), D(param("D"));
            BigFloat dx = u - B;
            if (arc > 0 && dx.sign() <= 0)
                throw std::domain_error("log-circle positive arc needs u > B");
            if (arc < 0 && dx.sign() >= 0)
                throw std::domain_error("log-circle negative arc needs u < B");
            BigFloat y2 = D + A * dx.abs().ln() - u * u;
            if (y2.sign() < 0) throw std::domain_error("point outside log-circle arc");
            BigFloat y = y2.sqrt();
            if (ybranch < 0) y = -y;
            return frame_point(frame, u, y, zero);
        }
    }
    throw std::logic_error("bad curve kind");
}

std::optional<std::array<Rational, 3>> NumericCurve::evaluate_exact_line(const Rational& u) const {
    if (kind != CurveKindTag::Line) return std::nullopt;
    Vec3 p = add(frame.origin, scale(frame.e1, u));
    return p.v;
}

NumericCurve NumericCurve::transformed(const RigidMotion& m) const {
    NumericCurve c(*this);
    c.frame.origin = m.apply(frame.origin);
    c.frame.e1 = m.rotate(frame.e1);
    c.frame.e2 = m.rotate(frame.e2);
    c.frame.e3 = m.rotate(frame.e3);
    return c;
}

BigFloat implicit_residual(const NumericCurve& c, const Point3& p) {
    // Coordinates of p in the curve frame.
    auto o = to_big(c.frame.origin);
    auto e1 = to_big(c.frame.e1), e2 = to_big(c.frame.e2), e3 = to_big(c.frame.e3);
    BigFloat d[3];
    for (int i = 0; i < 3; ++i) d[i] = p.x[i] - o[i];
    BigFloat u = d[0] * e1[0] + d[1] * e1[1] + d[2] * e1[2];
    BigFloat v = d[0] * e2[0] + d[1] * e2[1] + d[2] * e2[2];
    BigFloat w = d[0] * e3[0] + d[1] * e3[1] + d[2] * e3[2];

    BigFloat res = w.abs();  // all supported kinds are planar in the frame
    switch (c.kind) {
        case CurveKindTag::Line:
            res = v.abs() > res ? v.abs() : res;
            break;
        case CurveKindTag::Circle: {
            BigFloat r(c.param("radius"));
            BigFloat f = u * u + v * v - r * r;
            res = f.abs() > res ? f.abs() : res;
            break;
        }
        case CurveKindTag::Parabola: {
            BigFloat f(c.param("focal"));
            BigFloat g = v - u * u / (BigFloat(4L) * f);
            res = g.abs() > res ? g.abs() : res;
            break;
        }
        case CurveKindTag::Ellipse: {
            BigFloat a(c.param("a")), b(c.param("b"));
            BigFloat g = (u * u) / (a * a) + (v * v) / (b * b) - BigFloat(1L);
            res = g.abs() > res ? g.abs() : res;
            break;
        }
        case CurveKindTag::Hyperbola: {
            BigFloat a(c.param("a")), b(c.param("b"));
            BigFloat g = (u * u) / (a * a) - (v * v) / (b * b) - BigFloat(1L);
            res = g.abs() > res ? g.abs() : res;
            break;
        }
        case CurveKindTag::LogCircle: {
            BigFloat A(c.param("A")), B(c.param("B")), D(c.param("D"));
            BigFloat g = u * u + v * v - D - A * (u - B).abs().ln();
            res = g.abs() > res ? g.abs() : res;
            break;
        }
    }
    return res;
}

}  // namespace distgeom
