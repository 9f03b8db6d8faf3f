#include "distgeom/derivtest.hpp"

#include <tuple>

namespace distgeom {

namespace {

// Numerator of d^2 ln|P| / ds dt, i.e. P_st*P - P_s*P_t (denominator P^2).
MultiPoly mix_numerator(const MultiPoly& p, std::size_t s, std::size_t t) {
    MultiPoly ps = p.derivative(s);
    MultiPoly pt = p.derivative(t);
    MultiPoly pst = ps.derivative(t);
    return pst * p - ps * pt;
}

bool mix_vanishes(const MultiPoly& p, std::size_t s, std::size_t t) {
    return mix_numerator(p, s, t).is_zero();
}

std::uint32_t cell_key(unsigned i, unsigned j) { return (i << 16) | j; }

}  // namespace

DistanceFunction distance_function(const SymbolicCurve& c1, const SymbolicCurve& c2) {
    if (!(*c1.table() == *c2.table())) throw std::invalid_argument("symbol table mismatch");
    if (c1.var == c2.var) throw std::invalid_argument("curves share a curve variable");
    auto dx = c1.x - c2.x;
    auto dy = c1.y - c2.y;
    auto dz = c1.z - c2.z;
    DistanceFunction d;
    d.rho = dx * dx + dy * dy + dz * dz;
    d.s = c1.var;
    d.t = c2.var;
    return d;
}

DistanceFunction distance_function_perp_planes(const RationalFunction& x1,
                                               const RationalFunction& fsq,
                                               const RationalFunction& x2,
                                               const RationalFunction& gsq) {
    auto table = x1.table();
    auto dx = x1 - x2;
    DistanceFunction d;
    d.rho = dx * dx + fsq + gsq;
    d.s = table->s_index();
    d.t = table->t_index();
    return d;
}

RhoNumerator rho_numerator(const DistanceFunction& d) {
    const std::size_t s = d.s, t = d.t;
    RationalFunction rs = d.rho.derivative(s);
    RationalFunction rt = d.rho.derivative(t);
    if (rs.is_zero() || rt.is_zero()) throw CircleAxisDegeneracy();

    // d/ds ( (dh/dt) / h ) for h = rs/rt, written with logarithm splitting so
    // denominators that are products of single-variable factors drop out.
    auto mix_of = [&](const RationalFunction& f) {
        RationalFunction mn(mix_numerator(f.num(), s, t));
        RationalFunction md(mix_numerator(f.den(), s, t));
        RationalFunction num_part = mn / RationalFunction(f.num() * f.num());
        RationalFunction den_part = md / RationalFunction(f.den() * f.den());
        return num_part - den_part;
    };
    RationalFunction e = mix_of(rs) - mix_of(rt);

    RhoNumerator out;
    out.rho_n = e.num().primitive_part();
    if (e.num().is_zero()) out.rho_n = MultiPoly::zero(d.rho.table());
    out.den = e.den();
    return out;
}

RhoCoeffEngine::RhoCoeffEngine(const DistanceFunction& d) : table_(d.rho.table()), s_(d.s), t_(d.t) {
    RationalFunction rs = d.rho.derivative(s_);
    RationalFunction rt = d.rho.derivative(t_);
    if (rs.is_zero() || rt.is_zero()) throw CircleAxisDegeneracy();

    us_ = rs.num();
    ut_ = rt.num();
    us_s_ = us_.derivative(s_);
    us_t_ = us_.derivative(t_);
    us_st_ = us_s_.derivative(t_);
    ut_s_ = ut_.derivative(s_);
    ut_t_ = ut_.derivative(t_);
    ut_st_ = ut_s_.derivative(t_);

    // The pipeline needs the derivative denominators to contribute nothing to
    // the mixed log derivative, and the assembled fraction to be reduced.
    bool ok = mix_vanishes(rs.den(), s_, t_) && mix_vanishes(rt.den(), s_, t_);
    if (ok) {
        auto coprime = [](const MultiPoly& a, const MultiPoly& b) {
            return poly_gcd(a, b).is_constant();
        };
        ok = coprime(us_s_, us_) && coprime(us_t_, us_) && coprime(ut_, us_) &&
             coprime(ut_s_, ut_) && coprime(ut_t_, ut_) ;
    }

    if (!ok) {
        fallback_ = true;
        RhoNumerator rn = rho_numerator(d);
        full_ = rn.rho_n;
        full_den_ = rn.den;
        max_s_ = full_.degree_in(s_);
        max_t_ = full_.degree_in(t_);
        return;
    }

    MultiPoly a = us_st_ * us_ - us_s_ * us_t_;
    MultiPoly b = ut_st_ * ut_ - ut_s_ * ut_t_;
    MultiPoly us2 = us_ * us_;
    MultiPoly ut2 = ut_ * ut_;

    auto split_cells = [&](const MultiPoly& p, CellMap& cells) {
        unsigned ds = p.degree_in(s_), dt = p.degree_in(t_);
        for (unsigned i = 0; i <= ds; ++i) {
            MultiPoly row = p.coeff_of(s_, i);
            if (row.is_zero()) continue;
            for (unsigned j = 0; j <= dt; ++j) {
                MultiPoly c = row.coeff_of(t_, j);
                if (!c.is_zero()) cells.emplace(cell_key(i, j), std::move(c));
            }
        }
    };
    split_cells(a, a_);
    split_cells(b, b_);
    split_cells(us2, us2_);
    split_cells(ut2, ut2_);
    max_s_ = std::max(a.degree_in(s_) + ut2.degree_in(s_), b.degree_in(s_) + us2.degree_in(s_));
    max_t_ = std::max(a.degree_in(t_) + ut2.degree_in(t_), b.degree_in(t_) + us2.degree_in(t_));
}

MultiPoly RhoCoeffEngine::cell_sum(const CellMap& f, const CellMap& g, unsigned a, unsigned b,
                                   bool negate) const {
    MultiPoly acc = MultiPoly::zero(table_);
    for (const auto& [key, fc] : f) {
        unsigned i = key >> 16, j = key & 0xffff;
        if (i > a || j > b) continue;
        auto it = g.find(cell_key(a - i, b - j));
        if (it == g.end()) continue;
        MultiPoly prod = fc * it->second;
        acc = negate ? acc - prod : acc + prod;
    }
    return acc;
}

MultiPoly RhoCoeffEngine::coeff(unsigned s_deg, unsigned t_deg) const {
    if (fallback_) return full_.coeff_st(s_deg, t_deg);
    MultiPoly r = cell_sum(a_, ut2_, s_deg, t_deg, false);
    return r + cell_sum(b_, us2_, s_deg, t_deg, true);
}

MultiPoly RhoCoeffEngine::combination(
    const std::vector<std::tuple<unsigned, unsigned, Rational>>& weighted) const {
    MultiPoly acc = MultiPoly::zero(table_);
    for (const auto& [a, b, w] : weighted) acc = acc + coeff(a, b) * w;
    return acc;
}

std::optional<Rational> RhoCoeffEngine::eval_exact(const std::vector<Rational>& at) const {
    if (fallback_) {
        Rational den = full_den_.eval(at);
        if (is_zero(den)) return std::nullopt;
        return full_.eval(at) / den;
    }
    Rational us = us_.eval(at), ut = ut_.eval(at);
    if (is_zero(us) || is_zero(ut)) return std::nullopt;
    Rational a = us_st_.eval(at) * us - us_s_.eval(at) * us_t_.eval(at);
    Rational b = ut_st_.eval(at) * ut - ut_s_.eval(at) * ut_t_.eval(at);
    return a / (us * us) - b / (ut * ut);
}

BigFloat eval_poly_big(const MultiPoly& p, const std::vector<BigFloat>& values) {
    BigFloat acc(0L);
    for (const auto& term : p.terms()) {
        BigFloat v(term.coeff);
        for (std::size_t k = 0; k < values.size(); ++k)
            for (unsigned e = 0; e < term.mono.e[k]; ++e) v *= values[k];
        acc += v;
    }
    return acc;
}

BigFloat numeric_crosscheck(const DistanceFunction& d, const std::vector<Rational>& assignment,
                            const BigFloat& step) {
    RhoCoeffEngine engine(d);
    return numeric_crosscheck(engine, d, assignment, step);
}

BigFloat numeric_crosscheck(const RhoCoeffEngine& engine, const DistanceFunction& d,
                            const std::vector<Rational>& assignment, const BigFloat& step) {
    auto exact = engine.eval_exact(assignment);
    if (!exact) throw std::domain_error("crosscheck point is singular for the engine");

    RationalFunction rs = d.rho.derivative(d.s);
    RationalFunction rt = d.rho.derivative(d.t);
    std::vector<BigFloat> base;
    base.reserve(assignment.size());
    for (const auto& q : assignment) base.emplace_back(q);

    auto log_ratio = [&](const BigFloat& sv, const BigFloat& tv) {
        std::vector<BigFloat> at = base;
        at[d.s] = sv;
        at[d.t] = tv;
        BigFloat n1 = eval_poly_big(rs.num(), at), d1 = eval_poly_big(rs.den(), at);
        BigFloat n2 = eval_poly_big(rt.num(), at), d2 = eval_poly_big(rt.den(), at);
        if (n1.is_zero() || n2.is_zero() || d1.is_zero() || d2.is_zero())
            throw std::domain_error("crosscheck hit a pole of rho_s/rho_t");
        return ((n1 / d1) / (n2 / d2)).abs().ln();
    };

    BigFloat s0 = base[d.s], t0 = base[d.t], h = step;
    BigFloat fd = (log_ratio(s0 + h, t0 + h) - log_ratio(s0 + h, t0 - h) - log_ratio(s0 - h, t0 + h) +
                   log_ratio(s0 - h, t0 - h)) /
                  (BigFloat(4L) * h * h);
    BigFloat sym(*exact);
    BigFloat err = (sym - fd).abs();
    BigFloat scale = sym.abs();
    if (scale < BigFloat(1L)) scale = BigFloat(1L);
    return err / scale;
}

}  // namespace distgeom
