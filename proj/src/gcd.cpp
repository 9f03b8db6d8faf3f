#include <algorithm>
#include <optional>
#include <vector>

#include "distgeom/multipoly.hpp"

namespace distgeom {
namespace {

// Dense univariate image with rational coefficients, used for the
// coprimality certificate.
using UniPoly = std::vector<Rational>;  // index = degree

void uni_trim(UniPoly& p) {
    while (!p.empty() && distgeom::is_zero(p.back())) p.pop_back();
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        uni_trim(a);
    }
    return a;
}

unsigned uni_gcd_degree(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : static_cast<unsigned>(a.size() - 1);
}

// Coefficients of p viewed as a univariate polynomial in var.
std::vector<MultiPoly> to_univariate(const MultiPoly& p, std::size_t var) {
    unsigned d = p.degree_in(var);
    std::vector<MultiPoly> c;
    c.reserve(d + 1);
    for (unsigned k = 0; k <= d; ++k) c.push_back(p.coeff_of(var, k));
    return c;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& c, std::size_t var) {
    MultiPoly acc = MultiPoly::zero(c.front().table());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        acc = acc + c[k] * MultiPoly::variable(c[k].table(), var, static_cast<unsigned>(k));
    }
    return acc;
}

std::size_t uni_degree(const std::vector<MultiPoly>& c) {
    std::size_t d = c.size();
    while (d > 0 && c[d - 1].is_zero()) --d;
    return d == 0 ? 0 : d - 1;
}

bool uni_is_zero(const std::vector<MultiPoly>& c) {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

// Pseudo-remainder of u by v in var; both as coefficient vectors. Multiplies
// through by lc(v) as needed so all divisions are exact.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> u, const std::vector<MultiPoly>& v) {
    std::size_t dv = uni_degree(v);
    const MultiPoly& lv = v[dv];
    std::size_t du = uni_degree(u);
    long steps = static_cast<long>(du) - static_cast<long>(dv) + 1;
    while (!uni_is_zero(u) && (du = uni_degree(u)) >= dv && !u[du].is_zero()) {
        if (du < dv) break;
        MultiPoly lu = u[du];
        std::size_t shift = du - dv;
        for (auto& c : u) c = c * lv;
        for (std::size_t i = 0; i <= dv; ++i) u[shift + i] = u[shift + i] - lu * v[i];
        u[du] = MultiPoly::zero(lu.table());
        --steps;
        if (uni_is_zero(u)) break;
    }
    if (steps > 0) {
        MultiPoly f = lv.pow(static_cast<unsigned>(steps));
        for (auto& c : u) c = c * f;
    }
    return u;
}

MultiPoly exact_divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw std::logic_error("internal: expected exact division in gcd");
    return *q;
}

// gcd of the coefficient list (content with respect to some variable).
MultiPoly content_of(const std::vector<MultiPoly>& coeffs) {
    MultiPoly g = MultiPoly::zero(coeffs.front().table());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_part() : poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    if (g.is_zero()) return g;
    return g.primitive_part();
}

std::uint64_t rng_state = 0x2545F4914F6CDD1DULL;
long next_small_int() {
    // splitmix64, reduced to a small nonzero magnitude
    rng_state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = rng_state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    long v = static_cast<long>(z % 41) - 20;
    return v == 0 ? 7 : v;
}

// Tries to certify deg_var(gcd(a,b)) == 0 by a univariate evaluation image.
// A single valid image with coprime result is a proof; failure is inconclusive.
bool certify_coprime_in_var(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    const auto& tab = *a.table();
    unsigned da = a.degree_in(var), db = b.degree_in(var);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<std::optional<Rational>> assign(tab.size());
        for (std::size_t v = 0; v < tab.size(); ++v)
            if (v != var) assign[v] = Rational(next_small_int());
        MultiPoly ia = a.eval_partial(assign);
        MultiPoly ib = b.eval_partial(assign);
        if (ia.degree_in(var) != da || ib.degree_in(var) != db) continue;  // lc vanished
        UniPoly ua(da + 1, Rational(0)), ub(db + 1, Rational(0));
        for (const auto& t : ia.terms()) ua[t.mono.e[var]] = t.coeff;
        for (const auto& t : ib.terms()) ub[t.mono.e[var]] = t.coeff;
        if (uni_gcd_degree(ua, ub) == 0) return true;
    }
    return false;
}

MultiPoly gcd_primitive(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    // Subresultant PRS on primitive inputs, in the given variable.
    std::vector<MultiPoly> u = to_univariate(a, var);
    std::vector<MultiPoly> v = to_univariate(b, var);
    if (uni_degree(u) < uni_degree(v)) std::swap(u, v);

    auto table = a.table();
    MultiPoly g = MultiPoly::constant(table, Rational(1));
    MultiPoly h = MultiPoly::constant(table, Rational(1));

    while (true) {
        std::size_t du = uni_degree(u), dv = uni_degree(v);
        unsigned delta = static_cast<unsigned>(du - dv);
        std::vector<MultiPoly> r = pseudo_rem(u, v);
        if (uni_is_zero(r)) break;
        if (uni_degree(r) == 0 && r[0].is_constant() && !r[0].is_zero()) {
            // coprime
            return MultiPoly::constant(table, Rational(1));
        }
        MultiPoly divisor = g * h.pow(delta);
        for (auto& c : r) c = c.is_zero() ? c : exact_divide_or_throw(c, divisor);
        u = std::move(v);
        v = std::move(r);
        g = u[uni_degree(u)];
        if (delta >= 1) {
            // h = g^delta / h^(delta-1)
            MultiPoly num = g.pow(delta);
            h = delta == 1 ? num : exact_divide_or_throw(num, h.pow(delta - 1));
        }
        if (uni_degree(v) == 0) {
            if (v[0].is_zero()) break;
            return MultiPoly::constant(table, Rational(1));
        }
    }
    // v holds the last nonzero remainder (up to content in var).
    MultiPoly cand = from_univariate(v, var);
    MultiPoly cont = content_of(to_univariate(cand, var));
    if (!cont.is_constant()) cand = exact_divide_or_throw(cand, cont);
    return cand.primitive_part();
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_table(b);
    auto table = a.table();
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(table, Rational(1));

    // Any common divisor only involves variables present in both inputs.
    std::vector<std::size_t> shared;
    for (std::size_t v = 0; v < table->size(); ++v)
        if (a.depends_on(v) && b.depends_on(v)) shared.push_back(v);
    if (shared.empty()) return MultiPoly::constant(table, Rational(1));

    MultiPoly pa = a.primitive_part();
    MultiPoly pb = b.primitive_part();

    // Cheap certificates first: a valid univariate image with coprime result
    // proves the gcd has degree zero in that variable. If that holds for
    // every shared variable, the gcd is constant and no content recursion or
    // remainder sequence is needed.
    std::vector<std::size_t> undecided;
    for (auto v : shared)
        if (!certify_coprime_in_var(pa, pb, v)) undecided.push_back(v);
    if (undecided.empty()) return MultiPoly::constant(table, Rational(1));

    // Main variable: smallest combined degree keeps the remainder sequence short.
    std::size_t var = undecided[0];
    unsigned best = ~0u;
    for (auto v : undecided) {
        unsigned d = pa.degree_in(v) + pb.degree_in(v);
        if (d < best) {
            best = d;
            var = v;
        }
    }

    // Split off the content with respect to var.
    MultiPoly ca = content_of(to_univariate(pa, var));
    MultiPoly cb = content_of(to_univariate(pb, var));
    MultiPoly ppa = ca.is_constant() ? pa : exact_divide(pa, ca).value();
    MultiPoly ppb = cb.is_constant() ? pb : exact_divide(pb, cb).value();
    MultiPoly content_gcd = poly_gcd(ca, cb);

    MultiPoly pp_gcd = gcd_primitive(ppa, ppb, var);

    MultiPoly result = content_gcd * pp_gcd;
    return result.primitive_part();
}

}  // namespace distgeom
