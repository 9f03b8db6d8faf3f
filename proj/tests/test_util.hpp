#ifndef DISTGEOM_TEST_UTIL_HPP
#define DISTGEOM_TEST_UTIL_HPP

#include <cstdint>
#include <vector>

#include "distgeom/multipoly.hpp"
#include "distgeom/ratfunc.hpp"

namespace distgeom::testutil {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational(long max_abs = 9, long max_den = 5) {
        long n = int_in(-max_abs, max_abs);
        long d = int_in(1, max_den);
        return rational_from_long(n, static_cast<unsigned long>(d));
    }
};

inline MultiPoly random_poly(Rng& rng, const SymbolTablePtr& table, unsigned max_deg, int terms,
                             bool nonzero = false) {
    std::vector<MultiPoly::Term> ts;
    for (int k = 0; k < terms; ++k) {
        MultiPoly::Term t;
        unsigned budget = max_deg;
        for (std::size_t v = 0; v < table->size(); ++v) {
            unsigned e = static_cast<unsigned>(rng.int_in(0, budget));
            t.mono.e[v] = static_cast<std::uint8_t>(e);
            budget -= e;
            if (budget == 0) break;
        }
        t.coeff = rng.rational();
        ts.push_back(t);
    }
    MultiPoly p = MultiPoly::from_terms(table, std::move(ts));
    if (nonzero && p.is_zero()) return MultiPoly::constant(table, Rational(1));
    return p;
}

inline RationalFunction random_ratfunc(Rng& rng, const SymbolTablePtr& table, unsigned max_deg,
                                       int terms) {
    MultiPoly n = random_poly(rng, table, max_deg, terms);
    MultiPoly d = random_poly(rng, table, max_deg, terms, /*nonzero=*/true);
    return RationalFunction(n, d);
}

}  // namespace distgeom::testutil

#endif
