#include "distgeom/multipoly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_map>

namespace distgeom {

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::uint64_t w[4];
    std::memcpy(w, m.e.data(), sizeof(w));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w) {
        h ^= x + 0xbf58476d1ce4e5b9ULL + (h << 6) + (h >> 2);
        h *= 0x94d049bb133111ebULL;
    }
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
}

bool mono_less(const SymbolTable& tab, const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (std::size_t rank = 0; rank < tab.size(); ++rank) {
        std::size_t v = tab.var_at_priority(rank);
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    }
    return false;
}

void MultiPoly::check_same_table(const MultiPoly& o) const {
    if (!table_ || !o.table_ || !(*table_ == *o.table_))
        throw std::invalid_argument("symbol table mismatch");
}

MultiPoly MultiPoly::constant(SymbolTablePtr table, const Rational& c) {
    MultiPoly p(std::move(table));
    if (!distgeom::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(SymbolTablePtr table, std::size_t var, unsigned power) {
    if (var >= table->size()) throw std::invalid_argument("variable index out of range");
    MultiPoly p(std::move(table));
    if (power > 65535) throw std::overflow_error("exponent overflow");
    Monomial m;
    m.e[var] = static_cast<std::uint16_t>(power);
    p.terms_.push_back({m, Rational(1)});
    if (power == 0) p.normalize();
    return p;
}

const MultiPoly::Term& MultiPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[var]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

void MultiPoly::normalize() {
    const SymbolTable& tab = *table_;
    std::sort(terms_.begin(), terms_.end(), [&tab](const Term& x, const Term& y) {
        return mono_less(tab, y.mono, x.mono);  // descending
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && distgeom::is_zero(out.back().coeff)) out.pop_back();
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::from_terms(SymbolTablePtr table, std::vector<Term> terms) {
    MultiPoly p(std::move(table));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_table(o);
    const SymbolTable& tab = *table_;
    MultiPoly r(table_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!distgeom::is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (mono_less(tab, o.terms_[j].mono, terms_[i].mono)) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_table(o);
    MultiPoly r(table_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const auto& small = terms_.size() <= o.terms_.size() ? terms_ : o.terms_;
    const auto& big = terms_.size() <= o.terms_.size() ? o.terms_ : terms_;

    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(big.size() * 2);
    Monomial m;
    for (const auto& a : small) {
        for (const auto& b : big) {
            for (std::size_t k = 0; k < m.e.size(); ++k) {
                unsigned s = unsigned(a.mono.e[k]) + unsigned(b.mono.e[k]);
                if (s > 65535) throw std::overflow_error("exponent overflow in multiply");
                m.e[k] = static_cast<std::uint16_t>(s);
            }
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, a.coeff * b.coeff);
            else
                it->second += a.coeff * b.coeff;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& kv : acc)
        if (!distgeom::is_zero(kv.second)) r.terms_.push_back({kv.first, std::move(kv.second)});
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (distgeom::is_zero(c)) return MultiPoly(table_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r = constant(table_, Rational(1));
    MultiPoly base(*this);
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(table_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.mono.e[var] == 0) continue;
        Term d = t;
        d.coeff *= static_cast<long>(t.mono.e[var]);
        d.mono.e[var] -= 1;
        r.terms_.push_back(std::move(d));
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::coeff_st(unsigned s_deg, unsigned t_deg) const {
    return coeff_of(table_->s_index(), s_deg).coeff_of(table_->t_index(), t_deg);
}

MultiPoly MultiPoly::coeff_of(std::size_t var, unsigned deg) const {
    MultiPoly r(table_);
    for (const auto& t : terms_) {
        if (t.mono.e[var] != deg) continue;
        Term c = t;
        c.mono.e[var] = 0;
        r.terms_.push_back(std::move(c));
    }
    r.normalize();
    return r;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

MultiPoly MultiPoly::primitive_part(Rational* factor) const {
    if (terms_.empty()) {
        if (factor) *factor = 0;
        return *this;
    }
    Rational c = content();
    if (sgn(leading().coeff) < 0) c = -c;
    if (factor) *factor = c;
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coeff /= c;
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& values) const {
    if (values.size() < table_->size()) throw std::invalid_argument("not enough values");
    // Cache powers per variable on the fly.
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational term = t.coeff;
        for (std::size_t v = 0; v < table_->size(); ++v) {
            for (unsigned k = 0; k < t.mono.e[v]; ++k) term *= values[v];
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::eval_partial(const std::vector<std::optional<Rational>>& values) const {
    MultiPoly r(table_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term nt = t;
        for (std::size_t v = 0; v < table_->size() && v < values.size(); ++v) {
            if (!values[v] || nt.mono.e[v] == 0) continue;
            for (unsigned k = 0; k < nt.mono.e[v]; ++k) nt.coeff *= *values[v];
            nt.mono.e[v] = 0;
        }
        if (!distgeom::is_zero(nt.coeff)) r.terms_.push_back(std::move(nt));
    }
    r.normalize();
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool has_vars = t.mono.total_degree() > 0;
        if (!has_vars || !distgeom::is_one(c)) {
            os << rational_to_string(c);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t rank = 0; rank < table_->size(); ++rank) {
            std::size_t v = table_->var_at_priority(rank);
            if (t.mono.e[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << table_->name(v);
            if (t.mono.e[v] > 1) os << "^" << unsigned(t.mono.e[v]);
        }
    }
    return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_table(b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return a;
    const SymbolTable& tab = *a.table();
    MultiPoly rem = a;
    std::vector<MultiPoly::Term> quot;
    const auto& bl = b.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        if (!bl.mono.divides(rl.mono)) return std::nullopt;
        MultiPoly::Term q;
        for (std::size_t k = 0; k < q.mono.e.size(); ++k)
            q.mono.e[k] = static_cast<std::uint16_t>(rl.mono.e[k] - bl.mono.e[k]);
        q.coeff = rl.coeff / bl.coeff;
        MultiPoly qp(a.table());
        qp = MultiPoly::from_terms(a.table(), {q});
        rem = rem - qp * b;
        quot.push_back(std::move(q));
        (void)tab;
    }
    return MultiPoly::from_terms(a.table(), std::move(quot));
}

std::optional<Rational> equal_up_to_scalar(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_table(b);
    if (a.is_zero() && b.is_zero()) return Rational(1);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    if (!(a.leading().mono == b.leading().mono)) return std::nullopt;
    Rational lambda = a.leading().coeff / b.leading().coeff;
    if (a - b * lambda == MultiPoly::zero(a.table())) return lambda;
    return std::nullopt;
}

}  // namespace distgeom
