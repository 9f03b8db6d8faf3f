#include "distgeom/bigfloat.hpp"

#include <atomic>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace distgeom {

namespace {
std::atomic<unsigned> g_digits{60};

mpfr_prec_t bits_for(unsigned digits) {
    // digits * log2(10), plus slack so printing round-trips
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}
}  // namespace

void BigFloat::set_default_digits(unsigned digits) {
    if (digits < 30) throw std::invalid_argument("precision below 30 digits");
    g_digits.store(digits);
}
unsigned BigFloat::default_digits() { return g_digits.load(); }
mpfr_prec_t BigFloat::default_bits() { return bits_for(g_digits.load()); }

BigFloat::BigFloat() { mpfr_init2(v_, default_bits()); mpfr_set_zero(v_, 1); }
BigFloat::BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}
BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}
BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat::BigFloat(long v) { mpfr_init2(v_, default_bits()); mpfr_set_si(v_, v, MPFR_RNDN); }
BigFloat::BigFloat(const Rational& q) {
    mpfr_init2(v_, default_bits());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const std::string& decimal) {
    mpfr_init2(v_, default_bits());
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("bad decimal literal: " + decimal);
}

BigFloat BigFloat::pi() {
    BigFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

#define DISTGEOM_BF_BINOP(opname, fn)                          \
    BigFloat BigFloat::operator opname(const BigFloat& o) const { \
        BigFloat r;                                             \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                          \
        return r;                                               \
    }
DISTGEOM_BF_BINOP(+, mpfr_add)
DISTGEOM_BF_BINOP(-, mpfr_sub)
DISTGEOM_BF_BINOP(*, mpfr_mul)
DISTGEOM_BF_BINOP(/, mpfr_div)
#undef DISTGEOM_BF_BINOP

BigFloat& BigFloat::operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw std::domain_error("sqrt of negative value");
    BigFloat r;
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ln() const {
    if (sign() <= 0) throw std::domain_error("log of nonpositive value");
    BigFloat r;
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r;
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sin() const {
    BigFloat r;
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::cos() const {
    BigFloat r;
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::pow_ui(unsigned long n) const {
    BigFloat r;
    mpfr_pow_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(unsigned digits) const {
    if (digits == 0) digits = default_digits();
    if (!is_finite()) return "nan";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    std::string out;
    if (e <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + d;
    } else if (static_cast<std::size_t>(e) >= d.size()) {
        out = d + std::string(static_cast<std::size_t>(e) - d.size(), '0');
    } else {
        out = d.substr(0, static_cast<std::size_t>(e)) + "." + d.substr(static_cast<std::size_t>(e));
    }
    // trim trailing zeros in the fraction
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

}  // namespace distgeom
