#ifndef DISTGEOM_BIGFLOAT_HPP
#define DISTGEOM_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>

#include "distgeom/rational.hpp"

namespace distgeom {

// Arbitrary-precision real backed by MPFR. Precision is set globally in
// decimal digits (default 60) before any values are created.
class BigFloat {
public:
    static void set_default_digits(unsigned digits);
    static unsigned default_digits();
    static mpfr_prec_t default_bits();

    BigFloat();
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    explicit BigFloat(long v);
    explicit BigFloat(const Rational& q);
    explicit BigFloat(const std::string& decimal);

    static BigFloat pi();

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator>=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) >= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }

    BigFloat abs() const;
    BigFloat sqrt() const;  // negative input throws
    BigFloat ln() const;    // nonpositive input throws
    BigFloat exp() const;
    BigFloat sin() const;
    BigFloat cos() const;
    BigFloat pow_ui(unsigned long n) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // Fixed-notation decimal, round-trippable at the working precision.
    std::string to_string(unsigned digits = 0) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace distgeom

#endif
