#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace futaki {

/// Exact arbitrary-precision rational number.
///
/// Always held in lowest terms with positive denominator; every operation
/// is exact — the library never rounds.  Serializes as "p/q" in base 10
/// with the sign on the numerator, or just "p" when the denominator is 1.
class Rational {
public:
    /// Zero.
    Rational() : v_(0) {}

    Rational(long n) : v_(n, 1) {}

    /// n/d, reduced.  Throws invalid_input if d == 0.
    Rational(long n, long d);

    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Adopts an mpq value (canonicalized).  Throws invalid_input on a
    /// zero denominator.
    explicit Rational(const mpq_class& v);

    /// Parses "p/q" or "p": optional leading '-', base-10 digits, and for
    /// the two-part form a '/' followed by digits with q != 0.  Anything
    /// else throws invalid_input.
    static Rational from_string(std::string_view s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    /// Throws invalid_input on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_; // invariant: canonical form, denominator > 0
};

/// |x|.
Rational abs(const Rational& x);

/// x^e for e >= 0 (0^0 = 1).
Rational pow(const Rational& x, unsigned e);

/// Exact n! as a Rational.
Rational factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace futaki
