#include "futaki/rational.hpp"

#include <cctype>
#include <ostream>

#include "futaki/errors.hpp"

namespace futaki {

namespace {

// Digits with an optional leading '-'; no '+', no spaces, no empty part.
bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0)
        throw invalid_input("rational denominator must be nonzero");
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0)
        throw invalid_input("rational denominator must be nonzero");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!valid_integer_token(num, /*allow_sign=*/true))
        throw invalid_input("malformed rational '" + std::string(s) + "'");
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(mpz_class(std::string(num), 10));
    } else {
        std::string_view den = s.substr(slash + 1);
        if (!valid_integer_token(den, /*allow_sign=*/false))
            throw invalid_input("malformed rational '" + std::string(s) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0)
            throw invalid_input("rational denominator must be nonzero in '" + std::string(s) + "'");
        v = mpq_class(mpz_class(std::string(num), 10), d);
        v.canonicalize();
    }
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw invalid_input("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    std::string out = v_.get_num().get_str();
    if (v_.get_den() != 1) {
        out += '/';
        out += v_.get_den().get_str();
    }
    return out;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& x, unsigned e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(mpq_class(n, d)); // already canonical: gcd(n,d)=1 is preserved by powers
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

} // namespace futaki
