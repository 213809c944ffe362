#include "fano/rational.hpp"

#include <limits>

namespace fano {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    q_ = mpq_class(mpz_class(num), mpz_class(den));
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s), mpz_class(1));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
}

std::int64_t Rational::to_int() const
{
    if (!is_integer())
        throw std::domain_error("not an integer: " + str());
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p())
        throw std::domain_error("integer out of range: " + str());
    return n.get_si();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned exp)
{
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i)
        r *= base;
    return r;
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

}  // namespace fano
