#include "fano/riemann_roch.hpp"

#include <string>

namespace fano {

FanoNumerics::FanoNumerics(int dim, int index, Rational degree)
    : dim_(dim), index_(index), degree_(std::move(degree))
{
    if (dim_ < 1)
        throw InvalidNumerics("dimension must be positive");
    if (index_ < 1 || index_ > dim_ + 1)
        throw InvalidNumerics("index must lie in [1, dim+1]");
    if (degree_.sign() <= 0)
        throw InvalidNumerics("degree must be positive");
    if (index_ == dim_ + 1 && degree_ != 1)
        throw InvalidNumerics("index dim+1 forces degree 1");
    if (index_ == dim_ && degree_ != 2)
        throw InvalidNumerics("index dim forces degree 2");
    if (index_ == dim_ - 1 && !degree_.is_integer())
        throw InvalidNumerics("degree must be an integer for coindex 2");
    if (index_ == dim_ - 2) {
        if (!degree_.is_integer())
            throw InvalidNumerics("degree must be an integer for coindex 3");
        if (degree_.to_int() % 2 != 0)
            throw ParityError("degree must be even for coindex 3, got " + degree_.str());
    }
}

FanoNumerics FanoNumerics::from_genus(int dim, int index, long genus)
{
    if (index != dim - 2)
        throw InvalidNumerics("genus is defined only for coindex 3");
    if (genus < 2)
        throw InvalidNumerics("genus must be at least 2");
    return FanoNumerics(dim, index, degree_from_genus(genus));
}

long FanoNumerics::genus() const
{
    if (index_ != dim_ - 2)
        throw InvalidNumerics("genus is defined only for coindex 3");
    return genus_from_degree(degree_);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (c_.size() > 1 && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const
{
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.c_.empty() || b.c_.empty())
        return Polynomial();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        out[i] += b.c_[i];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p)
{
    std::vector<Rational> out = p.c_;
    for (auto& c : out)
        c *= s;
    return Polynomial(std::move(out));
}

static Rational factorial(int n)
{
    Rational r(1);
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

HilbertPolynomial hilbert_polynomial(const FanoNumerics& fn)
{
    const int n = fn.dim();
    const int iota = fn.index();
    const int c = fn.coindex();
    if (c > 3)
        throw UnsupportedCoindex("coindex " + std::to_string(c) + " is not supported");

    // Forced zeros at t = -1, ..., -(iota-1).
    Polynomial zeros({1});
    for (int k = 1; k < iota; ++k)
        zeros = zeros * Polynomial({k, 1});

    // Remaining factor: a polynomial of degree c in s = t + iota/2 with parity c,
    // so that chi(-iota - t) = (-1)^n chi(t).
    const Polynomial s({Rational(iota, 2), 1});
    const Rational lead = fn.degree() / factorial(n);
    auto assemble = [&](const Rational& a) {
        Polynomial rest({1});
        if (c == 1 || c == 3)
            rest = rest * s;
        if (c >= 2)
            rest = rest * (s * s + Polynomial({a}));
        return lead * (zeros * rest);
    };

    if (c <= 1) {
        auto chi = assemble(0);
        if (chi(0) != 1)
            throw InvalidNumerics("degree incompatible with chi(0) = 1");
        return chi;
    }
    // chi(0) = 1 is linear in a: chi(0) = u + a v.
    Rational u = assemble(0)(0);
    Rational v = assemble(1)(0) - u;
    return assemble((Rational(1) - u) / v);
}

long h0_fundamental(const FanoNumerics& fn)
{
    const long n = fn.dim();
    switch (fn.coindex()) {
    case 0: return n + 1;
    case 1: return n + 2;
    case 2: return n + fn.degree().to_int() - 1;
    case 3: return n + fn.genus() - 1;
    }
    throw UnsupportedCoindex("coindex " + std::to_string(fn.coindex()) + " is not supported");
}

long genus_from_degree(const Rational& degree)
{
    if (!degree.is_integer() || degree.sign() <= 0)
        throw InvalidNumerics("degree must be a positive integer");
    auto d = degree.to_int();
    if (d % 2 != 0)
        throw ParityError("odd degree " + std::to_string(d) + " has no genus");
    return d / 2 + 1;
}

Rational degree_from_genus(long genus)
{
    return Rational(2 * genus - 2);
}

long surface_h0(long degree, long index, long t)
{
    if (t < 0 || degree < 1)
        throw std::invalid_argument("surface_h0 needs t >= 0 and degree >= 1");
    Rational v = Rational(degree * t * (t + index), 2) + 1;
    return v.to_int();
}

}  // namespace fano
