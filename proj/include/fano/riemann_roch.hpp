#pragma once

#include "fano/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fano {

struct UnsupportedCoindex : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParityError : std::domain_error {
    using std::domain_error::domain_error;
};
struct InvalidNumerics : std::domain_error {
    using std::domain_error::domain_error;
};

// Dimension, index and degree H^n of a Fano variety with -K = index * H.
class FanoNumerics {
public:
    FanoNumerics(int dim, int index, Rational degree);
    // Coindex-three threefolds and higher: degree = 2g - 2.
    static FanoNumerics from_genus(int dim, int index, long genus);

    int dim() const { return dim_; }
    int index() const { return index_; }
    int coindex() const { return dim_ + 1 - index_; }
    const Rational& degree() const { return degree_; }
    // Only when index = dim - 2; throws otherwise.
    long genus() const;

private:
    int dim_;
    int index_;
    Rational degree_;
};

// Dense polynomial with ascending coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    const std::vector<Rational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational operator()(const Rational& t) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

using HilbertPolynomial = Polynomial;

HilbertPolynomial hilbert_polynomial(const FanoNumerics& fn);

long h0_fundamental(const FanoNumerics& fn);

long genus_from_degree(const Rational& degree);
Rational degree_from_genus(long genus);

long surface_h0(long degree, long index, long t);

}  // namespace fano
