#pragma once

#include "fano/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace fano {

struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// KE: (-K, E) on a blowup.  MF: (M, F) pairs such as (pullback, exceptional)
// after a change of basis.  PullbackE: (sigma^*D, E) raw data before conversion.
// HOnly: rank one, the fundamental class.
enum class Basis { KE, MF, PullbackE, HOnly };

std::string to_string(Basis b);

class DivisorClass {
public:
    static DivisorClass ke(Rational k, Rational e) { return {Basis::KE, std::move(k), std::move(e)}; }
    static DivisorClass mf(Rational m, Rational f) { return {Basis::MF, std::move(m), std::move(f)}; }
    static DivisorClass pullback(Rational p, Rational e) { return {Basis::PullbackE, std::move(p), std::move(e)}; }
    static DivisorClass h(Rational c) { return DivisorClass(std::move(c)); }
    static DivisorClass in(Basis b, Rational x, Rational y) { return {b, std::move(x), std::move(y)}; }

    Basis basis() const { return basis_; }
    int rank() const { return second_ ? 2 : 1; }
    const Rational& first() const { return first_; }
    // Zero for rank-one classes.
    Rational second() const { return second_ ? *second_ : Rational(0); }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass d);
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

private:
    DivisorClass(Basis b, Rational x, Rational y) : basis_(b), first_(std::move(x)), second_(std::move(y)) {}
    explicit DivisorClass(Rational x) : basis_(Basis::HOnly), first_(std::move(x)) {}
    void check_same(const DivisorClass& o) const;

    Basis basis_;
    Rational first_;
    std::optional<Rational> second_;
};

// Symmetric trilinear intersection form.  Rank two stores the four monomial
// values (x^3, x^2 y, x y^2, y^3) on the declared basis (x, y); rank one
// stores H^n together with n.
class TrilinearForm {
public:
    static TrilinearForm rank2(Basis b, Rational c30, Rational c21, Rational c12, Rational c03);
    static TrilinearForm rank1(Rational top, int dim);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    Basis basis() const { return basis_; }
    // Value of x^(3-j) y^j.
    const Rational& monomial(int j) const { return values_.at(j); }
    const std::array<Rational, 4>& values() const { return values_; }
    const Rational& top() const { return values_[0]; }

    friend bool operator==(const TrilinearForm&, const TrilinearForm&) = default;

private:
    TrilinearForm() = default;
    int rank_ = 2;
    int dim_ = 3;
    Basis basis_ = Basis::KE;
    std::array<Rational, 4> values_{};
};

Rational eval_form(const TrilinearForm& form, const DivisorClass& d1, const DivisorClass& d2,
                   const DivisorClass& d3);

// D^n for rank-one forms of any dimension, D^3 for rank two.
Rational self_intersection(const TrilinearForm& form, const DivisorClass& d);

// Re-express the form on a new basis (u, v) given in old coordinates.  Both
// vectors must have integer coordinates and be linearly independent.
TrilinearForm change_basis(const TrilinearForm& form, const DivisorClass& u, const DivisorClass& v,
                           Basis new_tag);

// Coordinates of `d` with respect to (u, v); all three in the same basis.
DivisorClass express_in(const DivisorClass& d, const DivisorClass& u, const DivisorClass& v,
                        Basis new_tag);

// Convert (sigma^*D, E) monomial data into the (-K~, E) basis where
// -K~ = scale * sigma^*D - discrepancy * E.
TrilinearForm from_pullback_data(const Rational& p3, const Rational& p2e, const Rational& pe2,
                                 const Rational& e3, long scale, long discrepancy);

}  // namespace fano
