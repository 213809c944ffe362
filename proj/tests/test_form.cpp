#include "fano/form.hpp"

#include "doctest.h"

#include <random>

using fano::Basis;
using fano::DivisorClass;
using fano::Rational;
using fano::TrilinearForm;

namespace {

// (x u + y v)^3 by the binomial expansion.
Rational cube(const TrilinearForm& f, const DivisorClass& d)
{
    const auto& c = f.values();
    const Rational& x = d.first();
    const Rational y = d.second();
    return x * x * x * c[0] + Rational(3) * x * x * y * c[1] + Rational(3) * x * y * y * c[2] + y * y * y * c[3];
}

// Polarization of the cubic form.
Rational polarized(const TrilinearForm& f, const DivisorClass& a, const DivisorClass& b, const DivisorClass& c)
{
    Rational s = cube(f, a + b + c) - cube(f, a + b) - cube(f, a + c) - cube(f, b + c) + cube(f, a) + cube(f, b) +
                 cube(f, c);
    return s / Rational(6);
}

struct Random {
    std::mt19937_64 rng{987654321};
    long next(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    DivisorClass ke() { return DivisorClass::ke(Rational(next(-9, 9), next(1, 4)), Rational(next(-9, 9), next(1, 4))); }
    TrilinearForm form()
    {
        return TrilinearForm::rank2(Basis::KE, next(-40, 40), next(-40, 40), next(-40, 40), next(-40, 40));
    }
};

}  // namespace

TEST_CASE("evaluation agrees with polarization of the cube")
{
    Random r;
    for (int i = 0; i < 300; ++i) {
        auto f = r.form();
        auto a = r.ke(), b = r.ke(), c = r.ke();
        CHECK(fano::eval_form(f, a, b, c) == polarized(f, a, b, c));
        CHECK(fano::self_intersection(f, a) == cube(f, a));
    }
}

TEST_CASE("evaluation is symmetric and additive")
{
    Random r;
    for (int i = 0; i < 300; ++i) {
        auto f = r.form();
        auto a = r.ke(), b = r.ke(), c = r.ke(), d = r.ke();
        Rational v = fano::eval_form(f, a, b, c);
        CHECK(v == fano::eval_form(f, b, a, c));
        CHECK(v == fano::eval_form(f, c, b, a));
        CHECK(v == fano::eval_form(f, b, c, a));
        CHECK(fano::eval_form(f, a + d, b, c) == v + fano::eval_form(f, d, b, c));
        Rational s(r.next(-5, 5), r.next(1, 5));
        CHECK(fano::eval_form(f, s * a, b, c) == s * v);
    }
}

TEST_CASE("change of basis preserves every intersection number")
{
    Random r;
    // Unimodular and index-two bases.
    const std::vector<std::pair<DivisorClass, DivisorClass>> bases = {
        {DivisorClass::ke(1, 0), DivisorClass::ke(0, 1)},  {DivisorClass::ke(1, -1), DivisorClass::ke(0, 1)},
        {DivisorClass::ke(2, 1), DivisorClass::ke(1, 1)},  {DivisorClass::ke(0, 1), DivisorClass::ke(1, 0)},
        {DivisorClass::ke(2, 0), DivisorClass::ke(0, 1)},  {DivisorClass::ke(1, 1), DivisorClass::ke(1, -1)},
        {DivisorClass::ke(3, 1), DivisorClass::ke(1, 1)}};
    for (const auto& [u, v] : bases) {
        Rational det = u.first() * v.second() - u.second() * v.first();
        REQUIRE((fano::abs(det) == Rational(1) || fano::abs(det) == Rational(2)));
        for (int i = 0; i < 40; ++i) {
            auto f = r.form();
            auto g = fano::change_basis(f, u, v, Basis::MF);
            CHECK(g.basis() == Basis::MF);
            auto a = r.ke(), b = r.ke(), c = r.ke();
            auto a2 = fano::express_in(a, u, v, Basis::MF);
            auto b2 = fano::express_in(b, u, v, Basis::MF);
            auto c2 = fano::express_in(c, u, v, Basis::MF);
            CHECK(fano::eval_form(f, a, b, c) == fano::eval_form(g, a2, b2, c2));
        }
    }
}

TEST_CASE("basis misuse is rejected")
{
    auto f = TrilinearForm::rank2(Basis::KE, 1, 2, 3, 4);
    CHECK_THROWS_AS(fano::eval_form(f, DivisorClass::mf(1, 0), DivisorClass::ke(1, 0), DivisorClass::ke(1, 0)),
                    fano::BasisError);
    CHECK_THROWS_AS(DivisorClass::ke(1, 0) + DivisorClass::mf(0, 1), fano::BasisError);
    CHECK_THROWS_AS(fano::change_basis(f, DivisorClass::ke(1, 1), DivisorClass::ke(2, 2), Basis::MF), fano::BasisError);
    CHECK_THROWS_AS(fano::change_basis(f, DivisorClass::ke(Rational(1, 2), 0), DivisorClass::ke(0, 1), Basis::MF),
                    fano::BasisError);
}

TEST_CASE("rank one forms")
{
    auto p3 = TrilinearForm::rank1(1, 3);
    CHECK(fano::self_intersection(p3, DivisorClass::h(4)) == Rational(64));
    auto surface = TrilinearForm::rank1(5, 2);
    CHECK(fano::self_intersection(surface, DivisorClass::h(2)) == Rational(20));
    CHECK_THROWS_AS(fano::eval_form(surface, DivisorClass::h(1), DivisorClass::h(1), DivisorClass::h(1)),
                    fano::BasisError);
}

TEST_CASE("pullback data conversion")
{
    // Line on a genus-12 threefold: (22, 0, -1, 1) in (sigma^*(-K), E).
    auto f = fano::from_pullback_data(22, 0, -1, 1, 1, 1);
    CHECK(f.basis() == Basis::KE);
    CHECK(f.values() == std::array<Rational, 4>{18, 3, -2, 1});
}
