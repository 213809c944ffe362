#include "fano/catalog.hpp"
#include "fano/scrolls.hpp"

#include "doctest.h"

#include <map>
#include <random>

using fano::CandidateStatus;
using fano::DivisorClass;
using fano::Rational;
using fano::ScrollData;

namespace {

// Expand the product monomial by monomial in Q[M, F], then integrate with
// M^m = sum d_i, M^(m-1) F = 1 and every F^2 term zero.
Rational brute_intersection(const ScrollData& s, const std::vector<DivisorClass>& classes)
{
    std::map<std::pair<int, int>, Rational> poly{{{0, 0}, Rational(1)}};
    for (const auto& c : classes) {
        std::map<std::pair<int, int>, Rational> next;
        for (const auto& [mono, coeff] : poly) {
            next[{mono.first + 1, mono.second}] += coeff * c.first();
            next[{mono.first, mono.second + 1}] += coeff * c.second();
        }
        poly = std::move(next);
    }
    const int m = s.rank();
    Rational total = poly[{m, 0}] * Rational(s.degree()) + poly[{m - 1, 1}];
    return total;
}

std::vector<ScrollData> realized(const std::string& kind)
{
    std::vector<ScrollData> out;
    for (const auto& e : fano::Catalog::builtin().entries())
        if (e.scroll_model && e.scroll_model->kind == kind)
            out.emplace_back(e.scroll_model->splitting);
    return out;
}

}  // namespace

TEST_CASE("basic scroll data")
{
    ScrollData s({1, 2, 1});
    CHECK(s.splitting() == std::vector<long>{2, 1, 1});
    CHECK(s.degree() == 4);
    CHECK(fano::scroll_h0(s) == 7);
    CHECK(fano::scroll_canonical(s) == DivisorClass::mf(-3, 2));
    CHECK_THROWS_AS(ScrollData({3}), std::invalid_argument);
    CHECK_THROWS_AS(ScrollData({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(fano::scroll_intersection(s, {DivisorClass::mf(1, 0)}), fano::ArityError);
    CHECK_THROWS_AS(fano::scroll_intersection(ScrollData({1, 1}), {DivisorClass::ke(1, 0), DivisorClass::mf(1, 0)}),
                    fano::BasisError);
}

TEST_CASE("intersection numbers agree with a brute-force expansion")
{
    std::mt19937_64 rng(31337);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    for (int i = 0; i < 300; ++i) {
        const int rank = static_cast<int>(pick(2, 5));
        std::vector<long> d;
        for (int j = 0; j < rank; ++j)
            d.push_back(pick(0, 6));
        ScrollData s(d);
        std::vector<DivisorClass> classes;
        for (int j = 0; j < rank; ++j)
            classes.push_back(DivisorClass::mf(pick(-4, 4), pick(-6, 6)));
        CHECK(fano::scroll_intersection(s, classes) == brute_intersection(s, classes));
    }
}

TEST_CASE("Euler number of a projective bundle over P^1 is 2m")
{
    for (auto d : std::vector<std::vector<long>>{{1, 1}, {2, 1, 1}, {3, 1, 0, 0}, {2, 2, 2, 2, 1}})
        CHECK(fano::scroll_euler(ScrollData(d)) == Rational(2 * static_cast<long>(d.size())));
}

TEST_CASE("Euler numbers of scroll models match chi_top = 2 + 2 rho - 2 h12")
{
    struct Row {
        std::vector<long> d;
        bool trigonal;
        long rho;
        long h12;
    };
    const std::vector<Row> rows = {
        {{1, 1, 1, 1}, true, 2, 10}, {{2, 1, 1, 1}, true, 2, 6}, {{2, 2, 1, 1}, true, 3, 3},
        {{2, 2, 2, 2}, true, 8, 0},  {{1, 1, 1}, false, 2, 20},  {{2, 1, 1}, false, 2, 11},
        {{2, 2, 2}, false, 9, 0}};
    for (const auto& r : rows) {
        ScrollData s(r.d);
        Rational chi = r.trigonal ? fano::scroll_divisor_euler(s, DivisorClass::mf(3, 2 - s.degree()))
                                  : Rational(2) * fano::scroll_euler(s) -
                                        fano::scroll_divisor_euler(s, DivisorClass::mf(4, 2 * (2 - s.degree())));
        CHECK(chi == Rational(2 + 2 * r.rho - 2 * r.h12));
    }
}

TEST_CASE("trigonal exclusion at genus 8")
{
    auto cs = fano::trigonal_candidates(8, realized("trigonal"));
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].scroll.splitting() == std::vector<long>{2, 2, 1, 1});
    CHECK(cs[0].status == CandidateStatus::Realized);
    CHECK_FALSE(cs[0].witness);
    CHECK(cs[1].scroll.splitting() == std::vector<long>{3, 1, 1, 1});
    CHECK(cs[1].status == CandidateStatus::Excluded);
    CHECK(cs[1].witness_k == 3);
    CHECK(cs[1].witness == Rational(-1));
}

TEST_CASE("trigonal test values decrease with k")
{
    for (long g = 5; g <= 14; ++g)
        for (const auto& s : fano::positive_splittings(g - 2, 4)) {
            auto member = DivisorClass::mf(3, 2 - s.degree());
            auto gen = DivisorClass::mf(1, -1);
            Rational prev;
            for (long k = 0; k <= s.splitting().front() + 2; ++k) {
                Rational v = fano::scroll_intersection(s, {member, DivisorClass::mf(1, -k), gen, gen});
                CHECK(v == Rational(2 * s.degree() - 4 - 3 * k));
                if (k > 0)
                    CHECK(v < prev);
                prev = v;
            }
        }
}

TEST_CASE("realized scroll models are exactly the tabulated ones")
{
    std::map<long, std::vector<std::vector<long>>> trig, hyp;
    for (long g = 5; g <= 10; ++g)
        for (const auto& c : fano::trigonal_candidates(g, realized("trigonal")))
            if (c.status == CandidateStatus::Realized)
                trig[g].push_back(c.scroll.splitting());
    for (long g = 3; g <= 10; ++g)
        for (const auto& c : fano::hyperelliptic_candidates(g, realized("hyperelliptic")))
            if (c.status == CandidateStatus::Realized)
                hyp[g].push_back(c.scroll.splitting());
    CHECK(trig == std::map<long, std::vector<std::vector<long>>>{
                      {6, {{1, 1, 1, 1}}}, {7, {{2, 1, 1, 1}}}, {8, {{2, 2, 1, 1}}}, {10, {{2, 2, 2, 2}}}});
    CHECK(hyp == std::map<long, std::vector<std::vector<long>>>{{4, {{1, 1, 1}}}, {5, {{2, 1, 1}}}, {7, {{2, 2, 2}}}});
    // No realized model is numerically excluded.
    for (const auto& s : realized("trigonal")) {
        auto cs = fano::trigonal_candidates(s.degree() + 2, realized("trigonal"));
        for (const auto& c : cs)
            if (c.scroll == s)
                CHECK_FALSE(c.witness);
    }
}

TEST_CASE("hyperelliptic branch divisor")
{
    auto cs = fano::hyperelliptic_candidates(5);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].branch == DivisorClass::mf(4, -4));
    CHECK(cs[0].status == CandidateStatus::NumericOnly);
}

TEST_CASE("positive splittings")
{
    auto s = fano::positive_splittings(7, 3);
    std::vector<std::vector<long>> got;
    for (const auto& x : s)
        got.push_back(x.splitting());
    CHECK(got == std::vector<std::vector<long>>{{3, 2, 2}, {3, 3, 1}, {4, 2, 1}, {5, 1, 1}});
    CHECK(fano::positive_splittings(2, 3).empty());
}

TEST_CASE("minimal degree")
{
    CHECK(fano::minimal_degree_check(3, 3, 1) == fano::DegreeBound::Minimal);
    CHECK(fano::minimal_degree_check(4, 5, 2) == fano::DegreeBound::Minimal);
    for (long g = 3; g <= 30; ++g)
        CHECK(fano::minimal_degree_check(g - 1, g, 2) == fano::DegreeBound::Minimal);
    CHECK(fano::minimal_degree_check(1, 3, 1) == fano::DegreeBound::BelowBound);
    CHECK(fano::minimal_degree_check(3, 4, 1) == fano::DegreeBound::BelowBound);
    CHECK(fano::minimal_degree_check(4, 5, 3) == fano::DegreeBound::Above);
    CHECK_THROWS_AS(fano::minimal_degree_check(1, 3, 3), std::invalid_argument);
}
