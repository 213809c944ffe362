#include "fano/blowup.hpp"
#include "fano/catalog.hpp"
#include "fano/json_io.hpp"
#include "fano/riemann_roch.hpp"
#include "fano/sarkisov.hpp"
#include "fano/scrolls.hpp"
#include "fano/wps.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace fano;

namespace {

// Collects failed expectations for one criterion.
class Criterion {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok)
            failures_.push_back(what);
    }
    bool passed() const { return failures_.empty(); }
    long checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    long checks_ = 0;
    std::vector<std::string> failures_;
};

template <class T>
std::string str(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

const Catalog& cat()
{
    return Catalog::builtin();
}

std::vector<LinkCandidate> links(const LinkCenter& c, unsigned threads = 0)
{
    return filter_links(enumerate_links(c, 7, 40, cat(), {20, threads}), cat());
}

void riemann_roch(Criterion& c)
{
    for (long g : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        auto p = hilbert_polynomial(FanoNumerics::from_genus(3, 1, g));
        c.expect(p(Rational(1)) == Rational(g + 2), "h0(-K) at g=" + str(g));
    }
    for (long d = 1; d <= 5; ++d) {
        auto p = hilbert_polynomial(FanoNumerics(3, 2, d));
        c.expect(p(Rational(1)) == Rational(d + 2), "h0(H) at d=" + str(d));
    }
    std::mt19937_64 rng(20240611);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(pick(1, 3));
        const int index = static_cast<int>(pick(std::max(1, n - 2), n + 1));
        Rational d = index == n + 1 ? Rational(1)
                   : index == n     ? Rational(2)
                   : index == n - 1 ? Rational(pick(1, 100))
                                    : Rational(2 * pick(1, 100));
        auto p = hilbert_polynomial(FanoNumerics(n, index, d));
        const std::string tag = "(n=" + str(n) + ", i=" + str(index) + ", d=" + str(d) + ")";
        c.expect(p(Rational(0)) == Rational(1), "chi(0) " + tag);
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        for (long t = -5; t <= 5; ++t)
            c.expect(p(Rational(-index - t)) == sign * p(Rational(t)), "functional equation " + tag);
    }
}

void blowups(Criterion& c)
{
    for (long g = 7; g <= 12; ++g) {
        const Rational cube(2 * g - 2);
        struct Row {
            const char* name;
            TrilinearForm form;
            std::array<long, 4> expected;
        };
        const Row rows[] = {
            {"line", blowup_curve(cube, {1, 0}).form, {2 * g - 6, 3, -2, 1}},
            {"conic", blowup_curve(cube, {2, 0}).form, {2 * g - 8, 4, -2, 0}},
            {"point", blowup_point(cube).form, {2 * g - 10, 4, -2, 1}},
        };
        for (const auto& r : rows)
            for (int j = 0; j < 4; ++j)
                c.expect(r.form.monomial(j) == Rational(r.expected[j]),
                         std::string(r.name) + " g=" + str(g) + " monomial " + str(j));
        auto base = blowup_curve(cube, {g - 2, 0});
        c.expect(base.form.monomial(3) == Rational(4 - g), "E^3 = 4-g at g=" + str(g));
    }
}

void link_enumeration(Criterion& c)
{
    struct Expected {
        long genus;
        const char* type;
        const char* target;  // empty for fiber types
        LinkStatus status;
        const char* rule;
    };
    using S = LinkStatus;
    const std::map<CenterKind, std::vector<Expected>> expected = {
        {CenterKind::Line,
         {{7, "D1", "", S::Confirmed, ""},
          {8, "C1", "", S::Confirmed, ""},
          {9, "B1", "P3", S::Confirmed, ""},
          {10, "B1", "Q", S::Confirmed, ""},
          {12, "B1", "V5", S::Confirmed, ""}}},
        {CenterKind::Conic,
         {{7, "B1", "V3", S::Excluded, "rationality"},
          {7, "B1", "Q", S::Confirmed, ""},
          {8, "B1", "X14", S::Confirmed, ""},
          {8, "B2", "X16", S::Excluded, "euler"},
          {9, "D1", "", S::Confirmed, ""},
          {10, "C1", "", S::Confirmed, ""},
          {11, "B1", "P3", S::Excluded, "genus-bound"},
          {12, "B1", "Q", S::Confirmed, ""}}},
        {CenterKind::Point,
         {{7, "B1", "X10", S::Excluded, "geometric"},
          {7, "B1", "V5", S::Confirmed, ""},
          {7, "B2", "X12", S::Excluded, "geometric"},
          {8, "B1", "V3", S::Confirmed, ""},
          {8, "B1", "Q", S::Excluded, "euler"},
          {9, "B1", "X14", S::Excluded, "euler"},
          {9, "B2", "X16", S::Confirmed, ""},
          {10, "D1", "", S::Confirmed, ""},
          {11, "C1", "", S::Excluded, "genus-bound"},
          {12, "B1", "P3", S::Confirmed, ""},
          {13, "B1", "Q", S::Excluded, "genus-bound"}}},
    };
    for (const auto& [kind, rows] : expected) {
        auto got = links({kind});
        const std::string name = to_string(kind);
        c.expect(got.size() == rows.size(), name + ": " + str(got.size()) + " candidates");
        for (std::size_t i = 0; i < std::min(got.size(), rows.size()); ++i) {
            const auto& g = got[i];
            const auto& r = rows[i];
            const std::string tag = name + " g=" + str(r.genus) + " " + r.type;
            c.expect(g.genus == r.genus && to_string(g.ctype.tag) == r.type, tag + " type");
            c.expect(g.status == r.status && g.exclusion == r.rule, tag + " status");
            if (*r.target) {
                const auto& ids = g.target.catalog_ids;
                c.expect(std::find(ids.begin(), ids.end(), r.target) != ids.end(), tag + " target " + r.target);
            }
        }
    }
    auto line = links(LinkCenter::line());
    for (const auto& l : line)
        if (l.genus == 9)
            c.expect(l.fbar && *l.fbar == DivisorClass::ke(3, -4), "line g=9 Fbar = 3(-K) - 4Ebar");
}

// Ebar^3 recomputed on the target side: the blowup of Y along Z has
// M^3 = d, M^2 F = 0, M F^2 = -deg Z, F^3 = -(iota deg Z + 2 g(Z) - 2), and
// Ebar = ((a iota - 1) M - a F) / mu.
Rational ebar_cube_from_target(const LinkCandidate& l)
{
    const auto& t = l.target;
    const Rational iota = *t.index;
    const Rational deg(*t.curve_degree);
    auto form = TrilinearForm::rank2(Basis::MF, *t.degree, 0, -deg, -(iota * deg + Rational(2 * *t.curve_genus - 2)));
    const Rational a = l.mbar.first();
    auto ebar = Rational(1, l.ctype.mu) * DivisorClass::mf(a * iota - 1, -a);
    return self_intersection(form, ebar);
}

void defects(Criterion& c)
{
    for (auto kind : {CenterKind::Line, CenterKind::Conic, CenterKind::Point}) {
        for (const auto& l : links({kind})) {
            const std::string tag = to_string(kind) + " g=" + str(l.genus) + " " + to_string(l.ctype.tag);
            if (l.status == LinkStatus::Confirmed && l.genus <= 12)
                c.expect(defect(l).sign() > 0, tag + " defect > 0");
            if (l.ctype.tag != ContractionTag::B1)
                continue;
            if (kind == CenterKind::Line)
                c.expect(l.ebar_cube == -*l.target.index, tag + " Ebar^3 = -iota");
            c.expect(l.ebar_cube == ebar_cube_from_target(l), tag + " Ebar^3 from the target");
        }
    }
}

void euler_numbers(Criterion& c)
{
    const std::map<long, long> expected = {{7, -10}, {8, -6}, {9, -2}, {10, 0}, {12, 4}};
    std::map<long, std::set<long>> derived;
    for (auto kind : {CenterKind::Line, CenterKind::Conic, CenterKind::Point}) {
        for (const auto& l : links({kind})) {
            if (l.status != LinkStatus::Confirmed || l.ctype.tag != ContractionTag::B1)
                continue;
            for (const auto& id : l.target.catalog_ids) {
                const auto* y = cat().find(id);
                // Only targets whose Euler number does not depend on another link.
                if (!y || y->index == 1)
                    continue;
                auto on_x = kind == CenterKind::Point ? EulerCenter::point() : EulerCenter::curve(0);
                derived[l.genus].insert(
                    euler_propagate(y->chi_top, EulerCenter::curve(*l.target.curve_genus), on_x));
            }
        }
    }
    for (const auto& [g, chi] : expected)
        c.expect(derived[g] == std::set<long>{chi}, "chi at g=" + str(g));
    c.expect(derived.size() == expected.size(), "genera covered");
}

void rho2(Criterion& c)
{
    struct Row {
        long antik;
        std::multiset<std::string> rays;
        long d;
        long d2;
    };
    const std::vector<Row> table = {{6, {"C1", "D1"}, 8, 2},  {12, {"C1", "C1"}, 6, 6}, {14, {"C1", "B3-B4"}, 6, 2},
                                    {24, {"C1", "D2"}, 4, 8}, {30, {"C2", "C1"}, 3, 0}, {48, {"C2", "C2"}, 0, 0},
                                    {54, {"C2", "D3"}, 0, 9}, {56, {"C2", "B2"}, 0, 4}, {62, {"C2", "B5"}, 0, 1}};
    auto sols = rho2_primitive_enumerate();
    c.expect(sols.size() == 9, str(sols.size()) + " solutions");
    for (std::size_t i = 0; i < std::min(sols.size(), table.size()); ++i) {
        const auto& s = sols[i];
        const auto& r = table[i];
        const std::string tag = "(-K)^3=" + str(r.antik);
        c.expect(s.antik_cube == r.antik, tag);
        c.expect((std::multiset<std::string>{to_string(s.first), s.second}) == r.rays, tag + " rays");
        c.expect(s.discriminant == r.d && s.second_degree == r.d2, tag + " d, d'");
        c.expect(s.genus == r.antik / 2 + 1, tag + " genus");
    }
}

std::vector<ScrollData> realized(const std::string& kind)
{
    std::vector<ScrollData> out;
    for (const auto& e : cat().entries())
        if (e.scroll_model && e.scroll_model->kind == kind)
            out.emplace_back(e.scroll_model->splitting);
    return out;
}

void scrolls_and_wps(Criterion& c)
{
    auto g8 = trigonal_candidates(8, realized("trigonal"));
    bool witnessed = false;
    for (const auto& t : g8) {
        if (t.scroll.splitting() == std::vector<long>{3, 1, 1, 1})
            witnessed = t.status == CandidateStatus::Excluded && t.witness == Rational(-1);
        if (t.scroll.splitting() == std::vector<long>{2, 2, 1, 1})
            c.expect(!t.witness && t.status != CandidateStatus::Excluded, "(2,2,1,1) survives");
    }
    c.expect(witnessed, "witness -1 at (3,1,1,1)");

    using Table = std::map<long, std::vector<std::vector<long>>>;
    Table trig, hyp;
    for (long g = 5; g <= 12; ++g)
        for (const auto& t : trigonal_candidates(g, realized("trigonal")))
            if (t.status == CandidateStatus::Realized)
                trig[g].push_back(t.scroll.splitting());
    for (long g = 3; g <= 12; ++g) {
        for (const auto& h : hyperelliptic_candidates(g, realized("hyperelliptic")))
            if (h.status == CandidateStatus::Realized)
                hyp[g].push_back(h.scroll.splitting());
    }
    c.expect(trig == Table{{6, {{1, 1, 1, 1}}}, {7, {{2, 1, 1, 1}}}, {8, {{2, 2, 1, 1}}}, {10, {{2, 2, 2, 2}}}},
             "trigonal table");
    c.expect(hyp == Table{{4, {{1, 1, 1}}}, {5, {{2, 1, 1}}}, {7, {{2, 2, 2}}}}, "hyperelliptic table");

    struct Model {
        std::vector<long> w;
        std::vector<long> d;
        long index;
        long antik;
    };
    const Model models[] = {{{1, 1, 1, 2, 3}, {6}, 2, 8},
                            {{1, 1, 1, 1, 2}, {4}, 2, 16},
                            {{1, 1, 1, 1, 3}, {6}, 1, 2},
                            {{1, 1, 1, 1, 1, 2}, {2, 4}, 1, 4}};
    for (const auto& m : models) {
        auto inv = ci_fano_invariants({WeightSystem(m.w), m.d});
        c.expect(inv.index == m.index && inv.antik_degree == Rational(m.antik),
                 "weighted model (" + str(m.index) + ", " + str(m.antik) + ")");
    }
}

void catalog_checks(Criterion& c)
{
    long failures = 0;
    for (const auto& r : cat().verify_all())
        failures += r.passed ? 0 : 1;
    c.expect(failures == 0, str(failures) + " verification failures");
    std::set<std::string> rigid;
    for (const auto& e : cat().list(CatalogFilter{1, {}, {}, 0, {}}))
        rigid.insert(e.id);
    c.expect(rigid == std::set<std::string>{"P3", "Q", "V5", "X22"}, "h12 = 0 among rho = 1");
    long max_cube = 0;
    for (const auto& e : cat().entries()) {
        if (e.rho == 1)
            c.expect(e.antik_cube <= 72, e.id + " exceeds 72");
        max_cube = std::max(max_cube, e.antik_cube);
    }
    c.expect(max_cube == 64, "maximum (-K)^3 = " + str(max_cube));
}

std::string all_outputs(unsigned threads)
{
    nlohmann::json doc;
    for (auto kind : {CenterKind::Line, CenterKind::Conic, CenterKind::Point}) {
        auto& arr = doc[to_string(kind)] = nlohmann::json::array();
        for (const auto& l : links({kind}, threads))
            arr.push_back(to_json(l));
    }
    auto& curves = doc["curve"] = nlohmann::json::array();
    for (const auto& l : enumerate_links(LinkCenter::curve(4, 1), 7, 30, cat(), {20, threads}))
        curves.push_back(to_json(l));
    auto& r2 = doc["rho2"] = nlohmann::json::array();
    for (const auto& s : rho2_primitive_enumerate())
        r2.push_back(to_json(s));
    doc["catalog"] = cat().to_json();
    return canonical_dump(doc);
}

void determinism(Criterion& c)
{
    const auto serial = all_outputs(1);
    for (unsigned t : {2u, 4u, 0u})
        c.expect(all_outputs(t) == serial, "threads=" + str(t) + " differs from threads=1");
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"Riemann-Roch goldens and properties", riemann_roch},
        {"blowup goldens", blowups},
        {"link enumeration", link_enumeration},
        {"defects", defects},
        {"Euler numbers", euler_numbers},
        {"rank-two enumeration", rho2},
        {"scroll and weighted goldens", scrolls_and_wps},
        {"catalog verification", catalog_checks},
        {"determinism across worker counts", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " (" << c.checks() << " checks)\n";
        for (const auto& f : c.failures())
            std::cout << "    failed: " << f << '\n';
        failed += c.passed() ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
