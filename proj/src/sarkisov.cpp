#include "fano/sarkisov.hpp"

#include "fano/json_io.hpp"
#include "fano/riemann_roch.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <thread>
#include <tuple>

namespace fano {

bool ContractionType::fiber_type() const
{
    switch (tag) {
    case ContractionTag::C1:
    case ContractionTag::C2:
    case ContractionTag::D1:
    case ContractionTag::D2:
    case ContractionTag::D3:
        return true;
    default:
        return false;
    }
}

const std::vector<ContractionType>& contraction_types()
{
    static const std::vector<ContractionType> table = {
        {ContractionTag::C1, 1, Rational(0), std::nullopt},
        {ContractionTag::C2, 2, Rational(0), std::nullopt},
        {ContractionTag::D1, 1, Rational(0), std::nullopt},
        {ContractionTag::D2, 2, Rational(0), std::nullopt},
        {ContractionTag::D3, 3, Rational(0), std::nullopt},
        {ContractionTag::B1, 1, Rational(1), std::nullopt},
        {ContractionTag::B2, 2, Rational(2), 4L},
        {ContractionTag::B3, 1, Rational(1), 2L},
        {ContractionTag::B4, 1, Rational(1), 2L},
        {ContractionTag::B5, 1, Rational(1, 2), 1L},
    };
    return table;
}

const ContractionType& contraction_type(ContractionTag tag)
{
    for (const auto& t : contraction_types())
        if (t.tag == tag)
            return t;
    throw std::invalid_argument("unknown contraction tag");
}

std::string to_string(ContractionTag tag)
{
    static const char* const names[] = {"C1", "C2", "D1", "D2", "D3", "B1", "B2", "B3", "B4", "B5"};
    return names[static_cast<int>(tag)];
}

ContractionTag contraction_tag_from_string(const std::string& s)
{
    for (const auto& t : contraction_types())
        if (to_string(t.tag) == s)
            return t.tag;
    throw std::invalid_argument("unknown contraction tag: " + s);
}

std::string to_string(CenterKind k)
{
    switch (k) {
    case CenterKind::Line: return "line";
    case CenterKind::Conic: return "conic";
    case CenterKind::Point: return "point";
    case CenterKind::Curve: return "curve";
    }
    return "?";
}

std::string to_string(const LinkCenter& c)
{
    if (c.kind != CenterKind::Curve)
        return to_string(c.kind);
    return "curve(" + std::to_string(c.deg_antik) + "," + std::to_string(c.genus) + ")";
}

CenterKind center_kind_from_string(const std::string& s)
{
    for (auto k : {CenterKind::Line, CenterKind::Conic, CenterKind::Point, CenterKind::Curve})
        if (to_string(k) == s)
            return k;
    throw std::invalid_argument("unknown center: " + s);
}

TrilinearForm MidpointForm::with_ebar_cube(const Rational& ebar_cube) const
{
    return TrilinearForm::rank2(Basis::KE, antik_cube, antik2_e, antik_e2, ebar_cube);
}

namespace {

MidpointForm from_blowup(const BlowupResult& r)
{
    const auto& v = r.form.values();
    return {v[0], v[1], v[2], v[3], std::nullopt};
}

BlowupResult blow_up(const LinkCenter& center, const Rational& antik_cube)
{
    switch (center.kind) {
    case CenterKind::Line: return blowup_curve(antik_cube, {1, 0});
    case CenterKind::Conic: return blowup_curve(antik_cube, {2, 0});
    case CenterKind::Point: return blowup_point(antik_cube);
    case CenterKind::Curve: return blowup_curve(antik_cube, {center.deg_antik, center.genus});
    }
    throw std::invalid_argument("unknown center");
}

}  // namespace

MidpointForm midpoint_form(const LinkCenter& center, const Rational& antik_cube)
{
    return from_blowup(blow_up(center, antik_cube));
}

MidpointForm midpoint_form(const LinkCenter& center, long genus)
{
    MidpointForm m = midpoint_form(center, degree_from_genus(genus));
    // h^0(-K) = g + 2 minus the conditions imposed by the center.
    switch (center.kind) {
    case CenterKind::Line: m.antik_minus_e_sections = genus - 5; break;
    case CenterKind::Conic: m.antik_minus_e_sections = genus - 7; break;
    case CenterKind::Point: m.antik_minus_e_sections = genus - 8; break;
    case CenterKind::Curve: break;
    }
    return m;
}

namespace {

// f(x) = c0 + c1 x where x = Ebar^3.
struct Affine {
    Rational c0;
    Rational c1;
    Rational solve(const Rational& target) const { return (target - c0) / c1; }
};

class SymbolicForm {
public:
    explicit SymbolicForm(const MidpointForm& m) : f0_(m.with_ebar_cube(0)), f1_(m.with_ebar_cube(1)) {}

    Affine eval(const DivisorClass& x, const DivisorClass& y, const DivisorClass& z) const
    {
        Rational c0 = eval_form(f0_, x, y, z);
        return {c0, eval_form(f1_, x, y, z) - c0};
    }
    // Values with at most two Ebar factors do not involve Ebar^3.
    Rational fixed(const DivisorClass& x, const DivisorClass& y, const DivisorClass& z) const
    {
        return eval_form(f0_, x, y, z);
    }

private:
    TrilinearForm f0_;
    TrilinearForm f1_;
};

std::optional<long> as_long(const Rational& r)
{
    if (!r.is_integer())
        return std::nullopt;
    return r.to_int();
}

std::vector<long> multiplicities(long a, long b, bool strict)
{
    std::vector<long> out;
    for (long m = 1; strict ? b > m * a : b >= m * a; ++m)
        out.push_back(m);
    return out;
}

const char* singularity_label(ContractionTag tag)
{
    switch (tag) {
    case ContractionTag::B2: return "nonsingular point";
    case ContractionTag::B3: return "ordinary double point";
    case ContractionTag::B4: return "double point x1x2+x3^2+x4^3=0";
    case ContractionTag::B5: return "quotient point C^3/{+-1}";
    default: return "";
    }
}

struct CellContext {
    LinkCenter center;
    long genus;
    const ContractionType* type;
    const Catalog* catalog;
    long bound;
};

std::vector<LinkCandidate> enumerate_cell(const CellContext& ctx)
{
    const MidpointForm mid = midpoint_form(ctx.center, ctx.genus);
    const SymbolicForm form(mid);
    const long sections = mid.antik_minus_e_sections.value_or(0);
    const ContractionType& t = *ctx.type;
    const DivisorClass antik = DivisorClass::ke(1, 0);
    std::vector<LinkCandidate> out;

    auto emit = [&](long a, long b, const DivisorClass& mbar, std::optional<DivisorClass> fbar,
                    TargetInvariants target, const Rational& x) {
        if (!x.is_integer() || x > mid.e_cube)
            return;
        LinkCandidate c{ctx.center,
                        ctx.genus,
                        t,
                        a,
                        b,
                        mbar,
                        std::move(fbar),
                        std::move(target),
                        mid.with_ebar_cube(x),
                        mid.e_cube,
                        x,
                        mid.e_cube - x,
                        multiplicities(a, b, !t.fiber_type() && sections >= 2),
                        LinkStatus::Confirmed,
                        {}};
        out.push_back(std::move(c));
    };

    for (long a = 1; a <= ctx.bound; ++a) {
        const long mu = t.mu;
        // With |-K - E| moving, a length-one ray forces Mbar = -K - Ebar.
        if (mu == 1 && sections >= 2 && a != 1)
            continue;
        const DivisorClass mbar = DivisorClass::ke(a, -mu);
        const Rational mmk = form.fixed(mbar, mbar, antik);
        const Rational mkk = form.fixed(mbar, antik, antik);
        const Affine m3 = form.eval(mbar, mbar, mbar);

        if (t.fiber_type()) {
            if (sections >= 1 && mu < a)
                continue;
            TargetInvariants target;
            if (t.tag == ContractionTag::D1 || t.tag == ContractionTag::D2 || t.tag == ContractionTag::D3) {
                if (!mmk.is_zero())
                    continue;
                auto dp = as_long(mkk);
                if (!dp)
                    continue;
                bool ok = mu == 1 ? (*dp >= 1 && *dp <= 6) : mu == 2 ? *dp == 8 : *dp == 9;
                if (!ok)
                    continue;
                target.fiber_degree = *dp;
            } else {
                if (mmk != Rational(2))
                    continue;
                auto delta = as_long(Rational(12) - mkk);
                if (!delta)
                    continue;
                bool ok = mu == 1 ? *delta >= 3 : *delta == 0;
                if (!ok)
                    continue;
                target.discriminant_degree = *delta;
            }
            emit(a, mu, mbar, std::nullopt, std::move(target), m3.solve(0));
            continue;
        }

        // Birational: Fbar = (iota Mbar - (-K)) / alpha.
        const bool smooth_target = t.tag == ContractionTag::B1 || t.tag == ContractionTag::B2;
        const Rational step = t.tag == ContractionTag::B5 ? Rational(1, 2) : Rational(1);
        for (Rational iota = step;; iota += step) {
            if (smooth_target && iota > Rational(4))
                break;
            const Rational fa = (iota * Rational(a) - 1) / t.alpha;
            const Rational fb = Rational(mu) * iota / t.alpha;
            if (fa > Rational(ctx.bound) || fb > Rational(ctx.bound))
                break;
            auto af = as_long(fa);
            auto bf = as_long(fb);
            if (!af || !bf || *af <= 0 || *bf <= 0)
                continue;
            if (sections >= 1 && *bf < *af)
                continue;
            if (sections >= 2 && *bf == *af)
                continue;
            const DivisorClass fbar = DivisorClass::ke(*af, -*bf);
            const Rational ffk = form.fixed(fbar, fbar, antik);
            TargetInvariants target;
            target.index = iota;

            if (t.tag == ContractionTag::B1) {
                auto twice_genus = as_long(ffk + 2);
                if (!twice_genus || *twice_genus % 2 != 0 || *twice_genus < 0)
                    continue;
                const Rational deg_z = form.fixed(mbar, fbar, antik);
                if (deg_z.sign() <= 0)
                    continue;
                const Rational d = mmk / iota;
                auto dl = as_long(d);
                if (!dl)
                    continue;
                auto ys = ctx.catalog->rank_one(iota.to_int(), *dl);
                if (ys.empty())
                    continue;
                target.degree = d;
                target.curve_degree = deg_z.to_int();
                target.curve_genus = *twice_genus / 2;
                for (auto* y : ys)
                    target.catalog_ids.push_back(y->id);
                emit(*af, *bf, mbar, fbar, std::move(target), m3.solve(d));
                continue;
            }

            const long k = *t.k;
            if (ffk != Rational(-2) || form.fixed(fbar, antik, antik) != Rational(k))
                continue;
            const Rational x = form.eval(fbar, fbar, fbar).solve(Rational(4, k));
            const Rational d = m3.c0 + m3.c1 * x;
            target.k = k;
            target.singularity = singularity_label(t.tag);
            target.degree = d;
            if (t.tag == ContractionTag::B2) {
                auto dl = as_long(d);
                if (!dl)
                    continue;
                auto ys = ctx.catalog->rank_one(iota.to_int(), *dl);
                if (ys.empty())
                    continue;
                for (auto* y : ys)
                    target.catalog_ids.push_back(y->id);
            }
            emit(*af, *bf, mbar, fbar, std::move(target), x);
        }
    }
    return out;
}

auto sort_key(const LinkCandidate& c)
{
    return std::make_tuple(c.center, c.genus, static_cast<int>(c.ctype.tag), c.a, c.b);
}

}  // namespace

std::vector<LinkCandidate> enumerate_links(const LinkCenter& center, long g_first, long g_last,
                                           const Catalog& catalog, const EnumerationOptions& options)
{
    if (g_first < 7)
        throw std::invalid_argument("link enumeration needs genus >= 7");
    if (g_last < g_first)
        throw std::invalid_argument("empty genus range");
    if (options.bound < 1)
        throw std::invalid_argument("search bound must be positive");

    std::vector<CellContext> cells;
    for (long g = g_first; g <= g_last; ++g)
        for (const auto& t : contraction_types())
            cells.push_back({center, g, &t, &catalog, options.bound});

    std::vector<std::vector<LinkCandidate>> results(cells.size());
    unsigned workers = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            results[i] = enumerate_cell(cells[i]);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::future<void>> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.push_back(std::async(std::launch::async, work));
        for (auto& f : pool)
            f.get();
    }

    std::vector<LinkCandidate> out;
    for (auto& r : results)
        std::move(r.begin(), r.end(), std::back_inserter(out));
    std::stable_sort(out.begin(), out.end(),
                     [](const LinkCandidate& x, const LinkCandidate& y) { return sort_key(x) < sort_key(y); });
    return out;
}

std::vector<LinkCandidate> enumerate_links(const LinkCenter& center, long g_first, long g_last,
                                           const EnumerationOptions& options)
{
    return enumerate_links(center, g_first, g_last, Catalog::builtin(), options);
}

Rational defect(const LinkCandidate& candidate)
{
    Rational d = candidate.e_cube - candidate.ebar_cube;
    if (d.sign() < 0)
        throw InconsistentCandidate("negative defect " + d.str() + " for " + to_string(candidate.center) +
                                    " link at genus " + std::to_string(candidate.genus));
    return d;
}

long euler_contribution(const EulerCenter& c)
{
    return c.is_point ? 2 : 2 - 2 * c.genus;
}

long euler_propagate(long chi_y, const EulerCenter& on_y, const EulerCenter& on_x)
{
    return chi_y + euler_contribution(on_y) - euler_contribution(on_x);
}

std::set<std::string> fact_sources(CenterKind center)
{
    switch (center) {
    case CenterKind::Line: return {"classical", "geometric"};
    case CenterKind::Conic: return {"classical", "geometric", "line-link"};
    case CenterKind::Point: return {"classical", "geometric", "line-link", "conic-link"};
    case CenterKind::Curve: return {"classical", "geometric"};
    }
    return {};
}

LinkFacts gather_link_facts(const Catalog& catalog, CenterKind center, long max_genus)
{
    LinkFacts facts;
    const auto sources = fact_sources(center);
    for (const auto& f : catalog.facts()) {
        if (!sources.count(f.source))
            continue;
        switch (f.predicate) {
        case Predicate::Rational: facts.rational[f.subject] = true; break;
        case Predicate::Irrational: facts.rational[f.subject] = false; break;
        case Predicate::EulerNumber:
            if (f.value)
                facts.euler[f.subject] = *f.value;
            break;
        case Predicate::EmptyLinearSystem:
            if (f.linear_system)
                facts.empty_systems.emplace_back(f.subject, *f.linear_system);
            break;
        default: break;
        }
    }
    if (center == CenterKind::Conic || center == CenterKind::Point) {
        auto lines = filter_links(enumerate_links(LinkCenter::line(), 7, std::max(max_genus, 7L), catalog),
                                  catalog, gather_link_facts(catalog, CenterKind::Line, max_genus));
        std::set<long> genera;
        for (const auto& c : lines)
            if (c.status == LinkStatus::Confirmed)
                genera.insert(c.genus);
        facts.admissible_genera = std::move(genera);
    }
    return facts;
}

namespace {

EulerCenter euler_center(const LinkCenter& c)
{
    switch (c.kind) {
    case CenterKind::Point: return EulerCenter::point();
    case CenterKind::Curve: return EulerCenter::curve(c.genus);
    default: return EulerCenter::curve(0);
    }
}

std::optional<std::string> excluding_rule(const LinkCandidate& c, const Catalog& catalog, const LinkFacts& facts)
{
    std::vector<std::string> sources;
    for (auto* x : catalog.rank_one(1, 2 * c.genus - 2))
        sources.push_back(x->id);

    if (facts.admissible_genera && (c.center.kind == CenterKind::Conic || c.center.kind == CenterKind::Point) &&
        !facts.admissible_genera->count(c.genus))
        return "genus-bound";

    const DivisorClass& cls = c.fbar ? *c.fbar : c.mbar;
    for (const auto& [subject, ref] : facts.empty_systems) {
        if (std::find(sources.begin(), sources.end(), subject) == sources.end())
            continue;
        if (ref.center == to_string(c.center.kind) && DivisorClass::ke(ref.antik, ref.e) == cls)
            return "geometric";
    }

    const std::string* target = c.target.catalog_ids.empty() ? nullptr : &c.target.catalog_ids.front();
    if (target) {
        auto ty = facts.rational.find(*target);
        for (const auto& s : sources) {
            auto sx = facts.rational.find(s);
            if (sx != facts.rational.end() && ty != facts.rational.end() && sx->second != ty->second)
                return "rationality";
        }
    }

    if (target && (c.ctype.tag == ContractionTag::B1 || c.ctype.tag == ContractionTag::B2)) {
        const CatalogEntry* y = catalog.find(*target);
        EulerCenter on_y = c.ctype.tag == ContractionTag::B1 ? EulerCenter::curve(*c.target.curve_genus)
                                                             : EulerCenter::point();
        long predicted = euler_propagate(y->chi_top, on_y, euler_center(c.center));
        for (const auto& s : sources) {
            auto ex = facts.euler.find(s);
            if (ex != facts.euler.end() && ex->second != predicted)
                return "euler";
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<LinkCandidate> filter_links(std::vector<LinkCandidate> candidates, const Catalog& catalog,
                                        const LinkFacts& facts)
{
    for (auto& c : candidates) {
        if (c.status == LinkStatus::Excluded)
            continue;
        if (auto rule = excluding_rule(c, catalog, facts)) {
            c.status = LinkStatus::Excluded;
            c.exclusion = *rule;
        }
    }
    return candidates;
}

std::vector<LinkCandidate> filter_links(std::vector<LinkCandidate> candidates, const Catalog& catalog)
{
    std::map<CenterKind, long> max_genus;
    for (const auto& c : candidates)
        max_genus[c.center.kind] = std::max(max_genus[c.center.kind], c.genus);
    std::map<CenterKind, LinkFacts> facts;
    for (const auto& [kind, g] : max_genus)
        facts.emplace(kind, gather_link_facts(catalog, kind, g));
    for (auto& c : candidates) {
        if (c.status == LinkStatus::Excluded)
            continue;
        if (auto rule = excluding_rule(c, catalog, facts.at(c.center.kind))) {
            c.status = LinkStatus::Excluded;
            c.exclusion = *rule;
        }
    }
    return candidates;
}

namespace {

enum class SecondRay { Fibration, ConicBundle, Divisorial };

std::string fibration_tag(long dp)
{
    if (dp >= 1 && dp <= 6)
        return "D1";
    if (dp == 8)
        return "D2";
    if (dp == 9)
        return "D3";
    return {};
}

}  // namespace

std::vector<Rho2Solution> rho2_primitive_enumerate(long bound)
{
    if (bound < 1)
        throw std::invalid_argument("search bound must be positive");
    std::vector<Rho2Solution> out;
    std::vector<long> discriminants{0};
    for (long d = 3; d <= 11; ++d)
        discriminants.push_back(d);

    for (long d : discriminants) {
        // (-K, M) generate Pic when the discriminant is non-empty; otherwise
        // they span an index-two sublattice and a, b live in (1/2)Z.
        const long step = d == 0 ? 1 : 2;
        const Rational c(12 - d);
        for (long ta = step; ta <= 2 * bound; ta += step) {
            for (long tb = step; tb <= 2 * bound; tb += step) {
                const Rational a(ta, 2);
                const Rational b(tb, 2);
                // A fiber or the pullback of a line is primitive in Pic.
                const bool primitive = d == 0 || std::gcd(ta / 2, tb / 2) == 1;
                for (auto kind : {SecondRay::Fibration, SecondRay::ConicBundle, SecondRay::Divisorial}) {
                    std::vector<long> values;
                    if (kind == SecondRay::Fibration)
                        values = {1, 2, 3, 4, 5, 6, 8, 9};
                    else if (kind == SecondRay::ConicBundle)
                        values = discriminants;
                    else
                        values = {1, 2, 4};
                    for (long v : values) {
                        // D . (-K)^2 fixes (-K)^3 linearly.
                        const Rational lhs = kind == SecondRay::ConicBundle ? Rational(12 - v) : Rational(v);
                        const Rational n = (lhs + c * b) / a;
                        if (!n.is_integer() || n.sign() <= 0 || n.to_int() % 2 != 0)
                            continue;
                        const Rational dd_k = n * a * a - Rational(2) * c * a * b + Rational(2) * b * b;
                        const Rational ddd_over_a = n * a * a - Rational(3) * c * a * b + Rational(6) * b * b;
                        std::string second;
                        if (kind == SecondRay::Fibration) {
                            if (!dd_k.is_zero() || !ddd_over_a.is_zero() || !primitive)
                                continue;
                            second = fibration_tag(v);
                        } else if (kind == SecondRay::ConicBundle) {
                            if (dd_k != Rational(2) || !ddd_over_a.is_zero() || !primitive)
                                continue;
                            // Both rays are conic bundles: list each pair once.
                            if (v > d)
                                continue;
                            second = v == 0 ? "C2" : "C1";
                        } else {
                            if (dd_k != Rational(-2) || a * ddd_over_a != Rational(4, v))
                                continue;
                            second = v == 4 ? "B2" : v == 2 ? "B3-B4" : "B5";
                        }
                        const long antik = n.to_int();
                        out.push_back({d == 0 ? ContractionTag::C2 : ContractionTag::C1, second, d, v,
                                       antik / 2 + 1, antik, a, b});
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Rho2Solution& x, const Rho2Solution& y) {
        return std::tie(x.antik_cube, x.discriminant, x.second, x.second_degree) <
               std::tie(y.antik_cube, y.discriminant, y.second, y.second_degree);
    });
    return out;
}

std::string to_string(IndexTwoLineLink::Outcome o)
{
    switch (o) {
    case IndexTwoLineLink::Outcome::Undetermined: return "undetermined";
    case IndexTwoLineLink::Outcome::Excluded: return "excluded";
    case IndexTwoLineLink::Outcome::Link: return "link";
    }
    return "?";
}

IndexTwoLineLink index_two_line_link(long degree)
{
    if (degree < 1 || degree > 8)
        throw std::invalid_argument("del Pezzo degree must lie in [1, 8]");
    // A line has (-K).l = 2 and genus 0.
    const BlowupResult blown = blowup_curve(Rational(8 * degree), {2, 0});
    const DivisorClass h_ke = DivisorClass::ke(Rational(1, 2), Rational(1, 2));
    const DivisorClass e_ke = DivisorClass::ke(0, 1);
    const TrilinearForm& f = blown.form;
    const TrilinearForm form = TrilinearForm::rank2(Basis::PullbackE, eval_form(f, h_ke, h_ke, h_ke),
                                                    eval_form(f, h_ke, h_ke, e_ke), eval_form(f, h_ke, e_ke, e_ke),
                                                    eval_form(f, e_ke, e_ke, e_ke));

    IndexTwoLineLink out{degree, form, 0, 0, IndexTwoLineLink::Outcome::Undetermined, {}, {}, {}, {}, {}, {}};
    // Hyperplanes through the line: two conditions on |H|.
    out.dim_h_minus_e = h0_fundamental(FanoNumerics(3, 2, Rational(degree))) - 2 - 1;
    // Restriction to E costs at most h^0(E, (H^* - E)|_E) = 4 sections.
    out.dim_h_minus_2e_lower = out.dim_h_minus_e - 4;

    if (out.dim_h_minus_2e_lower < 0)
        return out;
    // The exceptional divisor of the second contraction lies in |H^* - mE|,
    // m >= 2, and is rigid, so |H^* - 2E| is a single divisor.
    if (out.dim_h_minus_2e_lower > 0) {
        out.outcome = IndexTwoLineLink::Outcome::Excluded;
        return out;
    }
    const DivisorClass mbar = DivisorClass::pullback(1, -1);
    const DivisorClass h = DivisorClass::pullback(1, 0);
    const DivisorClass e = DivisorClass::pullback(0, 1);
    // Mbar^2 . (H^* - mE) = 0.
    const Rational m = eval_form(form, mbar, mbar, h) / eval_form(form, mbar, mbar, e);
    if (!m.is_integer() || m < Rational(2)) {
        out.outcome = IndexTwoLineLink::Outcome::Excluded;
        return out;
    }
    const DivisorClass d = DivisorClass::pullback(1, -m);
    const DivisorClass antik = DivisorClass::pullback(2, -1);
    // -K = t Mbar - D.
    const Rational t = (antik + d).first() / mbar.first();
    if (t * mbar - d != antik) {
        out.outcome = IndexTwoLineLink::Outcome::Excluded;
        return out;
    }
    out.outcome = IndexTwoLineLink::Outcome::Link;
    out.multiplicity = m.to_int();
    out.target_index = t.to_int();
    out.target_degree = self_intersection(form, mbar);
    out.curve_degree = (-eval_form(form, mbar, d, d)).to_int();
    out.curve_genus = ((eval_form(form, d, d, antik) + 2) / 2).to_int();
    out.image_of_e_degree = eval_form(form, mbar, mbar, e);
    return out;
}

nlohmann::json to_json(const LinkCandidate& c)
{
    nlohmann::json center{{"kind", to_string(c.center.kind)}};
    if (c.center.kind == CenterKind::Curve) {
        center["deg_antik"] = c.center.deg_antik;
        center["genus"] = c.center.genus;
    }
    nlohmann::json target = nlohmann::json::object();
    const auto& t = c.target;
    if (t.index)
        target["index"] = to_json(*t.index);
    if (t.degree)
        target["degree"] = to_json(*t.degree);
    if (t.curve_degree)
        target["curve_degree"] = *t.curve_degree;
    if (t.curve_genus)
        target["curve_genus"] = *t.curve_genus;
    if (t.k)
        target["k"] = *t.k;
    if (t.singularity)
        target["singularity"] = *t.singularity;
    if (t.discriminant_degree)
        target["discriminant_degree"] = *t.discriminant_degree;
    if (t.fiber_degree)
        target["fiber_degree"] = *t.fiber_degree;
    target["catalog_ids"] = t.catalog_ids;

    nlohmann::json j{{"center", center},
                     {"genus", c.genus},
                     {"type", to_string(c.ctype.tag)},
                     {"mu", c.ctype.mu},
                     {"a", c.a},
                     {"b", c.b},
                     {"mbar", to_json(c.mbar)},
                     {"target", target},
                     {"midpoint", to_json(c.midpoint)},
                     {"e_cube", to_json(c.e_cube)},
                     {"ebar_cube", to_json(c.ebar_cube)},
                     {"defect", to_json(c.defect)},
                     {"multiplicities", c.multiplicities},
                     {"status", c.status == LinkStatus::Confirmed ? "confirmed" : "excluded"}};
    if (c.fbar)
        j["fbar"] = to_json(*c.fbar);
    if (c.status == LinkStatus::Excluded)
        j["exclusion"] = c.exclusion;
    return j;
}

nlohmann::json to_json(const Rho2Solution& s)
{
    return {{"first", to_string(s.first)},   {"second", s.second},       {"discriminant", s.discriminant},
            {"second_degree", s.second_degree}, {"genus", s.genus},      {"antik_cube", s.antik_cube},
            {"a", to_json(s.a)},             {"b", to_json(s.b)}};
}

nlohmann::json to_json(const IndexTwoLineLink& l)
{
    nlohmann::json j{{"degree", l.degree},
                     {"form", to_json(l.form)},
                     {"dim_h_minus_e", l.dim_h_minus_e},
                     {"dim_h_minus_2e_lower", l.dim_h_minus_2e_lower},
                     {"outcome", to_string(l.outcome)}};
    if (l.multiplicity)
        j["multiplicity"] = *l.multiplicity;
    if (l.target_index)
        j["target_index"] = *l.target_index;
    if (l.target_degree)
        j["target_degree"] = to_json(*l.target_degree);
    if (l.curve_degree)
        j["curve_degree"] = *l.curve_degree;
    if (l.curve_genus)
        j["curve_genus"] = *l.curve_genus;
    if (l.image_of_e_degree)
        j["image_of_e_degree"] = to_json(*l.image_of_e_degree);
    return j;
}

}  // namespace fano
