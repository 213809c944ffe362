#include "fano/blowup.hpp"
#include "fano/catalog.hpp"
#include "fano/json_io.hpp"
#include "fano/riemann_roch.hpp"
#include "fano/sarkisov.hpp"
#include "fano/scrolls.hpp"
#include "fano/wps.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr int kUsage = 2;
constexpr int kVerifyFailed = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_longs(const std::string& text, char sep = ',')
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + item + "'");
        }
    }
    if (out.empty())
        throw UsageError("empty integer list");
    return out;
}

std::pair<long, long> parse_range(const std::string& text)
{
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw UsageError("range must look like A..B");
    auto lo = parse_longs(text.substr(0, pos));
    auto hi = parse_longs(text.substr(pos + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
        throw UsageError("bad range '" + text + "'");
    return {lo[0], hi[0]};
}

void emit(const json& j)
{
    std::cout << fano::canonical_dump(j);
}

// Simple left-aligned table.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i)
                    width.push_back(0);
                width[i] = std::max(width[i], r[i].size());
            }
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                os << r[i];
                if (i + 1 < r.size())
                    os << std::string(width[i] - r[i].size() + 2, ' ');
            }
            os << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string class_string(const fano::DivisorClass& d)
{
    std::ostringstream os;
    os << d.first() << "(-K)";
    if (d.second().sign() >= 0)
        os << "+";
    os << d.second() << "E";
    return os.str();
}

template <class T>
std::string opt(const std::optional<T>& v)
{
    if (!v)
        return "-";
    std::ostringstream os;
    os << *v;
    return os.str();
}

const fano::Catalog& load_catalog(const std::string& path)
{
    if (path.empty())
        return fano::Catalog::builtin();
    static fano::Catalog custom;
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read catalog file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    custom = fano::Catalog::parse(buf.str());
    return custom;
}

// rr ------------------------------------------------------------------------

struct RrArgs {
    int dim = 3;
    int index = 1;
    std::string degree;
    std::optional<long> genus;
    std::optional<long> t;
};

int run_rr(const RrArgs& a, bool as_json)
{
    if (a.degree.empty() == !a.genus)
        throw UsageError("give exactly one of --degree or --genus");
    fano::FanoNumerics fn = a.genus ? fano::FanoNumerics::from_genus(a.dim, a.index, *a.genus)
                                    : fano::FanoNumerics(a.dim, a.index, fano::Rational::parse(a.degree));
    auto p = fano::hilbert_polynomial(fn);
    json coeffs = json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back(fano::to_json(c));
    if (as_json) {
        json j{{"dim", fn.dim()}, {"index", fn.index()}, {"degree", fano::to_json(fn.degree())},
               {"polynomial", coeffs}, {"h0_fundamental", fano::h0_fundamental(fn)}};
        if (a.t) {
            j["t"] = *a.t;
            j["value"] = fano::to_json(p(fano::Rational(*a.t)));
        }
        emit(j);
        return 0;
    }
    if (a.t) {
        std::cout << p(fano::Rational(*a.t)) << '\n';
        return 0;
    }
    std::cout << "chi(tH) =";
    for (int i = p.degree(); i >= 0; --i)
        std::cout << ' ' << (i == p.degree() ? "" : "+ ") << "(" << p.coefficients()[i] << ")t^" << i;
    std::cout << '\n';
    return 0;
}

// blowup --------------------------------------------------------------------

struct BlowupArgs {
    std::string antik_cube;
    bool point = false;
    std::string curve;
};

int run_blowup(const BlowupArgs& a, bool as_json)
{
    if (a.point == !a.curve.empty())
        throw UsageError("give exactly one of --point or --curve DEG,GENUS");
    fano::Rational c = fano::Rational::parse(a.antik_cube);
    fano::BlowupResult r = [&] {
        if (a.point)
            return fano::blowup_point(c);
        auto v = parse_longs(a.curve);
        if (v.size() != 2)
            throw UsageError("--curve needs DEG,GENUS");
        return fano::blowup_curve(c, {v[0], v[1]});
    }();
    if (as_json) {
        emit({{"form", fano::to_json(r.form)}, {"not_big", r.not_big}});
        return 0;
    }
    const auto& v = r.form.values();
    std::cout << "(-K)^3 = " << v[0] << "\n(-K)^2.E = " << v[1] << "\n(-K).E^2 = " << v[2] << "\nE^3 = " << v[3]
              << '\n';
    if (r.not_big)
        std::cout << "-K is not big\n";
    return 0;
}

// scroll --------------------------------------------------------------------

struct ScrollArgs {
    std::string weights;
    bool h0 = false;
    bool canonical = false;
    bool euler = false;
    std::string intersect;
    std::optional<long> hyperelliptic;
    std::optional<long> trigonal;
};

std::string status_string(fano::CandidateStatus s)
{
    switch (s) {
    case fano::CandidateStatus::Realized: return "realized";
    case fano::CandidateStatus::NumericOnly: return "numeric-only";
    case fano::CandidateStatus::Excluded: return "excluded";
    }
    return "?";
}

std::vector<fano::ScrollData> realized_scrolls(const fano::Catalog& cat, const std::string& kind, long genus)
{
    std::vector<fano::ScrollData> out;
    for (const auto& e : cat.entries())
        if (e.scroll_model && e.scroll_model->kind == kind && e.genus == genus)
            out.emplace_back(e.scroll_model->splitting);
    return out;
}

int run_scroll(const ScrollArgs& a, const fano::Catalog& cat, bool as_json)
{
    const int modes = a.h0 + a.canonical + a.euler + !a.intersect.empty() + a.hyperelliptic.has_value() +
                      a.trigonal.has_value();
    if (modes != 1)
        throw UsageError("give exactly one of --h0, --canonical, --euler, --intersect, --hyperelliptic, --trigonal");

    if (a.hyperelliptic) {
        auto cs = fano::hyperelliptic_candidates(*a.hyperelliptic, realized_scrolls(cat, "hyperelliptic", *a.hyperelliptic));
        json arr = json::array();
        Table t({"splitting", "branch", "status"});
        for (const auto& c : cs) {
            arr.push_back({{"splitting", c.scroll.splitting()}, {"branch", fano::to_json(c.branch)},
                           {"status", status_string(c.status)}});
            std::ostringstream s;
            for (long d : c.scroll.splitting())
                s << (s.tellp() ? "," : "") << d;
            t.add({s.str(), opt(std::optional(c.branch.first())) + "M+" + opt(std::optional(c.branch.second())) + "F",
                   status_string(c.status)});
        }
        if (as_json)
            emit({{"genus", *a.hyperelliptic}, {"kind", "hyperelliptic"}, {"candidates", arr}});
        else
            t.print(std::cout);
        return 0;
    }
    if (a.trigonal) {
        auto cs = fano::trigonal_candidates(*a.trigonal, realized_scrolls(cat, "trigonal", *a.trigonal));
        json arr = json::array();
        Table t({"splitting", "status", "witness"});
        for (const auto& c : cs) {
            json j{{"splitting", c.scroll.splitting()}, {"member", fano::to_json(c.member)},
                   {"status", status_string(c.status)}};
            std::string w = "-";
            if (c.witness) {
                j["witness_k"] = *c.witness_k;
                j["witness"] = fano::to_json(*c.witness);
                w = "k=" + std::to_string(*c.witness_k) + ": " + c.witness->str();
            }
            arr.push_back(j);
            std::ostringstream s;
            for (long d : c.scroll.splitting())
                s << (s.tellp() ? "," : "") << d;
            t.add({s.str(), status_string(c.status), w});
        }
        if (as_json)
            emit({{"genus", *a.trigonal}, {"kind", "trigonal"}, {"candidates", arr}});
        else
            t.print(std::cout);
        return 0;
    }

    if (a.weights.empty())
        throw UsageError("--weights is required");
    fano::ScrollData s(parse_longs(a.weights));
    json j{{"splitting", s.splitting()}};
    if (a.h0) {
        j["h0"] = fano::scroll_h0(s);
        if (!as_json)
            std::cout << fano::scroll_h0(s) << '\n';
    } else if (a.canonical) {
        auto k = fano::scroll_canonical(s);
        j["canonical"] = fano::to_json(k);
        if (!as_json)
            std::cout << "K = " << k.first() << "M + " << k.second() << "F\n";
    } else if (a.euler) {
        j["euler"] = fano::to_json(fano::scroll_euler(s));
        if (!as_json)
            std::cout << fano::scroll_euler(s) << '\n';
    } else {
        std::vector<fano::DivisorClass> classes;
        std::stringstream ss(a.intersect);
        std::string item;
        while (std::getline(ss, item, ';')) {
            auto v = parse_longs(item);
            if (v.size() != 2)
                throw UsageError("each class is m,f");
            classes.push_back(fano::DivisorClass::mf(v[0], v[1]));
        }
        auto v = fano::scroll_intersection(s, classes);
        j["intersection"] = fano::to_json(v);
        if (!as_json)
            std::cout << v << '\n';
    }
    if (as_json)
        emit(j);
    return 0;
}

// wps -----------------------------------------------------------------------

struct WpsArgs {
    std::string weights;
    std::string degrees;
};

int run_wps(const WpsArgs& a, bool as_json)
{
    fano::WeightSystem w(parse_longs(a.weights));
    json j{{"weights", w.weights()}, {"well_formed", fano::is_well_formed(w)},
           {"normalized", fano::normalize(w).weights()}, {"pic_index", fano::pic_index(w)}};
    std::optional<fano::CiInvariants> inv;
    if (!a.degrees.empty()) {
        inv = fano::ci_fano_invariants({w, parse_longs(a.degrees)});
        json ci{{"dim", inv->dim},
                {"index", inv->index},
                {"antik_degree", fano::to_json(inv->antik_degree)},
                {"fundamental_degree", fano::to_json(inv->fundamental_degree)},
                {"integral", inv->integral},
                {"low_ambient", inv->low_ambient}};
        if (inv->genus)
            ci["genus"] = *inv->genus;
        j["degrees"] = parse_longs(a.degrees);
        j["complete_intersection"] = ci;
    }
    if (as_json) {
        emit(j);
        return 0;
    }
    std::cout << "well-formed: " << (fano::is_well_formed(w) ? "yes" : "no") << "\nnormalized:";
    for (long x : fano::normalize(w).weights())
        std::cout << ' ' << x;
    std::cout << "\nPicard index: " << fano::pic_index(w) << '\n';
    if (inv) {
        std::cout << "dim " << inv->dim << ", index " << inv->index << ", (-K)^" << inv->dim << " = "
                  << inv->antik_degree << ", H^" << inv->dim << " = " << inv->fundamental_degree;
        if (inv->genus)
            std::cout << ", genus " << *inv->genus;
        std::cout << '\n';
    }
    return 0;
}

// link ----------------------------------------------------------------------

struct LinkArgs {
    std::string center;
    std::string genus_range;
    std::optional<long> genus;
    std::optional<long> del_pezzo_degree;
    bool show_excluded = false;
    unsigned threads = 1;
    long bound = 20;
};

std::string target_string(const fano::LinkCandidate& c)
{
    const auto& t = c.target;
    std::ostringstream os;
    if (t.fiber_degree)
        os << "fiber degree " << *t.fiber_degree;
    else if (t.discriminant_degree)
        os << "discriminant degree " << *t.discriminant_degree;
    else {
        if (!t.catalog_ids.empty()) {
            for (std::size_t i = 0; i < t.catalog_ids.size(); ++i)
                os << (i ? "/" : "") << t.catalog_ids[i];
            os << ' ';
        }
        os << "iota " << opt(t.index) << ", d " << opt(t.degree);
        if (t.curve_degree)
            os << ", Z deg " << *t.curve_degree << " genus " << *t.curve_genus;
        if (t.singularity)
            os << ", " << *t.singularity;
    }
    return os.str();
}

int run_link(const LinkArgs& a, const fano::Catalog& cat, bool as_json)
{
    if (a.del_pezzo_degree) {
        auto l = fano::index_two_line_link(*a.del_pezzo_degree);
        if (as_json) {
            emit(fano::to_json(l));
            return 0;
        }
        std::cout << "degree " << l.degree << ": " << fano::to_string(l.outcome) << " (dim|H-E| = " << l.dim_h_minus_e
                  << ", dim|H-2E| >= " << l.dim_h_minus_2e_lower << ")\n";
        if (l.outcome == fano::IndexTwoLineLink::Outcome::Link)
            std::cout << "D ~ H-" << *l.multiplicity << "E, target index " << *l.target_index << " degree "
                      << *l.target_degree << ", Z degree " << *l.curve_degree << " genus " << *l.curve_genus << '\n';
        return 0;
    }
    if (a.center.empty())
        throw UsageError("--center is required");
    if (a.genus_range.empty() == !a.genus)
        throw UsageError("give exactly one of --genus or --genus-range");
    auto [lo, hi] = a.genus ? std::pair{*a.genus, *a.genus} : parse_range(a.genus_range);
    fano::LinkCenter center{fano::center_kind_from_string(a.center)};
    if (center.kind == fano::CenterKind::Curve)
        throw UsageError("curve centers are available through the library only");

    auto cs = fano::filter_links(fano::enumerate_links(center, lo, hi, cat, {a.bound, a.threads}), cat);
    if (!a.show_excluded)
        std::erase_if(cs, [](const auto& c) { return c.status == fano::LinkStatus::Excluded; });

    if (as_json) {
        json arr = json::array();
        for (const auto& c : cs)
            arr.push_back(fano::to_json(c));
        emit({{"center", a.center}, {"genus_range", {lo, hi}}, {"candidates", arr}});
        return 0;
    }
    Table t({"genus", "type", "class", "target", "Ebar^3", "defect", "status"});
    for (const auto& c : cs)
        t.add({std::to_string(c.genus), fano::to_string(c.ctype.tag), class_string(c.fbar ? *c.fbar : c.mbar),
               target_string(c), c.ebar_cube.str(), c.defect.str(),
               c.status == fano::LinkStatus::Confirmed ? "confirmed" : "excluded: " + c.exclusion});
    t.print(std::cout);
    return 0;
}

// rho2 ----------------------------------------------------------------------

int run_rho2(long bound, bool as_json)
{
    auto sols = fano::rho2_primitive_enumerate(bound);
    if (as_json) {
        json arr = json::array();
        for (const auto& s : sols)
            arr.push_back(fano::to_json(s));
        emit({{"solutions", arr}});
        return 0;
    }
    Table t({"(-K)^3", "genus", "rays", "d", "d'", "a", "b"});
    for (const auto& s : sols)
        t.add({std::to_string(s.antik_cube), std::to_string(s.genus), fano::to_string(s.first) + " " + s.second,
               std::to_string(s.discriminant), std::to_string(s.second_degree), s.a.str(), s.b.str()});
    t.print(std::cout);
    return 0;
}

// catalog -------------------------------------------------------------------

struct CatalogArgs {
    std::optional<long> rho, index, genus, h12;
    std::string id;
    bool all = false;
    std::string subject;
};

fano::CatalogFilter make_filter(const CatalogArgs& a)
{
    fano::CatalogFilter f{a.rho, a.index, a.genus, a.h12, std::nullopt};
    if (!a.id.empty())
        f.id = a.id;
    return f;
}

int run_catalog_list(const CatalogArgs& a, const fano::Catalog& cat, bool as_json)
{
    auto es = cat.list(make_filter(a));
    if (as_json) {
        json arr = json::array();
        for (const auto& e : es)
            arr.push_back(fano::to_json(e));
        emit({{"entries", arr}});
        return 0;
    }
    Table t({"id", "rho", "index", "(-K)^3", "genus", "h12", "chi", "description"});
    for (const auto& e : es)
        t.add({e.id, std::to_string(e.rho), std::to_string(e.index), std::to_string(e.antik_cube), opt(e.genus),
               std::to_string(e.h12), std::to_string(e.chi_top), e.description});
    t.print(std::cout);
    return 0;
}

int run_catalog_verify(const CatalogArgs& a, const fano::Catalog& cat, bool as_json)
{
    std::vector<fano::CheckResult> results;
    if (a.all) {
        results = cat.verify_all();
    } else {
        auto es = cat.list(make_filter(a));
        if (es.empty())
            throw UsageError("no entry matches; use --all or a filter");
        for (const auto& e : es) {
            auto r = cat.verify(e);
            results.insert(results.end(), r.begin(), r.end());
        }
    }
    long failures = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    if (as_json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(fano::to_json(r));
        emit({{"checks", static_cast<long>(results.size())}, {"failures", failures}, {"results", arr}});
    } else {
        for (const auto& r : results)
            if (!r.passed)
                std::cout << "FAIL " << r.subject << " " << r.check << ": " << r.lhs << " != " << r.rhs << '\n';
        std::cout << results.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : kVerifyFailed;
}

int run_catalog_facts(const CatalogArgs& a, const fano::Catalog& cat, bool as_json)
{
    auto fs = a.subject.empty() ? cat.facts() : cat.facts_for(a.subject);
    if (as_json) {
        json arr = json::array();
        for (const auto& f : fs)
            arr.push_back(fano::to_json(f));
        emit({{"facts", arr}});
        return 0;
    }
    Table t({"subject", "predicate", "value", "source"});
    for (const auto& f : fs) {
        std::string v = opt(f.value);
        if (f.linear_system)
            v = f.linear_system->center + ": " + std::to_string(f.linear_system->antik) + "(-K)" +
                (f.linear_system->e >= 0 ? "+" : "") + std::to_string(f.linear_system->e) + "E";
        t.add({f.subject, fano::to_string(f.predicate), v, f.source});
    }
    t.print(std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical toolkit for Fano threefolds"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string catalog_path;
    app.add_flag("--json", as_json, "Emit canonical JSON")->configurable(false);
    app.add_option("--catalog", catalog_path, "Use a catalog file instead of the built-in one");

    RrArgs rr;
    auto* rr_cmd = app.add_subcommand("rr", "Hilbert polynomial of a Fano variety");
    rr_cmd->add_option("--dim", rr.dim, "Dimension")->required();
    rr_cmd->add_option("--index", rr.index, "Fano index")->required();
    rr_cmd->add_option("--degree", rr.degree, "H^n, integer or p/q");
    rr_cmd->add_option("--genus", rr.genus, "Genus (index = dim - 2)");
    rr_cmd->add_option("--t", rr.t, "Evaluate chi(tH)");

    BlowupArgs bl;
    auto* bl_cmd = app.add_subcommand("blowup", "Blowup of a point or a curve");
    bl_cmd->add_option("--antik-cube", bl.antik_cube, "(-K)^3 of the threefold")->required();
    bl_cmd->add_flag("--point", bl.point, "Blow up a point");
    bl_cmd->add_option("--curve", bl.curve, "Blow up a curve: DEG,GENUS with DEG = (-K).Z");

    ScrollArgs sc;
    auto* sc_cmd = app.add_subcommand("scroll", "Rational normal scrolls");
    sc_cmd->add_option("--weights", sc.weights, "Splitting d1,d2,...");
    sc_cmd->add_flag("--h0", sc.h0, "h^0 of the tautological class");
    sc_cmd->add_flag("--canonical", sc.canonical, "Canonical class");
    sc_cmd->add_flag("--euler", sc.euler, "Topological Euler number");
    sc_cmd->add_option("--intersect", sc.intersect, "Classes m,f;m,f;... in the (M, F) basis");
    sc_cmd->add_option("--hyperelliptic", sc.hyperelliptic, "Hyperelliptic scroll models of the given genus");
    sc_cmd->add_option("--trigonal", sc.trigonal, "Trigonal scroll models of the given genus");

    WpsArgs wp;
    auto* wp_cmd = app.add_subcommand("wps", "Weighted projective spaces and complete intersections");
    wp_cmd->add_option("--weights", wp.weights, "Weights w0,w1,...")->required();
    wp_cmd->add_option("--degrees", wp.degrees, "Degrees of a complete intersection");

    LinkArgs ln;
    auto* ln_cmd = app.add_subcommand("link", "Enumerate two-ray links from a line, conic or point");
    ln_cmd->add_option("--center", ln.center, "line | conic | point");
    ln_cmd->add_option("--genus-range", ln.genus_range, "A..B");
    ln_cmd->add_option("--genus", ln.genus, "Single genus");
    ln_cmd->add_option("--del-pezzo-degree", ln.del_pezzo_degree, "Projection of a del Pezzo threefold from a line");
    ln_cmd->add_flag("--show-excluded", ln.show_excluded, "Also list excluded candidates");
    ln_cmd->add_option("--threads", ln.threads, "Worker threads, 0 for all cores");
    ln_cmd->add_option("--bound", ln.bound, "Search box for the coefficients");

    long rho2_bound = 20;
    auto* r2_cmd = app.add_subcommand("rho2", "Picard rank two systems");
    r2_cmd->require_subcommand(1);
    auto* r2_enum = r2_cmd->add_subcommand("enumerate-primitive", "Solve the primitive rank-two systems");
    r2_enum->add_option("--bound", rho2_bound, "Search box for 2a and 2b");

    CatalogArgs ca;
    auto* cat_cmd = app.add_subcommand("catalog", "Classification tables");
    cat_cmd->require_subcommand(1);
    auto add_filters = [&](CLI::App* c) {
        c->add_option("--rho", ca.rho);
        c->add_option("--index", ca.index);
        c->add_option("--genus", ca.genus);
        c->add_option("--h12", ca.h12);
        c->add_option("--id", ca.id);
    };
    auto* cat_list = cat_cmd->add_subcommand("list", "List entries");
    add_filters(cat_list);
    auto* cat_verify = cat_cmd->add_subcommand("verify", "Check identities");
    add_filters(cat_verify);
    cat_verify->add_flag("--all", ca.all, "Whole catalog including facts");
    auto* cat_facts = cat_cmd->add_subcommand("facts", "List facts");
    cat_facts->add_option("--subject", ca.subject);

    for (auto* sub : {rr_cmd, bl_cmd, sc_cmd, wp_cmd, ln_cmd, r2_enum, cat_list, cat_verify, cat_facts})
        sub->add_flag("--json", as_json, "Emit canonical JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }

    try {
        const fano::Catalog& cat = load_catalog(catalog_path);
        if (*rr_cmd)
            return run_rr(rr, as_json);
        if (*bl_cmd)
            return run_blowup(bl, as_json);
        if (*sc_cmd)
            return run_scroll(sc, cat, as_json);
        if (*wp_cmd)
            return run_wps(wp, as_json);
        if (*ln_cmd)
            return run_link(ln, cat, as_json);
        if (*r2_enum)
            return run_rho2(rho2_bound, as_json);
        if (*cat_list)
            return run_catalog_list(ca, cat, as_json);
        if (*cat_verify)
            return run_catalog_verify(ca, cat, as_json);
        if (*cat_facts)
            return run_catalog_facts(ca, cat, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}
