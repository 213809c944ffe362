#include "fano/catalog.hpp"

#include "fano/blowup.hpp"
#include "fano/json_io.hpp"
#include "fano/riemann_roch.hpp"
#include "fano/scrolls.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

namespace fano {

extern const char* const kBuiltinCatalogJson;

namespace {

const std::map<Flag, std::string> kFlagNames = {
    {Flag::HyperellipticModel, "HyperellipticModel"},
    {Flag::BasePointModel, "BasePointModel"},
    {Flag::Primitive, "Primitive"},
    {Flag::Imprimitive, "Imprimitive"},
};

const std::map<Predicate, std::string> kPredicateNames = {
    {Predicate::Rational, "Rational"},       {Predicate::Irrational, "Irrational"},
    {Predicate::EulerNumber, "EulerNumber"}, {Predicate::HasLine, "HasLine"},
    {Predicate::HasConic, "HasConic"},       {Predicate::EmptyLinearSystem, "EmptyLinearSystem"},
};

// get<long>() would silently truncate 1.5.
long as_integer(const nlohmann::json& v)
{
    if (!v.is_number_integer())
        throw CatalogError("expected an integer, got " + v.dump());
    return v.get<long>();
}

long integer(const nlohmann::json& j, const char* key)
{
    return as_integer(j.at(key));
}

std::vector<long> integers(const nlohmann::json& arr)
{
    std::vector<long> out;
    for (const auto& v : arr)
        out.push_back(as_integer(v));
    return out;
}

template <typename T>
std::optional<T> opt(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key))
        return std::nullopt;
    if constexpr (std::is_same_v<T, long>)
        return as_integer(j.at(key));
    else
        return j.at(key).get<T>();
}

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> known, const std::string& where)
{
    for (const auto& [key, _] : j.items())
        if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
            throw CatalogError("unknown field '" + key + "' in " + where);
}

Construction construction_from_json(const nlohmann::json& j)
{
    reject_unknown(j, {"center", "target", "degree", "genus"}, "construction");
    return {j.at("center").get<std::string>(), j.at("target").get<std::string>(), opt<long>(j, "degree"),
            opt<long>(j, "genus")};
}

nlohmann::json construction_to_json(const Construction& c)
{
    nlohmann::json j = {{"center", c.center}, {"target", c.target}};
    if (c.degree)
        j["degree"] = *c.degree;
    if (c.genus)
        j["genus"] = *c.genus;
    return j;
}

CatalogEntry entry_from_json(const nlohmann::json& j)
{
    reject_unknown(j,
                   {"id", "rho", "index", "antik_cube", "genus", "h12", "chi_top", "description", "construction",
                    "alternate_construction", "flags", "family", "scroll_model", "rays", "del_pezzo_surface"},
                   "entry");
    CatalogEntry e;
    e.id = j.at("id").get<std::string>();
    e.rho = integer(j, "rho");
    e.index = integer(j, "index");
    e.antik_cube = integer(j, "antik_cube");
    e.genus = opt<long>(j, "genus");
    e.h12 = integer(j, "h12");
    e.chi_top = integer(j, "chi_top");
    e.description = j.at("description").get<std::string>();
    if (j.contains("construction"))
        e.construction = construction_from_json(j.at("construction"));
    if (j.contains("alternate_construction"))
        e.alternate_construction = construction_from_json(j.at("alternate_construction"));
    for (const auto& f : j.at("flags"))
        e.flags.insert(flag_from_string(f.get<std::string>()));
    e.family = opt<std::string>(j, "family");
    if (j.contains("scroll_model")) {
        const auto& s = j.at("scroll_model");
        e.scroll_model = ScrollModel{s.at("kind").get<std::string>(), integers(s.at("splitting"))};
    }
    if (j.contains("rays"))
        e.rays = j.at("rays").get<std::vector<std::string>>();
    if (j.contains("del_pezzo_surface")) {
        const auto& s = j.at("del_pezzo_surface");
        e.del_pezzo_surface =
            SurfaceRecord{s.at("role").get<std::string>(), integer(s, "degree"), integer(s, "picard")};
    }
    return e;
}

FactRecord fact_from_json(const nlohmann::json& j)
{
    reject_unknown(j, {"subject", "predicate", "source", "value", "linear_system"}, "fact");
    FactRecord f;
    f.subject = j.at("subject").get<std::string>();
    f.predicate = predicate_from_string(j.at("predicate").get<std::string>());
    f.source = j.at("source").get<std::string>();
    f.value = opt<long>(j, "value");
    if (j.contains("linear_system")) {
        const auto& s = j.at("linear_system");
        f.linear_system = LinearSystemRef{s.at("center").get<std::string>(), integer(s, "antik"),
                                          integer(s, "e")};
    }
    return f;
}

CheckResult check(const std::string& subject, std::string name, const Rational& lhs, const Rational& rhs)
{
    return {subject, std::move(name), lhs == rhs, lhs, rhs};
}

CheckResult check_le(const std::string& subject, std::string name, const Rational& lhs, const Rational& rhs)
{
    return {subject, std::move(name), lhs <= rhs, lhs, rhs};
}

}  // namespace

std::string to_string(Flag f)
{
    return kFlagNames.at(f);
}

std::string to_string(Predicate p)
{
    return kPredicateNames.at(p);
}

Flag flag_from_string(const std::string& s)
{
    for (const auto& [f, name] : kFlagNames)
        if (name == s)
            return f;
    throw CatalogError("unknown flag '" + s + "'");
}

Predicate predicate_from_string(const std::string& s)
{
    for (const auto& [p, name] : kPredicateNames)
        if (name == s)
            return p;
    throw CatalogError("unknown predicate '" + s + "'");
}

nlohmann::json to_json(const CatalogEntry& e)
{
    std::vector<std::string> flags;
    for (Flag f : e.flags)
        flags.push_back(to_string(f));
    std::sort(flags.begin(), flags.end());
    nlohmann::json j = {{"id", e.id},   {"rho", e.rho},         {"index", e.index},
                        {"antik_cube", e.antik_cube},           {"h12", e.h12},
                        {"chi_top", e.chi_top},                 {"description", e.description},
                        {"flags", flags}};
    if (e.genus)
        j["genus"] = *e.genus;
    if (e.construction)
        j["construction"] = construction_to_json(*e.construction);
    if (e.alternate_construction)
        j["alternate_construction"] = construction_to_json(*e.alternate_construction);
    if (e.family)
        j["family"] = *e.family;
    if (e.scroll_model)
        j["scroll_model"] = {{"kind", e.scroll_model->kind}, {"splitting", e.scroll_model->splitting}};
    if (!e.rays.empty())
        j["rays"] = e.rays;
    if (e.del_pezzo_surface)
        j["del_pezzo_surface"] = {{"role", e.del_pezzo_surface->role},
                                  {"degree", e.del_pezzo_surface->degree},
                                  {"picard", e.del_pezzo_surface->picard}};
    return j;
}

nlohmann::json to_json(const FactRecord& f)
{
    nlohmann::json j = {{"subject", f.subject}, {"predicate", to_string(f.predicate)}, {"source", f.source}};
    if (f.value)
        j["value"] = *f.value;
    if (f.linear_system)
        j["linear_system"] = {
            {"center", f.linear_system->center}, {"antik", f.linear_system->antik}, {"e", f.linear_system->e}};
    return j;
}

nlohmann::json to_json(const CheckResult& c)
{
    return {{"subject", c.subject}, {"check", c.check}, {"passed", c.passed}, {"lhs", to_json(c.lhs)},
            {"rhs", to_json(c.rhs)}};
}

Rational fundamental_degree(const CatalogEntry& e)
{
    return Rational(e.antik_cube) / pow(Rational(e.index), 3);
}

Catalog Catalog::from_json(const nlohmann::json& doc)
{
    reject_unknown(doc, {"schema_version", "entries", "facts"}, "catalog");
    Catalog c;
    try {
        c.schema_version_ = integer(doc, "schema_version");
        for (const auto& e : doc.at("entries"))
            c.entries_.push_back(entry_from_json(e));
        for (const auto& f : doc.at("facts"))
            c.facts_.push_back(fact_from_json(f));
    } catch (const nlohmann::json::exception& ex) {
        throw CatalogError(std::string("malformed catalog: ") + ex.what());
    }
    if (c.schema_version_ != 1)
        throw CatalogError("unsupported schema_version " + std::to_string(c.schema_version_));
    return c;
}

Catalog Catalog::parse(const std::string& text)
{
    try {
        return from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::parse_error& ex) {
        throw CatalogError(std::string("catalog is not valid JSON: ") + ex.what());
    }
}

const Catalog& Catalog::builtin()
{
    static const Catalog cat = parse(kBuiltinCatalogJson);
    return cat;
}

nlohmann::json Catalog::to_json() const
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : entries_)
        entries.push_back(fano::to_json(e));
    nlohmann::json facts = nlohmann::json::array();
    for (const auto& f : facts_)
        facts.push_back(fano::to_json(f));
    return {{"schema_version", schema_version_}, {"entries", entries}, {"facts", facts}};
}

std::vector<CatalogEntry> Catalog::list(const CatalogFilter& filter) const
{
    std::vector<CatalogEntry> out;
    for (const auto& e : entries_) {
        if (filter.rho && e.rho != *filter.rho)
            continue;
        if (filter.index && e.index != *filter.index)
            continue;
        if (filter.genus && e.genus != filter.genus)
            continue;
        if (filter.h12 && e.h12 != *filter.h12)
            continue;
        if (filter.id && e.id != *filter.id)
            continue;
        out.push_back(e);
    }
    return out;
}

const CatalogEntry* Catalog::find(const std::string& id) const
{
    for (const auto& e : entries_)
        if (e.id == id)
            return &e;
    return nullptr;
}

std::vector<const CatalogEntry*> Catalog::rank_one(long index, long fundamental) const
{
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.rho == 1 && e.index == index && fundamental_degree(e) == fundamental)
            out.push_back(&e);
    return out;
}

std::vector<FactRecord> Catalog::facts_for(const std::string& subject) const
{
    std::vector<FactRecord> out;
    for (const auto& f : facts_)
        if (f.subject == subject)
            out.push_back(f);
    return out;
}

std::vector<CheckResult> Catalog::verify(const CatalogEntry& e) const
{
    std::vector<CheckResult> out;
    const std::string& id = e.id;
    const Rational antik(e.antik_cube);

    out.push_back(check(id, "chi-top", e.chi_top, 2 + 2 * e.rho - 2 * e.h12));

    // Every smooth Fano threefold has even (-K)^3 and h^0(-K) = (-K)^3/2 + 3.
    const Rational g_formal = antik / 2 + 1;
    if (e.antik_cube % 2 != 0) {
        out.push_back(check(id, "even-degree", e.antik_cube % 2, 0));
    } else {
        auto chi = hilbert_polynomial(FanoNumerics(3, 1, antik));
        out.push_back(check(id, "h0-anticanonical", chi(1), g_formal + 2));
    }

    if (e.index == 1) {
        if (!e.genus)
            out.push_back(check(id, "genus-present", 0, 1));
        else
            out.push_back(check(id, "genus-degree", antik, degree_from_genus(*e.genus)));
    }
    if (e.index > 1 && e.rho == 1) {
        const Rational h3 = fundamental_degree(e);
        if (!h3.is_integer()) {
            out.push_back(check(id, "fundamental-degree-integral", 0, 1));
        } else {
            FanoNumerics fn(3, static_cast<int>(e.index), h3);
            out.push_back(check(id, "h0-fundamental", hilbert_polynomial(fn)(1), h0_fundamental(fn)));
        }
    }
    if (e.index % 2 == 0) {
        // Degree of the half-anticanonical class.
        const Rational d = antik / 8;
        out.push_back(check(id, "del-pezzo-degree-integral", d.is_integer() ? 1 : 0, 1));
        out.push_back(check_le(id, "del-pezzo-degree-lower", 1, d));
        out.push_back(check_le(id, "del-pezzo-degree-upper", d, 8));
    }

    // Riemann-Roch for T_X with (-K).c_2 = 24.
    const Rational kc2(24);
    const Rational hrr = antik / 2 - Rational(19, 24) * kc2 + Rational(e.chi_top) / 2;
    out.push_back(check(id, "vector-fields", hrr, g_formal + e.rho - e.h12 - 19));

    if (e.rho == 1)
        out.push_back(check_le(id, "degree-bound-rho1", antik, 72));
    out.push_back(check_le(id, "degree-bound", antik, 64));

    if (e.del_pezzo_surface) {
        const auto& s = *e.del_pezzo_surface;
        out.push_back(check(id, "noether", s.degree + s.picard, 10));
        if (s.role == "section") {
            out.push_back(check(id, "section-degree", antik, 8 * s.degree));
        } else if (s.role == "factor") {
            out.push_back(check(id, "factor-degree", antik, 6 * s.degree));
            out.push_back(check(id, "factor-picard", e.rho, s.picard + 1));
        } else {
            out.push_back(check(id, "surface-role-known", 0, 1));
        }
    }

    for (const auto* c : {&e.construction, &e.alternate_construction}) {
        if (!*c)
            continue;
        const auto& con = **c;
        const CatalogEntry* y = find(con.target);
        out.push_back(check(id, "construction-target-known", y ? 1 : 0, 1));
        if (!y)
            continue;
        if (e.rho == 1) {
            // Two-ray link: the flop keeps chi_top and h^{1,2}, the blowups change them.
            if (!con.genus) {
                out.push_back(check(id, "construction-link-data", 0, 1));
                continue;
            }
            // Lines, conics and points all have Euler number 2.
            out.push_back(check(id, "link-euler", e.chi_top, y->chi_top + (2 - 2 * *con.genus) - 2));
            out.push_back(check(id, "link-h12", e.h12, y->h12 + *con.genus));
        } else if (con.center == "curve") {
            if (!con.degree || !con.genus) {
                out.push_back(check(id, "construction-curve-data", 0, 1));
                continue;
            }
            CurveCenter z{y->index * *con.degree, *con.genus};
            out.push_back(check(id, "blowup-degree", antik, anticanonical_cube_after_curve(y->antik_cube, z)));
            out.push_back(check(id, "blowup-h12", e.h12, y->h12 + *con.genus));
            out.push_back(check(id, "blowup-rho", e.rho, y->rho + 1));
        } else if (con.center == "point") {
            out.push_back(check(id, "blowup-degree", antik, blowup_point(y->antik_cube).form.top()));
            out.push_back(check(id, "blowup-h12", e.h12, y->h12));
            out.push_back(check(id, "blowup-rho", e.rho, y->rho + 1));
        }
    }

    if (e.scroll_model) {
        const auto& m = *e.scroll_model;
        ScrollData s(m.splitting);
        if (m.kind == "hyperelliptic" && s.rank() == 3) {
            // Double cover of the scroll branched in 4M + 2(2 - sum d)F.
            auto branch = DivisorClass::mf(4, 2 * (2 - s.degree()));
            out.push_back(check(id, "scroll-genus", g_formal, s.degree() + 1));
            out.push_back(check(id, "scroll-euler", e.chi_top, 2 * scroll_euler(s) - scroll_divisor_euler(s, branch)));
        } else if (m.kind == "trigonal" && s.rank() == 4) {
            auto member = DivisorClass::mf(3, 2 - s.degree());
            out.push_back(check(id, "scroll-genus", g_formal, s.degree() + 2));
            out.push_back(check(id, "scroll-euler", e.chi_top, scroll_divisor_euler(s, member)));
        } else {
            out.push_back(check(id, "scroll-model-known", 0, 1));
        }
    }
    return out;
}

std::vector<CheckResult> Catalog::verify_facts() const
{
    std::vector<CheckResult> out;
    std::map<std::string, int> seen;
    for (const auto& e : entries_)
        ++seen[e.id];
    for (const auto& [id, n] : seen)
        if (n != 1)
            out.push_back(check(id, "unique-id", n, 1));

    for (const auto& f : facts_) {
        const CatalogEntry* e = find(f.subject);
        out.push_back(check(f.subject, "fact-subject-known", e ? 1 : 0, 1));
        if (!e)
            continue;
        switch (f.predicate) {
        case Predicate::EulerNumber:
            if (f.value)
                out.push_back(check(f.subject, "fact-euler", *f.value, e->chi_top));
            else
                out.push_back(check(f.subject, "fact-euler-value-present", 0, 1));
            break;
        case Predicate::EmptyLinearSystem:
            out.push_back(check(f.subject, "fact-linear-system", f.linear_system ? 1 : 0, 1));
            break;
        case Predicate::Rational:
            for (const auto& g : facts_)
                if (g.subject == f.subject && g.predicate == Predicate::Irrational)
                    out.push_back(check(f.subject, "fact-rationality-consistent", 0, 1));
            break;
        default:
            break;
        }
    }
    return out;
}

std::vector<CheckResult> Catalog::verify_all() const
{
    std::vector<CheckResult> out;
    for (const auto& e : entries_) {
        auto r = verify(e);
        out.insert(out.end(), r.begin(), r.end());
    }
    auto g = verify_facts();
    out.insert(out.end(), g.begin(), g.end());
    return out;
}

}  // namespace fano
