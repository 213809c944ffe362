#pragma once

#include "fano/rational.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Flag { HyperellipticModel, BasePointModel, Primitive, Imprimitive };

// How an entry arises: blowup of a point or a curve (degree measured by the
// ample generator of the target), or a two-ray link from a line/conic/point.
struct Construction {
    std::string center;  // curve | point | line | conic
    std::string target;
    std::optional<long> degree;
    std::optional<long> genus;
    friend bool operator==(const Construction&, const Construction&) = default;
};

struct ScrollModel {
    std::string kind;  // hyperelliptic | trigonal
    std::vector<long> splitting;
    friend bool operator==(const ScrollModel&, const ScrollModel&) = default;
};

// A del Pezzo surface attached to the entry: a hyperplane section (index 2)
// or a product factor S x P^1.
struct SurfaceRecord {
    std::string role;  // section | factor
    long degree;
    long picard;
    friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

struct CatalogEntry {
    std::string id;
    long rho;
    long index;
    long antik_cube;
    std::optional<long> genus;
    long h12;
    long chi_top;
    std::string description;
    std::optional<Construction> construction;
    std::optional<Construction> alternate_construction;
    std::set<Flag> flags;
    std::optional<std::string> family;
    std::optional<ScrollModel> scroll_model;
    std::vector<std::string> rays;
    std::optional<SurfaceRecord> del_pezzo_surface;
    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

enum class Predicate { Rational, Irrational, EulerNumber, HasLine, HasConic, EmptyLinearSystem };

// Class a(-K) + e E on the blowup of the named center.
struct LinearSystemRef {
    std::string center;
    long antik;
    long e;
    friend bool operator==(const LinearSystemRef&, const LinearSystemRef&) = default;
};

struct FactRecord {
    std::string subject;
    Predicate predicate;
    std::string source;  // classical | line-link | conic-link | point-link | geometric
    std::optional<long> value;
    std::optional<LinearSystemRef> linear_system;
    friend bool operator==(const FactRecord&, const FactRecord&) = default;
};

struct CatalogFilter {
    std::optional<long> rho;
    std::optional<long> index;
    std::optional<long> genus;
    std::optional<long> h12;
    std::optional<std::string> id;
};

struct CheckResult {
    std::string subject;
    std::string check;
    bool passed;
    Rational lhs;
    Rational rhs;
};

class Catalog {
public:
    static Catalog from_json(const nlohmann::json& doc);
    static Catalog parse(const std::string& text);
    // The catalog shipped with the library.
    static const Catalog& builtin();

    nlohmann::json to_json() const;

    long schema_version() const { return schema_version_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const std::vector<FactRecord>& facts() const { return facts_; }

    std::vector<CatalogEntry> list(const CatalogFilter& filter = {}) const;
    const CatalogEntry* find(const std::string& id) const;
    // Smooth Picard-rank-one entries with the given index and H^3.
    std::vector<const CatalogEntry*> rank_one(long index, long fundamental_degree) const;
    std::vector<FactRecord> facts_for(const std::string& subject) const;

    std::vector<CheckResult> verify(const CatalogEntry& entry) const;
    // Entry checks for every entry followed by catalog-wide checks.
    std::vector<CheckResult> verify_all() const;

private:
    std::vector<CheckResult> verify_facts() const;

    long schema_version_ = 0;
    std::vector<CatalogEntry> entries_;
    std::vector<FactRecord> facts_;
};

std::string to_string(Flag f);
std::string to_string(Predicate p);
Flag flag_from_string(const std::string& s);
Predicate predicate_from_string(const std::string& s);

nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json to_json(const FactRecord& f);
nlohmann::json to_json(const CheckResult& c);

// H^3 of the fundamental divisor, (-K)^3 / index^3.
Rational fundamental_degree(const CatalogEntry& e);

}  // namespace fano
