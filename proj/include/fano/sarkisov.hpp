#pragma once

#include "fano/blowup.hpp"
#include "fano/catalog.hpp"
#include "fano/form.hpp"
#include "fano/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fano {

struct InconsistentCandidate : std::logic_error {
    using std::logic_error::logic_error;
};

enum class ContractionTag { C1, C2, D1, D2, D3, B1, B2, B3, B4, B5 };

// Extremal contraction type: length mu, discrepancy alpha of the exceptional
// divisor and, for divisor-to-point types, k = (-K)^2 . E.
struct ContractionType {
    ContractionTag tag;
    int mu;
    Rational alpha;
    std::optional<long> k;

    bool fiber_type() const;
    friend bool operator==(const ContractionType&, const ContractionType&) = default;
};

const std::vector<ContractionType>& contraction_types();
const ContractionType& contraction_type(ContractionTag tag);
std::string to_string(ContractionTag tag);
ContractionTag contraction_tag_from_string(const std::string& s);

enum class CenterKind { Line, Conic, Point, Curve };

struct LinkCenter {
    CenterKind kind;
    long deg_antik = 0;  // Curve only
    long genus = 0;      // Curve only

    static LinkCenter line() { return {CenterKind::Line}; }
    static LinkCenter conic() { return {CenterKind::Conic}; }
    static LinkCenter point() { return {CenterKind::Point}; }
    static LinkCenter curve(long deg_antik, long genus) { return {CenterKind::Curve, deg_antik, genus}; }

    friend bool operator==(const LinkCenter&, const LinkCenter&) = default;
    friend auto operator<=>(const LinkCenter&, const LinkCenter&) = default;
};

std::string to_string(CenterKind k);
std::string to_string(const LinkCenter& c);
CenterKind center_kind_from_string(const std::string& s);

// Intersection form at the midpoint of a link in the basis (-K, Ebar).
// Every value paired with -K survives the flop; Ebar^3 does not and stays
// open until a candidate fixes it.
struct MidpointForm {
    Rational antik_cube;  // (-K)^3
    Rational antik2_e;    // (-K)^2 . E
    Rational antik_e2;    // (-K) . E^2
    Rational e_cube;      // E^3 before the flop
    // Lower bound for h^0(-K - E) when known.
    std::optional<long> antik_minus_e_sections;

    TrilinearForm with_ebar_cube(const Rational& ebar_cube) const;
};

// Index-one Fano of genus g.
MidpointForm midpoint_form(const LinkCenter& center, long genus);
// Explicit (-K)^3; line and conic centers are read as curves of
// anticanonical degree 1 and 2.
MidpointForm midpoint_form(const LinkCenter& center, const Rational& antik_cube);

struct TargetInvariants {
    std::optional<Rational> index;        // iota(Y); half-integral for B5
    std::optional<Rational> degree;       // Mbar^3
    std::optional<long> curve_degree;     // B1: M . Z
    std::optional<long> curve_genus;      // B1: g(Z)
    std::optional<long> k;                // B2-B5
    std::optional<std::string> singularity;
    std::optional<long> discriminant_degree;  // C
    std::optional<long> fiber_degree;         // D
    std::vector<std::string> catalog_ids;     // smooth targets found in the catalog

    friend bool operator==(const TargetInvariants&, const TargetInvariants&) = default;
};

enum class LinkStatus { Confirmed, Excluded };

struct LinkCandidate {
    LinkCenter center;
    long genus;
    ContractionType ctype;
    // Coefficients of the class a(-K) - b Ebar: Mbar for fiber types, Fbar
    // for birational ones.
    long a;
    long b;
    DivisorClass mbar;
    std::optional<DivisorClass> fbar;
    TargetInvariants target;
    TrilinearForm midpoint;  // with the solved Ebar^3
    Rational e_cube;
    Rational ebar_cube;
    Rational defect;
    // Values m >= 1 still compatible with b >= m a (strict when |-K-E| moves).
    std::vector<long> multiplicities;
    LinkStatus status = LinkStatus::Confirmed;
    std::string exclusion;  // rule name when excluded

    friend bool operator==(const LinkCandidate&, const LinkCandidate&) = default;
};

struct EnumerationOptions {
    long bound = 20;       // box for a, b and the iota search
    unsigned threads = 1;  // 0 means hardware concurrency
};

// Index-one Fano varieties with genus in [g_first, g_last]; g_first >= 7.
// Output sorted by (genus, type, a, b).
std::vector<LinkCandidate> enumerate_links(const LinkCenter& center, long g_first, long g_last,
                                           const Catalog& catalog, const EnumerationOptions& options = {});
std::vector<LinkCandidate> enumerate_links(const LinkCenter& center, long g_first, long g_last,
                                           const EnumerationOptions& options = {});

// E^3 - Ebar^3; throws InconsistentCandidate when negative.
Rational defect(const LinkCandidate& candidate);

// A center on either side of a link: a point or a curve of genus h.
struct EulerCenter {
    bool is_point;
    long genus;
    static EulerCenter point() { return {true, 0}; }
    static EulerCenter curve(long genus) { return {false, genus}; }
};

long euler_contribution(const EulerCenter& c);
// chi(X) from chi(Y), the center blown up on Y and the center on X.
long euler_propagate(long chi_y, const EulerCenter& on_y, const EulerCenter& on_x);

// Catalog facts visible to the filter for one center type.
struct LinkFacts {
    std::optional<std::set<long>> admissible_genera;  // genera carrying a confirmed line link
    std::map<std::string, bool> rational;
    std::map<std::string, long> euler;
    std::vector<std::pair<std::string, LinearSystemRef>> empty_systems;
};

// Fact sources usable for a center, in the order the links are established.
std::set<std::string> fact_sources(CenterKind center);
LinkFacts gather_link_facts(const Catalog& catalog, CenterKind center, long max_genus);

// Rules in order: genus-bound, geometric, rationality, euler.
std::vector<LinkCandidate> filter_links(std::vector<LinkCandidate> candidates, const Catalog& catalog,
                                        const LinkFacts& facts);
// Gathers facts per center from the catalog.
std::vector<LinkCandidate> filter_links(std::vector<LinkCandidate> candidates, const Catalog& catalog);

// Picard-rank-two Fano threefolds with two conic bundle / del Pezzo fibration
// / divisorial rays where the first is a conic bundle over P^2.
struct Rho2Solution {
    ContractionTag first;   // conic bundle f with M = f^* line
    std::string second;     // second ray; "B3-B4" when the two are numerically alike
    long discriminant;      // deg of the discriminant of f
    long second_degree;     // d' for C/D, k for B types
    long genus;
    long antik_cube;
    Rational a;             // D = a(-K) - b M
    Rational b;

    friend bool operator==(const Rho2Solution&, const Rho2Solution&) = default;
};

// Solutions sorted by (-K)^3; search box for 2a, 2b is [1, 2 * bound].
std::vector<Rho2Solution> rho2_primitive_enumerate(long bound = 20);

// Projection of a del Pezzo threefold of degree d from a line.
struct IndexTwoLineLink {
    enum class Outcome { Undetermined, Excluded, Link };

    long degree;
    TrilinearForm form;               // basis (H^*, E)
    long dim_h_minus_e;               // dim |H^* - E|
    long dim_h_minus_2e_lower;        // lower bound for dim |H^* - 2E|
    Outcome outcome;
    std::optional<long> multiplicity;     // m with D ~ H^* - mE
    std::optional<long> target_index;
    std::optional<Rational> target_degree;
    std::optional<long> curve_degree;
    std::optional<long> curve_genus;
    std::optional<Rational> image_of_e_degree;  // (H^* - E)^2 . E
};

IndexTwoLineLink index_two_line_link(long degree);
std::string to_string(IndexTwoLineLink::Outcome o);

nlohmann::json to_json(const LinkCandidate& c);
nlohmann::json to_json(const Rho2Solution& s);
nlohmann::json to_json(const IndexTwoLineLink& l);

}  // namespace fano
