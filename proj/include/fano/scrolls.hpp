#pragma once

#include "fano/form.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fano {

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// P(O(d_1) + ... + O(d_m)) over P^1 with tautological class M and fiber F.
// The splitting is kept in descending order.
class ScrollData {
public:
    explicit ScrollData(std::vector<long> splitting);

    const std::vector<long>& splitting() const { return d_; }
    int rank() const { return static_cast<int>(d_.size()); }
    long degree() const;  // sum of d_i = M^m

    friend bool operator==(const ScrollData&, const ScrollData&) = default;
    friend auto operator<=>(const ScrollData& a, const ScrollData& b) { return a.d_ <=> b.d_; }

private:
    std::vector<long> d_;
};

long scroll_h0(const ScrollData& s);

// Top intersection of m classes given in the (M, F) basis.
Rational scroll_intersection(const ScrollData& s, const std::vector<DivisorClass>& classes);

DivisorClass scroll_canonical(const ScrollData& s);

// Topological Euler number of the scroll and of a smooth member of |D| on it.
Rational scroll_euler(const ScrollData& s);
Rational scroll_divisor_euler(const ScrollData& s, const DivisorClass& d);

enum class CandidateStatus { Realized, NumericOnly, Excluded };

struct HyperellipticCandidate {
    ScrollData scroll;
    DivisorClass branch;  // (4, 2(3-g)) in (M, F)
    CandidateStatus status;
};

struct TrigonalCandidate {
    ScrollData scroll;
    DivisorClass member;  // 3M + (2 - sum d_i) F
    CandidateStatus status;
    std::optional<long> witness_k;   // G' = M - kF giving the negative value
    std::optional<Rational> witness; // X.G'.G^2 < 0
};

// Realization is supplied by the caller (normally the catalog); splittings not
// in `realized` are reported NumericOnly.
std::vector<HyperellipticCandidate> hyperelliptic_candidates(long genus,
                                                             const std::vector<ScrollData>& realized = {});
std::vector<TrigonalCandidate> trigonal_candidates(long genus, const std::vector<ScrollData>& realized = {});

enum class DegreeBound { BelowBound, Minimal, Above };
DegreeBound minimal_degree_check(long deg, long ambient_dim, long var_dim);

// All splittings of `total` into `parts` positive integers, descending order,
// listed in lexicographically increasing order.
std::vector<ScrollData> positive_splittings(long total, int parts);

}  // namespace fano
