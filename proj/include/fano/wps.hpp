#pragma once

#include "fano/rational.hpp"
#include "fano/riemann_roch.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fano {

struct NotFano : std::domain_error {
    using std::domain_error::domain_error;
};

// Weights w_0..w_n of P(w_0, ..., w_n).
class WeightSystem {
public:
    explicit WeightSystem(std::vector<long> weights);

    const std::vector<long>& weights() const { return w_; }
    int dim() const { return static_cast<int>(w_.size()) - 1; }
    long sum() const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<long> w_;
};

struct CompleteIntersectionSpec {
    WeightSystem weights;
    std::vector<long> degrees;
};

struct CiInvariants {
    int dim;
    long index;
    Rational antik_degree;           // (-K)^dim
    Rational fundamental_degree;     // H^dim with -K = index * H
    std::optional<long> genus;       // threefolds of index 1 with even integral degree
    bool integral;                   // antik_degree is an integer
    bool low_ambient;                // ambient dimension < 4: Lefschetz restriction of Pic not available
};

bool is_well_formed(const WeightSystem& w);
WeightSystem normalize(const WeightSystem& w);
long pic_index(const WeightSystem& w);
CiInvariants ci_fano_invariants(const CompleteIntersectionSpec& spec);
// Riemann-Roch view of the same data; throws when the degree is not admissible there.
FanoNumerics numerics(const CiInvariants& inv);

}  // namespace fano
