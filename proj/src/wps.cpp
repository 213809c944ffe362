#include "fano/wps.hpp"

#include <numeric>

namespace fano {

WeightSystem::WeightSystem(std::vector<long> weights) : w_(std::move(weights))
{
    if (w_.size() < 2)
        throw std::invalid_argument("need at least two weights");
    for (long w : w_)
        if (w < 1)
            throw std::invalid_argument("weights must be positive");
}

long WeightSystem::sum() const
{
    return std::accumulate(w_.begin(), w_.end(), 0L);
}

// gcd of all weights except position `skip`.
static long gcd_without(const std::vector<long>& w, std::size_t skip)
{
    long g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != skip)
            g = std::gcd(g, w[i]);
    return g;
}

bool is_well_formed(const WeightSystem& w)
{
    const auto& ws = w.weights();
    for (std::size_t i = 0; i < ws.size(); ++i)
        if (gcd_without(ws, i) != 1)
            return false;
    return true;
}

WeightSystem normalize(const WeightSystem& w)
{
    std::vector<long> ws = w.weights();
    long all = 0;
    for (long x : ws)
        all = std::gcd(all, x);
    for (auto& x : ws)
        x /= all;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            long g = gcd_without(ws, i);
            if (g > 1) {
                for (std::size_t j = 0; j < ws.size(); ++j)
                    if (j != i)
                        ws[j] /= g;
                changed = true;
            }
        }
    }
    return WeightSystem(std::move(ws));
}

long pic_index(const WeightSystem& w)
{
    long l = 1;
    for (long x : w.weights())
        l = std::lcm(l, x);
    return l;
}

CiInvariants ci_fano_invariants(const CompleteIntersectionSpec& spec)
{
    const auto& w = spec.weights;
    if (!is_well_formed(w))
        throw std::invalid_argument("weights are not well-formed");
    const int n = w.dim();
    const int r = static_cast<int>(spec.degrees.size());
    if (r >= n)
        throw std::invalid_argument("need fewer equations than the ambient dimension");
    long deg_sum = 0;
    Rational ratio(1);
    for (long d : spec.degrees) {
        if (d < 1)
            throw std::invalid_argument("degrees must be positive");
        deg_sum += d;
        ratio *= d;
    }
    for (long x : w.weights())
        ratio /= x;

    CiInvariants inv;
    inv.dim = n - r;
    inv.index = w.sum() - deg_sum;
    if (inv.index <= 0)
        throw NotFano("sum of degrees " + std::to_string(deg_sum) + " is not below sum of weights " +
                      std::to_string(w.sum()));
    inv.fundamental_degree = ratio;
    inv.antik_degree = pow(Rational(inv.index), static_cast<unsigned>(inv.dim)) * ratio;
    inv.integral = inv.antik_degree.is_integer();
    inv.low_ambient = n < 4;
    if (inv.dim == 3 && inv.index == 1 && inv.integral && inv.antik_degree.to_int() % 2 == 0)
        inv.genus = inv.antik_degree.to_int() / 2 + 1;
    return inv;
}

FanoNumerics numerics(const CiInvariants& inv)
{
    return FanoNumerics(inv.dim, static_cast<int>(inv.index), inv.fundamental_degree);
}

}  // namespace fano
