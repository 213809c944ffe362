#include "fano/scrolls.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

namespace fano {

ScrollData::ScrollData(std::vector<long> splitting) : d_(std::move(splitting))
{
    if (d_.size() < 2)
        throw std::invalid_argument("a scroll needs rank at least 2");
    for (long d : d_)
        if (d < 0)
            throw std::invalid_argument("splitting degrees must be non-negative");
    std::sort(d_.begin(), d_.end(), std::greater<>());
}

long ScrollData::degree() const
{
    return std::accumulate(d_.begin(), d_.end(), 0L);
}

long scroll_h0(const ScrollData& s)
{
    return s.degree() + s.rank();
}

Rational scroll_intersection(const ScrollData& s, const std::vector<DivisorClass>& classes)
{
    if (static_cast<int>(classes.size()) != s.rank())
        throw ArityError("need exactly " + std::to_string(s.rank()) + " classes, got " +
                         std::to_string(classes.size()));
    for (const auto& c : classes)
        if (c.basis() != Basis::MF)
            throw BasisError("scroll classes must be in the (M, F) basis");
    // F^2 = 0, so only the all-M monomial and the monomials with one F survive.
    Rational all_m(1);
    for (const auto& c : classes)
        all_m *= c.first();
    Rational one_f(0);
    for (std::size_t j = 0; j < classes.size(); ++j) {
        Rational term = classes[j].second();
        for (std::size_t i = 0; i < classes.size() && !term.is_zero(); ++i)
            if (i != j)
                term *= classes[i].first();
        one_f += term;
    }
    return all_m * s.degree() + one_f;
}

DivisorClass scroll_canonical(const ScrollData& s)
{
    return DivisorClass::mf(-s.rank(), s.degree() - 2);
}

namespace {

// Graded element of Q[M, F]/(F^2): in degree k the pair (coeff of M^k, coeff of M^(k-1) F).
class Graded {
public:
    explicit Graded(int top) : parts_(top + 1, {Rational(0), Rational(0)}) {}

    static Graded one(int top)
    {
        Graded g(top);
        g.parts_[0].first = 1;
        return g;
    }
    static Graded linear(int top, const DivisorClass& d)
    {
        Graded g(top);
        if (top >= 1) {
            g.parts_[1].first = d.first();
            g.parts_[1].second = d.second();
        }
        return g;
    }

    Graded operator*(const Graded& o) const
    {
        int top = static_cast<int>(parts_.size()) - 1;
        Graded out(top);
        for (int k = 0; k <= top; ++k)
            for (int l = 0; k + l <= top; ++l) {
                const auto& [a, b] = parts_[k];
                const auto& [c, e] = o.parts_[l];
                out.parts_[k + l].first += a * c;
                out.parts_[k + l].second += a * e + b * c;
            }
        return out;
    }
    Graded operator+(const Graded& o) const
    {
        Graded out = *this;
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            out.parts_[k].first += o.parts_[k].first;
            out.parts_[k].second += o.parts_[k].second;
        }
        return out;
    }
    Graded scaled(const Rational& s) const
    {
        Graded out = *this;
        for (auto& [a, b] : out.parts_) {
            a *= s;
            b *= s;
        }
        return out;
    }
    Graded degree_part(int k) const
    {
        Graded out(static_cast<int>(parts_.size()) - 1);
        out.parts_[k] = parts_[k];
        return out;
    }
    Rational integrate(const ScrollData& s) const
    {
        const auto& [m_top, mf] = parts_.at(s.rank());
        return m_top * s.degree() + mf;
    }

private:
    std::vector<std::pair<Rational, Rational>> parts_;
};

// c(T) = (1 + 2F) * prod (1 + M - d_i F).
Graded total_chern(const ScrollData& s)
{
    const int top = s.rank();
    Graded c = Graded::one(top) + Graded::linear(top, DivisorClass::mf(0, 2));
    for (long d : s.splitting())
        c = c * (Graded::one(top) + Graded::linear(top, DivisorClass::mf(1, -d)));
    return c;
}

}  // namespace

Rational scroll_euler(const ScrollData& s)
{
    return total_chern(s).integrate(s);
}

Rational scroll_divisor_euler(const ScrollData& s, const DivisorClass& d)
{
    if (d.basis() != Basis::MF)
        throw BasisError("scroll classes must be in the (M, F) basis");
    const int top = s.rank();
    const Graded c = total_chern(s);
    const Graded minus_x = Graded::linear(top, Rational(-1) * d);
    // c_{m-1}(T_X) = sum_k c_k(T_W) (-X)^(m-1-k), then cap with X.
    Graded acc(top);
    for (int k = 0; k < top; ++k) {
        Graded term = c.degree_part(k);
        for (int j = 0; j < top - 1 - k; ++j)
            term = term * minus_x;
        acc = acc + term;
    }
    return (acc * Graded::linear(top, d)).integrate(s);
}

std::vector<ScrollData> positive_splittings(long total, int parts)
{
    std::vector<ScrollData> out;
    std::vector<long> cur;
    // Non-increasing sequences; collected then sorted for a canonical order.
    std::function<void(long, long)> rec = [&](long remaining, long max_part) {
        if (static_cast<int>(cur.size()) == parts) {
            if (remaining == 0)
                out.emplace_back(cur);
            return;
        }
        long slots = parts - static_cast<long>(cur.size());
        for (long p = std::min(max_part, remaining - (slots - 1)); p >= 1; --p) {
            if (p * slots < remaining)
                break;
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (parts >= 1 && total >= parts)
        rec(total, total);
    std::sort(out.begin(), out.end());
    return out;
}

static CandidateStatus realized_or_numeric(const ScrollData& s, const std::vector<ScrollData>& realized)
{
    return std::find(realized.begin(), realized.end(), s) != realized.end() ? CandidateStatus::Realized
                                                                             : CandidateStatus::NumericOnly;
}

std::vector<HyperellipticCandidate> hyperelliptic_candidates(long genus, const std::vector<ScrollData>& realized)
{
    if (genus < 2)
        throw std::invalid_argument("genus must be at least 2");
    std::vector<HyperellipticCandidate> out;
    for (auto& s : positive_splittings(genus - 1, 3))
        out.push_back({s, DivisorClass::mf(4, 2 * (2 - s.degree())), realized_or_numeric(s, realized)});
    return out;
}

std::vector<TrigonalCandidate> trigonal_candidates(long genus, const std::vector<ScrollData>& realized)
{
    if (genus < 5)
        throw std::invalid_argument("genus must be at least 5");
    std::vector<TrigonalCandidate> out;
    for (auto& s : positive_splittings(genus - 2, 4)) {
        TrigonalCandidate c{s, DivisorClass::mf(3, 2 - s.degree()), CandidateStatus::NumericOnly, {}, {}};
        const DivisorClass g = DivisorClass::mf(1, -1);
        for (long k = 1; k <= s.splitting().front(); ++k) {
            Rational v = scroll_intersection(s, {c.member, DivisorClass::mf(1, -k), g, g});
            if (v.sign() < 0) {
                c.witness_k = k;
                c.witness = v;
                break;
            }
        }
        c.status = c.witness ? CandidateStatus::Excluded : realized_or_numeric(s, realized);
        out.push_back(std::move(c));
    }
    return out;
}

DegreeBound minimal_degree_check(long deg, long ambient_dim, long var_dim)
{
    if (deg < 1 || var_dim < 1 || ambient_dim <= var_dim)
        throw std::invalid_argument("need deg >= 1 and ambient_dim > var_dim >= 1");
    long bound = ambient_dim - var_dim + 1;
    if (deg < bound)
        return DegreeBound::BelowBound;
    return deg == bound ? DegreeBound::Minimal : DegreeBound::Above;
}

}  // namespace fano
