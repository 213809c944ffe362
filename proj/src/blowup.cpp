#include "fano/blowup.hpp"

#include <stdexcept>

namespace fano {

BlowupResult blowup_curve(const Rational& antik_cube, const CurveCenter& center)
{
    if (antik_cube.sign() <= 0)
        throw std::invalid_argument("anticanonical cube must be positive");
    if (center.genus < 0)
        throw std::invalid_argument("curve genus must be non-negative");
    // On (sigma^*(-K), E): pullbacks meet E only through Z, and
    // E^3 = -deg N = K.Z + 2 - 2g.
    const Rational d0(center.deg_antik);
    auto form = from_pullback_data(antik_cube, 0, -d0, -d0 + 2 - 2 * center.genus, 1, 1);
    bool not_big = form.top().sign() <= 0;
    return {std::move(form), not_big};
}

BlowupResult blowup_point(const Rational& antik_cube)
{
    if (antik_cube.sign() <= 0)
        throw std::invalid_argument("anticanonical cube must be positive");
    // E is a plane with normal bundle O(-1); K~ = sigma^*K + 2E.
    auto form = from_pullback_data(antik_cube, 0, 0, 1, 1, 2);
    bool not_big = form.top().sign() <= 0;
    return {std::move(form), not_big};
}

Rational anticanonical_cube_after_curve(const Rational& antik_cube, const CurveCenter& center)
{
    return blowup_curve(antik_cube, center).form.top();
}

}  // namespace fano
