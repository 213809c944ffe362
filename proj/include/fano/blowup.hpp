#pragma once

#include "fano/form.hpp"

namespace fano {

// Smooth curve Z with (-K_V).Z = deg_antik.
struct CurveCenter {
    long deg_antik;
    long genus;
};

struct BlowupResult {
    TrilinearForm form;  // basis (-K~, E)
    bool not_big;        // (-K~)^3 <= 0
};

BlowupResult blowup_curve(const Rational& antik_cube, const CurveCenter& center);
BlowupResult blowup_point(const Rational& antik_cube);
Rational anticanonical_cube_after_curve(const Rational& antik_cube, const CurveCenter& center);

}  // namespace fano
