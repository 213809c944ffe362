#include "fano/form.hpp"

namespace fano {

std::string to_string(Basis b)
{
    switch (b) {
    case Basis::KE: return "KE";
    case Basis::MF: return "MF";
    case Basis::PullbackE: return "PullbackE";
    case Basis::HOnly: return "H";
    }
    return "?";
}

void DivisorClass::check_same(const DivisorClass& o) const
{
    if (basis_ != o.basis_)
        throw BasisError("basis mismatch: " + to_string(basis_) + " vs " + to_string(o.basis_));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o)
{
    check_same(o);
    first_ += o.first_;
    if (second_)
        *second_ += *o.second_;
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o)
{
    check_same(o);
    first_ -= o.first_;
    if (second_)
        *second_ -= *o.second_;
    return *this;
}

DivisorClass operator*(const Rational& s, DivisorClass d)
{
    d.first_ *= s;
    if (d.second_)
        *d.second_ *= s;
    return d;
}

TrilinearForm TrilinearForm::rank2(Basis b, Rational c30, Rational c21, Rational c12, Rational c03)
{
    if (b == Basis::HOnly)
        throw BasisError("rank-two form needs a two-element basis");
    TrilinearForm f;
    f.rank_ = 2;
    f.dim_ = 3;
    f.basis_ = b;
    f.values_ = {std::move(c30), std::move(c21), std::move(c12), std::move(c03)};
    return f;
}

TrilinearForm TrilinearForm::rank1(Rational top, int dim)
{
    if (dim < 1)
        throw std::invalid_argument("dimension must be positive");
    TrilinearForm f;
    f.rank_ = 1;
    f.dim_ = dim;
    f.basis_ = Basis::HOnly;
    f.values_ = {std::move(top), 0, 0, 0};
    return f;
}

static void require_basis(const TrilinearForm& form, const DivisorClass& d)
{
    if (d.basis() != form.basis())
        throw BasisError("class in basis " + to_string(d.basis()) + " evaluated on form in basis " +
                         to_string(form.basis()));
}

Rational eval_form(const TrilinearForm& form, const DivisorClass& d1, const DivisorClass& d2,
                   const DivisorClass& d3)
{
    require_basis(form, d1);
    require_basis(form, d2);
    require_basis(form, d3);
    if (form.rank() == 1) {
        if (form.dim() != 3)
            throw BasisError("trilinear evaluation needs a threefold form");
        return d1.first() * d2.first() * d3.first() * form.top();
    }
    const DivisorClass* ds[3] = {&d1, &d2, &d3};
    Rational total(0);
    for (int mask = 0; mask < 8; ++mask) {
        Rational coeff(1);
        int ys = 0;
        for (int slot = 0; slot < 3; ++slot) {
            bool y = (mask >> slot) & 1;
            coeff *= y ? ds[slot]->second() : ds[slot]->first();
            ys += y;
        }
        if (!coeff.is_zero())
            total += coeff * form.monomial(ys);
    }
    return total;
}

Rational self_intersection(const TrilinearForm& form, const DivisorClass& d)
{
    if (form.rank() == 1) {
        require_basis(form, d);
        return pow(d.first(), static_cast<unsigned>(form.dim())) * form.top();
    }
    return eval_form(form, d, d, d);
}

static Rational determinant(const DivisorClass& u, const DivisorClass& v)
{
    return u.first() * v.second() - u.second() * v.first();
}

TrilinearForm change_basis(const TrilinearForm& form, const DivisorClass& u, const DivisorClass& v,
                           Basis new_tag)
{
    if (form.rank() != 2)
        throw BasisError("change of basis needs a rank-two form");
    require_basis(form, u);
    require_basis(form, v);
    for (const auto* c : {&u.first(), &v.first()})
        if (!c->is_integer())
            throw BasisError("basis vector has non-integer coordinate " + c->str());
    for (const auto& c : {u.second(), v.second()})
        if (!c.is_integer())
            throw BasisError("basis vector has non-integer coordinate " + c.str());
    if (determinant(u, v).is_zero())
        throw BasisError("degenerate basis");
    return TrilinearForm::rank2(new_tag, eval_form(form, u, u, u), eval_form(form, u, u, v),
                                eval_form(form, u, v, v), eval_form(form, v, v, v));
}

DivisorClass express_in(const DivisorClass& d, const DivisorClass& u, const DivisorClass& v,
                        Basis new_tag)
{
    if (d.basis() != u.basis() || d.basis() != v.basis())
        throw BasisError("basis mismatch in express_in");
    Rational det = determinant(u, v);
    if (det.is_zero())
        throw BasisError("degenerate basis");
    // Cramer's rule for d = x u + y v.
    Rational x = (d.first() * v.second() - d.second() * v.first()) / det;
    Rational y = (u.first() * d.second() - u.second() * d.first()) / det;
    return DivisorClass::in(new_tag, x, y);
}

TrilinearForm from_pullback_data(const Rational& p3, const Rational& p2e, const Rational& pe2,
                                 const Rational& e3, long scale, long discrepancy)
{
    auto raw = TrilinearForm::rank2(Basis::PullbackE, p3, p2e, pe2, e3);
    return change_basis(raw, DivisorClass::pullback(scale, -discrepancy), DivisorClass::pullback(0, 1),
                        Basis::KE);
}

}  // namespace fano
