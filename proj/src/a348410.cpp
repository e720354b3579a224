#include "gftk/a348410.hpp"

namespace gftk {

namespace {

using IPoly = std::vector<Integer>;

IPoly imul(const IPoly& a, const IPoly& b) {
    IPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IPoly iscale(IPoly p, long f) {
    for (auto& c : p) c *= f;
    return p;
}

} // namespace

const RationalBivariate& a348410_f() {
    static const RationalBivariate f = [] {
        XYPoly one = XYPoly::constant(Rational(1));
        XYPoly x = XYPoly::variable('x');
        XYPoly y = XYPoly::variable('y');
        return RationalBivariate((one + x) * (one - x) * (one - x), one - x - x * x + x * x * x - y);
    }();
    return f;
}

const AlgebraicEquation& a348410_quartic() {
    static const AlgebraicEquation eq = [] {
        AlgebraicEquation e;
        e.deg_g = 4;
        e.deg_z = 2;
        e.grid = {{0, 0, 1},          // z²
                  {0, -4, -16},       // −4z(4z+1)·g
                  {0, 36, 96},        // 12z(8z+3)·g²
                  {32, -107, -256},   // (32−107z−256z²)·g³
                  {-32, 107, 256}};   // (−32+107z+256z²)·g⁴
        return e;
    }();
    return eq;
}

const Recurrence& a348410_recurrence() {
    static const Recurrence rec = [] {
        Recurrence r;
        r.order = 4;
        r.deg = 3;
        r.polys = {iscale(imul(imul({1, 4}, {1, 2}), {3, 4}), 2680),
                   {2909610, 5084335, 2915850, 552965},
                   {-2005464, -927852, 180504, 90732},
                   iscale(imul({3, 1}, {12080, 8778, 1759}), -64),
                   iscale(imul(imul({4, 1}, {3, 1}), {7, 2}), 7168)};
        return r;
    }();
    return rec;
}

} // namespace gftk
