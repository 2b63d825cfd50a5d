// Adaptive Gauss-Kronrod (G7/K15) quadrature. Handles the integrable
// square-root and logarithmic endpoint singularities that appear in the
// spectral densities and log-determinant integrals here.
#pragma once

#include <cmath>
#include <stdexcept>

namespace projsum::quad {

namespace detail {

// K15 nodes on [0,1] of |x|; weights for Kronrod and embedded Gauss-7.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
    resk += kWgk[7] * fv[7];
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += kWg[3] * fv[7];
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

template <class F>
inline double adapt(const F& f, double a, double b, double tol, int depth) {
    double r, e;
    gk15(f, a, b, r, e);
    if (e <= tol || depth <= 0) return r;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, tol / 2.0, depth - 1) + adapt(f, c, b, tol / 2.0, depth - 1);
}

}  // namespace detail

// Adaptive integral of f over [a, b] to absolute tolerance abs_tol.
template <class F>
inline double integrate(const F& f, double a, double b, double abs_tol = 1e-10,
                        int max_depth = 48) {
    if (!(b >= a)) throw std::invalid_argument("quad::integrate: bad interval");
    if (a == b) return 0.0;
    return detail::adapt(f, a, b, abs_tol, max_depth);
}

// Fixed 5-point Gauss-Legendre on [a, b]; used for short smooth segments.
template <class F>
inline double gauss5(const F& f, double a, double b) {
    static constexpr double x[5] = {-0.906179845938663992797626878299393,
                                    -0.538469310105683091036314420700208, 0.0,
                                    0.538469310105683091036314420700208,
                                    0.906179845938663992797626878299393};
    static constexpr double w[5] = {0.236926885056189087514264040719917,
                                    0.478628670499366468041291514835638,
                                    0.568888888888888888888888888888889,
                                    0.478628670499366468041291514835638,
                                    0.236926885056189087514264040719917};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * f(c + h * x[i]);
    return s * h;
}

}  // namespace projsum::quad
