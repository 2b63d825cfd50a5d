// Free-probability transform kernel for pairs of free projections with traces
// a, b: Stieltjes/psi/chi/S transforms, the closed forms for pqp, the analytic
// branch of sqrt(f), and atom extraction through non-tangential limits.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "projsum/core.hpp"

namespace projsum::transforms {

// f(z) = 1 + (4ab - 2(a+b)) z + (a-b)^2 z^2. Its roots are real, lie in
// [1, inf), and are distinct when a != b; when a = b the polynomial is linear
// with the single root 1/(4a(1-a)). root_hi is +inf in the linear case.
struct FPoly {
    double a = 0.5;
    double b = 0.5;
    double c0 = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double root_lo = 1.0;
    double root_hi = std::numeric_limits<double>::infinity();

    static FPoly from_traces(double a, double b) {
        if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
            throw std::invalid_argument("FPoly: traces must lie in (0,1)");
        FPoly f;
        f.a = a;
        f.b = b;
        f.c1 = 4.0 * a * b - 2.0 * (a + b);  // always negative on (0,1)^2
        f.c2 = (a - b) * (a - b);
        if (f.c2 == 0.0) {
            f.root_lo = -f.c0 / f.c1;  // 1/(4a(1-a))
            f.root_hi = std::numeric_limits<double>::infinity();
        } else {
            const double disc = f.c1 * f.c1 - 4.0 * f.c2;  // 16ab(1-a)(1-b) > 0
            const double q = 0.5 * (std::sqrt(disc) - f.c1);
            const double r1 = q / f.c2;
            const double r2 = f.c0 / q;
            f.root_lo = std::min(r1, r2);
            f.root_hi = std::max(r1, r2);
        }
        return f;
    }

    double eval(double x) const { return c0 + x * (c1 + x * c2); }
    Complex eval(Complex z) const { return c0 + z * (c1 + z * c2); }
};

// Analytic branch of sqrt(f) on C \ [root_lo, root_hi] with sqrt_f(0) = +1.
// Realized as -|a-b| sqrt(z-r1) sqrt(z-r2) with principal square roots; the
// two cuts on (-inf, r1) cancel, leaving the cut on [r1, r2] only. On the cut
// the boundary value from Im z < 0 lands on the positive imaginary axis,
// which is the branch the density formulas use.
inline Complex sqrt_f(const FPoly& f, Complex z) {
    if (f.c2 == 0.0) return std::sqrt(1.0 + f.c1 * z);
    return -std::abs(f.a - f.b) * std::sqrt(z - f.root_lo) * std::sqrt(z - f.root_hi);
}

// G of a two-atom law: a/(z-alpha) + (1-a)/(z-alpha'); upper half-plane maps
// to the lower half-plane.
inline Complex stieltjes_two_atom(const TwoAtomLaw& law, Complex z) {
    if (z == Complex(law.pos_low, 0.0) || z == Complex(law.pos_high, 0.0))
        throw std::domain_error("stieltjes_two_atom: z is an atom of the law");
    return law.weight_low / (z - law.pos_low) + law.weight_high() / (z - law.pos_high);
}

// psi of a projection with trace a: a z / (1 - z).
inline Complex psi_projection(double trace, Complex z) {
    if (!(trace > 0.0 && trace < 1.0))
        throw std::invalid_argument("psi_projection: trace must lie in (0,1)");
    if (z == Complex(1.0, 0.0)) throw std::domain_error("psi_projection: pole at z = 1");
    return trace * z / (1.0 - z);
}

// chi of a projection with trace a: w / (w + a); inverse of psi_projection.
inline Complex chi_projection(double trace, Complex w) {
    if (!(trace > 0.0 && trace < 1.0))
        throw std::invalid_argument("chi_projection: trace must lie in (0,1)");
    if (w == Complex(-trace, 0.0)) throw std::domain_error("chi_projection: pole at w = -a");
    return w / (w + trace);
}

// chi of pqp for free projections: w(1+w) / ((w+a)(w+b)). Equals the product
// rule chi_p * chi_q * (w+1)/w of the multiplicative S-transform.
inline Complex chi_pqp(double a, double b, Complex w) {
    if (w == Complex(-a, 0.0) || w == Complex(-b, 0.0))
        throw std::domain_error("chi_pqp: pole at w in {-a, -b}");
    return w * (1.0 + w) / ((w + a) * (w + b));
}

// S-transform of a projection law: chi(w) (w+1)/w.
inline Complex s_projection(double trace, Complex w) {
    if (w == Complex(0.0, 0.0)) throw std::domain_error("s_projection: w = 0");
    return chi_projection(trace, w) * (w + 1.0) / w;
}

inline Complex s_pqp(double a, double b, Complex w) {
    if (w == Complex(0.0, 0.0)) throw std::domain_error("s_pqp: w = 0");
    return chi_pqp(a, b, w) * (w + 1.0) / w;
}

// psi of pqp: (1 - (a+b) z - sqrt(f(z))) / (2(z-1)), analytic on C \ [1, inf).
inline Complex psi_pqp(const FPoly& f, Complex z) {
    if (z == Complex(0.0, 0.0)) return 0.0;
    return (1.0 - (f.a + f.b) * z - sqrt_f(f, z)) / (2.0 * (z - 1.0));
}

inline Complex psi_pqp(double a, double b, Complex z) {
    return psi_pqp(FPoly::from_traces(a, b), z);
}

// psi of (1-p)(1-q)(1-p): same sqrt_f branch (f is invariant under
// (a,b) -> (1-a,1-b)), shifted linear coefficient.
inline Complex psi_complement(const FPoly& f, Complex z) {
    if (z == Complex(0.0, 0.0)) return 0.0;
    return (1.0 - (2.0 - f.a - f.b) * z - sqrt_f(f, z)) / (2.0 * (z - 1.0));
}

inline Complex psi_complement(double a, double b, Complex z) {
    return psi_complement(FPoly::from_traces(a, b), z);
}

// Stieltjes transform of pqp on C \ [0,1]:
//   G(z) = (z + (a+b-2) + z sqrt(f(1/z))) / (2 z (z-1)),
// consistent with G(z) = (psi(1/z) + 1)/z.
inline Complex g_pqp(const FPoly& f, Complex z) {
    if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
        throw std::domain_error("g_pqp: pole at z in {0, 1}");
    return (z + (f.a + f.b - 2.0) + z * sqrt_f(f, 1.0 / z)) / (2.0 * z * (z - 1.0));
}

inline Complex g_pqp(double a, double b, Complex z) {
    return g_pqp(FPoly::from_traces(a, b), z);
}

// Stieltjes transform of nu* (the spectral measure of exe in eMe), valid on
// C \ [0,1]. Derived from psi_{exe} = (psi_pqp + psi_complement - masses)/eps:
//   G(z) = (1/eps) sqrt(f(1/z))/(z-1) + (1 - 1/eps)/z - (m11 + m00)/(eps z (z-1)),
// with m11 = tau(p^q) = max(0, a+b-1) and m00 = tau((1-p)^(1-q)) = max(0, 1-a-b).
inline Complex g_nu_star(double a, double b, double eps, Complex z) {
    if (!(eps > 0.0)) throw std::invalid_argument("g_nu_star: eps must be positive");
    const FPoly f = FPoly::from_traces(a, b);
    const double m11 = std::max(0.0, a + b - 1.0);
    const double m00 = std::max(0.0, 1.0 - a - b);
    return sqrt_f(f, 1.0 / z) / (eps * (z - 1.0)) + (1.0 - 1.0 / eps) / z -
           (m11 + m00) / (eps * z * (z - 1.0));
}

struct AtomMassResult {
    double mass = 0.0;
    double error_estimate = 0.0;
};

// Atom mass mu({s}) of the measure behind a Stieltjes transform g, via the
// non-tangential limit (z - s) g(z) along the vertical approach z_k = s + i 2^-k,
// k = 10..40, with Richardson (Neville) extrapolation in the height. Throws if
// the extrapolants fail to settle to 1e-8.
inline AtomMassResult atom_mass_at(const std::function<Complex(Complex)>& g, double s,
                                   double tol = 1e-8) {
    constexpr int kFirst = 10, kLast = 40, kMaxCols = 6;
    std::vector<double> row;   // current Neville row (deepest extrapolants)
    std::vector<double> prev;  // previous row
    double best = 0.0, best_err = std::numeric_limits<double>::infinity();
    int settled = 0;
    for (int k = kFirst; k <= kLast; ++k) {
        const double y = std::ldexp(1.0, -k);
        const Complex v = (Complex(s, y) - s) * g(Complex(s, y));
        prev = row;
        row.assign(1, v.real());
        const int cols = std::min<int>(static_cast<int>(prev.size()), kMaxCols - 1);
        for (int j = 0; j < cols; ++j) {
            // heights halve each step: y_{i-j-1}/y_i = 2^{j+1}
            const double denom = std::ldexp(1.0, j + 1) - 1.0;
            row.push_back(row[j] + (row[j] - prev[j]) / denom);
        }
        if (!prev.empty()) {
            const double cur = row.back();
            const double ref = prev.back();
            const double diff = std::abs(cur - ref);
            if (diff < best_err) {
                best = cur;
                best_err = diff;
            }
            settled = diff <= tol ? settled + 1 : 0;
            if (settled >= 2) {
                return {std::clamp(cur, 0.0, 1.0), diff};
            }
        }
    }
    if (best_err <= 10.0 * tol) return {std::clamp(best, 0.0, 1.0), best_err};
    throw std::runtime_error("atom_mass_at: vertical-limit extrapolation did not converge");
}

// Taylor coefficients c_0..c_kmax of an analytic function at 0 by the
// multipoint complex-step rule: DFT of samples on a circle of radius r inside
// the domain of analyticity. For the psi transforms here (analytic on
// C \ [1, inf), moments bounded by 1) the aliasing error at r = 1/2, m = 256
// is below 1e-12.
template <class F>
inline std::vector<double> taylor_coefficients(const F& fn, int kmax, double radius = 0.5,
                                               int m = 256) {
    std::vector<Complex> vals(m);
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * kPi * j / m;
        vals[j] = fn(radius * Complex(std::cos(t), std::sin(t)));
    }
    std::vector<double> out(kmax + 1);
    double rk = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        Complex acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double t = -2.0 * kPi * j * k / m;
            acc += vals[j] * Complex(std::cos(t), std::sin(t));
        }
        out[k] = acc.real() / (m * rk);
        rk *= radius;
    }
    return out;
}

}  // namespace projsum::transforms
