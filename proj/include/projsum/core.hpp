// Core domain types for Brown measures of non-Hermitian sums of projections:
// two-atom laws, support geometry (hyperbola + rectangle), atom weights, and
// eigenvalue clouds. All types are immutable value types once constructed.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace projsum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// A real two-atom probability law: mass weight_low at pos_low, the rest at
// pos_high. Canonical form has pos_low < pos_high; degenerate laws (weight 0
// or 1) are representable but rejected by the Brown assembly path.
struct TwoAtomLaw {
    double pos_low = 0.0;
    double pos_high = 0.0;
    double weight_low = 0.0;

    double weight_high() const { return 1.0 - weight_low; }
    double mean() const { return weight_low * pos_low + weight_high() * pos_high; }
    double gap() const { return pos_high - pos_low; }
    bool degenerate() const {
        return weight_low <= 0.0 || weight_low >= 1.0 || pos_low == pos_high;
    }
};

// Builds a canonicalized TwoAtomLaw. Positions given in reversed order are
// swapped (weight flipped to keep the same measure). Idempotent on its own
// output.
inline TwoAtomLaw make_two_atom(double pos_low, double pos_high, double weight_low) {
    if (!std::isfinite(pos_low) || !std::isfinite(pos_high) || !std::isfinite(weight_low))
        throw std::invalid_argument("make_two_atom: inputs must be finite");
    if (weight_low < 0.0 || weight_low > 1.0)
        throw std::invalid_argument("make_two_atom: weight_low must lie in [0,1]");
    if (pos_low == pos_high && weight_low > 0.0 && weight_low < 1.0)
        throw std::invalid_argument("make_two_atom: equal atom positions need weight 0 or 1");
    TwoAtomLaw law{pos_low, pos_high, weight_low};
    if (law.pos_low > law.pos_high) {
        std::swap(law.pos_low, law.pos_high);
        law.weight_low = 1.0 - law.weight_low;
    }
    if (law.pos_low == law.pos_high) law.weight_low = 1.0;  // plain point mass
    return law;
}

struct ModelParams {
    TwoAtomLaw law_p;
    TwoAtomLaw law_q;

    bool degenerate() const { return law_p.degenerate() || law_q.degenerate(); }
};

inline void require_nondegenerate(const ModelParams& params, const char* where) {
    if (params.degenerate())
        throw std::invalid_argument(std::string(where) +
            ": degenerate law; X is normal and its Brown measure equals the spectral measure");
}

enum class Orientation { WideOrSquare, Tall };

inline std::string to_string(Orientation o) {
    return o == Orientation::WideOrSquare ? "wide_or_square" : "tall";
}

inline Orientation orientation_from_string(const std::string& s) {
    if (s == "wide_or_square") return Orientation::WideOrSquare;
    if (s == "tall") return Orientation::Tall;
    throw std::invalid_argument("unknown orientation: " + s);
}

// Hyperbola/rectangle data for X = p + iq. The hyperbola is
//   (x - alpha)(x - alpha') = (y - beta)(y - beta'),
// the rectangle is [alpha, alpha'] x [beta, beta'] (canonical labeling).
struct SupportGeometry {
    Complex center;      // (alpha+alpha')/2 + i (beta+beta')/2
    double gap_a = 0.0;  // alpha' - alpha
    double gap_b = 0.0;  // beta' - beta
    Orientation orientation = Orientation::WideOrSquare;

    double alpha_low() const { return center.real() - gap_a / 2.0; }
    double alpha_high() const { return center.real() + gap_a / 2.0; }
    double beta_low() const { return center.imag() - gap_b / 2.0; }
    double beta_high() const { return center.imag() + gap_b / 2.0; }

    // Rectangle corners in the weight ordering (w00, w01, w10, w11).
    std::array<Complex, 4> corners() const {
        return {Complex(alpha_low(), beta_low()), Complex(alpha_low(), beta_high()),
                Complex(alpha_high(), beta_low()), Complex(alpha_high(), beta_high())};
    }

    // Signed residual of the hyperbola equation; zero on H.
    double hyperbola_residual(Complex z) const {
        const double x = z.real(), y = z.imag();
        return (x - alpha_low()) * (x - alpha_high()) - (y - beta_low()) * (y - beta_high());
    }

    bool in_rectangle(Complex z, double slack = 0.0) const {
        const double x = z.real(), y = z.imag();
        return x >= alpha_low() - slack && x <= alpha_high() + slack &&
               y >= beta_low() - slack && y <= beta_high() + slack;
    }
};

inline SupportGeometry geometry(const ModelParams& params) {
    require_nondegenerate(params, "geometry");
    SupportGeometry g;
    g.center = Complex((params.law_p.pos_low + params.law_p.pos_high) / 2.0,
                       (params.law_q.pos_low + params.law_q.pos_high) / 2.0);
    g.gap_a = params.law_p.gap();
    g.gap_b = params.law_q.gap();
    g.orientation = std::abs(g.gap_a) >= std::abs(g.gap_b) ? Orientation::WideOrSquare
                                                           : Orientation::Tall;
    return g;
}

// The five masses of the Brown measure decomposition: four corner atoms plus
// the weight of the continuous part. Sums to 1; at most one of each opposing
// pair (w00,w11), (w01,w10) is nonzero.
struct AtomWeights {
    double w00 = 0.0;
    double w01 = 0.0;
    double w10 = 0.0;
    double w11 = 0.0;
    double w_cont = 0.0;

    double atom_total() const { return w00 + w01 + w10 + w11; }
    std::array<double, 4> as_array() const { return {w00, w01, w10, w11}; }
};

// Eigenvalues of one simulated X_n = P_n + i Q_n together with the model
// metadata needed to reproduce it. count_low_* record the rounded atom
// multiplicities actually used on the diagonal.
struct EsdCloud {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    ModelParams params;
    std::vector<Complex> eigenvalues;
    std::size_t trial = 0;
    std::size_t count_low_p = 0;
    std::size_t count_low_q = 0;
};

}  // namespace projsum
