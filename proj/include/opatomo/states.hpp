#ifndef OPATOMO_STATES_HPP
#define OPATOMO_STATES_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opatomo {

/// Quadrature units used throughout: vacuum variance 1/4 per quadrature
/// (so the vacuum Wigner function is (2/pi) exp(-2(x^2+p^2)) and its
/// 1/sqrt(e) contour is the circle of radius 0.5).
namespace convention {
inline constexpr double vacuum_variance = 0.25;
inline constexpr double vacuum_stddev = 0.5;
}  // namespace convention

/// 10*log10(Var/Var_vac); negative means squeezed.
inline double variance_ratio_to_db(double ratio) {
    if (!(ratio > 0.0)) {
        throw std::invalid_argument("variance ratio must be positive");
    }
    return 10.0 * std::log10(ratio);
}

/// Ideal squeezing parameter for a stated dB level: g = dB * ln(10) / 20.
inline double squeeze_parameter_from_db(double db) {
    return db * std::numbers::ln10 / 20.0;
}

inline double ideal_antisqueezing_db(double g) {
    return 20.0 * g / std::numbers::ln10;
}

/// Symmetric 2x2 quadrature covariance matrix.
struct Covariance {
    double xx = convention::vacuum_variance;
    double xp = 0.0;
    double pp = convention::vacuum_variance;

    static Covariance vacuum() { return {}; }

    double det() const { return xx * pp - xp * xp; }

    /// Variance of the quadrature x_theta = x cos(theta) + p sin(theta).
    double quadrature_variance(double theta) const {
        double c = std::cos(theta), s = std::sin(theta);
        return c * c * xx + 2.0 * c * s * xp + s * s * pp;
    }

    /// Covariance of (x_theta, p_theta) in the frame rotated by theta.
    Covariance rotated_frame(double theta) const {
        double c = std::cos(theta), s = std::sin(theta);
        Covariance r;
        r.xx = c * c * xx + 2.0 * c * s * xp + s * s * pp;
        r.pp = s * s * xx - 2.0 * c * s * xp + c * c * pp;
        r.xp = c * s * (pp - xx) + (c * c - s * s) * xp;
        return r;
    }
};

/// Zero-mean single-mode Gaussian state. Pure iff det(cov) = 1/16.
struct GaussianState {
    Covariance cov;

    bool is_pure(double tol = 1e-9) const {
        return std::abs(cov.det() - 1.0 / 16.0) < tol;
    }

    /// Purity of a Gaussian state: 1/(4 sqrt(det cov)) in these units.
    double purity() const { return 0.25 / std::sqrt(cov.det()); }

    /// <N> = <x^2> + <p^2> - 1/2; zero for vacuum.
    double mean_photon_number() const {
        return cov.xx + cov.pp - 0.5;
    }
};

enum class StateKind { vacuum, squeezed_vacuum, fock, squeezed_fock, cat };

enum class CatParity { even, odd };

/// Description of an input quantum state. All supported kinds have
/// inversion-symmetric Wigner functions, W(x,p) = W(-x,-p).
///
/// squeeze_angle is the orientation of the anti-squeezed principal axis;
/// the squeezed axis (variance e^{-2 g_sq}/4) lies at squeeze_angle + pi/2.
/// The default squeeze_angle = 0 puts the squeezing along x_{pi/2}.
struct StateSpec {
    StateKind kind = StateKind::vacuum;
    double g_sq = 0.0;          // squeezing parameter, >= 0
    double squeeze_angle = 0.0; // radians
    int fock_n = 0;             // photon number for fock / squeezed_fock
    double cat_alpha = 0.0;     // real coherent amplitude, > 0
    CatParity cat_parity = CatParity::even;

    static StateSpec vacuum() { return {}; }

    static StateSpec squeezed_vacuum(double g_sq, double angle = 0.0) {
        StateSpec s;
        s.kind = StateKind::squeezed_vacuum;
        s.g_sq = g_sq;
        s.squeeze_angle = angle;
        return s;
    }

    static StateSpec fock(int n) {
        StateSpec s;
        s.kind = StateKind::fock;
        s.fock_n = n;
        return s;
    }

    static StateSpec squeezed_fock(int n, double g_sq, double angle = 0.0) {
        StateSpec s;
        s.kind = StateKind::squeezed_fock;
        s.fock_n = n;
        s.g_sq = g_sq;
        s.squeeze_angle = angle;
        return s;
    }

    static StateSpec cat(double alpha, CatParity parity) {
        StateSpec s;
        s.kind = StateKind::cat;
        s.cat_alpha = alpha;
        s.cat_parity = parity;
        return s;
    }

    bool is_gaussian() const {
        return kind == StateKind::vacuum || kind == StateKind::squeezed_vacuum;
    }

    void validate() const {
        if (g_sq < 0.0) {
            throw std::invalid_argument("squeezing parameter g_sq must be >= 0");
        }
        if (kind == StateKind::fock || kind == StateKind::squeezed_fock) {
            if (fock_n < 0 || fock_n > 12) {
                throw std::invalid_argument("fock photon number must be in [0, 12]");
            }
        }
        if (kind == StateKind::cat) {
            if (!(cat_alpha > 0.0)) {
                throw std::invalid_argument("cat amplitude must be > 0");
            }
        }
    }
};

inline std::string to_string(StateKind k) {
    switch (k) {
        case StateKind::vacuum: return "vacuum";
        case StateKind::squeezed_vacuum: return "squeezed_vacuum";
        case StateKind::fock: return "fock";
        case StateKind::squeezed_fock: return "squeezed_fock";
        case StateKind::cat: return "cat";
    }
    return "unknown";
}

inline StateKind state_kind_from_string(const std::string& s) {
    if (s == "vacuum") return StateKind::vacuum;
    if (s == "squeezed_vacuum") return StateKind::squeezed_vacuum;
    if (s == "fock") return StateKind::fock;
    if (s == "squeezed_fock") return StateKind::squeezed_fock;
    if (s == "cat") return StateKind::cat;
    throw std::invalid_argument("unknown state kind: " + s);
}

/// Gaussian state for vacuum / squeezed vacuum.
/// cov = R(phi) diag(e^{2g}/4, e^{-2g}/4) R(phi)^T with phi = squeeze_angle.
inline GaussianState make_gaussian(const StateSpec& spec) {
    spec.validate();
    if (!spec.is_gaussian()) {
        throw std::invalid_argument("make_gaussian requires vacuum or squeezed_vacuum");
    }
    double g = (spec.kind == StateKind::vacuum) ? 0.0 : spec.g_sq;
    double va = std::exp(2.0 * g) * convention::vacuum_variance;  // anti-squeezed axis
    double vs = std::exp(-2.0 * g) * convention::vacuum_variance; // squeezed axis
    double c = std::cos(spec.squeeze_angle), s = std::sin(spec.squeeze_angle);
    GaussianState out;
    out.cov.xx = c * c * va + s * s * vs;
    out.cov.pp = s * s * va + c * c * vs;
    out.cov.xp = c * s * (va - vs);
    return out;
}

/// Pure loss channel with transmission eta:
/// cov -> eta cov + (1-eta) cov_vac. Contracts every quadrature variance
/// toward the vacuum value.
inline GaussianState apply_pre_amp_loss(const GaussianState& state, double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("loss transmission eta must be in [0,1]");
    }
    GaussianState out;
    out.cov.xx = eta * state.cov.xx + (1.0 - eta) * convention::vacuum_variance;
    out.cov.pp = eta * state.cov.pp + (1.0 - eta) * convention::vacuum_variance;
    out.cov.xp = eta * state.cov.xp;
    return out;
}

}  // namespace opatomo

#endif  // OPATOMO_STATES_HPP
