#ifndef OPATOMO_WIGNER_HPP
#define OPATOMO_WIGNER_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "opatomo/states.hpp"

namespace opatomo {

/// Rectangular (x,p) extent, node-centered grid including both endpoints.
struct GridExtent {
    double x_min = -4.0, x_max = 4.0;
    double p_min = -4.0, p_max = 4.0;

    static GridExtent square(double half_width) {
        return {-half_width, half_width, -half_width, half_width};
    }
};

/// Sampled Wigner function on a uniform grid. values[ix * np + ip],
/// x_i = x_min + ix*dx, p_j = p_min + jp*dp. May hold negative values.
struct WignerGrid {
    int nx = 0;
    int np = 0;
    GridExtent extent;
    std::vector<double> values;

    double dx() const { return (extent.x_max - extent.x_min) / (nx - 1); }
    double dp() const { return (extent.p_max - extent.p_min) / (np - 1); }
    double x_at(int i) const { return extent.x_min + i * dx(); }
    double p_at(int j) const { return extent.p_min + j * dp(); }
    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * np + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * np + j]; }

    /// Trapezoidal integral over the full extent.
    double integral() const {
        double sum = 0.0;
        for (int i = 0; i < nx; ++i) {
            double wx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
            for (int j = 0; j < np; ++j) {
                double wp = (j == 0 || j == np - 1) ? 0.5 : 1.0;
                sum += wx * wp * at(i, j);
            }
        }
        return sum * dx() * dp();
    }

    void scale(double factor) {
        for (double& v : values) v *= factor;
    }

    /// Bilinear interpolation; zero outside the extent.
    double sample(double x, double p) const {
        double fx = (x - extent.x_min) / dx();
        double fp = (p - extent.p_min) / dp();
        if (fx < 0.0 || fp < 0.0 || fx > nx - 1 || fp > np - 1) return 0.0;
        int i0 = static_cast<int>(fx);
        int j0 = static_cast<int>(fp);
        if (i0 >= nx - 1) i0 = nx - 2;
        if (j0 >= np - 1) j0 = np - 2;
        double tx = fx - i0, tp = fp - j0;
        double v00 = at(i0, j0), v10 = at(i0 + 1, j0);
        double v01 = at(i0, j0 + 1), v11 = at(i0 + 1, j0 + 1);
        return (1 - tx) * (1 - tp) * v00 + tx * (1 - tp) * v10 +
               (1 - tx) * tp * v01 + tx * tp * v11;
    }
};

namespace detail {

/// Laguerre polynomial L_n(z) by recurrence.
inline double laguerre(int n, double z) {
    if (n == 0) return 1.0;
    double lm1 = 1.0, l = 1.0 - z;
    for (int k = 1; k < n; ++k) {
        double next = ((2 * k + 1 - z) * l - k * lm1) / (k + 1);
        lm1 = l;
        l = next;
    }
    return l;
}

/// Physicists' Hermite polynomial H_n(u) by recurrence.
inline double hermite(int n, double u) {
    if (n == 0) return 1.0;
    double hm1 = 1.0, h = 2.0 * u;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * u * h - 2.0 * k * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

}  // namespace detail

/// W_n(x,p) = (2/pi) (-1)^n L_n(4 r^2) exp(-2 r^2) with r^2 = x^2 + p^2.
inline double wigner_fock(int n, double x, double p) {
    double r2 = x * x + p * p;
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return (2.0 / std::numbers::pi) * sign * detail::laguerre(n, 4.0 * r2) *
           std::exp(-2.0 * r2);
}

/// Gaussian-state Wigner function = bivariate normal pdf with the state's
/// covariance (exact in these units).
inline double wigner_gaussian(const GaussianState& g, double x, double p) {
    double det = g.cov.det();
    double inv_xx = g.cov.pp / det, inv_pp = g.cov.xx / det, inv_xp = -g.cov.xp / det;
    double q = inv_xx * x * x + 2.0 * inv_xp * x * p + inv_pp * p * p;
    return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
}

/// Even/odd cat of real amplitude alpha (zero-mean superposition of
/// |alpha> and |-alpha>); normalized closed form in these units.
inline double wigner_cat(double alpha, CatParity parity, double x, double p) {
    double sgn = (parity == CatParity::even) ? 1.0 : -1.0;
    double blob_m = std::exp(-2.0 * ((x - alpha) * (x - alpha) + p * p));
    double blob_p = std::exp(-2.0 * ((x + alpha) * (x + alpha) + p * p));
    double fringe = 2.0 * std::exp(-2.0 * (x * x + p * p)) * std::cos(4.0 * alpha * p);
    double norm = std::numbers::pi * (1.0 + sgn * std::exp(-2.0 * alpha * alpha));
    return (blob_m + blob_p + sgn * fringe) / norm;
}

/// Pointwise Wigner function of a StateSpec. Squeezed kinds apply the
/// inverse symplectic coordinate map S^{-1} = R diag(e^{-g}, e^{g}) R^T
/// (unit Jacobian, so no prefactor).
inline double wigner_value(const StateSpec& spec, double x, double p) {
    double xi = x, pi_ = p;
    if (spec.kind == StateKind::squeezed_vacuum || spec.kind == StateKind::squeezed_fock) {
        double c = std::cos(spec.squeeze_angle), s = std::sin(spec.squeeze_angle);
        double u = c * x + s * p;   // coordinate along the anti-squeezed axis
        double v = -s * x + c * p;
        u *= std::exp(-spec.g_sq);
        v *= std::exp(spec.g_sq);
        xi = c * u - s * v;
        pi_ = s * u + c * v;
    }
    switch (spec.kind) {
        case StateKind::vacuum:
        case StateKind::squeezed_vacuum:
            return (2.0 / std::numbers::pi) * std::exp(-2.0 * (xi * xi + pi_ * pi_));
        case StateKind::fock:
        case StateKind::squeezed_fock:
            return wigner_fock(spec.fock_n, xi, pi_);
        case StateKind::cat:
            return wigner_cat(spec.cat_alpha, spec.cat_parity, x, p);
    }
    return 0.0;
}

/// Largest marginal standard deviation over all angles; used for extent checks.
inline double max_marginal_stddev(const StateSpec& spec) {
    double base;
    switch (spec.kind) {
        case StateKind::vacuum:
            base = convention::vacuum_stddev;
            break;
        case StateKind::squeezed_vacuum:
            base = convention::vacuum_stddev;
            break;
        case StateKind::fock:
        case StateKind::squeezed_fock:
            base = std::sqrt((2.0 * spec.fock_n + 1.0) / 4.0);
            break;
        case StateKind::cat: {
            // <x^2> = 1/4 + alpha^2 (1 -+ tanh-like correction); bound it simply.
            double a2 = spec.cat_alpha * spec.cat_alpha;
            base = std::sqrt(0.25 + a2 * (1.0 + 2.0 / (std::exp(2.0 * a2) + 1.0)));
            break;
        }
        default:
            base = convention::vacuum_stddev;
    }
    if (spec.kind == StateKind::squeezed_vacuum || spec.kind == StateKind::squeezed_fock) {
        return base * std::exp(spec.g_sq);
    }
    return base;
}

/// Sample the Wigner function of a state onto a grid. Throws if more than
/// mass_tol probability mass falls outside the extent (integral check).
inline WignerGrid build_wigner_grid(const StateSpec& spec, int nx, int np,
                                    const GridExtent& extent, double mass_tol = 1e-3) {
    spec.validate();
    if (nx < 2 || np < 2) {
        throw std::invalid_argument("wigner grid needs nx, np >= 2");
    }
    WignerGrid g;
    g.nx = nx;
    g.np = np;
    g.extent = extent;
    g.values.resize(static_cast<std::size_t>(nx) * np);
    for (int i = 0; i < nx; ++i) {
        double x = g.x_at(i);
        for (int j = 0; j < np; ++j) {
            g.at(i, j) = wigner_value(spec, x, g.p_at(j));
        }
    }
    double mass = g.integral();
    if (std::abs(mass - 1.0) > mass_tol) {
        throw std::runtime_error(
            "wigner grid extent too small: captured mass " + std::to_string(mass));
    }
    g.scale(1.0 / mass);
    return g;
}

inline WignerGrid build_wigner_grid(const StateSpec& spec, int nx = 201, int np = 201) {
    double hw = std::max(4.0, 4.2 * max_marginal_stddev(spec));
    return build_wigner_grid(spec, nx, np, GridExtent::square(hw));
}

/// Loss channel on a gridded Wigner function: coordinate scaling by
/// 1/sqrt(eta) followed by a Gaussian blur of per-axis variance (1-eta)/4.
inline WignerGrid apply_pre_amp_loss(const WignerGrid& in, double eta) {
    if (eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("loss transmission eta must be in [0,1]");
    }
    if (eta == 1.0) return in;
    WignerGrid out = in;
    if (eta == 0.0) {
        for (int i = 0; i < out.nx; ++i) {
            double x = out.x_at(i);
            for (int j = 0; j < out.np; ++j) {
                double p = out.p_at(j);
                out.at(i, j) = (2.0 / std::numbers::pi) * std::exp(-2.0 * (x * x + p * p));
            }
        }
        return out;
    }
    double root_eta = std::sqrt(eta);
    WignerGrid scaled = in;
    for (int i = 0; i < scaled.nx; ++i) {
        double x = scaled.x_at(i) / root_eta;
        for (int j = 0; j < scaled.np; ++j) {
            scaled.at(i, j) = in.sample(x, scaled.p_at(j) / root_eta) / eta;
        }
    }
    double sigma = std::sqrt((1.0 - eta) * convention::vacuum_variance);
    auto blur_axis = [&](const WignerGrid& src, bool along_x) {
        WignerGrid dst = src;
        double step = along_x ? src.dx() : src.dp();
        int half = std::max(1, static_cast<int>(std::ceil(6.0 * sigma / step)));
        std::vector<double> kernel(2 * half + 1);
        double ksum = 0.0;
        for (int k = -half; k <= half; ++k) {
            double t = k * step;
            kernel[k + half] = std::exp(-t * t / (2.0 * sigma * sigma));
            ksum += kernel[k + half];
        }
        for (double& k : kernel) k /= ksum;
        for (int i = 0; i < src.nx; ++i) {
            for (int j = 0; j < src.np; ++j) {
                double acc = 0.0;
                for (int k = -half; k <= half; ++k) {
                    int ii = along_x ? i + k : i;
                    int jj = along_x ? j : j + k;
                    if (ii < 0 || ii >= src.nx || jj < 0 || jj >= src.np) continue;
                    acc += kernel[k + half] * src.at(ii, jj);
                }
                dst.at(i, j) = acc;
            }
        }
        return dst;
    };
    out = blur_axis(blur_axis(scaled, true), false);
    double mass = out.integral();
    if (mass > 0.0) out.scale(1.0 / mass);
    return out;
}

/// max |W(x,p) - W(-x,-p)| over the grid (exact zero for symmetric grids
/// of symmetric states).
inline double inversion_asymmetry(const WignerGrid& g) {
    double worst = 0.0;
    for (int i = 0; i < g.nx; ++i) {
        int ir = g.nx - 1 - i;
        for (int j = 0; j < g.np; ++j) {
            double d = std::abs(g.at(i, j) - g.at(ir, g.np - 1 - j));
            if (d > worst) worst = d;
        }
    }
    return worst;
}

}  // namespace opatomo

#endif  // OPATOMO_WIGNER_HPP
