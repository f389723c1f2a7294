#pragma once

// Contour integrals against dz~ = dy - i dx over smooth closed curves and
// area integrals over star-shaped domains, including the weakly singular
// kernel ((z - zeta)~)^-1.
//
// Closed contours use the periodic trapezoid rule. Areas use a tensor polar
// grid: trapezoid in the angle, Gauss-Legendre in the radius. The singular
// integral is taken in polar coordinates centred at the pole, where the
// Jacobian r cancels the 1/r behaviour of the kernel exactly.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "elcx/algebra.hpp"
#include "elcx/errors.hpp"

namespace elcx {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct QuadratureSpec {
    int n_theta = 512;
    int n_r = 64;

    void validate() const {
        if (n_theta < 8) throw std::invalid_argument("n_theta must be >= 8");
        if (n_r < 4) throw std::invalid_argument("n_r must be >= 4");
    }
};

// ---------------------------------------------------------------------------
// 1D rules

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) : nodes(static_cast<std::size_t>(n)), weights(static_cast<std::size_t>(n)) {
        // Legendre P_n(x) and P_n'(x) by the three-term recurrence.
        auto legendre = [n](double x) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
        };
        const int half = (n + 1) / 2;
        for (int i = 0; i < half; ++i) {
            // Tricomi initial guess, then Newton.
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            for (int iter = 0; iter < 100; ++iter) {
                const auto [pn, dpn] = legendre(x);
                const double dx = pn / dpn;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            const double dpn = legendre(x).second;
            const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
            const auto lo = static_cast<std::size_t>(i);
            const auto hi = static_cast<std::size_t>(n - 1 - i);
            nodes[lo] = -x;
            nodes[hi] = x;
            weights[lo] = w;
            weights[hi] = w;
        }
        if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
};

/// Periodic trapezoid rule for a 2*pi-periodic integrand on [0, 2*pi).
/// Exact for trigonometric polynomials of degree < n.
template <class F>
auto periodic_trapezoid(F&& f, int n) {
    const double h = two_pi / n;
    auto acc = f(0.0);
    for (int k = 1; k < n; ++k) acc += f(h * k);
    return acc * h;
}

// ---------------------------------------------------------------------------
// Radial functions

/// rho(t) = a0 + sum_k (a_k cos(k t) + b_k sin(k t)), k = 1, 2, ...
struct FourierRadius {
    double a0 = 1.0;
    std::vector<double> a;
    std::vector<double> b;

    double operator()(double t) const {
        double r = a0;
        for (std::size_t k = 0; k < a.size(); ++k) r += a[k] * std::cos((k + 1.0) * t);
        for (std::size_t k = 0; k < b.size(); ++k) r += b[k] * std::sin((k + 1.0) * t);
        return r;
    }
    double derivative(double t) const {
        double r = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) r -= (k + 1.0) * a[k] * std::sin((k + 1.0) * t);
        for (std::size_t k = 0; k < b.size(); ++k) r += (k + 1.0) * b[k] * std::cos((k + 1.0) * t);
        return r;
    }
    double amplitude() const {
        double s = 0.0;
        for (double c : a) s += std::abs(c);
        for (double c : b) s += std::abs(c);
        return s;
    }
    double lower_bound() const { return a0 - amplitude(); }
    double upper_bound() const { return a0 + amplitude(); }
    /// 1/2 int rho^2 dt.
    double enclosed_area() const {
        double s = a0 * a0;
        for (double c : a) s += 0.5 * c * c;
        for (double c : b) s += 0.5 * c * c;
        return std::numbers::pi * s;
    }
};

// ---------------------------------------------------------------------------
// Curves

struct Circle {
    ElComplex center;
    double radius = 1.0;
};

/// {z : ||(z - center)~||_(alpha,beta) = eps}, traced as
/// (z - center)~ = eps (cos t + i_hat sin t).
struct AlgEllipse {
    ElComplex center;
    double eps = 1.0;
    AlgebraParams params = AlgebraParams::classical();
};

/// center + rho(t) (cos t, sin t).
struct RadialCurve {
    ElComplex center;
    FourierRadius rho;
};

/// Smooth closed counterclockwise curve parametrized over [0, 2*pi).
class Curve {
public:
    using Kind = std::variant<Circle, AlgEllipse, RadialCurve>;

    Curve(Kind k) : kind_(std::move(k)) {}

    const Kind& kind() const { return kind_; }

    ElComplex center() const {
        return std::visit([](const auto& c) { return c.center; }, kind_);
    }

    ElComplex point(double t) const {
        const double c = std::cos(t), s = std::sin(t);
        if (const auto* ci = std::get_if<Circle>(&kind_)) {
            return ci->center + ci->radius * ElComplex{c, s};
        }
        if (const auto* e = std::get_if<AlgEllipse>(&kind_)) {
            const ElComplex ih = e->params.i_hat();
            return e->center + untilde(e->eps * ElComplex{c + ih.re * s, ih.im * s});
        }
        const auto& r = std::get<RadialCurve>(kind_);
        return r.center + r.rho(t) * ElComplex{c, s};
    }

    ElComplex velocity(double t) const {
        const double c = std::cos(t), s = std::sin(t);
        if (const auto* ci = std::get_if<Circle>(&kind_)) {
            return ci->radius * ElComplex{-s, c};
        }
        if (const auto* e = std::get_if<AlgEllipse>(&kind_)) {
            const ElComplex ih = e->params.i_hat();
            return untilde(e->eps * ElComplex{-s + ih.re * c, ih.im * c});
        }
        const auto& r = std::get<RadialCurve>(kind_);
        return r.rho.derivative(t) * ElComplex{c, s} + r.rho(t) * ElComplex{-s, c};
    }

    /// Strict interior test.
    bool contains(ElComplex z) const {
        if (const auto* ci = std::get_if<Circle>(&kind_)) {
            return euclid_norm(z - ci->center) < ci->radius;
        }
        if (const auto* e = std::get_if<AlgEllipse>(&kind_)) {
            return norm(tilde(z - e->center), e->params) < e->eps;
        }
        const auto& r = std::get<RadialCurve>(kind_);
        const ElComplex d = z - r.center;
        return euclid_norm(d) < r.rho(std::atan2(d.im, d.re));
    }

private:
    Kind kind_;
};

inline Curve alg_ellipse_curve(ElComplex center, double eps, const AlgebraParams& p) {
    if (!(eps > 0.0)) throw std::invalid_argument("ellipse size must be positive");
    return Curve{AlgEllipse{center, eps, p}};
}

/// Periodic trapezoid approximation of  oint f(z) dz~, where
/// dz~ = (velocity(t))~ dt = (y'(t) - i x'(t)) dt.
template <class F>
ElComplex contour_integral(F&& f, const Curve& c, const QuadratureSpec& spec,
                           const AlgebraParams& p) {
    spec.validate();
    return periodic_trapezoid(
        [&](double t) { return mul(f(c.point(t)), tilde(c.velocity(t)), p); }, spec.n_theta);
}

// ---------------------------------------------------------------------------
// Star-shaped domains

struct Disk {
    ElComplex center;
    double radius = 1.0;
};

/// {z : ||(z - center)~||_(alpha,beta) < radius}.
struct AlgEllipseDisk {
    ElComplex center;
    double radius = 1.0;
    AlgebraParams params = AlgebraParams::classical();
};

/// {center + r (cos t, sin t) : 0 <= r < rho(t)}.
struct RadialStar {
    ElComplex center;
    FourierRadius rho;
};

class StarDomain {
public:
    using Kind = std::variant<Disk, AlgEllipseDisk, RadialStar>;

    StarDomain(Kind k) : kind_(std::move(k)) {
        std::visit(
            [](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RadialStar>) {
                    if (!(d.rho.lower_bound() > 0.0)) {
                        throw std::invalid_argument(
                            "radial function must satisfy a0 > sum of |coefficients|");
                    }
                } else {
                    if (!(d.radius > 0.0)) throw std::invalid_argument("radius must be positive");
                }
            },
            kind_);
    }

    const Kind& kind() const { return kind_; }

    ElComplex center() const {
        return std::visit([](const auto& d) { return d.center; }, kind_);
    }

    /// Closed-form measure of the domain.
    double area() const {
        if (const auto* d = std::get_if<Disk>(&kind_)) return std::numbers::pi * d->radius * d->radius;
        if (const auto* e = std::get_if<AlgEllipseDisk>(&kind_)) {
            // ||w~||^2 = alpha x^2 + beta x y + y^2 has determinant disc / 4.
            return std::numbers::pi * e->radius * e->radius * 2.0 /
                   std::sqrt(e->params.discriminant());
        }
        return std::get<RadialStar>(kind_).rho.enclosed_area();
    }

    bool contains(ElComplex z) const { return boundary().contains(z); }

    Curve boundary() const {
        if (const auto* d = std::get_if<Disk>(&kind_)) return Curve{Circle{d->center, d->radius}};
        if (const auto* e = std::get_if<AlgEllipseDisk>(&kind_)) {
            return Curve{AlgEllipse{e->center, e->radius, e->params}};
        }
        const auto& r = std::get<RadialStar>(kind_);
        return Curve{RadialCurve{r.center, r.rho}};
    }

    /// Distance from `origin` (strictly inside) to the boundary along the ray
    /// with direction angle t. Throws NotStarShaped when the ray crosses the
    /// boundary more than once.
    double ray_exit(ElComplex origin, double t) const {
        const ElComplex u{std::cos(t), std::sin(t)};
        if (const auto* d = std::get_if<Disk>(&kind_)) {
            const ElComplex v = origin - d->center;
            return positive_root(1.0, v.re * u.re + v.im * u.im,
                                 v.re * v.re + v.im * v.im - d->radius * d->radius);
        }
        if (const auto* e = std::get_if<AlgEllipseDisk>(&kind_)) {
            const double al = e->params.alpha(), be = e->params.beta();
            const ElComplex v = origin - e->center;
            auto form = [&](ElComplex a, ElComplex b) {
                return al * a.re * b.re + 0.5 * be * (a.re * b.im + a.im * b.re) + a.im * b.im;
            };
            return positive_root(form(u, u), form(v, u), form(v, v) - e->radius * e->radius);
        }
        const auto& r = std::get<RadialStar>(kind_);
        if (origin == r.center) return r.rho(t);
        return radial_exit(r, origin, u);
    }

private:
    // Positive root of a s^2 + 2 b s + c = 0 with a > 0, c < 0.
    static double positive_root(double a, double b, double c) {
        const double sq = std::sqrt(b * b - a * c);
        return b >= 0.0 ? -c / (b + sq) : (sq - b) / a;
    }

    static double radial_exit(const RadialStar& r, ElComplex origin, ElComplex u) {
        auto outside = [&](double s) {
            const ElComplex d = origin + s * u - r.center;
            return euclid_norm(d) - r.rho(std::atan2(d.im, d.re));
        };
        const double smax = euclid_norm(origin - r.center) + r.rho.upper_bound();
        constexpr int samples = 2048;
        double lo = 0.0, hi = 0.0;
        int crossings = 0;
        double prev = outside(0.0);
        for (int k = 1; k <= samples; ++k) {
            const double s = smax * k / samples;
            const double cur = outside(s);
            if ((prev < 0.0) != (cur < 0.0)) {
                ++crossings;
                lo = smax * (k - 1) / samples;
                hi = s;
            }
            prev = cur;
        }
        if (crossings != 1) {
            throw NotStarShaped("domain is not star-shaped about the requested point");
        }
        for (int iter = 0; iter < 200 && hi - lo > 1e-15 * smax; ++iter) {
            const double mid = 0.5 * (lo + hi);
            (outside(mid) < 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    Kind kind_;
};

/// int_0^{2 pi} int_0^{s(t)} h(r, u(t)) dr dt, where s(t) is the distance
/// from origin to the boundary along u(t) = (cos t, sin t). The caller folds
/// the polar Jacobian into h.
template <class H>
auto polar_integral(const StarDomain& d, ElComplex origin, const QuadratureSpec& spec, H&& h) {
    spec.validate();
    const GaussLegendre gl(spec.n_r);
    return periodic_trapezoid(
        [&](double t) {
            const ElComplex u{std::cos(t), std::sin(t)};
            const double s = d.ray_exit(origin, t);
            auto acc = h(0.5 * s * (1.0 + gl.nodes[0]), u) * gl.weights[0];
            for (std::size_t j = 1; j < gl.nodes.size(); ++j) {
                acc += h(0.5 * s * (1.0 + gl.nodes[j]), u) * gl.weights[j];
            }
            return acc * (0.5 * s);
        },
        spec.n_theta);
}

/// Approximates  iint_d g dx dy  in polar coordinates about the domain center.
template <class G>
ElComplex area_integral(G&& g, const StarDomain& d, const QuadratureSpec& spec) {
    const ElComplex c = d.center();
    return polar_integral(d, c, spec, [&](double r, ElComplex u) -> ElComplex {
        return r * g(c + r * u);
    });
}

/// Approximates  iint_d g(z) ((z - zeta)~)^-1 dx dy  in polar coordinates
/// about zeta. With z = zeta + r u the kernel times the Jacobian is exactly
/// (u~)^-1, so the integrand is continuous up to r = 0.
template <class G>
ElComplex singular_area_integral(G&& g, const StarDomain& d, ElComplex zeta,
                                 const QuadratureSpec& spec, const AlgebraParams& p) {
    if (!d.contains(zeta)) throw PoleOutsideDomain("pole is not strictly inside the domain");
    return polar_integral(d, zeta, spec, [&](double r, ElComplex u) -> ElComplex {
        return mul(g(zeta + r * u), inv(tilde(u), p), p);
    });
}

/// iint_d 1 / ||z - zeta||_(1,0) dx dy.
inline double reciprocal_distance_integral(const StarDomain& d, ElComplex zeta,
                                           const QuadratureSpec& spec) {
    if (!d.contains(zeta)) throw PoleOutsideDomain("pole is not strictly inside the domain");
    // (1/r) * r = 1
    return polar_integral(d, zeta, spec, [](double, ElComplex) { return 1.0; });
}

} // namespace elcx
