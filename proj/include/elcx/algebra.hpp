#pragma once

// Elliptic complex algebra with structure polynomial X^2 + beta X + alpha,
// i.e. the imaginary unit satisfies i^2 = -beta i - alpha.

#include <cassert>
#include <cmath>
#include <string>
#include <utility>

#include "elcx/errors.hpp"

namespace elcx {

/// Element x + iy. Arithmetic that depends on the structure polynomial takes
/// an AlgebraParams argument; the vector-space operations do not.
struct ElComplex {
    double re = 0.0;
    double im = 0.0;

    constexpr ElComplex() = default;
    constexpr ElComplex(double r, double i = 0.0) : re(r), im(i) {}

    constexpr ElComplex& operator+=(ElComplex o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr ElComplex& operator-=(ElComplex o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    constexpr ElComplex& operator*=(double s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend constexpr ElComplex operator+(ElComplex a, ElComplex b) { return a += b; }
    friend constexpr ElComplex operator-(ElComplex a, ElComplex b) { return a -= b; }
    friend constexpr ElComplex operator-(ElComplex a) { return {-a.re, -a.im}; }
    friend constexpr ElComplex operator*(double s, ElComplex a) { return a *= s; }
    friend constexpr ElComplex operator*(ElComplex a, double s) { return a *= s; }
    friend constexpr ElComplex operator/(ElComplex a, double s) { return {a.re / s, a.im / s}; }
    friend constexpr bool operator==(ElComplex, ElComplex) = default;

    bool finite() const { return std::isfinite(re) && std::isfinite(im); }
};

/// The algebraic unit i = 0 + 1i.
inline constexpr ElComplex unit_i{0.0, 1.0};

class AlgebraParams;
AlgebraParams make_params(double alpha, double beta);

/// Validated (alpha, beta) together with the derived constants: the
/// discriminant 4 alpha - beta^2, the winding constant
/// i_hat = (beta + 2i) / sqrt(4 alpha - beta^2) and the tight norm
/// equivalence constants k1 <= ||z||_(1,0) / ||z||_(alpha,beta) <= k2.
class AlgebraParams {
public:
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double discriminant() const { return discriminant_; }
    ElComplex i_hat() const { return i_hat_; }
    double k1() const { return k1_; }
    double k2() const { return k2_; }

    /// The classical case alpha = 1, beta = 0.
    static AlgebraParams classical() { return make_params(1.0, 0.0); }

    friend bool operator==(const AlgebraParams& a, const AlgebraParams& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    friend AlgebraParams make_params(double alpha, double beta);
    AlgebraParams() = default;

    double alpha_ = 1.0;
    double beta_ = 0.0;
    double discriminant_ = 4.0;
    ElComplex i_hat_{0.0, 1.0};
    double k1_ = 1.0;
    double k2_ = 1.0;
};

/// Eigenvalues (min, max) of Q = [[1, -beta/2], [-beta/2, alpha]], the
/// Gram matrix of ||z||^2_(alpha,beta) = x^2 - beta x y + alpha y^2.
inline std::pair<double, double> norm_form_eigenvalues(double alpha, double beta) {
    const double mean = 0.5 * (1.0 + alpha);
    const double radius = std::hypot(0.5 * (1.0 - alpha), 0.5 * beta);
    const double lmax = mean + radius;
    // det(Q) / lmax avoids cancellation in mean - radius.
    const double lmin = (alpha - 0.25 * beta * beta) / lmax;
    return {lmin, lmax};
}

inline AlgebraParams make_params(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("algebra parameters must be finite");
    }
    const double disc = 4.0 * alpha - beta * beta;
    if (!(disc > 0.0)) {
        throw EllipticityViolation("4*alpha - beta^2 = " + std::to_string(disc) +
                                   " is not positive (alpha=" + std::to_string(alpha) +
                                   ", beta=" + std::to_string(beta) + ")");
    }
    AlgebraParams p;
    p.alpha_ = alpha;
    p.beta_ = beta;
    p.discriminant_ = disc;
    const double root = std::sqrt(disc);
    p.i_hat_ = {beta / root, 2.0 / root};
    const auto [lmin, lmax] = norm_form_eigenvalues(alpha, beta);
    p.k1_ = 1.0 / std::sqrt(lmax);
    p.k2_ = 1.0 / std::sqrt(lmin);
    return p;
}

inline ElComplex mul(ElComplex a, ElComplex b, const AlgebraParams& p) {
    return {a.re * b.re - p.alpha() * a.im * b.im,
            a.re * b.im + a.im * b.re - p.beta() * a.im * b.im};
}

/// x^2 - beta x y + alpha y^2; positive for z != 0 under ellipticity.
inline double norm_sq(ElComplex z, const AlgebraParams& p) {
    return z.re * z.re - p.beta() * z.re * z.im + p.alpha() * z.im * z.im;
}

inline double norm(ElComplex z, const AlgebraParams& p) { return std::sqrt(norm_sq(z, p)); }

/// ||z||_(1,0).
inline double euclid_norm(ElComplex z) { return std::hypot(z.re, z.im); }

inline ElComplex inv(ElComplex z, const AlgebraParams& p) {
    if (z.re == 0.0 && z.im == 0.0) {
        throw DivisionByZero("inverse of zero in the elliptic algebra");
    }
    const double den = norm_sq(z, p);
    return {(z.re - p.beta() * z.im) / den, -z.im / den};
}

inline ElComplex div(ElComplex a, ElComplex b, const AlgebraParams& p) {
    return mul(a, inv(b, p), p);
}

inline constexpr ElComplex conj(ElComplex z) { return {z.re, -z.im}; }

/// z~ = y - ix.
inline constexpr ElComplex tilde(ElComplex z) { return {z.im, -z.re}; }

/// Inverse of tilde: (a, b) -> (-b, a).
inline constexpr ElComplex untilde(ElComplex w) { return {-w.im, w.re}; }

/// <z, w> = 1/2 (w (conj(z) - beta Im z) + (conj(w) - beta Im w) z).
/// The imaginary part of the algebra-valued expression cancels; the real
/// part is returned.
inline double inner(ElComplex z, ElComplex w, const AlgebraParams& p) {
    const ElComplex zc{z.re - p.beta() * z.im, -z.im};
    const ElComplex wc{w.re - p.beta() * w.im, -w.im};
    const ElComplex s = 0.5 * (mul(w, zc, p) + mul(wc, z, p));
    assert(std::abs(s.im) <= 1e-12 * (1.0 + euclid_norm(z) * euclid_norm(w)) *
                                 (1.0 + std::abs(p.alpha()) + std::abs(p.beta())));
    return s.re;
}

/// (k1, k2) with k1 ||z||_(alpha,beta) <= ||z||_(1,0) <= k2 ||z||_(alpha,beta),
/// both attained along the eigenvectors of the norm form.
inline std::pair<double, double> equivalence_ratio_bounds(const AlgebraParams& p) {
    return {p.k1(), p.k2()};
}

} // namespace elcx
