#pragma once

// First-order jets of algebra-valued functions of (x, y) and the
// Cauchy-Riemann operator d/dzbar = 1/2 (d/dx + i d/dy) of the algebra.

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "elcx/algebra.hpp"

namespace elcx {

/// Value and both partial derivatives at one point.
struct Jet {
    ElComplex value;
    ElComplex dx;
    ElComplex dy;

    friend Jet operator+(const Jet& a, const Jet& b) {
        return {a.value + b.value, a.dx + b.dx, a.dy + b.dy};
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        return {a.value - b.value, a.dx - b.dx, a.dy - b.dy};
    }
    friend Jet operator*(double s, const Jet& a) { return {s * a.value, s * a.dx, s * a.dy}; }
};

inline Jet constant_jet(ElComplex c) { return {c, {}, {}}; }

/// Jet of z~ - w~ for fixed w: value (z-w)~, d/dx = -i, d/dy = 1.
inline Jet tilde_jet(ElComplex z, ElComplex shift = {}) {
    return {tilde(z - shift), {0.0, -1.0}, {1.0, 0.0}};
}

/// Bilinear product rule.
inline Jet jet_mul(const Jet& a, const Jet& b, const AlgebraParams& p) {
    return {mul(a.value, b.value, p), mul(a.dx, b.value, p) + mul(a.value, b.dx, p),
            mul(a.dy, b.value, p) + mul(a.value, b.dy, p)};
}

/// Quotient rule: d(1/g) = -(1/g)^2 dg.
inline Jet jet_inv(const Jet& g, const AlgebraParams& p) {
    const ElComplex v = inv(g.value, p);
    const ElComplex m = -mul(v, v, p);
    return {v, mul(m, g.dx, p), mul(m, g.dy, p)};
}

/// 1/2 (dx + i dy) with the algebra's i.
inline ElComplex cr_apply(const Jet& j, const AlgebraParams& p) {
    return 0.5 * (j.dx + mul(unit_i, j.dy, p));
}

/// The two real equations of the generalized Cauchy-Riemann system for
/// w = u + iv:
///   1/2 (u_x - alpha v_y)  and  1/2 (u_y + v_x - beta v_y).
inline std::pair<double, double> cr_system_residual(const Jet& j, const AlgebraParams& p) {
    const double ux = j.dx.re, vx = j.dx.im, uy = j.dy.re, vy = j.dy.im;
    return {0.5 * (ux - p.alpha() * vy), 0.5 * (uy + vx - p.beta() * vy)};
}

// ---------------------------------------------------------------------------
// Built-in test functions

/// z~^n (holomorphic for every (alpha, beta)).
struct TildePower {
    unsigned n = 0;
};

/// ((z - pole)~)^-1, holomorphic away from the pole.
struct Kernel {
    ElComplex pole;
};

struct Constant {
    ElComplex c;
};

/// Smooth functions with a known nonzero d/dzbar.
enum class NonHoloId {
    identity,   ///< f(z) = z
    conjugate,  ///< f(z) = conj(z)
    x2_plus_iy, ///< f(x, y) = x^2 + i y
};

/// Component-wise real bivariate polynomials: u = sum u[i][j] x^i y^j and
/// likewise for v.
struct Polynomial {
    std::vector<std::vector<double>> u;
    std::vector<std::vector<double>> v;
};

struct SmoothNonHolo {
    NonHoloId id = NonHoloId::identity;
};

using TestFunction = std::variant<TildePower, Kernel, Constant, SmoothNonHolo, Polynomial>;

inline std::string to_string(NonHoloId id) {
    switch (id) {
    case NonHoloId::identity: return "identity";
    case NonHoloId::conjugate: return "conjugate";
    case NonHoloId::x2_plus_iy: return "x2_plus_iy";
    }
    return "?";
}

/// True when the function's value depends on the algebra parameters.
inline bool needs_params(const TestFunction& f) {
    return std::holds_alternative<TildePower>(f) || std::holds_alternative<Kernel>(f);
}

/// Whether the catalog entry is holomorphic for every (alpha, beta). Constants,
/// powers of z~ and kernels are; the others depend on the parameters or not at
/// all (the identity is holomorphic only in the classical case).
inline bool is_holomorphic_family(const TestFunction& f) {
    return std::holds_alternative<TildePower>(f) || std::holds_alternative<Kernel>(f) ||
           std::holds_alternative<Constant>(f);
}

namespace detail {

struct PolyJet {
    double value = 0.0, dx = 0.0, dy = 0.0;
};

inline double ipow(double x, std::size_t n) {
    double r = 1.0;
    for (std::size_t k = 0; k < n; ++k) r *= x;
    return r;
}

inline PolyJet poly_jet(const std::vector<std::vector<double>>& c, double x, double y) {
    PolyJet out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c[i].size(); ++j) {
            const double a = c[i][j];
            if (a == 0.0) continue;
            out.value += a * ipow(x, i) * ipow(y, j);
            if (i > 0) out.dx += a * static_cast<double>(i) * ipow(x, i - 1) * ipow(y, j);
            if (j > 0) out.dy += a * static_cast<double>(j) * ipow(x, i) * ipow(y, j - 1);
        }
    }
    return out;
}

} // namespace detail

/// Exact value and partials of a built-in function.
inline Jet eval_jet(const TestFunction& f, ElComplex at, const AlgebraParams& p) {
    struct Visitor {
        ElComplex at;
        const AlgebraParams& p;

        Jet operator()(const TildePower& t) const {
            Jet acc = constant_jet({1.0, 0.0});
            const Jet base = tilde_jet(at);
            for (unsigned k = 0; k < t.n; ++k) acc = jet_mul(acc, base, p);
            return acc;
        }
        Jet operator()(const Kernel& k) const {
            if (at == k.pole) throw PoleEvaluation("kernel evaluated at its pole");
            return jet_inv(tilde_jet(at, k.pole), p);
        }
        Jet operator()(const Constant& c) const { return constant_jet(c.c); }
        Jet operator()(const SmoothNonHolo& s) const {
            switch (s.id) {
            case NonHoloId::identity: return {at, {1.0, 0.0}, {0.0, 1.0}};
            case NonHoloId::conjugate: return {conj(at), {1.0, 0.0}, {0.0, -1.0}};
            case NonHoloId::x2_plus_iy:
                return {{at.re * at.re, at.im}, {2.0 * at.re, 0.0}, {0.0, 1.0}};
            }
            return {};
        }
        Jet operator()(const Polynomial& q) const {
            const auto u = detail::poly_jet(q.u, at.re, at.im);
            const auto v = detail::poly_jet(q.v, at.re, at.im);
            return {{u.value, v.value}, {u.dx, v.dx}, {u.dy, v.dy}};
        }
    };
    return std::visit(Visitor{at, p}, f);
}

inline ElComplex eval_value(const TestFunction& f, ElComplex at, const AlgebraParams& p) {
    if (const auto* t = std::get_if<TildePower>(&f)) {
        ElComplex acc{1.0, 0.0};
        const ElComplex base = tilde(at);
        for (unsigned k = 0; k < t->n; ++k) acc = mul(acc, base, p);
        return acc;
    }
    if (const auto* k = std::get_if<Kernel>(&f)) {
        if (at == k->pole) throw PoleEvaluation("kernel evaluated at its pole");
        return inv(tilde(at - k->pole), p);
    }
    return eval_jet(f, at, p).value;
}

/// Hand-derived d/dzbar of the non-holomorphic catalog, kept apart from the
/// jet machinery so it can serve as an oracle:
///   z          -> 1/2 (1 - alpha, -beta)
///   conj(z)    -> 1/2 (1 + alpha,  beta)
///   x^2 + iy   -> 1/2 (2x - alpha, -beta)
inline ElComplex hand_dbar(NonHoloId id, ElComplex at, const AlgebraParams& p) {
    switch (id) {
    case NonHoloId::identity: return {0.5 * (1.0 - p.alpha()), -0.5 * p.beta()};
    case NonHoloId::conjugate: return {0.5 * (1.0 + p.alpha()), 0.5 * p.beta()};
    case NonHoloId::x2_plus_iy: return {0.5 * (2.0 * at.re - p.alpha()), -0.5 * p.beta()};
    }
    return {};
}

} // namespace elcx
