// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "elcx/verify.hpp"
#include "oracles.hpp"

using namespace elcx;
using oracle::cplx;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    double worst = 0.0; // largest error / tolerance ratio seen
    std::string detail;

    void check(bool cond, double ratio = 0.0) {
        ok = ok && cond;
        if (ratio > worst) worst = ratio;
    }
    void measure(double err, double tol) { check(err <= tol, tol > 0 ? err / tol : 0.0); }
};

const std::vector<std::pair<double, double>> kParamSet{
    {1.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {5.0, 3.0}, {1.0, -1.0}};

std::vector<AlgebraParams> param_set() {
    std::vector<AlgebraParams> out;
    for (auto [a, b] : kParamSet) out.push_back(make_params(a, b));
    return out;
}

const QuadratureSpec kSpec{512, 64};
const ElComplex kZeta{0.2, 0.1};
const StarDomain kUnitDisk{Disk{{0.0, 0.0}, 1.0}};

std::vector<TestFunction> smooth_builtins() {
    return {SmoothNonHolo{NonHoloId::identity}, SmoothNonHolo{NonHoloId::conjugate},
            SmoothNonHolo{NonHoloId::x2_plus_iy}, TildePower{3},
            Polynomial{{{0.0, 1.0, 0.5}, {2.0, -1.0}, {0.0, 0.0, 0.25}}, {{1.0}, {0.0, 3.0}, {-1.0}}}};
}

Outcome winding() {
    Outcome o;
    const auto t0 = Clock::now();
    for (const auto& p : param_set())
        for (double eps : {0.1, 1.0, 2.0})
            for (ElComplex zeta : {ElComplex{}, kZeta}) {
                const auto r = check_winding(p, eps, kSpec, zeta);
                o.measure(r.abs_error, 1e-9);
            }
    const double dt = seconds_since(t0);
    o.check(dt < 1.0);
    o.detail = "runtime " + std::to_string(dt) + " s";
    return o;
}

Outcome circle_vs_ellipse() {
    Outcome o;
    for (const auto& p : param_set())
        for (double eps : {0.1, 1.0, 2.0}) {
            const Kernel k{kZeta};
            auto f = [&](ElComplex z) { return eval_value(k, z, p); };
            const ElComplex c = contour_integral(f, Curve{Circle{kZeta, eps}}, kSpec, p);
            const ElComplex e = contour_integral(f, alg_ellipse_curve(kZeta, eps, p), kSpec, p);
            o.measure(euclid_norm(c - e), 1e-9);
        }
    return o;
}

Outcome green_gauss() {
    Outcome o;
    for (const auto& p : param_set())
        for (const auto& g : smooth_builtins()) {
            o.measure(check_green_gauss(g, kUnitDisk, p, kSpec).abs_error, 1e-8);
        }
    return o;
}

Outcome cauchy_formula() {
    Outcome o;
    const ElComplex pts[] = {{0.0, 0.0}, {0.5, 0.3}, {-0.6, 0.2}, {0.1, -0.7}, {-0.4, -0.5}};
    const Curve boundary = kUnitDisk.boundary();
    for (const auto& p : param_set())
        for (unsigned n = 0; n <= 5; ++n)
            for (ElComplex z : pts) {
                o.measure(cauchy(TildePower{n}, boundary, z, p, kSpec).abs_error, 1e-8);
            }
    return o;
}

Outcome cauchy_pompeiu_formula() {
    Outcome o;
    double slowest = 0.0;
    for (const auto& p : param_set())
        for (auto id : {NonHoloId::identity, NonHoloId::conjugate, NonHoloId::x2_plus_iy}) {
            const auto t0 = Clock::now();
            for (ElComplex z : {kZeta, ElComplex{-0.5, 0.6}, ElComplex{0.0, -0.9}}) {
                o.measure(cauchy_pompeiu(SmoothNonHolo{id}, kUnitDisk, z, p, kSpec).abs_error, 1e-6);
            }
            slowest = std::max(slowest, seconds_since(t0));
        }
    o.check(slowest < 10.0);
    o.detail = "slowest pair " + std::to_string(slowest) + " s";
    return o;
}

Outcome schmidt() {
    Outcome o;
    for (double R : {0.25, 1.0, 2.0, 5.0}) {
        const ElComplex c{0.3, -0.2};
        const StarDomain d{Disk{c, R}};
        const auto centred = check_schmidt(d, c, kSpec);
        o.measure(std::abs(centred.computed.re - two_pi * R), 1e-6);
        o.check(centred.computed.re <= centred.reference.re + 1e-6);
        for (double off : {0.1, 0.5, 0.9}) {
            const auto r = check_schmidt(d, c + ElComplex{off * R * 0.6, off * R * 0.8}, kSpec);
            o.check(r.computed.re < r.reference.re);
        }
    }
    return o;
}

// Lipschitz constant of f on the circle around zeta, sampled densely.
double sampled_lipschitz(const TestFunction& f, ElComplex zeta, double eps, const AlgebraParams& p) {
    const ElComplex fz = eval_value(f, zeta, p);
    double L = 0.0;
    for (int k = 0; k < 4096; ++k) {
        const double t = two_pi * k / 4096;
        const ElComplex z = zeta + ElComplex{eps * std::cos(t), eps * std::sin(t)};
        L = std::max(L, euclid_norm(eval_value(f, z, p) - fz) / eps);
    }
    return L;
}

Outcome vanishing_limit() {
    Outcome o;
    const double eps = 1e-3;
    const std::vector<TestFunction> lipschitz{
        SmoothNonHolo{NonHoloId::identity}, SmoothNonHolo{NonHoloId::conjugate},
        SmoothNonHolo{NonHoloId::x2_plus_iy}, TildePower{1}, TildePower{2}, Constant{{1.0, 2.0}},
        Polynomial{{{0.0, 1.0}, {2.0}}, {{0.0, 0.0, 1.0}}}};
    for (const auto& p : param_set())
        for (const auto& f : lipschitz) {
            const auto r = check_vanishing_limit(f, kZeta, p, {eps}, kSpec).front();
            const double L = sampled_lipschitz(f, kZeta, eps, p);
            const double bound = two_pi * p.k2() / (p.k1() * p.k1()) * L * eps * (1 + 1e-3);
            if (L == 0.0) {
                o.check(r.abs_error == 0.0);
            } else {
                o.measure(r.abs_error, bound);
            }
        }
    return o;
}

Outcome algebra_properties() {
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coord(-10.0, 10.0), logmag(-6.0, 6.0),
        ang(0.0, two_pi);
    const double tol = 1e-10;
    for (const auto& p : param_set()) {
        const ElComplex ih2 = mul(p.i_hat(), p.i_hat(), p);
        o.measure(euclid_norm(ih2 + ElComplex{1.0, 0.0}), tol);
        for (int k = 0; k < 100000; ++k) {
            const ElComplex z{coord(rng), coord(rng)}, w{coord(rng), coord(rng)},
                v{coord(rng), coord(rng)};
            const double nz = norm(z, p), nw = norm(w, p), nv = norm(v, p);
            o.measure(std::abs(norm(mul(z, w, p), p) - nz * nw), tol * nz * nw);
            o.measure(norm(mul(mul(z, w, p), v, p) - mul(z, mul(w, v, p), p), p), tol * nz * nw * nv);
            o.measure(norm(mul(z, w, p) - mul(w, z, p), p), tol * nz * nw);
            o.measure(norm(mul(z, w + v, p) - (mul(z, w, p) + mul(z, v, p)), p), tol * nz * (nw + nv));

            const double m = std::pow(10.0, logmag(rng)), t = ang(rng);
            const ElComplex s{m * std::cos(t), m * std::sin(t)};
            o.measure(euclid_norm(mul(s, inv(s, p), p) - ElComplex{1.0, 0.0}), tol);

            const double ratio = euclid_norm(z) / nz;
            o.check(ratio >= p.k1() * (1 - tol) && ratio <= p.k2() * (1 + tol));
        }
    }
    const double dt = seconds_since(t0);
    o.check(dt < 5.0);
    o.detail = "runtime " + std::to_string(dt) + " s";
    return o;
}

Outcome product_rule() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::vector<TestFunction> funcs = smooth_builtins();
    for (unsigned n : {0u, 1u, 2u, 5u}) funcs.push_back(TildePower{n});
    funcs.push_back(Kernel{{0.4, -0.3}});
    funcs.push_back(Constant{{2.0, -1.0}});
    std::uniform_int_distribution<std::size_t> pick(0, funcs.size() - 1);
    for (int k = 0; k < 1000; ++k) {
        const auto p = oracle::random_params(rng);
        const auto& f1 = funcs[pick(rng)];
        const auto& f2 = funcs[pick(rng)];
        const ElComplex z = oracle::random_point(rng, 1.5) + ElComplex{3.0, 0.0};
        const Jet j1 = eval_jet(f1, z, p), j2 = eval_jet(f2, z, p);
        const ElComplex lhs = cr_apply(jet_mul(j1, j2, p), p);
        const ElComplex rhs = mul(cr_apply(j1, p), j2.value, p) + mul(j1.value, cr_apply(j2, p), p);
        // magnitude of the individual terms entering either side
        const double scale = (euclid_norm(j1.dx) + euclid_norm(j1.dy)) * euclid_norm(j2.value) +
                             euclid_norm(j1.value) * (euclid_norm(j2.dx) + euclid_norm(j2.dy));
        o.measure(euclid_norm(lhs - rhs), 1e-10 * scale);
    }
    return o;
}

Outcome classical_degeneration() {
    Outcome o;
    const auto c = AlgebraParams::classical();
    const int n = kSpec.n_theta;
    const double tol = 1e-10;
    auto near = [&](ElComplex a, cplx b) {
        o.measure(std::abs(oracle::to_std(a) - b), tol);
    };

    // algebra
    std::mt19937_64 rng(7);
    for (int k = 0; k < 10000; ++k) {
        const ElComplex z = oracle::random_point(rng, 10.0), w = oracle::random_point(rng, 10.0);
        const cplx zs = oracle::to_std(z), ws = oracle::to_std(w);
        o.measure(std::abs(oracle::to_std(mul(z, w, c)) - zs * ws), tol * std::abs(zs * ws));
        o.measure(std::abs(oracle::to_std(inv(z, c)) - 1.0 / zs), tol / std::abs(zs));
        o.measure(std::abs(norm(z, c) - std::abs(zs)), tol * std::abs(zs));
    }

    // winding and boundary defect
    for (double eps : {0.1, 1.0, 2.0}) {
        near(check_winding(c, eps, kSpec, kZeta).computed, oracle::classical_winding(oracle::to_std(kZeta), eps, n));
    }
    const std::vector<std::pair<TestFunction, oracle::cfun>> lip{
        {SmoothNonHolo{NonHoloId::conjugate}, [](cplx z) { return std::conj(z); }},
        {SmoothNonHolo{NonHoloId::x2_plus_iy},
         [](cplx z) { return z.real() * z.real() + oracle::I * z.imag(); }},
        {TildePower{2}, [](cplx z) { return -z * z; }}};
    for (const auto& [f, g] : lip)
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            near(check_vanishing_limit(f, kZeta, c, {eps}, kSpec).front().computed,
                 oracle::classical_defect(g, oracle::to_std(kZeta), eps, n));
        }

    // Schmidt integral
    for (ElComplex zeta : {ElComplex{}, kZeta, ElComplex{-0.7, 0.5}}) {
        const double ours = reciprocal_distance_integral(kUnitDisk, zeta, kSpec);
        const cplx ref = oracle::polar_disk_integral([](double, double) { return cplx{1.0, 0.0}; },
                                                     oracle::to_std(zeta), {}, 1.0, n);
        near({ours, 0.0}, ref);
    }

    // Green-Gauss: iint dbar g = (1 / 2i) oint g dz
    struct Smooth {
        TestFunction f;
        oracle::cfun g, dbar;
    };
    const std::vector<Smooth> smooth{
        {SmoothNonHolo{NonHoloId::identity}, [](cplx z) { return z; }, [](cplx) { return cplx{}; }},
        {SmoothNonHolo{NonHoloId::conjugate}, [](cplx z) { return std::conj(z); },
         [](cplx) { return cplx{1.0, 0.0}; }},
        {SmoothNonHolo{NonHoloId::x2_plus_iy},
         [](cplx z) { return z.real() * z.real() + oracle::I * z.imag(); },
         [](cplx z) { return cplx{z.real() - 0.5, 0.0}; }},
        {TildePower{3}, [](cplx z) { return oracle::I * z * z * z; }, [](cplx) { return cplx{}; }}};
    for (const auto& s : smooth) {
        const auto r = check_green_gauss(s.f, kUnitDisk, c, kSpec);
        near(r.computed, oracle::classical_area_dbar(s.dbar, {}, 1.0, n));
        near(r.reference, oracle::circle_integral_dz(s.g, {}, 1.0, n) / (2.0 * oracle::I));
    }

    // Cauchy
    for (unsigned p = 0; p <= 5; ++p) {
        const oracle::cfun g = [p](cplx z) { return std::pow(-oracle::I * z, static_cast<int>(p)); };
        for (ElComplex z : {ElComplex{}, kZeta, ElComplex{-0.5, 0.6}}) {
            near(cauchy(TildePower{p}, kUnitDisk.boundary(), z, c, kSpec).computed,
                 oracle::classical_cauchy(g, oracle::to_std(z), {}, 1.0, n));
        }
    }

    // Cauchy-Pompeiu terms; the area term carries a factor i from the tilde.
    for (const auto& s : smooth)
        for (ElComplex z : {kZeta, ElComplex{-0.5, 0.6}}) {
            const PompeiuTerms t = cauchy_pompeiu_terms(s.f, kUnitDisk, z, c, kSpec);
            const auto ref = oracle::classical_pompeiu(s.g, s.dbar, oracle::to_std(z), {}, 1.0, n);
            near(t.boundary, ref.boundary);
            near(t.area, oracle::I * ref.area);
            near(t.reconstructed, ref.reconstructed);
        }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"winding constant", winding},
        {"circle / ellipse deformation", circle_vs_ellipse},
        {"green-gauss identity", green_gauss},
        {"cauchy formula", cauchy_formula},
        {"cauchy-pompeiu formula", cauchy_pompeiu_formula},
        {"schmidt inequality", schmidt},
        {"vanishing boundary defect", vanishing_limit},
        {"algebra properties", algebra_properties},
        {"product rule", product_rule},
        {"classical degeneration", classical_degeneration},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failures;
        std::printf("%s %2d %-30s worst err/tol %.3e%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name,
                    o.worst, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
