// Recover f(zeta) for a non-holomorphic f on the unit disk from its boundary
// values and its d/dzbar derivative, for a handful of algebras.

#include <cstdio>

#include "elcx/verify.hpp"

int main() {
    using namespace elcx;
    const StarDomain disk{Disk{{0.0, 0.0}, 1.0}};
    const ElComplex zeta{0.2, 0.1};
    const TestFunction f = SmoothNonHolo{NonHoloId::x2_plus_iy};

    for (auto [a, b] : {std::pair{1.0, 0.0}, {2.0, 1.0}, {5.0, 3.0}}) {
        const AlgebraParams p = make_params(a, b);
        const PompeiuTerms t = cauchy_pompeiu_terms(f, disk, zeta, p, {});
        const ElComplex exact = eval_value(f, zeta, p);
        std::printf("alpha=%g beta=%g  f(zeta)=(%.15f, %.15f)  error=%.2e\n", a, b,
                    t.reconstructed.re, t.reconstructed.im, euclid_norm(t.reconstructed - exact));
    }
}
