#pragma once

// JSON and CSV encodings used by the command-line front end.
//
//   ElComplex      {"re": x, "im": y}
//   AlgebraParams  {"alpha": a, "beta": b}
//   TestFunction   {"kind": "tilde_power", "n": 3}
//                  {"kind": "kernel", "pole": {"re": .., "im": ..}}
//                  {"kind": "constant", "c": {"re": .., "im": ..}}
//                  {"kind": "identity" | "conjugate" | "x2_plus_iy"}
//                  {"kind": "poly", "u": [[c_00, c_01, ..], [c_10, ..]], "v": [[..]]}
//                  where u = sum_ij u[i][j] x^i y^j.

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "elcx/algebra.hpp"
#include "elcx/calculus.hpp"
#include "elcx/verify.hpp"

namespace elcx {

using json = nlohmann::json;

/// Malformed input (JSON shape, unknown kind, bad descriptor).
class FormatError : public error {
public:
    using error::error;
};

inline void to_json(json& j, const ElComplex& z) { j = json{{"re", z.re}, {"im", z.im}}; }

inline void from_json(const json& j, ElComplex& z) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
        !j["im"].is_number()) {
        throw FormatError("expected {\"re\": number, \"im\": number}");
    }
    z.re = j["re"].get<double>();
    z.im = j["im"].get<double>();
}

inline json params_to_json(const AlgebraParams& p) {
    return json{{"alpha", p.alpha()}, {"beta", p.beta()}};
}

inline AlgebraParams params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") ||
        !j["alpha"].is_number() || !j["beta"].is_number()) {
        throw FormatError("expected {\"alpha\": number, \"beta\": number}");
    }
    return make_params(j["alpha"].get<double>(), j["beta"].get<double>());
}

namespace detail {

inline std::vector<std::vector<double>> coeff_matrix(const json& j, const char* key) {
    if (!j.contains(key)) return {};
    const json& m = j[key];
    if (!m.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array of arrays");
    std::vector<std::vector<double>> out;
    for (const json& row : m) {
        if (!row.is_array()) throw FormatError(std::string("\"") + key + "\" rows must be arrays");
        std::vector<double> r;
        for (const json& c : row) {
            if (!c.is_number()) throw FormatError("polynomial coefficients must be numbers");
            r.push_back(c.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

inline json function_to_json(const TestFunction& f) {
    struct Visitor {
        json operator()(const TildePower& t) const { return {{"kind", "tilde_power"}, {"n", t.n}}; }
        json operator()(const Kernel& k) const { return {{"kind", "kernel"}, {"pole", k.pole}}; }
        json operator()(const Constant& c) const { return {{"kind", "constant"}, {"c", c.c}}; }
        json operator()(const SmoothNonHolo& s) const { return {{"kind", to_string(s.id)}}; }
        json operator()(const Polynomial& q) const {
            return {{"kind", "poly"}, {"u", q.u}, {"v", q.v}};
        }
    };
    return std::visit(Visitor{}, f);
}

inline TestFunction function_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw FormatError("function descriptor needs a string \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "tilde_power") {
        if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
            throw FormatError("tilde_power needs a nonnegative integer \"n\"");
        }
        return TildePower{j["n"].get<unsigned>()};
    }
    if (kind == "kernel") {
        if (!j.contains("pole")) throw FormatError("kernel needs \"pole\"");
        return Kernel{j["pole"].get<ElComplex>()};
    }
    if (kind == "constant") {
        if (!j.contains("c")) throw FormatError("constant needs \"c\"");
        return Constant{j["c"].get<ElComplex>()};
    }
    if (kind == "identity") return SmoothNonHolo{NonHoloId::identity};
    if (kind == "conjugate") return SmoothNonHolo{NonHoloId::conjugate};
    if (kind == "x2_plus_iy") return SmoothNonHolo{NonHoloId::x2_plus_iy};
    if (kind == "poly") {
        return Polynomial{detail::coeff_matrix(j, "u"), detail::coeff_matrix(j, "v")};
    }
    throw FormatError("unknown function kind \"" + kind + "\"");
}

/// One report as a JSON object. Non-finite numbers encode as null.
inline json report_to_json(const VerificationReport& r) {
    json j{{"check", r.check_name},
           {"alpha", r.alpha},
           {"beta", r.beta},
           {"computed", r.computed},
           {"reference", r.reference},
           {"abs_error", r.abs_error},
           {"tolerance", r.tolerance},
           {"passed", r.passed},
           {"n_theta", r.spec.n_theta},
           {"n_r", r.spec.n_r},
           {"provenance", to_string(r.provenance)}};
    if (r.reason) j["reason"] = *r.reason;
    return j;
}

inline const char* csv_header() {
    return "alpha,beta,check,abs_error,passed,computed_re,computed_im,reference_re,"
           "reference_im,tolerance,n_theta,n_r,reason";
}

namespace detail {

inline std::string csv_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return json(x).dump();
}

} // namespace detail

inline std::string report_to_csv(const VerificationReport& r) {
    using detail::csv_number;
    std::ostringstream os;
    os << csv_number(r.alpha) << ',' << csv_number(r.beta) << ',' << r.check_name << ','
       << csv_number(r.abs_error) << ',' << (r.passed ? "true" : "false") << ','
       << csv_number(r.computed.re) << ',' << csv_number(r.computed.im) << ','
       << csv_number(r.reference.re) << ',' << csv_number(r.reference.im) << ','
       << csv_number(r.tolerance) << ',' << r.spec.n_theta << ',' << r.spec.n_r << ','
       << r.reason.value_or("");
    return os.str();
}

} // namespace elcx
