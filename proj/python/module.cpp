#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "satopo/infinity.hpp"
#include "satopo/svg.hpp"
#include "satopo/verify.hpp"

namespace py = pybind11;
using namespace satopo;

namespace {

// Rationals cross the boundary as "p/q" strings; reports as JSON text,
// decoded on the Python side.
std::vector<std::string> alg_strs(const std::vector<AlgNumber>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

PlaneSet make_set(const std::string& region, const std::string& curve) {
    if (!region.empty() && !curve.empty()) throw Error("give either region or curve");
    if (!region.empty()) return PlaneSet::region(parse_poly(region));
    if (!curve.empty()) return PlaneSet::curve(parse_poly(curve));
    throw Error("expected region or curve");
}

py::dict critical(const std::string& poly) {
    py::list pts;
    for (auto& p : find_critical_points(parse_poly(poly))) {
        py::dict d;
        d["x"] = p.point.approx_x();
        d["y"] = p.point.approx_y();
        d["local_degree"] = p.local_degree;
        d["value"] = p.value.str();
        pts.append(d);
    }
    py::dict out;
    out["points"] = pts;
    return out;
}

std::string verify_json(const std::string& identity, const std::string& poly, const std::string& region, const std::string& curve,
                        const std::optional<std::string>& alpha, const std::optional<std::string>& v, unsigned seed,
                        const std::string& mode, int n, const std::string& tol) {
    VerifyInput in;
    if (!region.empty() || !curve.empty()) {
        in.kind = region.empty() ? VerifyInput::Kind::Curve : VerifyInput::Kind::Region;
        in.text = region.empty() ? curve : region;
    } else {
        in.text = poly;
    }
    if (in.text.empty()) throw Error("expected a polynomial, region or curve");
    in.poly = parse_poly(in.text);
    if (alpha) in.alpha = parse_rat(*alpha);
    if (v) in.v = parse_direction(*v);
    in.seed = seed;
    in.exact_mode = mode == "exact";
    in.samples = n;
    in.tol = parse_rat(tol);
    return verify(parse_identity(identity), in).to_json().dump();
}

std::string corpus_json(const std::string& text) {
    std::istringstream is(text);
    CorpusResult res = run_corpus(parse_corpus(is));
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& r : res.reports) reports.push_back(r.to_json());
    return nlohmann::ordered_json{{"reports", reports}, {"summary", res.summary()}, {"exit_code", res.exit_code()}}.dump();
}

py::dict gauss_bonnet(const std::string& region, const std::string& curve, const std::string& mode, int n) {
    PlaneSet X = make_set(region, curve);
    GaussBonnet g = mode == "exact" ? gauss_bonnet_exact(X) : gauss_bonnet_sampled(X, n);
    py::dict d;
    d["value"] = g.value.get_str();
    d["rhs"] = g.rhs.get_str();
    d["error"] = g.error.get_str();
    d["chi_x"] = g.chi_x;
    d["chi_lk_x"] = g.chi_lk_x;
    d["per_direction_ok"] = g.per_direction_ok;
    d["arcs_consistent"] = g.arcs_consistent;
    return d;
}

}  // namespace

PYBIND11_MODULE(_satopo, m) {
    m.doc() = "Certified topology of plane semi-algebraic sets";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<DegenerateInput>(m, "DegenerateInput", error.ptr());
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", error.ptr());

    m.def("critical", &critical, py::arg("poly"));
    m.def("deg_inf", [](const std::string& p) { return degree_at_infinity(parse_poly(p)); }, py::arg("poly"));
    m.def(
        "lambda_set",
        [](const std::string& p, unsigned seed) {
            BPoly f = parse_poly(p);
            auto l = lambda_set(f, seed);
            JumpSets j = jump_sets(f, l, seed);
            py::dict d;
            d["lambda"] = alg_strs(l);
            d["jumps_le"] = alg_strs(j.le);
            d["jumps_eq"] = alg_strs(j.eq);
            d["jumps_ge"] = alg_strs(j.ge);
            return d;
        },
        py::arg("poly"), py::arg("seed") = 0);
    m.def(
        "chi",
        [](const std::string& p, const std::string& alpha, const std::string& flavor, bool compact) {
            BPoly f = parse_poly(p);
            Rat a = parse_rat(alpha);
            Flavor fl = parse_flavor(flavor);
            return compact ? chi_c(f, a, fl) : chi(f, a, fl);
        },
        py::arg("poly"), py::arg("alpha"), py::arg("flavor") = "eq", py::arg("compact") = false);
    m.def(
        "link_chi",
        [](const std::string& p, const std::string& alpha, const std::string& flavor, unsigned seed) {
            return link_chi(parse_poly(p), parse_rat(alpha), parse_flavor(flavor), seed);
        },
        py::arg("poly"), py::arg("alpha"), py::arg("flavor") = "eq", py::arg("seed") = 0);
    m.def(
        "branches",
        [](const std::string& p, unsigned seed) {
            BPoly g = parse_poly(p);
            return py::make_tuple(half_branches(g, seed), r_infinity(g, seed));
        },
        py::arg("poly"), py::arg("seed") = 0);
    m.def("identities", [] {
        std::vector<std::string> out;
        for (IdentityId id : all_identities()) out.push_back(identity_name(id));
        return out;
    });
    m.def("verify_json", &verify_json, py::arg("identity"), py::arg("poly") = "", py::arg("region") = "", py::arg("curve") = "",
          py::arg("alpha") = py::none(), py::arg("v") = py::none(), py::arg("seed") = 0, py::arg("mode") = "sampled",
          py::arg("n") = 64, py::arg("tol") = "1/100");
    m.def("corpus_json", &corpus_json, py::arg("text"));
    m.def("gauss_bonnet", &gauss_bonnet, py::arg("region") = "", py::arg("curve") = "", py::arg("mode") = "sampled",
          py::arg("n") = 64);
    m.def(
        "plot",
        [](const std::string& poly, const std::string& region, const std::string& curve) {
            if (!region.empty() || !curve.empty()) return render_svg(make_set(region, curve));
            return render_svg(parse_poly(poly));
        },
        py::arg("poly") = "", py::arg("region") = "", py::arg("curve") = "");
}
