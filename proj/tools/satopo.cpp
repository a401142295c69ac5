#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "satopo/infinity.hpp"
#include "satopo/svg.hpp"
#include "satopo/verify.hpp"

using namespace satopo;
using json = nlohmann::ordered_json;

namespace {

json crit_json(const BPoly& f) {
    json a = json::array();
    for (auto& p : find_critical_points(f))
        a.push_back({{"x", p.point.approx_x()}, {"y", p.point.approx_y()}, {"x_box", {p.point.xbox().lo.get_str(), p.point.xbox().hi.get_str()}},
                     {"y_box", {p.point.ybox().lo.get_str(), p.point.ybox().hi.get_str()}}, {"local_degree", p.local_degree},
                     {"value", p.value.str()}});
    return a;
}

json alg_list(const std::vector<AlgNumber>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back({{"value", x.str()}, {"approx", x.approx()}});
    return a;
}

PlaneSet make_set(const std::string& region, const std::string& curve) {
    if (!region.empty()) return PlaneSet::region(parse_poly(region));
    if (!curve.empty()) return PlaneSet::curve(parse_poly(curve));
    throw Error("expected --region or --curve");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified topology of plane semi-algebraic sets"};
    app.require_subcommand(1);

    std::string poly, region, curve, identity, alpha_s, flavor_s = "eq", v_s, out_file, mode = "sampled", tol_s = "1/100", corpus_file;
    unsigned seed = 0;
    int n = 64;
    bool compact = false;

    auto* critical = app.add_subcommand("critical", "critical points, local degrees and values");
    critical->add_option("poly", poly)->required();
    auto* deginf = app.add_subcommand("deg-inf", "degree of the gradient at infinity");
    deginf->add_option("poly", poly)->required();
    auto* lambda = app.add_subcommand("lambda", "asymptotic critical values and the jump sets");
    lambda->add_option("poly", poly)->required();
    lambda->add_option("--seed", seed);
    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of {f <= a}, {f = a} or {f >= a}");
    chi_cmd->add_option("poly", poly)->required();
    chi_cmd->add_option("--alpha", alpha_s)->required();
    chi_cmd->add_option("--flavor", flavor_s)->check(CLI::IsMember({"le", "eq", "ge"}));
    chi_cmd->add_flag("--compact", compact, "compactly supported chi");
    auto* link = app.add_subcommand("link", "Euler characteristic of the link at infinity");
    link->add_option("poly", poly)->required();
    link->add_option("--alpha", alpha_s)->required();
    link->add_option("--flavor", flavor_s)->check(CLI::IsMember({"le", "eq", "ge"}));
    link->add_option("--seed", seed);
    auto* branches = app.add_subcommand("branches", "half-branches and branches at infinity of {g = 0}");
    branches->add_option("poly", poly)->required();
    branches->add_option("--seed", seed);
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity");
    verify_cmd->add_option("--identity", identity)->required();
    verify_cmd->add_option("poly", poly);
    verify_cmd->add_option("--region", region);
    verify_cmd->add_option("--curve", curve);
    verify_cmd->add_option("--alpha", alpha_s);
    verify_cmd->add_option("--v", v_s, "direction a/b,c/d on the unit circle");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--tol", tol_s);
    auto* corpus = app.add_subcommand("corpus", "verify every applicable identity on a corpus file");
    corpus->add_option("file", corpus_file)->required();
    auto* gb = app.add_subcommand("gauss-bonnet", "Gauss-Bonnet measure of a region or curve");
    gb->add_option("--region", region);
    gb->add_option("--curve", curve);
    gb->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
    gb->add_option("--n", n);
    gb->add_option("--tol", tol_s);
    auto* plot = app.add_subcommand("plot", "SVG picture of level curves or a plane set");
    plot->add_option("poly", poly);
    plot->add_option("--region", region);
    plot->add_option("--curve", curve);
    plot->add_option("-o", out_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (critical->parsed()) {
            print(crit_json(parse_poly(poly)));
        } else if (deginf->parsed()) {
            print({{"deg_inf", degree_at_infinity(parse_poly(poly))}});
        } else if (lambda->parsed()) {
            BPoly f = parse_poly(poly);
            auto l = lambda_set(f, seed);
            JumpSets j = jump_sets(f, l, seed);
            print({{"lambda", alg_list(l)}, {"jumps_le", alg_list(j.le)}, {"jumps_eq", alg_list(j.eq)}, {"jumps_ge", alg_list(j.ge)}});
        } else if (chi_cmd->parsed()) {
            BPoly f = parse_poly(poly);
            Rat a = parse_rat(alpha_s);
            Flavor fl = parse_flavor(flavor_s);
            print({{"flavor", flavor_s}, {"alpha", a.get_str()}, {compact ? "chi_c" : "chi", compact ? chi_c(f, a, fl) : chi(f, a, fl)}});
        } else if (link->parsed()) {
            BPoly f = parse_poly(poly);
            Rat a = parse_rat(alpha_s);
            print({{"flavor", flavor_s}, {"alpha", a.get_str()}, {"link_chi", link_chi(f, a, parse_flavor(flavor_s), seed)}});
        } else if (branches->parsed()) {
            BPoly g = parse_poly(poly);
            print({{"half_branches", half_branches(g, seed)}, {"r_inf", r_infinity(g, seed)}});
        } else if (verify_cmd->parsed()) {
            VerifyInput in;
            if (!region.empty() || !curve.empty()) {
                in.kind = region.empty() ? VerifyInput::Kind::Curve : VerifyInput::Kind::Region;
                in.text = region.empty() ? curve : region;
            } else {
                if (poly.empty()) throw Error("expected a polynomial, --region or --curve");
                in.text = poly;
            }
            in.poly = parse_poly(in.text);
            if (!alpha_s.empty()) in.alpha = parse_rat(alpha_s);
            if (!v_s.empty()) in.v = parse_direction(v_s);
            in.seed = seed;
            in.exact_mode = mode == "exact";
            in.samples = n;
            in.tol = parse_rat(tol_s);
            IdentityReport r = verify(parse_identity(identity), in);
            print(r.to_json());
            if (r.degenerate) return 2;
            return r.pass() || r.skipped() ? 0 : 1;
        } else if (corpus->parsed()) {
            std::ifstream is(corpus_file);
            if (!is) throw Error("cannot open " + corpus_file);
            std::vector<VerifyInput> inputs;
            try {
                inputs = parse_corpus(is);
            } catch (const Error& e) {
                std::cerr << "satopo: " << e.what() << "\n";
                return 2;
            }
            CorpusResult res = run_corpus(inputs);
            json ledger = json::array();
            for (const auto& r : res.reports) ledger.push_back(r.to_json());
            print({{"reports", ledger}, {"summary", res.summary()}});
            return res.exit_code();
        } else if (gb->parsed()) {
            PlaneSet X = make_set(region, curve);
            GaussBonnet g = mode == "exact" ? gauss_bonnet_exact(X) : gauss_bonnet_sampled(X, n);
            Rat tol = parse_rat(tol_s);
            json j{{"mode", mode},           {"lambda0", g.value.get_str()},     {"lambda0_approx", g.value.get_d()},
                   {"rhs", g.rhs.get_str()}, {"error_bound", g.error.get_str()}, {"chi_x", g.chi_x},
                   {"chi_lk_x", g.chi_lk_x}, {"directions", g.samples.size()},   {"per_direction_ok", g.per_direction_ok},
                   {"arcs_consistent", g.arcs_consistent}};
            if (mode == "sampled") j["tol"] = tol.get_str();
            j["pass"] = g.per_direction_ok && g.arcs_consistent && abs(g.value - g.rhs) <= (mode == "sampled" ? tol : g.error);
            print(j);
            return j["pass"].get<bool>() ? 0 : 1;
        } else if (plot->parsed()) {
            std::string svg;
            if (!region.empty() || !curve.empty()) svg = render_svg(make_set(region, curve));
            else svg = render_svg(parse_poly(poly));
            std::ofstream os(out_file);
            if (!os) throw Error("cannot write " + out_file);
            os << svg;
        }
    } catch (const DegenerateInput& e) {
        std::cerr << "satopo: degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisViolation& e) {
        std::cerr << "satopo: hypothesis violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "satopo: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
