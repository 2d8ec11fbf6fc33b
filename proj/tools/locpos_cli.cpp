#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locpos/certify.hpp"
#include "locpos/json_io.hpp"
#include "locpos/newton.hpp"
#include "locpos/oracle.hpp"
#include "locpos/refute.hpp"

namespace {

using namespace locpos;

constexpr int kExitCertified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct CommonArgs {
    std::string poly_text;
    std::string vars;
    bool json = false;
    CertifyOptions certify;
    unsigned max_weight = 6;
    unsigned grid_depth = 4;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("poly", args.poly_text, "polynomial, or @file to read from a file")
        ->required();
    cmd->add_option("--vars", args.vars, "comma-separated variable order");
    cmd->add_flag("--json", args.json, "emit machine-readable JSON");
    cmd->add_option("--m-max", args.certify.m_max, "Handelman exponent limit");
    cmd->add_option("--budget-terms", args.certify.budget_terms,
                    "product term-count budget");
    cmd->add_option("--budget-bits", args.certify.budget_bits,
                    "coefficient bit-size budget");
    cmd->add_option("--max-weight", args.max_weight, "curve search weight limit");
    cmd->add_option("--grid-depth", args.grid_depth, "refutation grid depth");
    cmd->add_option("--seed", args.certify.seed, "sampling seed");
}

SparsePolynomial load_polynomial(const CommonArgs& args) {
    std::string text = args.poly_text;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw std::invalid_argument("cannot open file: " + text.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::optional<std::vector<std::string>> order;
    if (!args.vars.empty()) {
        std::vector<std::string> names;
        std::stringstream ss(args.vars);
        std::string name;
        while (std::getline(ss, name, ',')) names.push_back(name);
        order = names;
    }
    return parse_polynomial(text, order);
}

std::vector<UnivariatePolynomial> parse_curve(const std::string& spec, unsigned arity) {
    std::vector<UnivariatePolynomial> phi;
    std::stringstream ss(spec);
    std::string component;
    while (std::getline(ss, component, ',')) {
        SparsePolynomial p = parse_polynomial(component, std::vector<std::string>{"t"});
        UnivariatePolynomial u;
        for (const auto& [alpha, c] : p.terms()) u.add_term(alpha[0], c);
        phi.push_back(std::move(u));
    }
    if (phi.size() != arity)
        throw std::invalid_argument("curve component count does not match arity");
    return phi;
}

int verdict_exit(const Verdict& v) {
    switch (v.kind) {
        case Verdict::Kind::Certified: return kExitCertified;
        case Verdict::Kind::Refuted: return kExitRefuted;
        case Verdict::Kind::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

void print_verdict_text(const Verdict& v, const CorollaryFlags* flags) {
    switch (v.kind) {
        case Verdict::Kind::Certified: std::cout << "verdict: certified"; break;
        case Verdict::Kind::Refuted: std::cout << "verdict: refuted"; break;
        case Verdict::Kind::Unknown:
            std::cout << "verdict: unknown (" << v.reason << ")";
            break;
    }
    if (v.theorem1_path) std::cout << " [theorem-1-path]";
    std::cout << "\n";
    if (v.certificate) {
        const Certificate& c = *v.certificate;
        std::cout << "principal part: " << c.principal.format() << "\n";
        std::cout << "tail terms: " << c.T << "\n";
        for (const auto& oc : c.orthants) {
            std::cout << "orthant [";
            for (std::size_t i = 0; i < oc.orthant.representative.size(); ++i)
                std::cout << (i ? "," : "")
                          << (oc.orthant.representative[i] > 0 ? "+" : "-");
            std::cout << "]: m=" << oc.handelman.m
                      << " k1=" << rat_to_string(oc.handelman.k1)
                      << " tau=" << rat_to_string(oc.tau.tau) << "\n";
        }
        std::cout << "radius: " << c.radius << "\n";
    }
    if (v.witness && v.witness->curve) {
        const CurveWitness& cw = *v.witness->curve;
        std::cout << "curve witness: ";
        if (cw.weights.empty()) std::cout << "(as supplied)";
        for (std::size_t i = 0; i < cw.weights.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << (cw.signs[i] < 0 ? "-" : "");
            if (cw.coeffs[i] != 1) std::cout << cw.coeffs[i] << "*";
            std::cout << "t^" << cw.weights[i];
        }
        std::cout << "\nlowest term: degree " << cw.lowest_degree << ", coefficient "
                  << rat_to_string(cw.lowest_coefficient) << "\n";
    }
    if (v.witness && v.witness->point) {
        std::cout << "point witness: (";
        for (std::size_t i = 0; i < v.witness->point->point.size(); ++i)
            std::cout << (i ? ", " : "") << rat_to_string(v.witness->point->point[i]);
        std::cout << ") -> " << rat_to_string(v.witness->point->value) << "\n";
    }
    if (v.failure) {
        std::cout << "failing face: " << v.failure->face.format() << "\n";
        if (v.failure->point) {
            std::cout << "at point (";
            for (std::size_t i = 0; i < v.failure->point->size(); ++i)
                std::cout << (i ? ", " : "") << rat_to_string((*v.failure->point)[i]);
            std::cout << ") -> " << rat_to_string(*v.failure->value) << "\n";
        }
        std::cout << v.failure->description << "\n";
    }
    if (flags) {
        std::cout << "homogeneous_pd: " << (flags->homogeneous_pd ? "true" : "false")
                  << "\n";
        std::cout << "isolated_singularity: "
                  << (flags->isolated_singularity ? "true" : "false") << "\n";
    }
}

int run_analyze(const CommonArgs& args) {
    SparsePolynomial f = load_polynomial(args);
    if (f.is_zero()) {
        std::cout << (args.json ? "{}" : "zero polynomial\n");
        return 0;
    }
    auto [f_N, tail] = principal_part(f);
    NewtonPolytope np = polytope(f.support());
    std::vector<Face> gamma = diagram_faces(f);
    SparsePolynomial fv = vertex_characteristic(f_N);
    HessianReport hess = hessian_check(f);

    if (args.json) {
        nlohmann::json out = polytope_to_json(np, enumerate_faces(np));
        out["principal_part"] = f_N.format();
        out["tail"] = tail.format();
        out["vertex_characteristic"] = fv.format();
        nlohmann::json diagram = nlohmann::json::array();
        for (const auto& face : gamma) {
            nlohmann::json jf;
            jf["members"] = nlohmann::json::array();
            for (const auto& m : face.members) jf["members"].push_back(m);
            diagram.push_back(jf);
        }
        out["diagram_faces"] = diagram;
        out["hessian"] = {{"applicable", hess.applicable},
                          {"positive_definite", hess.positive_definite}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "polynomial: " << f.format() << "\n";
    std::cout << "support (" << f.term_count() << " terms):\n";
    for (const auto& alpha : f.support()) {
        std::cout << "  (";
        for (std::size_t i = 0; i < alpha.size(); ++i)
            std::cout << (i ? "," : "") << alpha[i];
        std::cout << ")\n";
    }
    std::cout << "N(f) vertices:\n";
    for (const auto& v : np.vertices()) {
        std::cout << "  (";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")\n";
    }
    std::cout << "diagram faces: " << gamma.size() << "\n";
    std::cout << "principal part: " << f_N.format() << "\n";
    std::cout << "tail: " << tail.format() << "\n";
    std::cout << "vertex characteristic: " << fv.format() << "\n";
    std::cout << "hessian applicable: " << (hess.applicable ? "true" : "false")
              << ", positive definite: " << (hess.positive_definite ? "true" : "false")
              << "\n";
    return 0;
}

int run_certify(const CommonArgs& args) {
    SparsePolynomial f = load_polynomial(args);
    Verdict v = certify_local_nonnegative(f, args.certify);
    if (args.json)
        std::cout << verdict_to_json(v).dump(2) << "\n";
    else
        print_verdict_text(v, nullptr);
    return verdict_exit(v);
}

int run_refute(const CommonArgs& args, const std::string& curve_spec) {
    SparsePolynomial f = load_polynomial(args);
    Verdict v;
    if (!curve_spec.empty()) {
        std::vector<UnivariatePolynomial> phi = parse_curve(curve_spec, f.arity());
        CurveCheck check = curve_condition(f, phi);
        if (check.outcome == CurveOutcome::Fail) {
            v.kind = Verdict::Kind::Refuted;
            Witness w;
            CurveWitness cw;
            cw.lowest_degree = *check.lowest_degree;
            cw.lowest_coefficient = *check.lowest_coefficient;
            cw.failure_mode = *check.failure_mode;
            // User-supplied curve: store as given only when monomial.
            w.curve = cw;
            v.witness = std::move(w);
        } else {
            v.kind = Verdict::Kind::Unknown;
            v.reason = check.outcome == CurveOutcome::Vanishes ? "curve-vanishes"
                                                               : "curve-passes";
        }
    } else {
        std::optional<CurveWitness> curve = curve_search(f, args.max_weight);
        if (curve) {
            v.kind = Verdict::Kind::Refuted;
            Witness w;
            w.curve = curve;
            v.witness = std::move(w);
        } else {
            GridResult grid = grid_search(f, Rat(1), args.grid_depth);
            if (grid.witness) {
                v.kind = Verdict::Kind::Refuted;
                Witness w;
                w.point = grid.witness;
                v.witness = std::move(w);
            } else {
                v.kind = Verdict::Kind::Unknown;
                v.reason = "no-witness-found";
            }
        }
    }
    if (args.json)
        std::cout << verdict_to_json(v).dump(2) << "\n";
    else
        print_verdict_text(v, nullptr);
    return verdict_exit(v);
}

int run_check(const CommonArgs& args) {
    SparsePolynomial f = load_polynomial(args);
    HessianReport hess = hessian_check(f);
    Verdict v = certify_local_nonnegative(f, args.certify);

    // A positive definite Hessian alone certifies a local minimum, so it can
    // rescue a budget-exhausted certification.
    if (v.kind == Verdict::Kind::Unknown && v.reason == "budget-exhausted" &&
        hess.applicable && hess.positive_definite) {
        v.kind = Verdict::Kind::Certified;
        v.reason.clear();
        v.theorem1_path = true;
    }

    if (v.kind != Verdict::Kind::Certified) {
        std::optional<CurveWitness> curve = curve_search(f, args.max_weight);
        if (curve) {
            v.kind = Verdict::Kind::Refuted;
            Witness w;
            w.curve = curve;
            v.witness = std::move(w);
        } else {
            GridResult grid = grid_search(f, Rat(1), args.grid_depth);
            if (grid.witness) {
                v.kind = Verdict::Kind::Refuted;
                Witness w;
                w.point = grid.witness;
                v.witness = std::move(w);
            }
        }
    }

    CorollaryFlags flags = corollary_flags(f, v);
    if (args.json) {
        nlohmann::json out = verdict_to_json(v);
        out["hessian"] = {{"applicable", hess.applicable},
                          {"positive_definite", hess.positive_definite}};
        out["homogeneous_pd"] = flags.homogeneous_pd;
        out["isolated_singularity"] = flags.isolated_singularity;
        std::cout << out.dump(2) << "\n";
    } else {
        print_verdict_text(v, &flags);
    }
    return verdict_exit(v);
}

int run_oracle(const CommonArgs& args, const std::string& box_text, unsigned depth) {
    SparsePolynomial f = load_polynomial(args);
    Rat box = parse_rat(box_text);
    BoxScan scan = box_minimum(f, box, depth);
    if (args.json) {
        nlohmann::json out;
        out["box"] = rat_to_string(scan.box);
        out["step_exponent"] = scan.step_exponent;
        out["minimum"] = rat_to_string(scan.minimum);
        nlohmann::json argmin = nlohmann::json::array();
        for (const auto& v : scan.argmin) argmin.push_back(rat_to_string(v));
        out["argmin"] = argmin;
        out["evaluations"] = scan.evaluations;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "minimum: " << rat_to_string(scan.minimum) << " at (";
        for (std::size_t i = 0; i < scan.argmin.size(); ++i)
            std::cout << (i ? ", " : "") << rat_to_string(scan.argmin[i]);
        std::cout << ") over " << scan.evaluations << " evaluations\n";
    }
    return scan.minimum < 0 ? kExitRefuted : kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local nonnegativity analysis of polynomials at the origin"};
    app.require_subcommand(1);

    CommonArgs analyze_args, certify_args, refute_args, check_args, oracle_args;
    std::string curve_spec, box_text = "1";
    unsigned oracle_depth = 3;

    add_common(app.add_subcommand("analyze",
                                  "Newton polytope, diagram and principal part"),
               analyze_args);
    add_common(app.add_subcommand("certify", "run the positivity certificate pipeline"),
               certify_args);
    CLI::App* refute_cmd =
        app.add_subcommand("refute", "search for a refutation witness");
    add_common(refute_cmd, refute_args);
    refute_cmd->add_option("--curve", curve_spec,
                           "explicit curve, comma-separated polynomials in t");
    add_common(app.add_subcommand("check", "hessian, certify, then refute"), check_args);
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact box scan");
    add_common(oracle_cmd, oracle_args);
    oracle_cmd->add_option("--box", box_text, "box half-width (rational)");
    oracle_cmd->add_option("--depth", oracle_depth, "dyadic subdivision depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand("analyze")) return run_analyze(analyze_args);
        if (app.got_subcommand("certify")) return run_certify(certify_args);
        if (app.got_subcommand("refute")) return run_refute(refute_args, curve_spec);
        if (app.got_subcommand("check")) return run_check(check_args);
        if (app.got_subcommand("oracle"))
            return run_oracle(oracle_args, box_text, oracle_depth);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
