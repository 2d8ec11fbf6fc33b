#include "locpos/json_io.hpp"

namespace locpos {

using nlohmann::json;

namespace {

json rat_vector(const std::vector<Rat>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(rat_to_string(v));
    return out;
}

json exponent_vector(const ExponentVector& alpha) {
    json out = json::array();
    for (unsigned e : alpha) out.push_back(e);
    return out;
}

}  // namespace

json polytope_to_json(const NewtonPolytope& np, const std::vector<Face>& faces) {
    json out;
    out["points"] = json::array();
    for (const auto& p : np.points) out["points"].push_back(exponent_vector(p));
    out["vertices"] = np.vertex_indices;
    out["facets"] = json::array();
    for (const auto& f : np.facets)
        out["facets"].push_back(
            {{"normal", rat_vector(f.normal)}, {"offset", rat_to_string(f.offset)}});
    out["faces"] = json::array();
    for (const auto& f : faces)
        out["faces"].push_back(
            {{"normal", rat_vector(f.normal)}, {"members", f.member_indices}});
    return out;
}

json witness_to_json(const Witness& witness) {
    json out;
    if (witness.curve) {
        const CurveWitness& cw = *witness.curve;
        out["type"] = "curve";
        out["curve"] = {{"signs", cw.signs},
                        {"weights", cw.weights},
                        {"coeffs", cw.coeffs}};
        out["lowest_degree"] = cw.lowest_degree;
        out["lowest_coefficient"] = rat_to_string(cw.lowest_coefficient);
        out["failure_mode"] = cw.failure_mode == CurveFailureMode::NegativeCoefficient
                                  ? "negative-coefficient"
                                  : "odd-degree";
    } else if (witness.point) {
        out["type"] = "point";
        out["point"] = rat_vector(witness.point->point);
        out["value"] = rat_to_string(witness.point->value);
    }
    return out;
}

json verdict_to_json(const Verdict& verdict) {
    json out;
    switch (verdict.kind) {
        case Verdict::Kind::Certified: out["verdict"] = "certified"; break;
        case Verdict::Kind::Refuted: out["verdict"] = "refuted"; break;
        case Verdict::Kind::Unknown: out["verdict"] = "unknown"; break;
    }
    out["reason"] = verdict.reason;
    if (verdict.theorem1_path) out["theorem-1-path"] = true;
    if (verdict.certificate) {
        const Certificate& cert = *verdict.certificate;
        out["principal_part"] = cert.principal.format();
        out["T"] = cert.T;
        out["radius"] = cert.radius;
        out["orthants"] = json::array();
        for (const auto& oc : cert.orthants)
            out["orthants"].push_back({{"signs", oc.orthant.representative},
                                       {"m", oc.handelman.m},
                                       {"k1", rat_to_string(oc.handelman.k1)},
                                       {"tau", rat_to_string(oc.tau.tau)}});
        out["anchors"] = json::array();
        for (const auto& ta : cert.tail_anchors)
            out["anchors"].push_back({{"beta", exponent_vector(ta.anchor.beta)},
                                      {"beta_hat", rat_vector(ta.anchor.beta_hat)},
                                      {"delta", rat_vector(ta.anchor.delta)},
                                      {"k_beta_hat", rat_to_string(ta.anchor.k_beta_hat)}});
    }
    if (verdict.witness) out["witness"] = witness_to_json(*verdict.witness);
    if (verdict.failure) {
        json fail;
        fail["face"] = verdict.failure->face.format();
        fail["orthant"] = verdict.failure->orthant;
        if (verdict.failure->point) fail["point"] = rat_vector(*verdict.failure->point);
        if (verdict.failure->value)
            fail["value"] = rat_to_string(*verdict.failure->value);
        fail["description"] = verdict.failure->description;
        out["failure"] = fail;
    }
    return out;
}

}  // namespace locpos
