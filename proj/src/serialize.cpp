#include "nsg/serialize.hpp"

namespace nsg {
namespace {

template <typename T>
Json opt_json(const std::optional<T>& v) {
    if (v) return Json(*v);
    return Json(nullptr);
}

void append_opt(std::string& out, const std::optional<std::int64_t>& v) {
    out += ',';
    if (v) out += std::to_string(*v);
}

void append_opt_bool(std::string& out, const std::optional<bool>& v) {
    out += ',';
    if (v) out += *v ? "true" : "false";
}

}  // namespace

Json to_json(const InvariantReport& r) {
    Json j;
    j["generators"] = r.generators;
    j["threshold"] = opt_json(r.threshold);
    j["min_generators"] = r.min_generators;
    j["m"] = r.m;
    j["c"] = r.c;
    j["f"] = r.f;
    j["e"] = r.e;
    j["e_s"] = opt_json(r.e_s);
    j["e_c"] = opt_json(r.e_c);
    j["delta"] = r.delta;
    j["q"] = opt_json(r.q);
    j["nu"] = opt_json(r.nu);
    j["L"] = opt_json(r.l);
    j["rho"] = opt_json(r.rho);
    j["concentration"] = r.concentration;
    j["mu"] = r.mu;
    j["eliahou"] = opt_json(r.eliahou);
    j["wilf_e"] = r.wilf_e;
    j["wilf_es"] = opt_json(r.wilf_es);
    j["wilf_mu"] = r.wilf_mu;
    j["type"] = opt_json(r.type);
    j["symmetric"] = opt_json(r.symmetric);
    j["pseudo_symmetric"] = opt_json(r.pseudo_symmetric);
    j["highly_dense"] = opt_json(r.highly_dense);
    return j;
}

Json to_json(const TheoremVerdict& v) {
    Json j;
    j["theorem"] = std::string(to_string(v.id));
    j["hypotheses_met"] = v.hypotheses_met;
    j["conclusion_holds"] = v.conclusion_holds ? Json(*v.conclusion_holds) : Json(nullptr);
    Json w;
    for (const auto& [key, value] : v.witness) w[key] = value;
    j["witness"] = w;
    return j;
}

std::string csv_header() {
    return "generators,threshold,m,c,e,e_s,e_c,delta,q,nu,L,rho,concentration,mu,"
           "eliahou,wilf_e,wilf_mu,type,symmetric,pseudo_symmetric,highly_dense";
}

std::string to_csv_row(const InvariantReport& r) {
    std::string out = "\"";
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(r.generators[i]);
    }
    out += '"';
    append_opt(out, r.threshold);
    out += ',' + std::to_string(r.m);
    out += ',' + std::to_string(r.c);
    out += ',' + std::to_string(r.e);
    append_opt(out, r.e_s);
    append_opt(out, r.e_c);
    out += ',' + std::to_string(r.delta);
    append_opt(out, r.q);
    append_opt(out, r.nu);
    append_opt(out, r.l);
    append_opt(out, r.rho);
    out += ',' + std::to_string(r.concentration);
    out += ',' + std::to_string(r.mu);
    append_opt(out, r.eliahou);
    out += ',' + std::to_string(r.wilf_e);
    out += ',' + std::to_string(r.wilf_mu);
    append_opt(out, r.type);
    append_opt_bool(out, r.symmetric);
    append_opt_bool(out, r.pseudo_symmetric);
    append_opt_bool(out, r.highly_dense);
    return out;
}

}  // namespace nsg
