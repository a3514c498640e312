#include "toric/fanfile.hpp"

#include <cstdio>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json estimate_to_json(const IntegralEstimate& e) {
    return json{{"bound", round12(e.bound)},
                {"bound_ok", e.bound_ok},
                {"method", e.method},
                {"samples", e.samples},
                {"seed", e.seed},
                {"standard_error", round12(e.standard_error)},
                {"value", round12(e.value)}};
}

}  // namespace

FanFile parse_fan_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed fan file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("fan file must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "dim" && key != "rays" && key != "max_cones" && key != "name")
            throw std::invalid_argument("unknown field \"" + key + "\"");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("missing or non-integer \"dim\"");
    if (!j.contains("rays") || !j["rays"].is_array())
        throw std::invalid_argument("missing or non-array \"rays\"");
    FanFile f;
    f.dim = j["dim"].get<int>();
    if (f.dim < 1) throw std::invalid_argument("\"dim\" must be positive");
    for (const auto& ray : j["rays"]) {
        if (!ray.is_array() || static_cast<int>(ray.size()) != f.dim)
            throw std::invalid_argument("each ray must be an integer vector of length dim");
        IntVec v;
        for (const auto& c : ray) {
            if (!c.is_number_integer())
                throw std::invalid_argument("ray coordinates must be integers");
            v.push_back(Int(c.get<long long>()));
        }
        f.rays.push_back(std::move(v));
    }
    if (j.contains("max_cones")) {
        if (!j["max_cones"].is_array()) throw std::invalid_argument("\"max_cones\" must be an array");
        std::vector<std::vector<int>> cones;
        for (const auto& cone : j["max_cones"]) {
            if (!cone.is_array()) throw std::invalid_argument("each cone must be an index array");
            std::vector<int> c;
            for (const auto& i : cone) {
                if (!i.is_number_integer())
                    throw std::invalid_argument("cone entries must be integers");
                int idx = i.get<int>();
                if (idx < 0 || idx >= static_cast<int>(f.rays.size())) {
                    std::ostringstream os;
                    os << "index " << idx << " out of range";
                    throw std::invalid_argument(os.str());
                }
                c.push_back(idx);
            }
            cones.push_back(std::move(c));
        }
        f.max_cones = std::move(cones);
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument("\"name\" must be a string");
        f.name = j["name"].get<std::string>();
    }
    return f;
}

FanFile fan_file_from_fan(const Fan& fan, const std::string& name) {
    FanFile f;
    f.dim = fan.dim;
    f.rays = fan.rays;
    f.max_cones = fan.max_cones;
    if (!name.empty()) f.name = name;
    return f;
}

std::string serialize_fan_file(const FanFile& f) {
    json j;
    j["dim"] = f.dim;
    json rays = json::array();
    for (const auto& r : f.rays) {
        json row = json::array();
        for (const Int& c : r) row.push_back(c.convert_to<long long>());
        rays.push_back(row);
    }
    j["rays"] = rays;
    if (f.max_cones) j["max_cones"] = *f.max_cones;
    if (f.name) j["name"] = *f.name;
    return j.dump(2) + "\n";
}

std::string rational_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

std::string rational_vector_string(const RatVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rational_string(v[i]);
    }
    return s + ")";
}

json report_to_json(const CertificationReport& rep) {
    json j;
    j["name"] = rep.name;
    j["dim"] = rep.dim;
    j["n_rays"] = rep.n_rays;
    j["n_cones"] = rep.n_cones;
    j["validation"] = {{"diagnostics", rep.validation.diagnostics},
                       {"is_complete", rep.validation.is_complete},
                       {"is_fano", rep.validation.is_fano},
                       {"is_primitive_ok", rep.validation.is_primitive_ok},
                       {"is_regular", rep.validation.is_regular}};
    if (rep.combinatorics_available) {
        json bc = json::array();
        for (const Rat& x : rep.bary.point) bc.push_back(rational_string(x));
        j["barycenter"] = bc;
        j["volume"] = rational_string(rep.bary.total_volume);
        j["r_delta_size"] = rep.r_size;
        j["r_centrally_symmetric"] = rep.r_centrally_symmetric;
        j["futaki_vanishes"] = rep.necessary.futaki_vanishes;
        j["aut_reductive"] = rep.necessary.aut_reductive;
    }
    if (rep.symmetry_checked) {
        json fixed = json::array();
        for (const auto& b : rep.symmetric.fixed_space_basis)
            fixed.push_back(rational_vector_string(b));
        j["symmetric"] = {{"fixed_space_basis", fixed},
                          {"group_order", rep.symmetric.group_order},
                          {"is_symmetric", rep.symmetric.is_symmetric}};
    }
    j["ek_certified"] = rep.ek_certified;
    j["verdict"] = rep.verdict_text;
    if (rep.analytic_ran) {
        json a;
        a["integral_exp_tau1"] = estimate_to_json(rep.exp_integral);
        json alphas = json::array();
        for (const auto& e : rep.alpha_evidence) alphas.push_back(estimate_to_json(e));
        a["alpha_integral_lambda09"] = alphas;
        if (rep.ek_certified) {
            a["positivity_min"] = round12(rep.positivity_min);
            a["positivity_ok"] = rep.positivity_ok;
        }
        j["analytic"] = a;
    }
    return j;
}

std::string report_to_text(const CertificationReport& rep) {
    std::ostringstream os;
    if (!rep.name.empty()) os << rep.name << ": ";
    os << "dim " << rep.dim << ", " << rep.n_rays << " rays, " << rep.n_cones
       << " maximal cones\n";
    os << "  validation: primitive=" << (rep.validation.is_primitive_ok ? "ok" : "FAIL")
       << " complete=" << (rep.validation.is_complete ? "ok" : "FAIL")
       << " regular=" << (rep.validation.is_regular ? "ok" : "FAIL")
       << " fano=" << (rep.validation.is_fano ? "ok" : "FAIL") << "\n";
    for (const auto& d : rep.validation.diagnostics) os << "    ! " << d << "\n";
    if (rep.combinatorics_available) {
        os << "  barycenter: " << rational_vector_string(rep.bary.point) << "\n";
        os << "  |R(Delta)| = " << rep.r_size << ", centrally symmetric: "
           << (rep.r_centrally_symmetric ? "yes" : "no") << "\n";
        os << "  Futaki character vanishes: " << (rep.necessary.futaki_vanishes ? "yes" : "no")
           << ", Aut reductive: " << (rep.necessary.aut_reductive ? "yes" : "no") << "\n";
    }
    if (rep.symmetry_checked) {
        os << "  |W(X)| = " << rep.symmetric.group_order << ", symmetric: "
           << (rep.symmetric.is_symmetric ? "yes" : "no") << "\n";
        for (const auto& b : rep.symmetric.fixed_space_basis)
            os << "    fixed-space witness: " << rational_vector_string(b) << "\n";
    }
    if (rep.analytic_ran) {
        os << "  integral_exp(tau=1): " << rep.exp_integral.value
           << " <= " << rep.exp_integral.bound
           << (rep.exp_integral.bound_ok ? " (ok)" : " (VIOLATED)") << "\n";
        for (const auto& e : rep.alpha_evidence)
            os << "  alpha_integral(lambda=0.9): " << e.value << " <= " << e.bound
               << (e.bound_ok ? " (ok)" : " (VIOLATED)") << "\n";
        if (rep.ek_certified)
            os << "  positivity min over seeded potentials: " << rep.positivity_min
               << (rep.positivity_ok ? " (ok)" : " (VIOLATED)") << "\n";
    }
    if (rep.ek_certified)
        os << "EK certificate: YES (symmetric toric Fano)\n";
    else
        os << "EK certificate: NO - " << rep.verdict_text << "\n";
    return os.str();
}

}  // namespace toric
