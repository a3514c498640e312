#include "toric/certify.hpp"

#include <limits>

namespace toric {

NecessaryConditions necessary_conditions(const FanoPolytope& delta) {
    NecessaryConditions nc;
    Barycenter b = barycenter(delta);
    nc.futaki_vanishes = true;
    for (const Rat& x : b.point)
        if (x != 0) nc.futaki_vanishes = false;
    nc.aut_reductive = is_centrally_symmetric(delta.facet_interior_points);
    return nc;
}

CertificationReport certify(const Fan& fan, const CertifyOptions& opts) {
    CertificationReport rep;
    rep.dim = fan.dim;
    rep.n_rays = static_cast<int>(fan.rays.size());
    rep.n_cones = static_cast<int>(fan.max_cones.size());
    rep.validation = validate_smooth_fano(fan);

    if (!rep.validation.is_fano) {
        rep.verdict_text = "not a smooth toric Fano fan";
        return rep;
    }

    FanoPolytope delta = polytope_from_fan(fan);
    rep.combinatorics_available = true;
    rep.bary = barycenter(delta);
    rep.r_size = static_cast<int>(delta.facet_interior_points.size());
    rep.r_centrally_symmetric = is_centrally_symmetric(delta.facet_interior_points);
    rep.necessary.futaki_vanishes = true;
    for (const Rat& x : rep.bary.point)
        if (x != 0) rep.necessary.futaki_vanishes = false;
    rep.necessary.aut_reductive = rep.r_centrally_symmetric;

    if (opts.necessary_only) {
        rep.verdict_text = rep.necessary.futaki_vanishes && rep.necessary.aut_reductive
                               ? "necessary conditions hold (symmetric criterion not run)"
                               : "fails necessary conditions";
        return rep;
    }

    SymmetryGroup w = fan_automorphisms(fan);
    rep.symmetric = is_symmetric(fan, w);
    rep.symmetry_checked = true;
    rep.ek_certified = rep.validation.is_fano && rep.symmetric.is_symmetric;

    if (rep.ek_certified)
        rep.verdict_text = "EK certificate: YES (symmetric toric Fano)";
    else if (rep.necessary.futaki_vanishes && rep.necessary.aut_reductive)
        rep.verdict_text = "undecided by symmetric criterion";
    else
        rep.verdict_text = "fails necessary conditions";

    if (opts.analytic) {
        rep.analytic_ran = true;
        AnalyticModel model = make_model(delta, w);
        MethodSpec spec;
        spec.seed = opts.seed;
        rep.exp_integral = integral_exp(model, 1.0, spec);
        if (rep.ek_certified) {
            std::mt19937_64 rng(opts.seed);
            rep.positivity_min = std::numeric_limits<double>::infinity();
            rep.positivity_ok = true;
            GridSpec grid;
            grid.seed = opts.seed;
            grid.random_points = 20000;
            for (int i = 0; i < 20; ++i) {
                Potential phi = random_invariant_potential(model, rng);
                PositivityReport pr = positivity_check(model, phi, grid);
                rep.positivity_min = std::min(rep.positivity_min, pr.min_value);
                rep.positivity_ok = rep.positivity_ok && pr.ok;
                if (i < 3) {
                    MethodSpec alpha_spec;
                    alpha_spec.seed = opts.seed;
                    alpha_spec.samples = 60000;
                    rep.alpha_evidence.push_back(alpha_integral(model, 0.9, phi, alpha_spec));
                }
            }
        }
    }
    return rep;
}

}  // namespace toric
