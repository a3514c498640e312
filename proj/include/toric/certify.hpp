#pragma once

#include "toric/analytic.hpp"
#include "toric/polytope.hpp"
#include "toric/symmetry.hpp"

#include <string>
#include <vector>

namespace toric {

struct NecessaryConditions {
    bool futaki_vanishes = false;  // barycenter exactly 0
    bool aut_reductive = false;    // R(Delta) centrally symmetric
};

NecessaryConditions necessary_conditions(const FanoPolytope& delta);

struct CertifyOptions {
    bool analytic = false;        // attach integral / positivity evidence
    bool necessary_only = false;  // skip the automorphism search
    std::uint64_t seed = kDefaultSeed;
};

struct CertificationReport {
    std::string name;
    int dim = 0;
    int n_rays = 0;
    int n_cones = 0;
    ValidationReport validation;

    bool combinatorics_available = false;  // polytope data below is populated
    Barycenter bary;
    int r_size = 0;
    bool r_centrally_symmetric = false;
    NecessaryConditions necessary;

    bool symmetry_checked = false;
    SymmetryVerdict symmetric;

    bool ek_certified = false;
    std::string verdict_text;

    // Optional analytic evidence.
    bool analytic_ran = false;
    IntegralEstimate exp_integral;                 // tau = 1
    std::vector<IntegralEstimate> alpha_evidence;  // lambda = 0.9, sample potentials
    double positivity_min = 0.0;                   // worst over seeded potentials
    bool positivity_ok = false;
};

CertificationReport certify(const Fan& fan, const CertifyOptions& opts = {});

}  // namespace toric
