#pragma once

#include "toric/fan.hpp"

#include <vector>

namespace toric {

// The reflexive polytope Delta in M_R cut out by <y, e> <= 1 over the ray
// generators e of the fan.
struct FanoPolytope {
    int dim = 0;
    Fan fan;
    std::vector<IntVec> facet_normals;          // = fan.rays
    std::vector<IntVec> vertices;               // lex sorted, dedup
    std::vector<int> cone_vertex;               // max cone index -> vertex index
    std::vector<IntVec> lattice_points;         // L(Delta), lex sorted
    std::vector<IntVec> facet_interior_points;  // R(Delta), lex sorted

    bool contains(const IntVec& p) const;
};

struct Barycenter {
    RatVec point;
    Rat total_volume;  // lattice-normalized Euclidean volume
};

// Requires a fan that passes validate_smooth_fano.
FanoPolytope polytope_from_fan(const Fan& fan);

// Integer points satisfying every facet inequality, by pruned box scan.
std::vector<IntVec> lattice_points(const FanoPolytope& p);

// Points of L(Delta) saturating exactly one facet inequality.
std::vector<IntVec> facet_interior_points(const FanoPolytope& p);

bool is_centrally_symmetric(const std::vector<IntVec>& s);

// Exact rational centroid via a pulling triangulation coned from the origin.
Barycenter barycenter(const FanoPolytope& p);

// The simplices of the triangulation used by barycenter: each is the origin
// together with dim vertex indices. Exposed for oracle tests.
std::vector<std::vector<int>> cone_triangulation(const FanoPolytope& p);

}  // namespace toric
