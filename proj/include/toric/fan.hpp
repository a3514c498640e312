#pragma once

#include "toric/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// Complete regular fan in N_R: primitive ray generators plus maximal cones
// given as index sets of size dim.
struct Fan {
    int dim = 0;
    std::vector<IntVec> rays;                 // primitive, lex sorted
    std::vector<std::vector<int>> max_cones;  // each sorted; list lex sorted

    // Generator matrix of a maximal cone (columns = rays).
    IntMat cone_matrix(int cone_index) const;
    int ray_index(const IntVec& r) const;  // -1 if absent
};

struct ValidationReport {
    bool is_primitive_ok = false;
    bool is_complete = false;
    bool is_regular = false;
    bool is_fano = false;
    std::vector<std::string> diagnostics;

    bool all_ok() const { return is_primitive_ok && is_complete && is_regular && is_fano; }
};

// A supporting facet of conv(points): {x : <normal, x> = level} with all
// points on the <= side. on_facet lists the indices at equality.
struct HullFacet {
    RatVec normal;
    std::vector<int> on_facet;
};

// Facets of conv(points) for a point set with 0 strictly inside its hull.
// Throws "degenerate ray set" when the points do not positively span.
std::vector<HullFacet> hull_facets(int dim, const std::vector<IntVec>& points);

// Normalizes rays to primitive form; infers max_cones as the facets of
// conv(rays) when absent. Canonical ordering throughout.
Fan build_fan(int dim, const std::vector<IntVec>& raw_rays,
              const std::optional<std::vector<std::vector<int>>>& max_cones = std::nullopt);

ValidationReport validate_smooth_fano(const Fan& fan);

// The unique w with <w, e> = 1 for every generator e of the cone; integral
// for a regular cone.
RatVec dual_vertex(const Fan& fan, int cone_index);

// Indices of maximal cones containing y (boundary points may lie in several).
std::vector<int> locate_cones(const Fan& fan, const RatVec& y);

}  // namespace toric
