#pragma once

#include "toric/fan.hpp"

#include <cstddef>
#include <vector>

namespace toric {

// W(X): the lattice-linear symmetries of the fan, acting on N.
struct SymmetryGroup {
    std::vector<UnimodularMap> elements;  // sorted canonically, contains identity
    std::size_t order() const { return elements.size(); }
};

struct SymmetryVerdict {
    bool is_symmetric = false;
    std::vector<RatVec> fixed_space_basis;  // basis of the rational span of M^W
    std::size_t group_order = 0;
};

// The full group of unimodular maps permuting the rays and maximal cones.
SymmetryGroup fan_automorphisms(const Fan& fan);

// Closure of a generator set under product; throws if it exceeds the bound.
SymmetryGroup group_closure(const std::vector<UnimodularMap>& maps,
                            std::size_t bound = 1000000);

// True iff the map permutes the ray set and the maximal cone set.
bool is_fan_automorphism(const Fan& fan, const UnimodularMap& g);
bool verify_subgroup(const Fan& fan, const std::vector<UnimodularMap>& maps);

// The "symmetric" predicate: no nonzero W-invariant character, decided on the
// dual (M-side) action.
SymmetryVerdict is_symmetric(const Fan& fan, const SymmetryGroup& w);

}  // namespace toric
