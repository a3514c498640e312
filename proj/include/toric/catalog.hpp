#pragma once

#include "toric/fan.hpp"
#include "toric/symmetry.hpp"

#include <string>
#include <vector>

namespace toric {

// The four example families: V_k (n = 2k), S_{m,k} (n = 2m+1),
// X_{m,k} (n = 2m+2), W_m (n = 2m).
enum class Family { V, S, X, W };

struct FamilySpec {
    Family family;
    int m = 0;  // unused for V
    int k = 0;  // unused for W

    int dimension() const;
    std::string name() const;
};

Fan family_fan(const FamilySpec& spec);

// The explicit symmetry witnesses: {-id} for V_k, {alpha, beta} otherwise.
std::vector<UnimodularMap> family_witnesses(const FamilySpec& spec);

// Exhaustive enumeration of complete regular 2-d Fano fans with primitive ray
// coordinates bounded by coord_bound, one representative per lattice
// equivalence class.
std::vector<Fan> enumerate_smooth_fano_surfaces(int coord_bound = 3);

bool lattice_equivalent(const Fan& f1, const Fan& f2);

}  // namespace toric
