#include "toric/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

bool is_fan_automorphism(const Fan& fan, const UnimodularMap& g) {
    if (g.rows() != fan.dim || g.cols() != fan.dim)
        throw std::invalid_argument("dimension mismatch");
    std::vector<int> ray_image(fan.rays.size());
    for (size_t i = 0; i < fan.rays.size(); ++i) {
        int j = fan.ray_index(g * fan.rays[i]);
        if (j < 0) return false;
        ray_image[i] = j;
    }
    std::set<std::vector<int>> cones(fan.max_cones.begin(), fan.max_cones.end());
    for (const auto& cone : fan.max_cones) {
        std::vector<int> img;
        for (int i : cone) img.push_back(ray_image[i]);
        std::sort(img.begin(), img.end());
        if (!cones.count(img)) return false;
    }
    return true;
}

bool verify_subgroup(const Fan& fan, const std::vector<UnimodularMap>& maps) {
    for (const auto& g : maps)
        if (!is_fan_automorphism(fan, g)) return false;
    return true;
}

namespace {

// Backtracking over ordered assignments of the base cone's generators to the
// generators of a target cone; each full assignment determines a unique
// candidate map.
struct AutoSearch {
    const Fan& fan;
    const IntMat base_inv;             // inverse of the base cone matrix
    const std::vector<int>& base;      // base cone ray indices
    std::vector<int> ray_cone_count;   // pruning invariant
    std::set<IntMat> found;

    void run() {
        for (size_t t = 0; t < fan.max_cones.size(); ++t) {
            std::vector<int> assign;
            std::vector<bool> used(fan.dim, false);
            descend(fan.max_cones[t], assign, used);
        }
    }

    void descend(const std::vector<int>& target, std::vector<int>& assign,
                 std::vector<bool>& used) {
        int k = static_cast<int>(assign.size());
        if (k == fan.dim) {
            std::vector<IntVec> cols;
            for (int i : assign) cols.push_back(fan.rays[i]);
            IntMat g = IntMat::from_columns(cols) * base_inv;
            if (is_fan_automorphism(fan, g)) found.insert(g);
            return;
        }
        for (int pos = 0; pos < fan.dim; ++pos) {
            if (used[pos]) continue;
            int candidate = target[pos];
            if (ray_cone_count[candidate] != ray_cone_count[base[k]]) continue;
            used[pos] = true;
            assign.push_back(candidate);
            descend(target, assign, used);
            assign.pop_back();
            used[pos] = false;
        }
    }
};

}  // namespace

SymmetryGroup fan_automorphisms(const Fan& fan) {
    if (fan.max_cones.empty()) throw std::invalid_argument("fan has no maximal cones");
    IntMat b0 = fan.cone_matrix(0);
    std::vector<int> counts(fan.rays.size(), 0);
    for (const auto& cone : fan.max_cones)
        for (int i : cone) counts[i]++;
    AutoSearch search{fan, b0.unimodular_inverse(), fan.max_cones[0], counts, {}};
    search.run();
    SymmetryGroup g;
    g.elements.assign(search.found.begin(), search.found.end());
    return g;
}

SymmetryGroup group_closure(const std::vector<UnimodularMap>& maps, std::size_t bound) {
    if (maps.empty()) throw std::invalid_argument("empty generator set");
    int n = maps[0].rows();
    for (const auto& g : maps)
        if (!g.is_unimodular()) throw std::invalid_argument("generator is not unimodular");
    std::set<IntMat> closure;
    closure.insert(IntMat::identity(n));
    std::vector<IntMat> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        std::vector<IntMat> next;
        for (const auto& a : frontier)
            for (const auto& g : maps) {
                IntMat p = g * a;
                if (closure.insert(p).second) {
                    if (closure.size() > bound)
                        throw std::runtime_error("group closure exceeds bound");
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }
    SymmetryGroup out;
    out.elements.assign(closure.begin(), closure.end());
    return out;
}

SymmetryVerdict is_symmetric(const Fan& fan, const SymmetryGroup& w) {
    (void)fan;
    std::vector<UnimodularMap> duals;
    for (const auto& g : w.elements) duals.push_back(dual_map(g));
    SymmetryVerdict v;
    v.group_order = w.order();
    v.fixed_space_basis = fixed_subspace(duals);
    v.is_symmetric = v.fixed_space_basis.empty();
    return v;
}

}  // namespace toric
