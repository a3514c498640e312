#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

bool FanoPolytope::contains(const IntVec& p) const {
    for (const auto& e : facet_normals)
        if (dot(p, e) > 1) return false;
    return true;
}

namespace {

void scan_rec(const FanoPolytope& poly, const std::vector<Int>& lo, const std::vector<Int>& hi,
              const std::vector<std::vector<Int>>& suffix_min, std::vector<Int>& partial,
              IntVec& point, int k, std::vector<IntVec>& out) {
    int n = poly.dim;
    int nf = static_cast<int>(poly.facet_normals.size());
    if (k == n) {
        out.push_back(point);
        return;
    }
    for (Int y = lo[k]; y <= hi[k]; ++y) {
        point[k] = y;
        bool ok = true;
        for (int f = 0; f < nf && ok; ++f) {
            Int p = partial[f] + poly.facet_normals[f][k] * y;
            if (p + suffix_min[f][k + 1] > 1) ok = false;
        }
        if (!ok) continue;
        for (int f = 0; f < nf; ++f) partial[f] += poly.facet_normals[f][k] * y;
        scan_rec(poly, lo, hi, suffix_min, partial, point, k + 1, out);
        for (int f = 0; f < nf; ++f) partial[f] -= poly.facet_normals[f][k] * y;
    }
}

}  // namespace

std::vector<IntVec> lattice_points(const FanoPolytope& p) {
    int n = p.dim;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        lo[j] = p.vertices[0][j];
        hi[j] = p.vertices[0][j];
        for (const auto& v : p.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    int nf = static_cast<int>(p.facet_normals.size());
    // suffix_min[f][k] = least possible contribution of coordinates >= k to
    // the f-th inequality over the bounding box; drives the pruning.
    std::vector<std::vector<Int>> suffix_min(nf, std::vector<Int>(n + 1, Int(0)));
    for (int f = 0; f < nf; ++f)
        for (int k = n - 1; k >= 0; --k) {
            const Int& e = p.facet_normals[f][k];
            Int m = e > 0 ? Int(e * lo[k]) : Int(e * hi[k]);
            suffix_min[f][k] = suffix_min[f][k + 1] + m;
        }
    std::vector<IntVec> out;
    std::vector<Int> partial(nf, Int(0));
    IntVec point(n);
    scan_rec(p, lo, hi, suffix_min, partial, point, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> facet_interior_points(const FanoPolytope& p) {
    std::vector<IntVec> out;
    for (const auto& v : p.lattice_points) {
        int saturated = 0;
        for (const auto& e : p.facet_normals)
            if (dot(v, e) == 1) ++saturated;
        if (saturated == 1) out.push_back(v);
    }
    return out;
}

bool is_centrally_symmetric(const std::vector<IntVec>& s) {
    std::set<IntVec> set(s.begin(), s.end());
    for (const auto& v : s)
        if (!set.count(neg(v))) return false;
    return true;
}

FanoPolytope polytope_from_fan(const Fan& fan) {
    FanoPolytope p;
    p.dim = fan.dim;
    p.fan = fan;
    p.facet_normals = fan.rays;

    std::map<IntVec, int> vert_index;
    p.cone_vertex.resize(fan.max_cones.size());
    std::vector<IntVec> verts;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        RatVec w = dual_vertex(fan, static_cast<int>(c));
        IntVec wi(p.dim);
        for (int j = 0; j < p.dim; ++j) {
            if (denominator(w[j]) != 1)
                throw std::invalid_argument("non-integral dual vertex (fan is not regular)");
            wi[j] = numerator(w[j]);
        }
        auto [it, inserted] = vert_index.emplace(wi, static_cast<int>(verts.size()));
        if (inserted)
            verts.push_back(wi);
        else
            throw std::invalid_argument("two maximal cones share a dual vertex");
        p.cone_vertex[c] = it->second;
    }
    // Re-sort vertices canonically, keeping the cone correspondence.
    std::vector<int> order(verts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return verts[a] < verts[b]; });
    std::vector<int> inv(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        p.vertices.push_back(verts[order[i]]);
        inv[order[i]] = static_cast<int>(i);
    }
    for (auto& cv : p.cone_vertex) cv = inv[cv];

    p.lattice_points = lattice_points(p);
    p.facet_interior_points = facet_interior_points(p);
    return p;
}

namespace {

// Pulling triangulation driven by the fan's face lattice: the face of Delta
// dual to the cone spanned by ray set S has vertices {w_c : S subset of c}.
struct Triangulator {
    const FanoPolytope& p;
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

    std::vector<int> face_vertices(const std::vector<int>& s) const {
        std::vector<int> verts;
        for (size_t c = 0; c < p.fan.max_cones.size(); ++c)
            if (std::includes(p.fan.max_cones[c].begin(), p.fan.max_cones[c].end(), s.begin(),
                              s.end()))
                verts.push_back(p.cone_vertex[c]);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        return verts;
    }

    const std::vector<std::vector<int>>& triangulate(const std::vector<int>& s) {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> simplices;
        std::vector<int> verts = face_vertices(s);
        if (verts.empty()) throw std::logic_error("empty face");
        if (static_cast<int>(s.size()) == p.dim) {
            simplices.push_back({verts[0]});
        } else {
            // Apex: lex-least vertex by coordinates.
            int apex = verts[0];
            for (int v : verts)
                if (p.vertices[v] < p.vertices[apex]) apex = v;
            const auto& apex_cone = p.fan.max_cones[cone_of_vertex(apex)];
            std::set<std::vector<int>> subfaces;
            for (size_t c = 0; c < p.fan.max_cones.size(); ++c) {
                const auto& mc = p.fan.max_cones[c];
                if (!std::includes(mc.begin(), mc.end(), s.begin(), s.end())) continue;
                for (int r : mc) {
                    if (std::binary_search(s.begin(), s.end(), r)) continue;
                    std::vector<int> t = s;
                    t.insert(std::lower_bound(t.begin(), t.end(), r), r);
                    subfaces.insert(std::move(t));
                }
            }
            for (const auto& t : subfaces) {
                // Skip subfaces containing the apex.
                if (std::includes(apex_cone.begin(), apex_cone.end(), t.begin(), t.end())) continue;
                for (const auto& sub : triangulate(t)) {
                    std::vector<int> sim;
                    sim.push_back(apex);
                    sim.insert(sim.end(), sub.begin(), sub.end());
                    simplices.push_back(std::move(sim));
                }
            }
        }
        return memo.emplace(s, std::move(simplices)).first->second;
    }

    int cone_of_vertex(int v) const {
        for (size_t c = 0; c < p.cone_vertex.size(); ++c)
            if (p.cone_vertex[c] == v) return static_cast<int>(c);
        throw std::logic_error("vertex without cone");
    }
};

}  // namespace

std::vector<std::vector<int>> cone_triangulation(const FanoPolytope& p) {
    Triangulator tri{p, {}};
    std::vector<std::vector<int>> simplices;
    for (size_t r = 0; r < p.fan.rays.size(); ++r)
        for (const auto& facet_sim : tri.triangulate({static_cast<int>(r)}))
            simplices.push_back(facet_sim);
    return simplices;
}

Barycenter barycenter(const FanoPolytope& p) {
    int n = p.dim;
    Rat total = 0;
    RatVec moment(n, Rat(0));
    Int nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    for (const auto& sim : cone_triangulation(p)) {
        std::vector<IntVec> cols;
        for (int v : sim) cols.push_back(p.vertices[v]);
        Int d = IntMat::from_columns(cols).det();
        if (d == 0) continue;
        Rat vol(abs(d), nfact);
        total += vol;
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int v : sim) s += p.vertices[v][j];
            moment[j] += vol * Rat(s, n + 1);  // centroid of {0, v_1..v_n}
        }
    }
    Barycenter b;
    b.total_volume = total;
    b.point.resize(n);
    for (int j = 0; j < n; ++j) b.point[j] = moment[j] / total;
    return b;
}

}  // namespace toric
