#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace toric {

IntMat Fan::cone_matrix(int cone_index) const {
    std::vector<IntVec> gens;
    for (int i : max_cones[cone_index]) gens.push_back(rays[i]);
    return IntMat::from_columns(gens);
}

int Fan::ray_index(const IntVec& r) const {
    auto it = std::lower_bound(rays.begin(), rays.end(), r);
    if (it != rays.end() && *it == r) return static_cast<int>(it - rays.begin());
    return -1;
}

namespace {

// All dim-subsets of [0, count) via simple recursion.
void for_each_subset(int count, int size, std::vector<int>& cur, int next,
                     const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    for (int i = next; i <= count - (size - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        for_each_subset(count, size, cur, i + 1, fn);
        cur.pop_back();
    }
}

void check_positive_span(int dim, const std::vector<IntVec>& points) {
    IntMat all(static_cast<int>(points.size()), dim);
    for (size_t i = 0; i < points.size(); ++i)
        for (int j = 0; j < dim; ++j) all(static_cast<int>(i), j) = points[i][j];
    if (rank(all) != dim) throw std::invalid_argument("degenerate ray set");

    // The points positively span iff no hyperplane through 0 spanned by
    // dim-1 of them has all points on one closed side.
    std::vector<int> cur;
    bool degenerate = false;
    for_each_subset(static_cast<int>(points.size()), dim - 1, cur, 0,
                    [&](const std::vector<int>& idx) {
                        if (degenerate) return;
                        IntMat sub(dim - 1, dim);
                        for (int i = 0; i < dim - 1; ++i)
                            for (int j = 0; j < dim; ++j) sub(i, j) = points[idx[i]][j];
                        auto ker = rational_kernel(sub);
                        if (ker.size() != 1) return;
                        const RatVec& w = ker[0];
                        bool pos = false, negs = false;
                        for (const auto& p : points) {
                            Rat d = dot(w, p);
                            if (d > 0) pos = true;
                            if (d < 0) negs = true;
                        }
                        if (!pos || !negs) degenerate = true;
                    });
    if (degenerate) throw std::invalid_argument("degenerate ray set");
}

}  // namespace

std::vector<HullFacet> hull_facets(int dim, const std::vector<IntVec>& points) {
    check_positive_span(dim, points);
    // 0 is strictly interior, so every facet hyperplane is {<w, x> = 1} for
    // a unique rational w; scan dim-subsets for supporting hyperplanes.
    std::map<RatVec, std::vector<int>> facets;
    std::vector<int> cur;
    for_each_subset(static_cast<int>(points.size()), dim, cur, 0,
                    [&](const std::vector<int>& idx) {
                        IntMat sub(dim, dim);
                        for (int i = 0; i < dim; ++i)
                            for (int j = 0; j < dim; ++j) sub(i, j) = points[idx[i]][j];
                        if (sub.det() == 0) return;
                        RatVec ones(dim, Rat(1));
                        RatVec w = solve_rational(sub, ones);
                        std::vector<int> on;
                        for (size_t p = 0; p < points.size(); ++p) {
                            Rat d = dot(w, points[p]);
                            if (d > 1) return;  // not supporting
                            if (d == 1) on.push_back(static_cast<int>(p));
                        }
                        facets.emplace(std::move(w), std::move(on));
                    });
    std::vector<HullFacet> out;
    for (auto& [w, on] : facets) out.push_back({w, on});
    return out;
}

Fan build_fan(int dim, const std::vector<IntVec>& raw_rays,
              const std::optional<std::vector<std::vector<int>>>& max_cones) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    if (raw_rays.empty()) throw std::invalid_argument("empty ray list");
    std::vector<IntVec> prim;
    for (const auto& r : raw_rays) {
        if (static_cast<int>(r.size()) != dim) throw std::invalid_argument("ray length mismatch");
        prim.push_back(primitive(r));
    }
    // Canonical order with a map back from the input indexing.
    std::vector<int> order(prim.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return prim[a] < prim[b]; });

    Fan fan;
    fan.dim = dim;
    std::vector<int> new_index(prim.size());
    for (size_t k = 0; k < order.size(); ++k) {
        const IntVec& r = prim[order[k]];
        if (!fan.rays.empty() && fan.rays.back() == r)
            throw std::invalid_argument("duplicate ray " + to_string(r));
        fan.rays.push_back(r);
        new_index[order[k]] = static_cast<int>(fan.rays.size()) - 1;
    }

    if (max_cones) {
        for (const auto& cone : *max_cones) {
            if (static_cast<int>(cone.size()) != dim)
                throw std::invalid_argument("maximal cone must have exactly dim generators");
            std::vector<int> c;
            for (int i : cone) {
                if (i < 0 || i >= static_cast<int>(raw_rays.size())) {
                    std::ostringstream os;
                    os << "index " << i << " out of range";
                    throw std::invalid_argument(os.str());
                }
                c.push_back(new_index[i]);
            }
            std::sort(c.begin(), c.end());
            if (std::adjacent_find(c.begin(), c.end()) != c.end())
                throw std::invalid_argument("repeated ray in maximal cone");
            fan.max_cones.push_back(std::move(c));
        }
    } else {
        auto facets = hull_facets(dim, fan.rays);
        for (const auto& f : facets) {
            if (static_cast<int>(f.on_facet.size()) != dim)
                throw std::invalid_argument("non-simplicial facet, explicit max_cones required");
            fan.max_cones.push_back(f.on_facet);
        }
    }
    std::sort(fan.max_cones.begin(), fan.max_cones.end());
    fan.max_cones.erase(std::unique(fan.max_cones.begin(), fan.max_cones.end()),
                        fan.max_cones.end());
    return fan;
}

std::vector<int> locate_cones(const Fan& fan, const RatVec& y) {
    std::vector<int> hits;
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        IntMat B = fan.cone_matrix(static_cast<int>(c));
        if (B.det() == 0) continue;
        RatVec x = solve_rational(B, y);
        bool inside = true;
        for (const Rat& xi : x)
            if (xi < 0) { inside = false; break; }
        if (inside) hits.push_back(static_cast<int>(c));
    }
    return hits;
}

ValidationReport validate_smooth_fano(const Fan& fan) {
    ValidationReport rep;
    int dim = fan.dim;

    rep.is_primitive_ok = true;
    for (const auto& r : fan.rays) {
        Int g = 0;
        for (const Int& c : r) g = gcd(g, c);
        if (g != 1) {
            rep.is_primitive_ok = false;
            rep.diagnostics.push_back("non-primitive ray " + to_string(r));
        }
    }

    rep.is_regular = !fan.max_cones.empty();
    for (size_t c = 0; c < fan.max_cones.size(); ++c) {
        Int d = fan.cone_matrix(static_cast<int>(c)).det();
        if (d != 1 && d != -1) {
            rep.is_regular = false;
            std::ostringstream os;
            os << "cone #" << c << " has |det| = " << abs(d);
            rep.diagnostics.push_back(os.str());
        }
    }

    // Structural completeness: each ridge shared by exactly two maximal cones.
    rep.is_complete = !fan.max_cones.empty();
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& cone : fan.max_cones)
        for (size_t drop = 0; drop < cone.size(); ++drop) {
            std::vector<int> ridge;
            for (size_t i = 0; i < cone.size(); ++i)
                if (i != drop) ridge.push_back(cone[i]);
            ridge_count[ridge]++;
        }
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) {
            rep.is_complete = false;
            std::ostringstream os;
            os << "ridge shared by " << count << " cones (expected 2)";
            rep.diagnostics.push_back(os.str());
            break;
        }
    // Probabilistic cover probe.
    if (rep.is_complete) {
        std::mt19937_64 rng(0x5eedf00dULL);
        std::uniform_int_distribution<long> d(-999, 999);
        int done = 0;
        while (done < 64) {
            RatVec y(dim);
            bool zero = true;
            for (int i = 0; i < dim; ++i) {
                long v = d(rng);
                y[i] = v;
                if (v != 0) zero = false;
            }
            if (zero) continue;
            auto hits = locate_cones(fan, y);
            if (hits.size() > 1) continue;  // boundary hit; resample
            ++done;
            if (hits.empty()) {
                rep.is_complete = false;
                rep.diagnostics.push_back("direction " + to_string(y) + " lies in no maximal cone");
                break;
            }
        }
    }

    // Fano: conv(rays) reflexive, every ray a vertex, cones = hull facets.
    bool fano = true;
    try {
        auto facets = hull_facets(dim, fan.rays);
        std::set<std::vector<int>> facet_sets;
        std::vector<std::vector<RatVec>> normals_at(fan.rays.size());
        for (const auto& f : facets) {
            for (const Rat& wi : f.normal)
                if (denominator(wi) != 1) {
                    fano = false;
                    rep.diagnostics.push_back("non-integral hull facet normal " + to_string(f.normal));
                    break;
                }
            facet_sets.insert(f.on_facet);
            for (int i : f.on_facet) normals_at[i].push_back(f.normal);
        }
        for (size_t i = 0; i < fan.rays.size(); ++i) {
            // Vertex test: the facets through the ray pin it down.
            IntMat m(static_cast<int>(normals_at[i].size()), dim);
            for (size_t k = 0; k < normals_at[i].size(); ++k) {
                Int l = 1;
                for (const Rat& wi : normals_at[i][k]) l = lcm(l, denominator(wi));
                for (int j = 0; j < dim; ++j)
                    m(static_cast<int>(k), j) =
                        numerator(normals_at[i][k][j]) * (l / denominator(normals_at[i][k][j]));
            }
            if (rank(m) != dim) {
                fano = false;
                rep.diagnostics.push_back("ray " + to_string(fan.rays[i]) +
                                          " is not a vertex of conv(rays)");
            }
        }
        std::set<std::vector<int>> cone_sets(fan.max_cones.begin(), fan.max_cones.end());
        if (fano && cone_sets != facet_sets) {
            fano = false;
            rep.diagnostics.push_back("maximal cones differ from the hull facets of the ray set");
        }
    } catch (const std::invalid_argument& e) {
        fano = false;
        rep.diagnostics.push_back(e.what());
    }
    rep.is_fano = fano && rep.is_primitive_ok && rep.is_complete && rep.is_regular;
    return rep;
}

RatVec dual_vertex(const Fan& fan, int cone_index) {
    IntMat B = fan.cone_matrix(cone_index);
    if (B.det() == 0) throw std::invalid_argument("irregular cone");
    RatVec ones(fan.dim, Rat(1));
    return solve_rational(B.transpose(), ones);
}

}  // namespace toric
