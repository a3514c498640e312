#include "toric/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

namespace {

IntVec basis_vec(int n, int i) {  // e_{i+1} in 0-based form
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

IntVec neg_sum(int n, int from, int to, int extra_index = -1, const Int& extra = 0) {
    // -(e_{from+1} + ... + e_{to}) - extra * e_{extra_index+1}
    IntVec v(n, Int(0));
    for (int i = from; i < to; ++i) v[i] = -1;
    if (extra_index >= 0) v[extra_index] -= extra;
    return v;
}

void check_range(const FamilySpec& s) {
    switch (s.family) {
        case Family::V:
            if (s.k < 1) throw std::invalid_argument("V_k requires k >= 1");
            break;
        case Family::S:
            if (s.k < 1 || s.k > s.m) throw std::invalid_argument("S_{m,k} requires 1 <= k <= m");
            break;
        case Family::X:
            if (s.m < 1 || s.k < 0 || s.k > s.m)
                throw std::invalid_argument("X_{m,k} requires m >= 1 and 0 <= k <= m");
            break;
        case Family::W:
            if (s.m < 1) throw std::invalid_argument("W_m requires m >= 1");
            break;
    }
}

}  // namespace

int FamilySpec::dimension() const {
    switch (family) {
        case Family::V: return 2 * k;
        case Family::S: return 2 * m + 1;
        case Family::X: return 2 * m + 2;
        case Family::W: return 2 * m;
    }
    return 0;
}

std::string FamilySpec::name() const {
    std::ostringstream os;
    switch (family) {
        case Family::V: os << "V_" << k; break;
        case Family::S: os << "S_{" << m << "," << k << "}"; break;
        case Family::X: os << "X_{" << m << "," << k << "}"; break;
        case Family::W: os << "W_" << m; break;
    }
    return os.str();
}

Fan family_fan(const FamilySpec& spec) {
    check_range(spec);
    int n = spec.dimension();
    int m = spec.m;
    std::vector<IntVec> rays;
    switch (spec.family) {
        case Family::V:
            for (int i = 0; i < n; ++i) {
                rays.push_back(basis_vec(n, i));
                rays.push_back(neg(basis_vec(n, i)));
            }
            rays.push_back(IntVec(n, Int(1)));
            rays.push_back(IntVec(n, Int(-1)));
            break;
        case Family::S:
            for (int i = 0; i < 2 * m; ++i) rays.push_back(basis_vec(n, i));
            rays.push_back(basis_vec(n, 2 * m));
            rays.push_back(neg(basis_vec(n, 2 * m)));
            rays.push_back(neg_sum(n, 0, m, 2 * m, spec.k));
            rays.push_back(neg_sum(n, m, 2 * m, 2 * m, -spec.k));
            break;
        case Family::X:
            for (int i = 0; i < 2 * m; ++i) rays.push_back(basis_vec(n, i));
            for (int i = 2 * m; i < 2 * m + 2; ++i) {
                rays.push_back(basis_vec(n, i));
                rays.push_back(neg(basis_vec(n, i)));
            }
            {
                IntVec pm(n, Int(0));
                pm[2 * m] = 1;
                pm[2 * m + 1] = 1;
                rays.push_back(pm);
                rays.push_back(neg(pm));
            }
            rays.push_back(neg_sum(n, 0, m, 2 * m, -spec.k));
            rays.push_back(neg_sum(n, m, 2 * m, 2 * m, spec.k));
            break;
        case Family::W:
            for (int i = 0; i < 2 * m; ++i) rays.push_back(basis_vec(n, i));
            rays.push_back(neg_sum(n, 0, m));
            rays.push_back(neg_sum(n, m, 2 * m));
            rays.push_back(neg_sum(n, 0, 2 * m));
            for (int i = 0; i < m; ++i) {
                IntVec v(n, Int(0));
                v[i] = 1;
                v[i + m] = 1;
                rays.push_back(v);
            }
            break;
    }
    return build_fan(n, rays);
}

std::vector<UnimodularMap> family_witnesses(const FamilySpec& spec) {
    check_range(spec);
    int n = spec.dimension();
    int m = spec.m;
    if (spec.family == Family::V) {
        IntMat minus = IntMat::identity(n);
        for (int i = 0; i < n; ++i) minus(i, i) = -1;
        return {minus};
    }
    auto from_images = [n](const std::vector<IntVec>& img) {
        return IntMat::from_columns(img);
    };
    std::vector<IntVec> a_img(n), b_img(n);
    // alpha cycles each P^m block e_1..e_m -> ... -> -(sum); beta swaps the
    // two blocks (and negates the fiber directions where present).
    auto cycle_block = [&](int offset, const IntVec& last_image) {
        for (int i = 0; i < m - 1; ++i) a_img[offset + i] = basis_vec(n, offset + i + 1);
        a_img[offset + m - 1] = last_image;
    };
    switch (spec.family) {
        case Family::S: {
            cycle_block(0, neg_sum(n, 0, m, 2 * m, spec.k));
            cycle_block(m, neg_sum(n, m, 2 * m, 2 * m, -spec.k));
            a_img[2 * m] = basis_vec(n, 2 * m);
            for (int i = 0; i < m; ++i) {
                b_img[i] = basis_vec(n, i + m);
                b_img[i + m] = basis_vec(n, i);
            }
            b_img[2 * m] = neg(basis_vec(n, 2 * m));
            break;
        }
        case Family::X: {
            cycle_block(0, neg_sum(n, 0, m, 2 * m, -spec.k));
            cycle_block(m, neg_sum(n, m, 2 * m, 2 * m, spec.k));
            a_img[2 * m] = basis_vec(n, 2 * m);
            a_img[2 * m + 1] = basis_vec(n, 2 * m + 1);
            for (int i = 0; i < m; ++i) {
                b_img[i] = basis_vec(n, i + m);
                b_img[i + m] = basis_vec(n, i);
            }
            b_img[2 * m] = neg(basis_vec(n, 2 * m));
            b_img[2 * m + 1] = neg(basis_vec(n, 2 * m + 1));
            break;
        }
        case Family::W: {
            cycle_block(0, neg_sum(n, 0, m));
            cycle_block(m, neg_sum(n, m, 2 * m));
            for (int i = 0; i < m; ++i) {
                b_img[i] = basis_vec(n, i + m);
                b_img[i + m] = basis_vec(n, i);
            }
            break;
        }
        default: break;
    }
    return {from_images(a_img), from_images(b_img)};
}

namespace {

double angle_between(const IntVec& a, const IntVec& b) {
    double ax = a[0].convert_to<double>(), ay = a[1].convert_to<double>();
    double bx = b[0].convert_to<double>(), by = b[1].convert_to<double>();
    double ang = std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    return ang;  // in (-pi, pi]; positive for a CCW step
}

bool in_box(const IntVec& v, int bound) {
    return abs(v[0]) <= bound && abs(v[1]) <= bound;
}

// DFS over CCW chains of rays with consecutive determinant 1 and the local
// Fano condition r_{i-1} + r_{i+1} = t r_i, t <= 1.
struct SurfaceSearch {
    int bound;
    std::vector<std::vector<IntVec>> cycles;

    void run() {
        IntVec start{Int(1), Int(0)};
        for (int t = -bound; t <= bound; ++t) {
            std::vector<IntVec> path{start, IntVec{Int(t), Int(1)}};
            extend(path, angle_between(path[0], path[1]));
        }
    }

    void extend(std::vector<IntVec>& path, double angle) {
        if (path.size() > 12) return;
        // copies: the recursion below reallocates path
        const IntVec prev = path[path.size() - 2];
        const IntVec cur = path.back();
        for (int t = 1; ; --t) {
            IntVec next{t * cur[0] - prev[0], t * cur[1] - prev[1]};
            if (!in_box(next, bound)) {
                if (t < -4 * bound) break;  // walked out for good
                continue;
            }
            if (t < -4 * bound) break;
            double step = angle_between(cur, next);
            if (step <= 0) continue;
            if (next == path[0]) {
                // Close the cycle: check winding and the wrap conditions.
                if (std::abs(angle + step - 2 * M_PI) > 1e-6) continue;
                if (path.size() < 3) continue;
                // r_N + r_2 must equal t * r_1 with t <= 1.
                IntVec s{cur[0] + path[1][0], cur[1] + path[1][1]};
                bool ok = false;
                for (int tt = 1; tt >= -8 * bound; --tt)
                    if (s[0] == tt * path[0][0] && s[1] == tt * path[0][1]) { ok = true; break; }
                if (s[0] == 0 && s[1] == 0) ok = true;
                if (ok) cycles.push_back(path);
                continue;
            }
            if (std::find(path.begin(), path.end(), next) != path.end()) continue;
            if (angle + step >= 2 * M_PI) continue;
            path.push_back(next);
            extend(path, angle + step);
            path.pop_back();
        }
    }
};

}  // namespace

bool lattice_equivalent(const Fan& f1, const Fan& f2) {
    if (f1.dim != f2.dim) throw std::invalid_argument("dimension mismatch");
    if (f1.rays.size() != f2.rays.size() || f1.max_cones.size() != f2.max_cones.size())
        return false;
    IntMat b0 = f1.cone_matrix(0);
    IntMat b0_inv = b0.unimodular_inverse();
    std::set<IntVec> target_rays(f2.rays.begin(), f2.rays.end());
    std::set<std::vector<int>> target_cones(f2.max_cones.begin(), f2.max_cones.end());
    int n = f1.dim;
    for (const auto& cone : f2.max_cones) {
        std::vector<int> perm(cone);
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<IntVec> cols;
            for (int i : perm) cols.push_back(f2.rays[i]);
            IntMat g = IntMat::from_columns(cols) * b0_inv;
            bool ok = true;
            std::vector<int> ray_image(f1.rays.size());
            for (size_t i = 0; i < f1.rays.size() && ok; ++i) {
                int j = f2.ray_index(g * f1.rays[i]);
                if (j < 0)
                    ok = false;
                else
                    ray_image[i] = j;
            }
            for (size_t c = 0; c < f1.max_cones.size() && ok; ++c) {
                std::vector<int> img;
                for (int i : f1.max_cones[c]) img.push_back(ray_image[i]);
                std::sort(img.begin(), img.end());
                if (!target_cones.count(img)) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    (void)n;
    return false;
}

std::vector<Fan> enumerate_smooth_fano_surfaces(int coord_bound) {
    SurfaceSearch search{coord_bound, {}};
    search.run();
    std::vector<Fan> classes;
    std::set<std::vector<IntVec>> seen_ray_sets;
    for (const auto& cycle : search.cycles) {
        std::vector<IntVec> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (!seen_ray_sets.insert(sorted).second) continue;  // same fan, rotated cycle
        std::vector<std::vector<int>> cones;
        // cones from consecutive pairs in the cycle, indices into the input list
        for (size_t i = 0; i < cycle.size(); ++i)
            cones.push_back({static_cast<int>(i), static_cast<int>((i + 1) % cycle.size())});
        Fan fan = build_fan(2, cycle, cones);
        if (!validate_smooth_fano(fan).all_ok()) continue;
        bool fresh = true;
        for (const auto& rep : classes)
            if (lattice_equivalent(rep, fan)) { fresh = false; break; }
        if (fresh) classes.push_back(std::move(fan));
    }
    std::sort(classes.begin(), classes.end(),
              [](const Fan& a, const Fan& b) { return a.rays.size() < b.rays.size(); });
    return classes;
}

}  // namespace toric
