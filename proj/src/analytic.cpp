#include "toric/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

Eigen::VectorXd to_double(const IntVec& v) {
    Eigen::VectorXd d(v.size());
    for (size_t i = 0; i < v.size(); ++i) d[static_cast<int>(i)] = v[i].convert_to<double>();
    return d;
}

AnalyticModel build_base(const FanoPolytope& poly) {
    AnalyticModel m;
    m.dim = poly.dim;
    for (const auto& p : poly.lattice_points) m.points.push_back(to_double(p));
    for (const auto& v : poly.vertices) {
        m.vertices.push_back(to_double(v));
        auto it = std::lower_bound(poly.lattice_points.begin(), poly.lattice_points.end(), v);
        m.vertex_point_index.push_back(static_cast<int>(it - poly.lattice_points.begin()));
    }
    for (const auto& e : poly.facet_normals) m.normals.push_back(to_double(e));
    for (size_t c = 0; c < poly.fan.max_cones.size(); ++c) {
        IntMat b = poly.fan.cone_matrix(static_cast<int>(c));
        Eigen::MatrixXd bd(m.dim, m.dim);
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j) bd(i, j) = b(i, j).convert_to<double>();
        m.cone_bases.push_back(bd);
    }
    return m;
}

// Log-sum-exp with max subtraction; exponent shifts from lw may be null.
double lse(const AnalyticModel& m, const double* lw, const Eigen::VectorXd& y) {
    double best = -std::numeric_limits<double>::infinity();
    const int np = m.num_points();
    for (int i = 0; i < np; ++i) {
        double e = m.points[i].dot(y) + (lw ? lw[i] : 0.0);
        if (e > best) best = e;
    }
    double s = 0.0;
    for (int i = 0; i < np; ++i)
        s += std::exp(m.points[i].dot(y) + (lw ? lw[i] : 0.0) - best);
    return best + std::log(s);
}

void softmax(const AnalyticModel& m, const double* lw, const Eigen::VectorXd& y,
             std::vector<double>& p) {
    const int np = m.num_points();
    p.resize(np);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < np; ++i) {
        p[i] = m.points[i].dot(y) + (lw ? lw[i] : 0.0);
        best = std::max(best, p[i]);
    }
    double s = 0.0;
    for (int i = 0; i < np; ++i) {
        p[i] = std::exp(p[i] - best);
        s += p[i];
    }
    for (int i = 0; i < np; ++i) p[i] /= s;
}

Eigen::VectorXd softmax_mean(const AnalyticModel& m, const double* lw, const Eigen::VectorXd& y) {
    std::vector<double> p;
    softmax(m, lw, y, p);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(m.dim);
    for (int i = 0; i < m.num_points(); ++i) g += p[i] * m.points[i];
    return g;
}

Eigen::MatrixXd softmax_cov(const AnalyticModel& m, const double* lw, const Eigen::VectorXd& y) {
    std::vector<double> p;
    softmax(m, lw, y, p);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(m.dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m.dim, m.dim);
    for (int i = 0; i < m.num_points(); ++i) {
        g += p[i] * m.points[i];
        h += p[i] * m.points[i] * m.points[i].transpose();
    }
    h -= g * g.transpose();
    return h;
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth) {
    double mid = 0.5 * (a + b);
    double lm = 0.5 * (a + mid), rm = 0.5 * (mid + b);
    double flm = f(lm), frm = f(rm);
    double left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, mid, fa, flm, fm, left, tol * 0.5, depth - 1) +
           adaptive_simpson_rec(f, mid, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int depth = 40) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Integral of g over the positive orthant via the substitution x = t/(1-t)
// per coordinate (n = 1 or 2 only).
double orthant_quadrature(int n, const std::function<double(const Eigen::VectorXd&)>& g,
                          double tol) {
    if (n == 1) {
        return adaptive_simpson(
            [&](double t) {
                if (t >= 1.0) return 0.0;
                double s = 1.0 - t;
                Eigen::VectorXd x(1);
                x[0] = t / s;
                return g(x) / (s * s);
            },
            0.0, 1.0, tol);
    }
    if (n == 2) {
        return adaptive_simpson(
            [&](double t1) {
                if (t1 >= 1.0) return 0.0;
                double s1 = 1.0 - t1;
                double x1 = t1 / s1;
                double inner = adaptive_simpson(
                    [&](double t2) {
                        if (t2 >= 1.0) return 0.0;
                        double s2 = 1.0 - t2;
                        Eigen::VectorXd x(2);
                        x[0] = x1;
                        x[1] = t2 / s2;
                        return g(x) / (s2 * s2);
                    },
                    0.0, 1.0, tol * 0.1);
                return inner / (s1 * s1);
            },
            0.0, 1.0, tol);
    }
    throw std::invalid_argument("quadrature limited to n <= 2");
}

// Shared cone-decomposition integrator for integrands of the form
// exp(-F(y)) with F >= rate * u_bar; the importance density on each cone is
// the product of Exp(rate) draws in the cone's basis coordinates.
IntegralEstimate cone_integral(const AnalyticModel& m,
                               const std::function<double(const Eigen::VectorXd&)>& integrand,
                               double rate, const MethodSpec& spec) {
    IntegralEstimate est;
    est.seed = spec.seed;
    const int n = m.dim;
    if (n <= 2) {
        est.method = n == 1 ? "adaptive-quadrature-1d" : "adaptive-quadrature-2d";
        double total = 0.0;
        for (const auto& b : m.cone_bases)
            total += orthant_quadrature(
                n, [&](const Eigen::VectorXd& x) { return integrand(b * x); }, 1e-10);
        est.value = total;
        return est;
    }
    est.method = "importance-mc";
    std::size_t per_cone = std::max<std::size_t>(1000, spec.samples / m.cone_bases.size());
    double total = 0.0, var = 0.0;
    double log_rate_n = n * std::log(rate);
    for (size_t c = 0; c < m.cone_bases.size(); ++c) {
        std::mt19937_64 rng(spec.seed + 0x9e3779b97f4a7c15ULL * (c + 1));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        const Eigen::MatrixXd& b = m.cone_bases[c];
        double sum = 0.0, sum2 = 0.0;
        Eigen::VectorXd x(n);
        for (std::size_t s = 0; s < per_cone; ++s) {
            double ex_sum = 0.0;
            for (int i = 0; i < n; ++i) {
                double u = unif(rng);
                x[i] = -std::log1p(-u) / rate;
                ex_sum += x[i];
            }
            // weight = integrand / density, density = rate^n exp(-rate sum x)
            double w = integrand(b * x) * std::exp(rate * ex_sum - log_rate_n);
            sum += w;
            sum2 += w * w;
        }
        double mean = sum / per_cone;
        double v = (sum2 / per_cone - mean * mean) / per_cone;
        total += mean;
        var += std::max(v, 0.0);
        est.samples += per_cone;
    }
    est.value = total;
    est.standard_error = std::sqrt(var);
    return est;
}

}  // namespace

AnalyticModel make_model(const FanoPolytope& poly) { return build_base(poly); }

AnalyticModel make_model(const FanoPolytope& poly, const SymmetryGroup& w) {
    AnalyticModel m = build_base(poly);
    std::map<IntVec, int> index;
    for (size_t i = 0; i < poly.lattice_points.size(); ++i)
        index[poly.lattice_points[i]] = static_cast<int>(i);
    for (const auto& g : w.elements) {
        UnimodularMap gd = dual_map(g);
        std::vector<int> perm(poly.lattice_points.size());
        for (size_t i = 0; i < poly.lattice_points.size(); ++i) {
            auto it = index.find(gd * poly.lattice_points[i]);
            if (it == index.end())
                throw std::logic_error("dual action does not preserve L(Delta)");
            perm[i] = it->second;
        }
        m.dual_perms.push_back(std::move(perm));
    }
    return m;
}

double u_tilde(const AnalyticModel& m, const Eigen::VectorXd& y) { return lse(m, nullptr, y); }

double u_tilde_weighted(const AnalyticModel& m, const Potential& phi, const Eigen::VectorXd& y) {
    return lse(m, phi.log_weights.data(), y);
}

double u_bar(const AnalyticModel& m, const Eigen::VectorXd& y) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& w : m.vertices) best = std::max(best, w.dot(y));
    return best;
}

double phi_value(const AnalyticModel& m, const Potential& phi, const Eigen::VectorXd& y) {
    return u_tilde_weighted(m, phi, y) - u_tilde(m, y) - phi.shift;
}

Eigen::VectorXd moment_map(const AnalyticModel& m, const Eigen::VectorXd& y) {
    return softmax_mean(m, nullptr, y);
}

Eigen::MatrixXd hessian(const AnalyticModel& m, const Eigen::VectorXd& y) {
    return softmax_cov(m, nullptr, y);
}

Eigen::VectorXd moment_map_weighted(const AnalyticModel& m, const Potential& phi,
                                    const Eigen::VectorXd& y) {
    return softmax_mean(m, phi.log_weights.data(), y);
}

Eigen::MatrixXd hessian_weighted(const AnalyticModel& m, const Potential& phi,
                                 const Eigen::VectorXd& y) {
    return softmax_cov(m, phi.log_weights.data(), y);
}

EnvelopeReport envelope_check(const AnalyticModel& m,
                              const std::vector<Eigen::VectorXd>& samples) {
    EnvelopeReport rep;
    rep.min_lower_gap = std::numeric_limits<double>::infinity();
    double log_l = std::log(static_cast<double>(m.num_points()));
    for (const auto& y : samples) {
        double gap = u_tilde(m, y) - u_bar(m, y);
        rep.max_upper_gap = std::max(rep.max_upper_gap, gap);
        rep.min_lower_gap = std::min(rep.min_lower_gap, gap);
        if ((gap <= 0.0 || gap > log_l + 1e-12) && rep.ok) {
            rep.ok = false;
            rep.witness = y;
        }
    }
    return rep;
}

IntegralEstimate integral_exp(const AnalyticModel& m, double tau, const MethodSpec& spec) {
    if (tau <= 0.0) throw std::invalid_argument("tau must be positive");
    IntegralEstimate est = cone_integral(
        m, [&](const Eigen::VectorXd& y) { return std::exp(-tau * u_tilde(m, y)); }, tau, spec);
    est.bound = m.num_vertices() / std::pow(tau, m.dim);
    est.bound_ok = est.value + 3.0 * est.standard_error <= est.bound + 1e-12;
    return est;
}

IntegralEstimate alpha_integral(const AnalyticModel& m, double lambda, const Potential& phi,
                                const MethodSpec& spec) {
    if (lambda <= 0.0 || lambda >= 1.0)
        throw std::invalid_argument("lambda must lie in (0,1)");
    IntegralEstimate est = cone_integral(
        m,
        [&](const Eigen::VectorXd& y) {
            return std::exp(-lambda * phi_value(m, phi, y) - u_tilde(m, y));
        },
        1.0 - lambda, spec);
    est.bound = m.num_vertices() / std::pow(1.0 - lambda, m.dim);
    est.bound_ok = est.value + 3.0 * est.standard_error <= est.bound + 1e-12;
    return est;
}

namespace {

// Maximize f by cyclic 1-d ternary searches; good enough for the smooth
// bounded difference of two log-sum-exps.
double coordinate_ascent(const std::function<double(const Eigen::VectorXd&)>& f,
                         Eigen::VectorXd y, int sweeps = 30) {
    double fy = f(y);
    for (int s = 0; s < sweeps; ++s) {
        for (int i = 0; i < y.size(); ++i) {
            double lo = y[i] - 6.0, hi = y[i] + 6.0;
            for (int it = 0; it < 80; ++it) {
                double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
                Eigen::VectorXd ya = y, yb = y;
                ya[i] = a;
                yb[i] = b;
                if (f(ya) < f(yb))
                    lo = a;
                else
                    hi = b;
            }
            y[i] = 0.5 * (lo + hi);
        }
        double fn = f(y);
        if (fn - fy < 1e-13) { fy = fn; break; }
        fy = fn;
    }
    return fy;
}

}  // namespace

Potential make_test_potential(const AnalyticModel& m, const std::vector<double>& weights,
                              bool require_invariance) {
    if (static_cast<int>(weights.size()) != m.num_points())
        throw std::invalid_argument("weight vector length mismatch");
    Potential phi;
    phi.log_weights.resize(weights.size());
    for (size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0)) throw std::invalid_argument("non-positive weight");
        phi.log_weights[i] = std::log(weights[i]);
    }
    if (require_invariance) {
        for (const auto& perm : m.dual_perms)
            for (size_t i = 0; i < perm.size(); ++i)
                if (std::abs(phi.log_weights[perm[i]] - phi.log_weights[i]) > 1e-10)
                    throw std::invalid_argument("weights are not W-invariant");
        phi.invariant = true;
    }

    // c = sup(u~_w - u~): attained at a critical point or in a cone limit,
    // where the difference tends to log w at the dominating vertex.
    auto diff = [&](const Eigen::VectorXd& y) {
        return u_tilde_weighted(m, phi, y) - u_tilde(m, y);
    };
    double c = -std::numeric_limits<double>::infinity();
    for (int vp : m.vertex_point_index) c = std::max(c, phi.log_weights[vp]);

    if (m.dim <= 2) {
        Eigen::VectorXd best = Eigen::VectorXd::Zero(m.dim);
        double best_val = diff(best);
        Eigen::VectorXd y(m.dim);
        double radius = 10.0, spacing = 0.25;
        int steps = static_cast<int>(2 * radius / spacing) + 1;
        int total = 1;
        for (int i = 0; i < m.dim; ++i) total *= steps;
        for (int k = 0; k < total; ++k) {
            int rem = k;
            for (int i = 0; i < m.dim; ++i) {
                y[i] = -radius + spacing * (rem % steps);
                rem /= steps;
            }
            double v = diff(y);
            if (v > best_val) { best_val = v; best = y; }
        }
        c = std::max(c, coordinate_ascent(diff, best));
    } else {
        c = std::max(c, coordinate_ascent(diff, Eigen::VectorXd::Zero(m.dim)));
        for (const auto& w : m.vertices)
            c = std::max(c, coordinate_ascent(diff, 8.0 * w.normalized()));
        std::mt19937_64 rng(kDefaultSeed);
        std::uniform_real_distribution<double> unif(-10.0, 10.0);
        for (int s = 0; s < 16; ++s) {
            Eigen::VectorXd y0(m.dim);
            for (int i = 0; i < m.dim; ++i) y0[i] = unif(rng);
            c = std::max(c, coordinate_ascent(diff, y0));
        }
    }
    phi.shift = c;
    return phi;
}

Potential random_invariant_potential(const AnalyticModel& m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> logw(-std::log(4.0), std::log(4.0));
    std::vector<double> lw(m.points.size());
    for (auto& v : lw) v = logw(rng);
    // Symmetrize by averaging log-weights over W-orbits.
    int np = m.num_points();
    std::vector<int> root(np);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const auto& perm : m.dual_perms)
        for (int i = 0; i < np; ++i) root[find(i)] = find(perm[i]);
    std::map<int, std::pair<double, int>> orbit_sum;
    for (int i = 0; i < np; ++i) {
        auto& [s, cnt] = orbit_sum[find(i)];
        s += lw[i];
        ++cnt;
    }
    std::vector<double> weights(np);
    for (int i = 0; i < np; ++i) {
        auto& [s, cnt] = orbit_sum[find(i)];
        weights[i] = std::exp(s / cnt);
    }
    return make_test_potential(m, weights, true);
}

PositivityReport positivity_check(const AnalyticModel& m, const Potential& phi,
                                  const GridSpec& spec) {
    PositivityReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    auto value = [&](const Eigen::VectorXd& y) {
        return u_tilde_weighted(m, phi, y) - phi.shift;  // = u~ + phi~
    };
    Eigen::VectorXd y(m.dim);
    if (m.dim <= 2) {
        int steps = static_cast<int>(std::llround(2.0 * spec.radius / spec.spacing)) + 1;
        long total = 1;
        for (int i = 0; i < m.dim; ++i) total *= steps;
        for (long k = 0; k < total; ++k) {
            long rem = k;
            for (int i = 0; i < m.dim; ++i) {
                y[i] = -spec.radius + spec.spacing * (rem % steps);
                rem /= steps;
            }
            double v = value(y);
            if (v < rep.min_value) { rep.min_value = v; rep.witness = y; }
        }
    } else {
        std::mt19937_64 rng(spec.seed);
        std::uniform_real_distribution<double> unif(-spec.radius, spec.radius);
        for (std::size_t s = 0; s < spec.random_points; ++s) {
            for (int i = 0; i < m.dim; ++i) y[i] = unif(rng);
            double v = value(y);
            if (v < rep.min_value) { rep.min_value = v; rep.witness = y; }
        }
    }
    // Beyond the grid radius: u~ + phi~ >= u_bar - max|log w| - |c| and
    // u_bar(y) >= |y| / max ||e||.
    double max_norm = 0.0;
    for (const auto& e : m.normals) max_norm = std::max(max_norm, e.norm());
    double max_lw = 0.0;
    for (double w : phi.log_weights) max_lw = std::max(max_lw, std::abs(w));
    rep.asymptotic_floor = spec.radius / max_norm - max_lw - std::abs(phi.shift);
    rep.floor_ok = rep.asymptotic_floor >= 0.0;
    rep.ok = rep.min_value >= -1e-9;
    return rep;
}

double ma_residual(const AnalyticModel& m, const Potential& phi, double t,
                   const Eigen::VectorXd& y) {
    Eigen::MatrixXd h = hessian_weighted(m, phi, y);  // Hess(u~ + phi~) = Hess(u~_w)
    double rhs = std::exp(-u_tilde(m, y) - t * phi_value(m, phi, y));
    return h.determinant() - rhs;
}

}  // namespace toric
