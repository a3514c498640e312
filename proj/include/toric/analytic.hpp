#pragma once

#include "toric/polytope.hpp"
#include "toric/symmetry.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace toric {

inline constexpr std::uint64_t kDefaultSeed = 0xE52024ULL;

// Double-precision view of a FanoPolytope, cached for repeated evaluation of
// the potential u~(y) = log sum_{v in L(Delta)} exp(<v, y>) and its relatives.
struct AnalyticModel {
    int dim = 0;
    std::vector<Eigen::VectorXd> points;    // L(Delta)
    std::vector<Eigen::VectorXd> vertices;  // aligned with polytope vertex order
    std::vector<int> vertex_point_index;    // vertex -> index into points
    std::vector<Eigen::VectorXd> normals;   // facet normals
    std::vector<Eigen::MatrixXd> cone_bases;  // columns = generators, one per max cone
    std::vector<std::vector<int>> dual_perms;  // W dual action as permutations of points

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_points() const { return static_cast<int>(points.size()); }
};

AnalyticModel make_model(const FanoPolytope& poly);
AnalyticModel make_model(const FanoPolytope& poly, const SymmetryGroup& w);

// A perturbation phi~ = u~_w - u~ - c from the weighted-exponent family;
// log_weights aligned with model.points, shift = c ~= sup(u~_w - u~).
struct Potential {
    std::vector<double> log_weights;
    double shift = 0.0;
    bool invariant = false;

    static Potential zero(const AnalyticModel& m) {
        return {std::vector<double>(m.points.size(), 0.0), 0.0, true};
    }
};

struct IntegralEstimate {
    double value = 0.0;
    double standard_error = 0.0;  // 0 for deterministic quadrature
    std::string method;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double bound = 0.0;
    bool bound_ok = false;  // value (+3 sigma for MC) <= bound
};

struct MethodSpec {
    std::size_t samples = 200000;  // Monte Carlo budget (n >= 3)
    std::uint64_t seed = kDefaultSeed;
};

double u_tilde(const AnalyticModel& m, const Eigen::VectorXd& y);
double u_tilde_weighted(const AnalyticModel& m, const Potential& phi, const Eigen::VectorXd& y);
double u_bar(const AnalyticModel& m, const Eigen::VectorXd& y);
double phi_value(const AnalyticModel& m, const Potential& phi, const Eigen::VectorXd& y);

Eigen::VectorXd moment_map(const AnalyticModel& m, const Eigen::VectorXd& y);
Eigen::MatrixXd hessian(const AnalyticModel& m, const Eigen::VectorXd& y);
// Gradient / Hessian of the weighted potential u~_w.
Eigen::VectorXd moment_map_weighted(const AnalyticModel& m, const Potential& phi,
                                    const Eigen::VectorXd& y);
Eigen::MatrixXd hessian_weighted(const AnalyticModel& m, const Potential& phi,
                                 const Eigen::VectorXd& y);

struct EnvelopeReport {
    bool ok = true;
    double max_upper_gap = 0.0;  // max of u~ - u_bar, must stay <= log |L|
    double min_lower_gap = 0.0;  // min of u~ - u_bar, must stay > 0
    Eigen::VectorXd witness;     // first failing point, if any
};

EnvelopeReport envelope_check(const AnalyticModel& m,
                              const std::vector<Eigen::VectorXd>& samples);

// Estimates integral over N_R of exp(-tau u~) and checks it against
// v(Delta)/tau^n. Iterated adaptive quadrature for n <= 2, importance-sampled
// Monte Carlo over the cone decomposition for n >= 3.
IntegralEstimate integral_exp(const AnalyticModel& m, double tau, const MethodSpec& spec = {});

// Same machinery for integral of exp(-lambda phi~ - u~), bound v/(1-lambda)^n.
IntegralEstimate alpha_integral(const AnalyticModel& m, double lambda, const Potential& phi,
                                const MethodSpec& spec = {});

// Builds phi~ from positive weights; estimates the sup-normalization constant
// from a coarse grid / multistart coordinate descent plus the per-vertex cone
// limits log w_v.
Potential make_test_potential(const AnalyticModel& m, const std::vector<double>& weights,
                              bool require_invariance = false);

// Log-uniform weights in [1/4, 4], symmetrized over W-orbits of L(Delta).
Potential random_invariant_potential(const AnalyticModel& m, std::mt19937_64& rng);

struct GridSpec {
    double radius = 10.0;
    double spacing = 0.5;               // used for n <= 2
    std::size_t random_points = 100000;  // used for n >= 3
    std::uint64_t seed = kDefaultSeed;
};

struct PositivityReport {
    double min_value = 0.0;
    Eigen::VectorXd witness;
    double asymptotic_floor = 0.0;  // lower bound valid outside the grid radius
    bool floor_ok = false;
    bool ok = false;  // min_value >= -1e-9
};

PositivityReport positivity_check(const AnalyticModel& m, const Potential& phi,
                                  const GridSpec& spec = {});

// det Hess(u~ + phi~)(y) - exp(-u~(y) - t phi~(y)); diagnostic only.
double ma_residual(const AnalyticModel& m, const Potential& phi, double t,
                   const Eigen::VectorXd& y);

}  // namespace toric
