#pragma once

#include "functional.hpp"
#include "models.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lenard::sim {

// Periodic grid on [-L, L); decaying initial data emulates the line.
struct Grid {
    double half_width = 20.0;
    int n = 256;

    double dx() const { return 2.0 * half_width / n; }
    double point(int i) const { return -half_width + i * dx(); }
};

Grid make_grid(double half_width, int n);

struct GridState {
    std::vector<std::vector<double>> fields;
    double t = 0.0;
};

struct GaussianBump {
    double amp = 0.0;
    double center = 0.0;
    double width = 1.0;
};
// One list of bumps per field component.
using InitialData = std::vector<std::vector<GaussianBump>>;

GridState initial_state(const Grid& grid, const InitialData& ics);

// Initial data must sit below this at the domain edge so the periodic wrap
// approximates the line.
constexpr double edge_decay_limit = 1e-12;
void require_edge_decay(const GridState& state);

// Spectral differentiation on the periodic grid; owns the FFTW plans.
class Spectral {
public:
    explicit Spectral(const Grid& grid);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;

    static constexpr int max_order = 4;

    std::vector<double> derivative(const std::vector<double>& f, int order) const;

private:
    int n_;
    double half_width_;
    double* real_;
    void* spec_;  // fftw_complex*
    void* fwd_;   // fftw_plan
    void* bwd_;
};

// Numeric values for the symbolic parameters appearing in densities.
using ParamValues = std::map<std::string, double>;

// DiffPoly flattened into a pointwise evaluator: parameters folded into the
// coefficients, jets looked up in precomputed derivative arrays.
class Compiled {
public:
    Compiled(const DiffPoly& poly, const ParamValues& params);

    int top_order() const { return top_order_; }
    const std::vector<std::pair<int, int>>& jets_used() const { return jets_used_; }

    // values[(comp, order)] are grid arrays; returns the pointwise evaluation.
    std::vector<double> evaluate(const Grid& grid,
                                 const std::map<std::pair<int, int>, std::vector<double>>& jets) const;

private:
    struct Term {
        double coeff;
        int x_exp;
        std::vector<std::pair<std::pair<int, int>, int>> jet_factors;  // ((comp, order), exp)
    };
    std::vector<Term> terms_;
    std::vector<std::pair<int, int>> jets_used_;
    int top_order_ = 0;
};

// Precompiled right-hand side of a model flow plus the spectral machinery.
class FlowProblem {
public:
    FlowProblem(const ModelSpec& spec, const Grid& grid, const ParamValues& params);

    const Grid& grid() const { return grid_; }
    const Spectral& spectral() const { return spectral_; }
    int dim() const { return dim_; }

    // Largest admissible step per the diffusion-style guard.
    double dt_limit() const { return dt_limit_; }

    std::vector<std::vector<double>> rhs(const GridState& state) const;

    // Classical 4-stage Runge-Kutta step; throws CFLViolation / NonFinite.
    GridState step(const GridState& state, double dt) const;

    double evaluate_density(const Compiled& density, const GridState& state) const;

private:
    std::map<std::pair<int, int>, std::vector<double>> jet_arrays(
        const std::vector<std::vector<double>>& fields,
        const std::vector<std::pair<int, int>>& wanted) const;

    Grid grid_;
    Spectral spectral_;
    int dim_;
    std::vector<Compiled> rhs_comps_;
    std::vector<std::pair<int, int>> rhs_jets_;
    double dt_limit_;
};

double evaluate_functional(const Functional& fn, const FlowProblem& problem,
                           const GridState& state, const ParamValues& params);

struct DriftReport {
    std::string model;
    double half_width = 0;
    int n = 0;
    double dt = 0;
    double t_final = 0;
    std::vector<double> initial_values;
    std::vector<double> drifts;   // one per tracked functional
    double control_initial = 0;
    double control_drift = 0;
    bool has_control = false;
    bool blew_up = false;
    double blowup_time = 0;
    bool pass = false;
    // Rows t, J0..Jd[, control]
    std::vector<std::vector<double>> series;
};

struct RunProtocol {
    double t_final = 1.0;
    double dt = 1e-3;
    int sample_every = 10;
    double drift_threshold = 1e-6;
    double control_min = 1e-3;
};

DriftReport conservation_run(const ModelSpec& spec, const std::vector<Functional>& tracked,
                             const Functional* control, const Grid& grid, const InitialData& ics,
                             const RunProtocol& protocol, const ParamValues& params);

}  // namespace lenard::sim
