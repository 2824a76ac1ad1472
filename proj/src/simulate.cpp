#include "simulate.hpp"

#include "errors.hpp"

#include <fftw3.h>

#include <cmath>

namespace lenard::sim {

Grid make_grid(double half_width, int n) {
    if (half_width <= 0) throw Error(Errc::InvalidArgument, "grid half-width must be positive");
    if (n < 16 || (n & (n - 1)) != 0)
        throw Error(Errc::InvalidArgument, "grid size must be a power of two, at least 16");
    return Grid{half_width, n};
}

GridState initial_state(const Grid& grid, const InitialData& ics) {
    GridState state;
    state.t = 0.0;
    state.fields.resize(ics.size(), std::vector<double>(grid.n, 0.0));
    for (std::size_t m = 0; m < ics.size(); ++m) {
        for (const auto& bump : ics[m]) {
            if (bump.width <= 0) throw Error(Errc::InvalidArgument, "bump width must be positive");
            for (int i = 0; i < grid.n; ++i) {
                double dxp = grid.point(i) - bump.center;
                state.fields[m][i] += bump.amp * std::exp(-dxp * dxp / (2 * bump.width * bump.width));
            }
        }
    }
    return state;
}

void require_edge_decay(const GridState& state) {
    for (std::size_t m = 0; m < state.fields.size(); ++m) {
        double edge = std::max(std::abs(state.fields[m].front()), std::abs(state.fields[m].back()));
        if (edge > edge_decay_limit)
            throw Error(Errc::EdgeDecayViolation,
                        "component " + std::to_string(m) + " is " + std::to_string(edge) +
                            " at the domain edge; initial data must decay below 1e-12");
    }
}

Spectral::Spectral(const Grid& grid) : n_(grid.n), half_width_(grid.half_width) {
    real_ = fftw_alloc_real(n_);
    auto* spec = fftw_alloc_complex(n_ / 2 + 1);
    spec_ = spec;
    fwd_ = fftw_plan_dft_r2c_1d(n_, real_, spec, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_c2r_1d(n_, spec, real_, FFTW_ESTIMATE);
}

Spectral::~Spectral() {
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    fftw_free(static_cast<fftw_complex*>(spec_));
    fftw_free(real_);
}

std::vector<double> Spectral::derivative(const std::vector<double>& f, int order) const {
    if (order < 0 || order > max_order)
        throw Error(Errc::UnsupportedJetOrder,
                    "derivative order " + std::to_string(order) + " above supported maximum");
    if (static_cast<int>(f.size()) != n_)
        throw Error(Errc::InvalidArgument, "field length does not match grid");
    if (order == 0) return f;

    auto* spec = static_cast<fftw_complex*>(spec_);
    for (int i = 0; i < n_; ++i) real_[i] = f[i];
    fftw_execute(static_cast<fftw_plan>(fwd_));

    const double base = M_PI / half_width_;  // wavenumber spacing on [-L, L)
    const double scale = 1.0 / n_;
    for (int k = 0; k <= n_ / 2; ++k) {
        double kk = base * k;
        double mag = std::pow(kk, order) * scale;
        double re = spec[k][0], im = spec[k][1];
        switch (order % 4) {
            case 0: spec[k][0] = re * mag; spec[k][1] = im * mag; break;          // (ik)^4 = k^4
            case 1: spec[k][0] = -im * mag; spec[k][1] = re * mag; break;         // ik
            case 2: spec[k][0] = -re * mag; spec[k][1] = -im * mag; break;        // -k^2
            case 3: spec[k][0] = im * mag; spec[k][1] = -re * mag; break;         // -ik^3
        }
    }
    // Zero the unpaired Nyquist mode for odd derivatives.
    if (order % 2 == 1) spec[n_ / 2][0] = spec[n_ / 2][1] = 0.0;

    fftw_execute(static_cast<fftw_plan>(bwd_));
    return std::vector<double>(real_, real_ + n_);
}

Compiled::Compiled(const DiffPoly& poly, const ParamValues& params) {
    auto param_value = [&](ParamId id) -> double {
        const std::string& name = Params::instance().name(id);
        auto it = params.find(name);
        if (it == params.end())
            throw Error(Errc::InvalidArgument, "no numeric value supplied for parameter " + name);
        return it->second;
    };
    std::map<std::pair<int, int>, bool> used;
    for (const auto& [mono, coeff] : poly.terms()) {
        Term term;
        term.coeff = rat_to_double(coeff);
        term.x_exp = 0;
        for (const auto& [key, exp] : mono.factors) {
            if (genkey::is_x(key)) {
                term.x_exp = exp;
            } else if (genkey::is_param(key)) {
                term.coeff *= std::pow(param_value(genkey::param_id(key)), exp);
            } else {
                auto cj = std::make_pair(genkey::jet_comp(key), genkey::jet_order(key));
                term.jet_factors.emplace_back(cj, exp);
                used[cj] = true;
                top_order_ = std::max(top_order_, cj.second);
            }
        }
        terms_.push_back(std::move(term));
    }
    for (const auto& [cj, flag] : used) {
        (void)flag;
        jets_used_.push_back(cj);
    }
}

std::vector<double> Compiled::evaluate(
    const Grid& grid, const std::map<std::pair<int, int>, std::vector<double>>& jets) const {
    std::vector<double> out(grid.n, 0.0);
    for (const auto& term : terms_) {
        for (int i = 0; i < grid.n; ++i) {
            double v = term.coeff;
            if (term.x_exp > 0) v *= std::pow(grid.point(i), term.x_exp);
            for (const auto& [cj, exp] : term.jet_factors) {
                double s = jets.at(cj)[i];
                v *= (exp == 1 ? s : std::pow(s, exp));
            }
            out[i] += v;
        }
    }
    return out;
}

FlowProblem::FlowProblem(const ModelSpec& spec, const Grid& grid, const ParamValues& params)
    : grid_(grid), spectral_(grid), dim_(spec.dim) {
    Characteristics rhs = model_rhs(spec);
    std::map<std::pair<int, int>, bool> used;
    for (int m = 0; m < dim_; ++m) {
        rhs_comps_.emplace_back(rhs[m], params);
        for (auto cj : rhs_comps_.back().jets_used()) used[cj] = true;
    }
    for (const auto& [cj, flag] : used) {
        (void)flag;
        rhs_jets_.push_back(cj);
    }

    // Diffusion-style guard dt <= dx^2 / (4 max|FG|) with parameters resolved.
    double fg_max = 0.0;
    for (int m = 0; m < dim_; ++m)
        for (int n = 0; n < dim_; ++n) {
            DiffPoly fg(spec.dim);
            for (int k = 0; k < dim_; ++k) fg += spec.f[m][k].scaled(spec.g[k][n]);
            Compiled entry(fg, params);
            std::map<std::pair<int, int>, std::vector<double>> none;
            Grid probe{1.0, 16};
            // constants only: evaluate on a trivial grid point
            std::vector<double> vals = entry.evaluate(probe, none);
            fg_max = std::max(fg_max, std::abs(vals[0]));
        }
    dt_limit_ = fg_max > 0 ? grid.dx() * grid.dx() / (4.0 * fg_max)
                           : std::numeric_limits<double>::infinity();
}

std::map<std::pair<int, int>, std::vector<double>> FlowProblem::jet_arrays(
    const std::vector<std::vector<double>>& fields,
    const std::vector<std::pair<int, int>>& wanted) const {
    std::map<std::pair<int, int>, std::vector<double>> jets;
    for (const auto& cj : wanted) {
        if (cj.first < 0 || cj.first >= dim_)
            throw Error(Errc::InvalidArgument, "jet component out of range");
        jets[cj] = spectral_.derivative(fields[cj.first], cj.second);
    }
    return jets;
}

std::vector<std::vector<double>> FlowProblem::rhs(const GridState& state) const {
    auto jets = jet_arrays(state.fields, rhs_jets_);
    std::vector<std::vector<double>> out;
    out.reserve(dim_);
    for (int m = 0; m < dim_; ++m) out.push_back(rhs_comps_[m].evaluate(grid_, jets));
    return out;
}

namespace {

bool finite(const std::vector<std::vector<double>>& fields) {
    for (const auto& f : fields)
        for (double v : f)
            if (!std::isfinite(v)) return false;
    return true;
}

std::vector<std::vector<double>> axpy(const std::vector<std::vector<double>>& base,
                                      const std::vector<std::vector<double>>& dir, double a) {
    auto out = base;
    for (std::size_t m = 0; m < out.size(); ++m)
        for (std::size_t i = 0; i < out[m].size(); ++i) out[m][i] += a * dir[m][i];
    return out;
}

}  // namespace

GridState FlowProblem::step(const GridState& state, double dt) const {
    if (dt <= 0) throw Error(Errc::InvalidArgument, "time step must be positive");
    if (dt > dt_limit_)
        throw Error(Errc::CflViolation, "dt = " + std::to_string(dt) + " exceeds the guard " +
                                            std::to_string(dt_limit_));
    GridState tmp{state.fields, state.t};
    auto k1 = rhs(state);
    tmp.fields = axpy(state.fields, k1, dt / 2);
    auto k2 = rhs(tmp);
    tmp.fields = axpy(state.fields, k2, dt / 2);
    auto k3 = rhs(tmp);
    tmp.fields = axpy(state.fields, k3, dt);
    auto k4 = rhs(tmp);

    GridState out;
    out.t = state.t + dt;
    out.fields = state.fields;
    for (std::size_t m = 0; m < out.fields.size(); ++m)
        for (std::size_t i = 0; i < out.fields[m].size(); ++i)
            out.fields[m][i] +=
                dt / 6.0 * (k1[m][i] + 2 * k2[m][i] + 2 * k3[m][i] + k4[m][i]);
    if (!finite(out.fields))
        throw Error(Errc::NonFinite, "blow-up detected at t = " + std::to_string(out.t));
    return out;
}

double FlowProblem::evaluate_density(const Compiled& density, const GridState& state) const {
    if (density.top_order() > Spectral::max_order)
        throw Error(Errc::UnsupportedJetOrder, "density needs jet order " +
                                                   std::to_string(density.top_order()) +
                                                   ", above the supported maximum");
    auto jets = jet_arrays(state.fields, density.jets_used());
    std::vector<double> values = density.evaluate(grid_, jets);
    double total = 0.0;
    for (double v : values) total += v;
    double result = total * grid_.dx();
    if (!std::isfinite(result)) throw Error(Errc::NonFinite, "non-finite functional value");
    return result;
}

double evaluate_functional(const Functional& fn, const FlowProblem& problem,
                           const GridState& state, const ParamValues& params) {
    return problem.evaluate_density(Compiled(fn.density(), params), state);
}

DriftReport conservation_run(const ModelSpec& spec, const std::vector<Functional>& tracked,
                             const Functional* control, const Grid& grid, const InitialData& ics,
                             const RunProtocol& protocol, const ParamValues& params) {
    if (static_cast<int>(ics.size()) != spec.dim)
        throw Error(Errc::InvalidArgument, "initial data must have one bump list per component");

    DriftReport report;
    report.model = spec.name;
    report.half_width = grid.half_width;
    report.n = grid.n;
    report.dt = protocol.dt;
    report.t_final = protocol.t_final;
    report.has_control = control != nullptr;

    FlowProblem problem(spec, grid, params);
    GridState state = initial_state(grid, ics);
    require_edge_decay(state);

    std::vector<Compiled> densities;
    densities.reserve(tracked.size());
    for (const auto& fn : tracked) densities.emplace_back(fn.density(), params);
    std::unique_ptr<Compiled> control_density;
    if (control) control_density = std::make_unique<Compiled>(control->density(), params);

    const long nsteps = std::lround(protocol.t_final / protocol.dt);
    report.drifts.assign(tracked.size(), 0.0);

    auto sample = [&](const GridState& s) {
        std::vector<double> row{s.t};
        for (const auto& d : densities) row.push_back(problem.evaluate_density(d, s));
        if (control_density) row.push_back(problem.evaluate_density(*control_density, s));
        report.series.push_back(std::move(row));
    };

    sample(state);
    report.initial_values.assign(report.series[0].begin() + 1,
                                 report.series[0].begin() + 1 + tracked.size());
    if (control_density) report.control_initial = report.series[0].back();

    const double eps = 1e-12;
    auto update_drifts = [&](const std::vector<double>& row) {
        for (std::size_t i = 0; i < tracked.size(); ++i) {
            double rel = std::abs(row[1 + i] - report.initial_values[i]) /
                         std::max(std::abs(report.initial_values[i]), eps);
            report.drifts[i] = std::max(report.drifts[i], rel);
        }
        if (control_density) {
            double rel = std::abs(row.back() - report.control_initial) /
                         std::max(std::abs(report.control_initial), eps);
            report.control_drift = std::max(report.control_drift, rel);
        }
    };

    try {
        for (long s = 1; s <= nsteps; ++s) {
            state = problem.step(state, protocol.dt);
            if (s % protocol.sample_every == 0 || s == nsteps) {
                sample(state);
                update_drifts(report.series.back());
            }
        }
    } catch (const Error& err) {
        if (err.code() != Errc::NonFinite) throw;
        report.blew_up = true;
        report.blowup_time = state.t;
    }

    bool drift_ok = true;
    for (double d : report.drifts) drift_ok = drift_ok && d <= protocol.drift_threshold;
    bool control_ok = !control_density || report.control_drift >= protocol.control_min;
    report.pass = !report.blew_up && drift_ok && control_ok;
    return report;
}

}  // namespace lenard::sim
