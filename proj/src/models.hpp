#pragma once

#include "poisson.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lenard {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;
// Skew matrix entries are jet-free polynomials so the dispersion coefficient
// can stay symbolic in the preset models.
using ScalarMatrix = std::vector<std::vector<DiffPoly>>;

// Constants (D, G, F, C, K) of the quadratic evolution family
//   U_t = 2 F G U_xx + <U, G U_x> C + <C, G U_x> U + <C, G U> U_x
// with G symmetric invertible, F skew, and F_mn C_k + F_km C_n + F_nk C_m = 0.
struct ModelSpec {
    int dim = 0;
    RatMatrix g;
    ScalarMatrix f;
    RatVector c_vec;
    RatVector k_vec;
    std::string name = "custom";

    RatMatrix g_inverse;  // cached at validation time
};

// Validates and caches; throws Error with codes SingularG / AsymmetryG /
// NonSkewF / CyclicConstraintViolated.
ModelSpec make_model(int dim, RatMatrix g, ScalarMatrix f, RatVector c_vec, RatVector k_vec,
                     std::string name = "custom");
ModelSpec make_model(int dim, RatMatrix g, RatMatrix f, RatVector c_vec, RatVector k_vec,
                     std::string name = "custom");

// The two named reductions; the skew matrix carries the symbolic dispersion
// coefficient so every identity is checked for all values of it at once.
ModelSpec boussinesq_model();
ModelSpec broer_kaup_model();
ModelSpec preset_model(const std::string& name);

// First structure: entry (m,n) = (G^{-1})_mn dx.
PoissonOp first_bivector(const ModelSpec& spec);

// Second structure, from the kernel <C,A><U,A_x> + <A_x,F A_x>. The
// kernel-to-operator orientation of each term is calibrated once per model
// against the requirement that both Hamiltonian realizations produce the same
// flow; failure to calibrate signals a construction bug.
PoissonOp second_bivector(const ModelSpec& spec);

struct ModelBivectors {
    PoissonOp w;
    PoissonOp w_hat;
};
ModelBivectors model_bivectors(const ModelSpec& spec);

// Generator of the conservation-law orbit (the x-weighted evolutionary field).
// Overall sign is fixed so that the Lie derivative of a centre functional
// int u_i dx equals (C_i/2) int <U,GU> dx.
Characteristics model_e(const ModelSpec& spec);

// {H, Hhat}: H drives the flow through the first structure, Hhat through the
// second.
std::pair<Functional, Functional> model_hamiltonians(const ModelSpec& spec);

// Right-hand side of the evolution equations as an evolutionary characteristic.
Characteristics model_rhs(const ModelSpec& spec);

// int <K, U> dx; lies in the centre of the first structure's bracket.
Functional centre_functional(const ModelSpec& spec, const std::vector<DiffPoly>& k_scalars);
Functional centre_functional(const ModelSpec& spec);

// Centre functional with symbolic coefficients (k, m) for two-component
// models; falls back to the model's K vector otherwise.
Functional default_ladder_seed(const ModelSpec& spec);

}  // namespace lenard
