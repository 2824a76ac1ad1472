#pragma once

#include "ladder.hpp"
#include "models.hpp"
#include "rng.hpp"

#include <string>
#include <vector>

namespace lenard {

// One verification record; serializes to the JSON report schema
// {check, model, indices, residual_is_zero, residual_density}.
struct CheckResult {
    std::string check;
    std::string model;
    std::vector<int> indices;
    bool residual_is_zero = false;
    std::string residual_density;
};

// Everything the named checks operate on, built once per model.
struct VerifyContext {
    ModelSpec spec;
    ModelBivectors ops;
    Characteristics e;
    Ladder ladder;
    std::uint64_t seed = 0;
};

VerifyContext make_verify_context(const ModelSpec& spec, int depth, std::uint64_t seed);

// Pairwise brackets of ladder entries under the first structure.
std::vector<CheckResult> check_involutivity(const VerifyContext& ctx);
// bracket(F,G) + bracket(G,F) vanishes for seeded random pairs, both structures.
std::vector<CheckResult> check_antisymmetry(const VerifyContext& ctx, int trials = 20);
// Jacobi identity for W, What and the pencil W + lambda*What on seeded triples.
std::vector<CheckResult> check_jacobi(const VerifyContext& ctx, int trials = 20);
// Second deformation defect of the orbit generator on seeded random pairs.
std::vector<CheckResult> check_schouten(const VerifyContext& ctx, int pairs = 20);
// Ladder recursion residual for m = 0..depth-1 at the centre-orbit constant.
std::vector<CheckResult> check_lenard(const VerifyContext& ctx);
// Time-extended symmetry commutator for m = 0, 1.
std::vector<CheckResult> check_symmetry(const VerifyContext& ctx);
// Both Hamiltonian realizations reproduce the evolution equations.
std::vector<CheckResult> check_bihamiltonian(const VerifyContext& ctx);

const std::vector<std::string>& all_check_names();

std::vector<CheckResult> run_named_check(const VerifyContext& ctx, const std::string& name);

}  // namespace lenard
