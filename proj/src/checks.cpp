#include "checks.hpp"

#include "errors.hpp"

namespace lenard {

namespace {

CheckResult result_of(const std::string& check, const std::string& model, std::vector<int> indices,
                      const Functional& residual) {
    CheckResult r;
    r.check = check;
    r.model = model;
    r.indices = std::move(indices);
    r.residual_is_zero = residual.is_zero();
    if (!r.residual_is_zero) r.residual_density = residual.density().str();
    return r;
}

CheckResult result_of(const std::string& check, const std::string& model, std::vector<int> indices,
                      const Characteristics& residual) {
    CheckResult r;
    r.check = check;
    r.model = model;
    r.indices = std::move(indices);
    r.residual_is_zero = residual.is_zero();
    if (!r.residual_is_zero) {
        for (int i = 0; i < residual.dim(); ++i) {
            if (residual[i].is_zero()) continue;
            if (!r.residual_density.empty()) r.residual_density += "; ";
            r.residual_density += "[" + std::to_string(i) + "] " + residual[i].str();
        }
    }
    return r;
}

}  // namespace

VerifyContext make_verify_context(const ModelSpec& spec, int depth, std::uint64_t seed) {
    Characteristics e = model_e(spec);
    Ladder ladder = ladder_generate(default_ladder_seed(spec), e, depth, spec.name);
    return VerifyContext{spec, model_bivectors(spec), std::move(e), std::move(ladder), seed};
}

std::vector<CheckResult> check_involutivity(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    InvolutivityReport report = involutivity_report(ctx.ladder, ctx.ops.w);
    for (const auto& pair : report.pairs) {
        CheckResult r;
        r.check = "involutivity";
        r.model = ctx.spec.name;
        r.indices = {pair.k, pair.m};
        r.residual_is_zero = pair.zero;
        r.residual_density = pair.residual;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_antisymmetry(const VerifyContext& ctx, int trials) {
    std::vector<CheckResult> out;
    Rng rng(ctx.seed ^ 0xa5a5a5a5ull);
    const PoissonOp* ops[2] = {&ctx.ops.w, &ctx.ops.w_hat};
    for (int o = 0; o < 2; ++o)
        for (int t = 0; t < trials; ++t) {
            Functional f = random_functional(rng, ctx.spec.dim);
            Functional g = random_functional(rng, ctx.spec.dim);
            Functional residual = bracket(f, g, *ops[o]) + bracket(g, f, *ops[o]);
            out.push_back(result_of("antisymmetry", ctx.spec.name, {o, t}, residual));
        }
    return out;
}

std::vector<CheckResult> check_jacobi(const VerifyContext& ctx, int trials) {
    std::vector<CheckResult> out;
    Rng rng(ctx.seed ^ 0x5a5a5a5aull);
    std::vector<PoissonOp> pencil{ctx.ops.w, ctx.ops.w_hat,
                                  ctx.ops.w.plus(ctx.ops.w_hat, Rat(-1)),
                                  ctx.ops.w.plus(ctx.ops.w_hat, Rat(1)),
                                  ctx.ops.w.plus(ctx.ops.w_hat, Rat(2))};
    for (std::size_t o = 0; o < pencil.size(); ++o)
        for (int t = 0; t < trials; ++t) {
            Functional f = random_functional(rng, ctx.spec.dim);
            Functional g = random_functional(rng, ctx.spec.dim);
            Functional h = random_functional(rng, ctx.spec.dim);
            Functional residual = jacobiator(f, g, h, pencil[o]);
            out.push_back(result_of("jacobi", ctx.spec.name, {static_cast<int>(o), t}, residual));
        }
    return out;
}

std::vector<CheckResult> check_schouten(const VerifyContext& ctx, int pairs) {
    std::vector<CheckResult> out;
    Rng rng(ctx.seed ^ 0x3c3c3c3cull);
    for (int t = 0; t < pairs; ++t) {
        Functional f = random_functional(rng, ctx.spec.dim);
        Functional g = random_functional(rng, ctx.spec.dim);
        Functional residual = schouten_defect_2(f, g, ctx.e, ctx.ops.w);
        out.push_back(result_of("schouten", ctx.spec.name, {t}, residual));
    }
    return out;
}

std::vector<CheckResult> check_lenard(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    for (int m = 0; m < ctx.ladder.depth(); ++m) {
        Characteristics residual =
            lenard_residual(ctx.ladder.entries[m], ctx.e, ctx.ops.w, Rat(-1), m);
        out.push_back(result_of("lenard", ctx.spec.name, {m}, residual));
    }
    return out;
}

std::vector<CheckResult> check_symmetry(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    const int top = std::min(1, ctx.ladder.depth() - 1);
    for (int m = 0; m <= top; ++m) {
        TimeExtendedField comm = symmetry_commutator(ctx.e, ctx.ops.w, ctx.ladder.entries[m],
                                                     ctx.ladder.entries[m + 1], Rat(-1), m);
        CheckResult r;
        r.check = "symmetry";
        r.model = ctx.spec.name;
        r.indices = {m};
        r.residual_is_zero = comm.is_zero_field();
        if (!r.residual_is_zero) {
            auto describe = [](const char* tag, const Characteristics& part) {
                std::string s;
                if (!part.is_zero()) {
                    s += tag;
                    for (int i = 0; i < part.dim(); ++i)
                        if (!part[i].is_zero()) s += " [" + std::to_string(i) + "] " + part[i].str();
                }
                return s;
            };
            r.residual_density = describe("base:", comm.base) + describe(" t:", comm.t_coeff) +
                                 describe(" t^2:", comm.t2_coeff);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_bihamiltonian(const VerifyContext& ctx) {
    std::vector<CheckResult> out;
    Characteristics rhs = model_rhs(ctx.spec);
    auto [h, hhat] = model_hamiltonians(ctx.spec);
    out.push_back(result_of("bihamiltonian", ctx.spec.name, {0},
                            ctx.ops.w.apply(h.variational()) - rhs));
    out.push_back(result_of("bihamiltonian", ctx.spec.name, {1},
                            ctx.ops.w_hat.apply(hhat.variational()) - rhs));
    return out;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{
        "involutivity", "antisymmetry", "jacobi", "schouten", "lenard", "symmetry",
        "bihamiltonian"};
    return names;
}

std::vector<CheckResult> run_named_check(const VerifyContext& ctx, const std::string& name) {
    if (name == "involutivity") return check_involutivity(ctx);
    if (name == "antisymmetry") return check_antisymmetry(ctx);
    if (name == "jacobi") return check_jacobi(ctx);
    if (name == "schouten") return check_schouten(ctx);
    if (name == "lenard") return check_lenard(ctx);
    if (name == "symmetry") return check_symmetry(ctx);
    if (name == "bihamiltonian") return check_bihamiltonian(ctx);
    throw Error(Errc::ConfigInvalid, "unknown check: " + name);
}

}  // namespace lenard
