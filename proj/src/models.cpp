#include "models.hpp"

#include "errors.hpp"

namespace lenard {

namespace {

// Gauss-Jordan inverse over the rationals; throws SingularG when det G = 0.
RatMatrix invert(const RatMatrix& g) {
    const int n = static_cast<int>(g.size());
    RatMatrix a = g;
    RatMatrix inv(n, RatVector(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw Error(Errc::SingularG, "matrix G is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rat factor = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<DiffPoly> jet_vector(int dim, int order) {
    std::vector<DiffPoly> out;
    out.reserve(dim);
    for (int m = 0; m < dim; ++m) out.push_back(DiffPoly::jet(dim, m, order));
    return out;
}

std::vector<DiffPoly> rat_mat_vec(int dim, const RatMatrix& a, const std::vector<DiffPoly>& v) {
    std::vector<DiffPoly> out(dim, DiffPoly(dim));
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) out[m] += v[n].scaled(a[m][n]);
    return out;
}

std::vector<DiffPoly> poly_mat_vec(int dim, const ScalarMatrix& a, const std::vector<DiffPoly>& v) {
    std::vector<DiffPoly> out(dim, DiffPoly(dim));
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) out[m] += a[m][n] * v[n];
    return out;
}

DiffPoly inner(int dim, const std::vector<DiffPoly>& a, const std::vector<DiffPoly>& b) {
    DiffPoly out(dim);
    for (int m = 0; m < dim; ++m) out += a[m] * b[m];
    return out;
}

DiffPoly inner(int dim, const RatVector& a, const std::vector<DiffPoly>& b) {
    DiffPoly out(dim);
    for (int m = 0; m < dim; ++m) out += b[m].scaled(a[m]);
    return out;
}

}  // namespace

ModelSpec make_model(int dim, RatMatrix g, ScalarMatrix f, RatVector c_vec, RatVector k_vec,
                     std::string name) {
    if (dim <= 0) throw Error(Errc::InvalidArgument, "component count must be positive");
    auto shape_ok = [dim](const auto& mat) {
        if (static_cast<int>(mat.size()) != dim) return false;
        for (const auto& row : mat)
            if (static_cast<int>(row.size()) != dim) return false;
        return true;
    };
    if (!shape_ok(g) || !shape_ok(f) || static_cast<int>(c_vec.size()) != dim ||
        static_cast<int>(k_vec.size()) != dim)
        throw Error(Errc::InvalidArgument, "model constant shapes do not match D");

    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
            if (g[m][n] != g[n][m]) throw Error(Errc::AsymmetricG, "matrix G must be symmetric");
            if (f[m][n].comps() != dim)
                throw Error(Errc::InvalidArgument, "skew matrix entry has wrong component count");
            if (f[m][n].max_jet_order() >= 0 || f[m][n].contains_x())
                throw Error(Errc::InvalidArgument, "skew matrix entries must be constants");
            if (!(f[m][n] + f[n][m]).is_zero())
                throw Error(Errc::NonSkewF, "matrix F must be skew-symmetric");
        }

    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n)
            for (int k = 0; k < dim; ++k) {
                DiffPoly lhs = f[m][n].scaled(c_vec[k]) + f[k][m].scaled(c_vec[n]) +
                               f[n][k].scaled(c_vec[m]);
                if (!lhs.is_zero())
                    throw Error(Errc::CyclicConstraintViolated,
                                "constants violate F_mn C_k + F_km C_n + F_nk C_m = 0 at (" +
                                    std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(k) + ")");
            }

    ModelSpec spec;
    spec.dim = dim;
    spec.g = std::move(g);
    spec.f = std::move(f);
    spec.c_vec = std::move(c_vec);
    spec.k_vec = std::move(k_vec);
    spec.name = std::move(name);
    spec.g_inverse = invert(spec.g);
    return spec;
}

ModelSpec make_model(int dim, RatMatrix g, RatMatrix f, RatVector c_vec, RatVector k_vec,
                     std::string name) {
    ScalarMatrix fs(dim);
    if (static_cast<int>(f.size()) != dim)
        throw Error(Errc::InvalidArgument, "model constant shapes do not match D");
    for (int m = 0; m < dim; ++m) {
        if (static_cast<int>(f[m].size()) != dim)
            throw Error(Errc::InvalidArgument, "model constant shapes do not match D");
        for (int n = 0; n < dim; ++n) fs[m].push_back(DiffPoly::constant(dim, f[m][n]));
    }
    return make_model(dim, std::move(g), std::move(fs), std::move(c_vec), std::move(k_vec),
                      std::move(name));
}

namespace {

ModelSpec two_component_preset(RatMatrix g, const std::string& name) {
    const int dim = 2;
    DiffPoly half_c = DiffPoly::param(dim, "c").scaled(Rat(1, 2));
    ScalarMatrix f{{DiffPoly(dim), half_c}, {-half_c, DiffPoly(dim)}};
    return make_model(dim, std::move(g), std::move(f), {Rat(0), Rat(1)}, {Rat(0), Rat(1)}, name);
}

}  // namespace

ModelSpec boussinesq_model() {
    return two_component_preset({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, "boussinesq");
}

ModelSpec broer_kaup_model() {
    return two_component_preset({{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, "broer-kaup");
}

ModelSpec preset_model(const std::string& name) {
    if (name == "boussinesq") return boussinesq_model();
    if (name == "broer-kaup") return broer_kaup_model();
    throw Error(Errc::ConfigInvalid, "unknown preset: " + name);
}

PoissonOp first_bivector(const ModelSpec& spec) {
    PoissonOp w(spec.dim, spec.dim);
    for (int m = 0; m < spec.dim; ++m)
        for (int n = 0; n < spec.dim; ++n)
            w.add_term(m, n, DiffPoly::constant(spec.dim, spec.g_inverse[m][n]), 1);
    return w;
}

Characteristics model_rhs(const ModelSpec& spec) {
    const int dim = spec.dim;
    auto u0 = jet_vector(dim, 0);
    auto u1 = jet_vector(dim, 1);
    auto u2 = jet_vector(dim, 2);
    auto gu = rat_mat_vec(dim, spec.g, u0);
    auto gux = rat_mat_vec(dim, spec.g, u1);
    auto fgu_xx = poly_mat_vec(dim, spec.f, rat_mat_vec(dim, spec.g, u2));
    DiffPoly u_gux = inner(dim, u0, gux);
    DiffPoly c_gux = inner(dim, spec.c_vec, gux);
    DiffPoly c_gu = inner(dim, spec.c_vec, gu);

    std::vector<DiffPoly> out(dim, DiffPoly(dim));
    for (int m = 0; m < dim; ++m) {
        out[m] = fgu_xx[m].scaled(Rat(2)) + u_gux.scaled(spec.c_vec[m]) + c_gux * u0[m] +
                 c_gu * u1[m];
    }
    return Characteristics(Role::Vector, std::move(out));
}

std::pair<Functional, Functional> model_hamiltonians(const ModelSpec& spec) {
    const int dim = spec.dim;
    auto u0 = jet_vector(dim, 0);
    auto u1 = jet_vector(dim, 1);
    auto gu = rat_mat_vec(dim, spec.g, u0);
    auto fgux = poly_mat_vec(dim, spec.f, rat_mat_vec(dim, spec.g, u1));
    DiffPoly u_gu = inner(dim, u0, gu);
    DiffPoly c_gu = inner(dim, spec.c_vec, gu);
    DiffPoly h_density = (c_gu * u_gu).scaled(Rat(1, 2)) + inner(dim, fgux, gu);
    DiffPoly hhat_density = u_gu.scaled(Rat(1, 2));
    return {Functional(h_density), Functional(hhat_density)};
}

PoissonOp second_bivector(const ModelSpec& spec) {
    const int dim = spec.dim;
    const Characteristics rhs = model_rhs(spec);
    const auto [h, hhat] = model_hamiltonians(spec);
    const PoissonOp w = first_bivector(spec);

    if (!(w.apply(h.variational()) == rhs))
        throw Error(Errc::CalibrationFailure,
                    "first structure does not reproduce the evolution equations");

    auto candidate = [&](const Rat& s_quadratic, const Rat& s_skew) {
        PoissonOp op(dim, dim);
        for (int m = 0; m < dim; ++m)
            for (int n = 0; n < dim; ++n) {
                // <C,A><U,A_x> block, antisymmetrized.
                op.add_term(m, n, DiffPoly::jet(dim, n, 0).scaled(s_quadratic * spec.c_vec[m]), 1);
                op.add_term(m, n, DiffPoly::jet(dim, m, 0).scaled(s_quadratic * spec.c_vec[n]), 1);
                op.add_term(m, n, DiffPoly::jet(dim, m, 1).scaled(s_quadratic * spec.c_vec[n]), 0);
                // <A_x, F A_x> block.
                op.add_term(m, n, spec.f[m][n].scaled(s_skew * Rat(-2)), 2);
            }
        return op;
    };

    // The kernel fixes each block only up to wedge orientation; the pair of
    // Hamiltonian realizations of the flow pins both signs.
    for (const auto& [s1, s2] :
         {std::pair{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}}) {
        PoissonOp op = candidate(s1, s2);
        if (op.apply(hhat.variational()) == rhs) return op;
    }
    throw Error(Errc::CalibrationFailure,
                "no orientation of the second structure reproduces the evolution equations");
}

ModelBivectors model_bivectors(const ModelSpec& spec) {
    return ModelBivectors{first_bivector(spec), second_bivector(spec)};
}

Characteristics model_e(const ModelSpec& spec) {
    const int dim = spec.dim;
    auto u0 = jet_vector(dim, 0);
    auto u1 = jet_vector(dim, 1);
    auto gu = rat_mat_vec(dim, spec.g, u0);
    auto gux = rat_mat_vec(dim, spec.g, u1);
    auto fgux = poly_mat_vec(dim, spec.f, gux);
    auto fgu_xx = poly_mat_vec(dim, spec.f, rat_mat_vec(dim, spec.g, jet_vector(dim, 2)));
    DiffPoly c_gu = inner(dim, spec.c_vec, gu);
    DiffPoly c_gux = inner(dim, spec.c_vec, gux);
    DiffPoly u_gu = inner(dim, u0, gu);
    DiffPoly u_gux = inner(dim, u0, gux);
    DiffPoly xx = DiffPoly::x(dim);

    std::vector<DiffPoly> comps(dim, DiffPoly(dim));
    for (int m = 0; m < dim; ++m) {
        DiffPoly weighted = c_gux * u0[m] + c_gu * u1[m] + u_gux.scaled(spec.c_vec[m]) +
                            fgu_xx[m].scaled(Rat(2));
        comps[m] = c_gu * u0[m] + u_gu.scaled(spec.c_vec[m]) + fgux[m].scaled(Rat(4)) +
                   xx * weighted;
    }
    Characteristics e(Role::Vector, std::move(comps));

    // Fix the overall sign against the first rung of the orbit.
    int anchor = -1;
    for (int i = 0; i < dim; ++i)
        if (spec.c_vec[i] != 0) {
            anchor = i;
            break;
        }
    if (anchor < 0) return e;  // trivial orbit, nothing to pin

    Functional target = Functional(u_gu.scaled(spec.c_vec[anchor] / 2));
    Functional got = lie_derivative(e, Functional(u0[anchor]));
    if (got == target.scaled(Rat(-1))) e = e.scaled(Rat(-1));

    for (int i = 0; i < dim; ++i) {
        Functional want = Functional(u_gu.scaled(spec.c_vec[i] / 2));
        if (!(lie_derivative(e, Functional(u0[i])) == want))
            throw Error(Errc::CalibrationFailure,
                        "orbit generator does not map the centre onto the first rung");
    }
    return e;
}

Functional centre_functional(const ModelSpec& spec, const std::vector<DiffPoly>& k_scalars) {
    if (static_cast<int>(k_scalars.size()) != spec.dim)
        throw Error(Errc::InvalidArgument, "centre coefficient vector has wrong length");
    DiffPoly density(spec.dim);
    for (int m = 0; m < spec.dim; ++m) {
        if (k_scalars[m].max_jet_order() >= 0 || k_scalars[m].contains_x())
            throw Error(Errc::InvalidArgument, "centre coefficients must be constants");
        density += k_scalars[m] * DiffPoly::jet(spec.dim, m, 0);
    }
    return Functional(density);
}

Functional centre_functional(const ModelSpec& spec) {
    std::vector<DiffPoly> ks;
    ks.reserve(spec.dim);
    for (int m = 0; m < spec.dim; ++m) ks.push_back(DiffPoly::constant(spec.dim, spec.k_vec[m]));
    return centre_functional(spec, ks);
}

Functional default_ladder_seed(const ModelSpec& spec) {
    if (spec.dim == 2) {
        std::vector<DiffPoly> ks{DiffPoly::param(2, "k"), DiffPoly::param(2, "m")};
        return centre_functional(spec, ks);
    }
    return centre_functional(spec);
}

}  // namespace lenard
