#include "findim.hpp"

#include "errors.hpp"
#include "parse.hpp"

#include <algorithm>
#include <cmath>

namespace lenard::findim {

DiffPoly coord(int n, int i) { return DiffPoly::jet(n, i, 0); }

std::map<std::string, int> coord_names(int n) {
    std::map<std::string, int> names;
    for (int i = 0; i < n; ++i) names["z" + std::to_string(i + 1)] = i;
    if (n % 2 == 0) {
        for (int i = 0; i < n / 2; ++i) {
            names["q" + std::to_string(i + 1)] = i;
            names["p" + std::to_string(i + 1)] = n / 2 + i;
        }
    }
    return names;
}

DiffPoly parse_coord_poly(int n, const std::string& text) {
    DiffPoly p = parse_poly(n, text, coord_names(n));
    if (p.max_jet_order() > 0 || p.contains_x())
        throw Error(Errc::Parse, "coordinate polynomial may only use coordinates: " + text);
    return p;
}

RatMat canonical_bivector(int n) {
    if (n <= 0 || n % 2 != 0)
        throw Error(Errc::InvalidArgument, "canonical bivector needs even dimension");
    RatMat w(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n / 2; ++i) {
        w[i][n / 2 + i] = 1;
        w[n / 2 + i][i] = -1;
    }
    return w;
}

double eval_poly(const DiffPoly& p, const Point& pt) {
    return p.eval([&](std::uint64_t key) -> double {
        if (!genkey::is_jet(key) || genkey::jet_order(key) != 0)
            throw std::logic_error("coordinate polynomial contains a non-coordinate generator");
        return pt.at(genkey::jet_comp(key));
    });
}

PolyVec grad(const DiffPoly& f) {
    PolyVec out;
    out.reserve(f.comps());
    for (int i = 0; i < f.comps(); ++i) out.push_back(f.partial_jet(i, 0));
    return out;
}

DiffPoly lie_scalar(const PolyVec& e, const DiffPoly& f) {
    DiffPoly out(f.comps());
    for (int i = 0; i < f.comps(); ++i) out += e[i] * f.partial_jet(i, 0);
    return out;
}

DiffPoly poisson_bracket(const RatMat& w, const DiffPoly& f, const DiffPoly& g) {
    const int n = f.comps();
    DiffPoly out(n);
    for (int i = 0; i < n; ++i) {
        DiffPoly fi = f.partial_jet(i, 0);
        if (fi.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (w[i][j] == 0) continue;
            out += (fi * g.partial_jet(j, 0)).scaled(w[i][j]);
        }
    }
    return out;
}

PolyMat bivector_poly(int n, const RatMat& w) {
    PolyMat out(n, std::vector<DiffPoly>(n, DiffPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w[i][j] != 0) out[i][j] = DiffPoly::constant(n, w[i][j]);
    return out;
}

PolyMat lie_bivector(const PolyVec& e, const PolyMat& w) {
    const int n = static_cast<int>(w.size());
    PolyMat out(n, std::vector<DiffPoly>(n, DiffPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DiffPoly entry(n);
            for (int k = 0; k < n; ++k) {
                entry += e[k] * w[i][j].partial_jet(k, 0);
                entry -= w[k][j] * e[i].partial_jet(k, 0);
                entry -= w[i][k] * e[j].partial_jet(k, 0);
            }
            out[i][j] = entry;
        }
    return out;
}

bool all_zero(const PolyMat& m) {
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

double fd_partial(const ScalarFn& f, const Point& p, int i, double h) {
    auto central = [&](double step) {
        Point a = p, b = p;
        a[i] += step;
        b[i] -= step;
        return (f(a) - f(b)) / (2 * step);
    };
    double coarse = central(h);
    double fine = central(h / 2);
    double out = (4 * fine - coarse) / 3;
    if (!std::isfinite(out)) throw Error(Errc::NonFinite, "non-finite derivative sample");
    return out;
}

std::vector<double> fd_grad(const ScalarFn& f, const Point& p, double h) {
    std::vector<double> g(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) g[i] = fd_partial(f, p, static_cast<int>(i), h);
    return g;
}

double fd_bracket(const MatrixFn& w, const ScalarFn& f, const ScalarFn& g, const Point& p,
                  double h) {
    auto gf = fd_grad(f, p, h);
    auto gg = fd_grad(g, p, h);
    auto wm = w(p);
    double total = 0;
    for (std::size_t i = 0; i < gf.size(); ++i)
        for (std::size_t j = 0; j < gg.size(); ++j) total += gf[i] * wm[i][j] * gg[j];
    if (!std::isfinite(total)) throw Error(Errc::NonFinite, "non-finite bracket sample");
    return total;
}

ScalarFn as_fn(const DiffPoly& p) {
    return [p](const Point& pt) { return eval_poly(p, pt); };
}

VectorFn as_fn(const PolyVec& v) {
    return [v](const Point& pt) {
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& p : v) out.push_back(eval_poly(p, pt));
        return out;
    };
}

MatrixFn as_fn(int n, const RatMat& w) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = rat_to_double(w[i][j]);
    return [m](const Point&) { return m; };
}

DiffPoly random_quadratic(Rng& rng, int n) {
    DiffPoly out(n);
    for (int t = 0; t < 4; ++t) {
        DiffPoly mono = DiffPoly::constant(n, Rat(rng.uniform(-3, 3)));
        int deg = rng.uniform(1, 2);
        for (int d = 0; d < deg; ++d) mono = mono * coord(n, rng.uniform(0, n - 1));
        out += mono;
    }
    if (out.is_zero()) out += coord(n, 0) * coord(n, n - 1);
    return out;
}

Point random_point(Rng& rng, int n) {
    Point p(n);
    for (int i = 0; i < n; ++i) p[i] = rng.uniform_real(-1.0, 1.0);
    return p;
}

namespace {

void validate_c(const Rat& c) {
    if (rat_in_zero_or_positive_integers(c))
        throw Error(Errc::InvalidC,
                    "constant must avoid zero and the positive integers, got " + rat_str(c));
}

DiffPoly defect1(const PolyVec& e, const RatMat& w, const DiffPoly& f, const DiffPoly& g) {
    return lie_scalar(e, poisson_bracket(w, f, g)) - poisson_bracket(w, lie_scalar(e, f), g) -
           poisson_bracket(w, f, lie_scalar(e, g));
}

DiffPoly defect2(const PolyVec& e, const RatMat& w, const DiffPoly& f, const DiffPoly& g) {
    return lie_scalar(e, defect1(e, w, f, g)) - defect1(e, w, lie_scalar(e, f), g) -
           defect1(e, w, f, lie_scalar(e, g));
}

}  // namespace

Theorem1Report fd_verify_theorem1(const Instance& inst, int depth, int npoints,
                                  std::uint64_t seed, double h) {
    validate_c(inst.c);
    const int n = inst.n;
    RatMat w = canonical_bivector(n);
    Rng rng(seed);

    Theorem1Report report;
    report.n = n;
    report.depth = depth;
    report.points = npoints;

    std::vector<Point> pts;
    pts.reserve(npoints);
    for (int i = 0; i < npoints; ++i) pts.push_back(random_point(rng, n));

    // (a) residual of the defining relation with finite-difference gradients
    // and a finite-difference Lie derivative of the structure matrix.
    DiffPoly lej = lie_scalar(inst.e, inst.j);
    ScalarFn lej_fn = as_fn(lej);
    ScalarFn j_fn = as_fn(inst.j);
    VectorFn e_fn = as_fn(inst.e);
    const double c_val = rat_to_double(inst.c);
    for (const auto& p : pts) {
        auto grad_lej = fd_grad(lej_fn, p, h);
        auto grad_j = fd_grad(j_fn, p, h);
        // (L_E W)^{ij} at p: W constant, so only the -W dE terms survive.
        std::vector<std::vector<double>> lew(n, std::vector<double>(n, 0.0));
        std::vector<std::vector<double>> de(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i) {
            ScalarFn ei = [&, i](const Point& q) { return e_fn(q)[i]; };
            auto gi = fd_grad(ei, p, h);
            for (int k = 0; k < n; ++k) de[i][k] = gi[k];
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double acc = 0;
                for (int k = 0; k < n; ++k)
                    acc -= rat_to_double(w[k][j]) * de[i][k] + rat_to_double(w[i][k]) * de[j][k];
                lew[i][j] = acc;
            }
        for (int i = 0; i < n; ++i) {
            double lhs = 0, rhs = 0;
            for (int j = 0; j < n; ++j) {
                lhs += rat_to_double(w[i][j]) * grad_lej[j];
                rhs += lew[i][j] * grad_j[j];
            }
            report.eq6_max = std::max(report.eq6_max, std::abs(lhs - c_val * rhs));
        }
    }

    // (b) defect-2 on seeded random quadratics; the defect polynomial is
    // expanded exactly, then sampled.
    for (int trial = 0; trial < 20; ++trial) {
        DiffPoly f = random_quadratic(rng, n);
        DiffPoly g = random_quadratic(rng, n);
        DiffPoly d2 = defect2(inst.e, w, f, g);
        if (d2.is_zero()) continue;
        for (const auto& p : pts)
            report.defect2_max = std::max(report.defect2_max, std::abs(eval_poly(d2, p)));
    }

    // (c) pairwise brackets of the exact ladder.
    std::vector<DiffPoly> ladder{inst.j};
    for (int i = 0; i < depth; ++i) ladder.push_back(lie_scalar(inst.e, ladder.back()));
    for (std::size_t a = 0; a < ladder.size(); ++a)
        for (std::size_t b = a + 1; b < ladder.size(); ++b) {
            DiffPoly pb = poisson_bracket(w, ladder[a], ladder[b]);
            if (pb.is_zero()) continue;
            for (const auto& p : pts)
                report.pairwise_max = std::max(report.pairwise_max, std::abs(eval_poly(pb, p)));
        }

    return report;
}

namespace {

// Dense monomial basis of degree 1..max_degree in n variables.
std::vector<Monomial> poly_basis(int n, int max_degree) {
    std::vector<Monomial> basis;
    std::vector<int> exps(n, 0);
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (start == n) {
            Monomial m = Monomial::unit();
            for (int i = 0; i < n; ++i)
                if (exps[i] > 0) m = m.times(Monomial::single(genkey::jet(i, 0), exps[i]));
            if (m.degree >= 1) basis.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[start] = e;
            rec(start + 1, remaining - e);
        }
        exps[start] = 0;
    };
    rec(0, max_degree);
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        return MonoOrder{}(b, a);
    });
    return basis;
}

// Nullspace basis of a rational matrix via reduced row echelon form.
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> a, int cols) {
    int rows = static_cast<int>(a.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[r]);
        Rat p = a[r][c];
        for (int j = 0; j < cols; ++j) a[r][j] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat factor = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

SearchOutcome oracle_search(int n, int max_degree, const std::vector<Rat>& c_grid) {
    if (n > 4 || max_degree > 2)
        throw Error(Errc::InvalidArgument, "search bounds exceed the supported desk scale");
    for (const auto& c : c_grid) validate_c(c);

    SearchOutcome outcome;
    RatMat w = canonical_bivector(n);
    PolyMat w_poly = bivector_poly(n, w);
    std::vector<Monomial> basis = poly_basis(n, max_degree);
    const int cols = static_cast<int>(basis.size());

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            PolyVec e(n, DiffPoly(n));
            e[a] = coord(n, b);
            PolyMat lew = lie_bivector(e, w_poly);
            if (all_zero(lew)) continue;                      // Poisson field, out of scope
            if (!all_zero(lie_bivector(e, lew))) continue;    // nilpotency fails
            ++outcome.generators_tested;

            for (const auto& c : c_grid) {
                ++outcome.systems_solved;
                // Rows: coefficients of every monomial of every component of
                // W d(L_E b) - c [E,W] db, per basis element b.
                std::map<std::pair<int, Monomial>, int, bool (*)(const std::pair<int, Monomial>&,
                                                                 const std::pair<int, Monomial>&)>
                    row_index([](const std::pair<int, Monomial>& x, const std::pair<int, Monomial>& y) {
                        if (x.first != y.first) return x.first < y.first;
                        return MonoOrder{}(x.second, y.second);
                    });
                std::vector<std::vector<Rat>> rows;
                auto row_of = [&](int comp, const Monomial& mono) -> std::vector<Rat>& {
                    auto [it, inserted] = row_index.emplace(std::make_pair(comp, mono),
                                                            static_cast<int>(rows.size()));
                    if (inserted) rows.emplace_back(cols, Rat(0));
                    return rows[it->second];
                };
                for (int col = 0; col < cols; ++col) {
                    DiffPoly bpoly(n);
                    bpoly.add_term(basis[col], Rat(1));
                    PolyVec g_le = grad(lie_scalar(e, bpoly));
                    PolyVec g_b = grad(bpoly);
                    for (int i = 0; i < n; ++i) {
                        DiffPoly resid(n);
                        for (int j = 0; j < n; ++j) {
                            if (w[i][j] != 0) resid += g_le[j].scaled(w[i][j]);
                            if (!lew[i][j].is_zero()) resid -= (lew[i][j] * g_b[j]).scaled(c);
                        }
                        for (const auto& [mono, coeff] : resid.terms()) row_of(i, mono)[col] = coeff;
                    }
                }
                for (const auto& v : nullspace(rows, cols)) {
                    DiffPoly j(n);
                    for (int col = 0; col < cols; ++col)
                        if (v[col] != 0) j.add_term(basis[col], v[col]);
                    if (j.is_zero()) continue;
                    // Degenerate solutions are annihilated by both sides.
                    PolyVec g_le = grad(lie_scalar(e, j));
                    bool nondegenerate = false;
                    for (int i = 0; i < n && !nondegenerate; ++i) {
                        DiffPoly comp(n);
                        for (int jj = 0; jj < n; ++jj)
                            if (w[i][jj] != 0) comp += g_le[jj].scaled(w[i][jj]);
                        nondegenerate = !comp.is_zero();
                    }
                    if (!nondegenerate) continue;
                    outcome.instance = Instance{n, e, j, c};
                    outcome.note = "nondegenerate instance found";
                    return outcome;
                }
            }
        }
    }
    outcome.note = "none in bounds: no nondegenerate (E, J, c) within degree " +
                   std::to_string(max_degree) + " on R^" + std::to_string(n);
    return outcome;
}

}  // namespace lenard::findim
