#pragma once

#include "diffpoly.hpp"
#include "rng.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lenard::findim {

// Finite-dimensional side: exact polynomials on R^n reuse the jet carrier with
// coordinates as the order-0 jet generators.
using PolyVec = std::vector<DiffPoly>;
using RatMat = std::vector<std::vector<Rat>>;
using Point = std::vector<double>;
using ScalarFn = std::function<double(const Point&)>;
using VectorFn = std::function<std::vector<double>(const Point&)>;
using MatrixFn = std::function<std::vector<std::vector<double>>(const Point&)>;

DiffPoly coord(int n, int i);
// Names accepted when parsing coordinate polynomials: z1..zn, plus q1..,p1..
// for even n (canonical pairs).
std::map<std::string, int> coord_names(int n);
DiffPoly parse_coord_poly(int n, const std::string& text);

// Canonical constant bivector on R^n (n even): {q_i, p_i} = 1.
RatMat canonical_bivector(int n);

double eval_poly(const DiffPoly& p, const Point& pt);
PolyVec grad(const DiffPoly& f);
DiffPoly lie_scalar(const PolyVec& e, const DiffPoly& f);
DiffPoly poisson_bracket(const RatMat& w, const DiffPoly& f, const DiffPoly& g);

using PolyMat = std::vector<std::vector<DiffPoly>>;
PolyMat bivector_poly(int n, const RatMat& w);
// Lie derivative of a bivector along a polynomial field, entrywise exact.
PolyMat lie_bivector(const PolyVec& e, const PolyMat& w);
bool all_zero(const PolyMat& m);

// Central difference with one Richardson step, h on order-one coordinates.
double fd_partial(const ScalarFn& f, const Point& p, int i, double h = 1e-5);
std::vector<double> fd_grad(const ScalarFn& f, const Point& p, double h = 1e-5);

// grad(f)^T W(p) grad(g) with finite-difference gradients.
double fd_bracket(const MatrixFn& w, const ScalarFn& f, const ScalarFn& g, const Point& p,
                  double h = 1e-5);

ScalarFn as_fn(const DiffPoly& p);
VectorFn as_fn(const PolyVec& v);
MatrixFn as_fn(int n, const RatMat& w);

// A concrete (W canonical, E, J, c) witness for the ladder construction.
struct Instance {
    int n = 0;
    PolyVec e;
    DiffPoly j;
    Rat c;
};

struct Theorem1Report {
    int n = 0;
    int depth = 0;
    int points = 0;
    // Residual of W(dL_E J) = c [E,W](dJ), finite-difference gradients.
    double eq6_max = 0;
    // Defect-2 residual on seeded random quadratics, exact polynomial
    // expansion evaluated at the sample points.
    double defect2_max = 0;
    // max |{J^(k), J^(m)}| over k < m <= depth; ladder and brackets exact.
    double pairwise_max = 0;
    double tol_eq6 = 1e-8;
    double tol_defect2 = 1e-8;
    double tol_pairwise = 1e-7;

    bool pass() const {
        return eq6_max <= tol_eq6 && defect2_max <= tol_defect2 && pairwise_max <= tol_pairwise;
    }
};

Theorem1Report fd_verify_theorem1(const Instance& inst, int depth, int npoints,
                                  std::uint64_t seed, double h = 1e-5);

struct SearchOutcome {
    std::optional<Instance> instance;
    int generators_tested = 0;
    int systems_solved = 0;
    std::string note;
};

// Enumerates shear fields z_b d/dz_a on R^n, keeps those that deform the
// canonical structure without breaking the nilpotency condition, and solves
// the defining linear system for polynomial J of bounded degree over the c
// grid. Returns the first nondegenerate witness, or a "none in bounds" note.
SearchOutcome oracle_search(int n, int max_degree, const std::vector<Rat>& c_grid);

// Random quadratic polynomial with small integer coefficients.
DiffPoly random_quadratic(Rng& rng, int n);

Point random_point(Rng& rng, int n);

}  // namespace lenard::findim
