#pragma once

#include "functional.hpp"

#include <string>
#include <vector>

namespace lenard {

// One summand of a matrix entry: coeff * dx^order applied to the argument.
struct OpTerm {
    DiffPoly coeff;
    int dx_order = 0;
};

// Matrix of linear differential operators with polynomial coefficients,
// mapping covector characteristics to vector characteristics. Antisymmetry of
// the induced bracket is a tested property, never an assumption.
class PoissonOp {
public:
    PoissonOp(int dim, int comps);

    int dim() const { return dim_; }
    int comps() const { return comps_; }

    void add_term(int row, int col, DiffPoly coeff, int dx_order);
    const std::vector<OpTerm>& entry(int row, int col) const;

    bool constant_coefficient() const;
    bool is_zero() const;

    // (W xi)_m = sum_n sum_terms coeff * dx^order(xi_n); result has vector role.
    Characteristics apply(const Characteristics& covector) const;

    PoissonOp scaled(const Rat& factor) const;
    // W + factor * other, used for compatibility (pencil) checks.
    PoissonOp plus(const PoissonOp& other, const Rat& factor) const;

private:
    int dim_;
    int comps_;
    std::vector<std::vector<OpTerm>> entries_;  // row-major dim x dim
};

// Functional bracket {F,G} with density <dF/dU, W(dG/dU)>.
Functional bracket(const Functional& f, const Functional& g, const PoissonOp& w);

// Hamiltonian (evolutionary) field of a functional.
Characteristics hamiltonian_field(const Functional& f, const PoissonOp& w);

// {F,{G,H}} + {G,{H,F}} + {H,{F,G}}; identically zero for a Poisson operator.
Functional jacobiator(const Functional& f, const Functional& g, const Functional& h,
                      const PoissonOp& w);

// Bracket of F, G under the deformed bivector [E, W], realized at bracket
// level: L_E{F,G} - {L_E F, G} - {F, L_E G}.
Functional schouten_defect_1(const Functional& f, const Functional& g,
                             const Characteristics& e, const PoissonOp& w);

// Second deformation: the defect-1 construction applied to the [E,W] bracket.
// Vanishes identically when [E,[E,W]] annihilates the pair.
Functional schouten_defect_2(const Functional& f, const Functional& g,
                             const Characteristics& e, const PoissonOp& w);

// [E,W](dF) as characteristics: [E, W(dF)] - W(d L_E F).
Characteristics deformed_field(const Functional& f, const Characteristics& e, const PoissonOp& w);

// Residual of the recursion W(d L_E J_m) = (c - m) [E,W](d J_m).
// Zero characteristics certify the ladder step.
Characteristics lenard_residual(const Functional& j_m, const Characteristics& e,
                                const PoissonOp& w, const Rat& c, int m);

// Vector field of the time-extended algebra: dt_weight * d/dt + base + t * t_coeff.
struct TimeExtendedField {
    Rat dt_weight;
    Characteristics base;
    Characteristics t_coeff;
    Characteristics t2_coeff;

    bool is_zero_field() const {
        return base.is_zero() && t_coeff.is_zero() && t2_coeff.is_zero();
    }
};

TimeExtendedField time_extended(const Rat& dt_weight, Characteristics base, Characteristics t_coeff);

TimeExtendedField time_commutator(const TimeExtendedField& a, const TimeExtendedField& b);

// [S, X] for S = (c-m) E + t (c-m+1) W(dJ^{m+1}) and X = d/dt + W(dJ^m).
// The contract is that it is the zero field.
TimeExtendedField symmetry_commutator(const Characteristics& e, const PoissonOp& w,
                                      const Functional& j_m, const Functional& j_m1,
                                      const Rat& c, int m);

}  // namespace lenard
