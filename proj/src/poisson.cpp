#include "poisson.hpp"

#include "errors.hpp"

namespace lenard {

PoissonOp::PoissonOp(int dim, int comps) : dim_(dim), comps_(comps), entries_(dim * dim) {
    if (dim <= 0) throw Error(Errc::InvalidArgument, "operator dimension must be positive");
}

void PoissonOp::add_term(int row, int col, DiffPoly coeff, int dx_order) {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
        throw Error(Errc::InvalidArgument, "operator entry index out of range");
    if (dx_order < 0) throw Error(Errc::InvalidArgument, "negative derivative order");
    if (coeff.comps() != comps_)
        throw Error(Errc::InvalidArgument, "coefficient component count mismatch");
    if (coeff.is_zero()) return;
    entries_[row * dim_ + col].push_back(OpTerm{std::move(coeff), dx_order});
}

const std::vector<OpTerm>& PoissonOp::entry(int row, int col) const {
    return entries_.at(row * dim_ + col);
}

bool PoissonOp::constant_coefficient() const {
    for (const auto& cell : entries_)
        for (const auto& t : cell)
            if (t.coeff.max_jet_order() >= 0 || t.coeff.contains_x()) return false;
    return true;
}

bool PoissonOp::is_zero() const {
    for (const auto& cell : entries_)
        if (!cell.empty()) return false;
    return true;
}

Characteristics PoissonOp::apply(const Characteristics& covector) const {
    covector.require_role(Role::Covector);
    if (covector.dim() != dim_)
        throw Error(Errc::InvalidArgument, "covector dimension does not match operator");
    std::vector<DiffPoly> out(dim_, DiffPoly(comps_));
    for (int n = 0; n < dim_; ++n) {
        if (covector[n].is_zero()) continue;
        // dx powers of the argument are shared across rows.
        int top = 0;
        for (int m = 0; m < dim_; ++m)
            for (const auto& t : entry(m, n)) top = std::max(top, t.dx_order);
        std::vector<DiffPoly> dxs;
        dxs.reserve(top + 1);
        dxs.push_back(covector[n]);
        for (int j = 1; j <= top; ++j) dxs.push_back(dxs.back().dx());
        for (int m = 0; m < dim_; ++m)
            for (const auto& t : entry(m, n)) out[m] += t.coeff * dxs[t.dx_order];
    }
    return Characteristics(Role::Vector, std::move(out));
}

PoissonOp PoissonOp::scaled(const Rat& factor) const {
    PoissonOp out(dim_, comps_);
    for (int m = 0; m < dim_; ++m)
        for (int n = 0; n < dim_; ++n)
            for (const auto& t : entry(m, n)) out.add_term(m, n, t.coeff.scaled(factor), t.dx_order);
    return out;
}

PoissonOp PoissonOp::plus(const PoissonOp& other, const Rat& factor) const {
    if (other.dim_ != dim_) throw Error(Errc::InvalidArgument, "operator dimension mismatch");
    PoissonOp out = *this;
    for (int m = 0; m < dim_; ++m)
        for (int n = 0; n < dim_; ++n)
            for (const auto& t : other.entry(m, n))
                out.add_term(m, n, t.coeff.scaled(factor), t.dx_order);
    return out;
}

Functional bracket(const Functional& f, const Functional& g, const PoissonOp& w) {
    if (f.comps() != g.comps() || f.comps() != w.dim())
        throw Error(Errc::InvalidArgument, "dimension mismatch in bracket");
    Characteristics wg = w.apply(g.variational());
    DiffPoly density(f.comps());
    for (int m = 0; m < f.comps(); ++m) density += f.variational()[m] * wg[m];
    return Functional(density);
}

Characteristics hamiltonian_field(const Functional& f, const PoissonOp& w) {
    return w.apply(f.variational());
}

Functional jacobiator(const Functional& f, const Functional& g, const Functional& h,
                      const PoissonOp& w) {
    return bracket(f, bracket(g, h, w), w) + bracket(g, bracket(h, f, w), w) +
           bracket(h, bracket(f, g, w), w);
}

Functional schouten_defect_1(const Functional& f, const Functional& g,
                             const Characteristics& e, const PoissonOp& w) {
    return lie_derivative(e, bracket(f, g, w)) - bracket(lie_derivative(e, f), g, w) -
           bracket(f, lie_derivative(e, g), w);
}

Functional schouten_defect_2(const Functional& f, const Functional& g,
                             const Characteristics& e, const PoissonOp& w) {
    return lie_derivative(e, schouten_defect_1(f, g, e, w)) -
           schouten_defect_1(lie_derivative(e, f), g, e, w) -
           schouten_defect_1(f, lie_derivative(e, g), e, w);
}

Characteristics deformed_field(const Functional& f, const Characteristics& e, const PoissonOp& w) {
    Characteristics wf = w.apply(f.variational());
    Characteristics w_lie = w.apply(lie_derivative(e, f).variational());
    return evo_commutator(e, wf) - w_lie;
}

Characteristics lenard_residual(const Functional& j_m, const Characteristics& e,
                                const PoissonOp& w, const Rat& c, int m) {
    if (rat_in_zero_or_positive_integers(c))
        throw Error(Errc::InvalidC,
                    "ladder constant must avoid zero and the positive integers, got " + rat_str(c));
    if (m < 0) throw Error(Errc::InvalidArgument, "negative ladder index");
    Functional lifted = lie_derivative(e, j_m);
    Characteristics w_lifted = w.apply(lifted.variational());
    Characteristics deformed = evo_commutator(e, w.apply(j_m.variational())) - w_lifted;
    return w_lifted - deformed.scaled(c - Rat(m));
}

TimeExtendedField time_extended(const Rat& dt_weight, Characteristics base,
                                Characteristics t_coeff) {
    base.require_role(Role::Vector);
    t_coeff.require_role(Role::Vector);
    Characteristics zero = Characteristics::zero(Role::Vector, base.dim(), base[0].comps());
    return TimeExtendedField{dt_weight, std::move(base), std::move(t_coeff), std::move(zero)};
}

TimeExtendedField time_commutator(const TimeExtendedField& a, const TimeExtendedField& b) {
    if (!a.t2_coeff.is_zero() || !b.t2_coeff.is_zero())
        throw Error(Errc::InvalidArgument, "commutator inputs must be linear in t");
    // [a, b] = [P_a, P_b] + wa*Q_b - wb*Q_a + t([P_a, Q_b] + [Q_a, P_b]) + t^2 [Q_a, Q_b]
    Characteristics base = evo_commutator(a.base, b.base) + b.t_coeff.scaled(a.dt_weight) -
                           a.t_coeff.scaled(b.dt_weight);
    Characteristics t1 = evo_commutator(a.base, b.t_coeff) + evo_commutator(a.t_coeff, b.base);
    Characteristics t2 = evo_commutator(a.t_coeff, b.t_coeff);
    return TimeExtendedField{Rat(0), std::move(base), std::move(t1), std::move(t2)};
}

TimeExtendedField symmetry_commutator(const Characteristics& e, const PoissonOp& w,
                                      const Functional& j_m, const Functional& j_m1,
                                      const Rat& c, int m) {
    if (rat_in_zero_or_positive_integers(c))
        throw Error(Errc::InvalidC,
                    "ladder constant must avoid zero and the positive integers, got " + rat_str(c));
    Characteristics x_m = hamiltonian_field(j_m, w);
    Characteristics x_m1 = hamiltonian_field(j_m1, w);
    TimeExtendedField s =
        time_extended(Rat(0), e.scaled(c - Rat(m)), x_m1.scaled(c - Rat(m) + 1));
    TimeExtendedField x =
        time_extended(Rat(1), x_m, Characteristics::zero(Role::Vector, x_m.dim(), x_m[0].comps()));
    return time_commutator(s, x);
}

}  // namespace lenard
