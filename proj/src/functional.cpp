#include "functional.hpp"

#include <stdexcept>

namespace lenard {

Characteristics::Characteristics(Role role, std::vector<DiffPoly> comps)
    : role_(role), comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("characteristics must have at least one slot");
    const int pc = comps_.front().comps();
    for (const auto& p : comps_)
        if (p.comps() != pc) throw std::invalid_argument("mixed component counts in characteristics");
}

Characteristics Characteristics::zero(Role role, int dim, int comps) {
    return Characteristics(role, std::vector<DiffPoly>(dim, DiffPoly(comps)));
}

bool Characteristics::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

Characteristics Characteristics::scaled(const Rat& factor) const {
    std::vector<DiffPoly> out;
    out.reserve(comps_.size());
    for (const auto& p : comps_) out.push_back(p.scaled(factor));
    return Characteristics(role_, std::move(out));
}

Characteristics Characteristics::operator+(const Characteristics& other) const {
    if (role_ != other.role_) throw std::invalid_argument("role mismatch in characteristics sum");
    if (dim() != other.dim()) throw std::invalid_argument("dimension mismatch in characteristics sum");
    std::vector<DiffPoly> out;
    out.reserve(comps_.size());
    for (int i = 0; i < dim(); ++i) out.push_back(comps_[i] + other.comps_[i]);
    return Characteristics(role_, std::move(out));
}

Characteristics Characteristics::operator-(const Characteristics& other) const {
    return *this + other.scaled(Rat(-1));
}

bool Characteristics::operator==(const Characteristics& other) const {
    return role_ == other.role_ && comps_ == other.comps_;
}

void Characteristics::require_role(Role expected) const {
    if (role_ != expected)
        throw std::invalid_argument(expected == Role::Vector
                                        ? "expected vector (evolutionary) characteristics"
                                        : "expected covector (variational) characteristics");
}

DiffPoly prolong_apply(const Characteristics& q, const DiffPoly& p) {
    q.require_role(Role::Vector);
    if (q.dim() != p.comps())
        throw std::invalid_argument("characteristics dimension does not match polynomial components");
    DiffPoly out(p.comps());
    for (int m = 0; m < q.dim(); ++m) {
        int top = p.max_jet_order_of(m);
        if (top < 0) continue;
        DiffPoly qm_dx = q[m];
        for (int j = 0; j <= top; ++j) {
            DiffPoly pd = p.partial_jet(m, j);
            if (!pd.is_zero()) out += qm_dx * pd;
            if (j < top) qm_dx = qm_dx.dx();
        }
    }
    return out;
}

Characteristics evo_commutator(const Characteristics& x, const Characteristics& y) {
    x.require_role(Role::Vector);
    y.require_role(Role::Vector);
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch in commutator");
    std::vector<DiffPoly> out;
    out.reserve(x.dim());
    for (int m = 0; m < x.dim(); ++m) out.push_back(prolong_apply(x, y[m]) - prolong_apply(y, x[m]));
    return Characteristics(Role::Vector, std::move(out));
}

Characteristics euler_all(const DiffPoly& density) {
    std::vector<DiffPoly> out;
    out.reserve(density.comps());
    for (int m = 0; m < density.comps(); ++m) out.push_back(density.euler(m));
    return Characteristics(Role::Covector, std::move(out));
}

bool is_zero_functional(const DiffPoly& p) {
    if (!p.all_terms_have_jet())
        throw std::invalid_argument(
            "density has a term without jet variables; its integral is not well defined under "
            "decaying boundary conditions");
    for (int m = 0; m < p.comps(); ++m)
        if (!p.euler(m).is_zero()) return false;
    return true;
}

DiffPoly homotopy_density(const Characteristics& xi) {
    xi.require_role(Role::Covector);
    const int comps = xi.poly_comps();
    if (xi.dim() != comps)
        throw std::invalid_argument("variational tuple length must equal component count");
    DiffPoly out(comps);
    for (int m = 0; m < comps; ++m) {
        DiffPoly weighted = xi[m] * DiffPoly::jet(comps, m, 0);
        for (const auto& [mono, coeff] : weighted.terms()) {
            int d = mono.jet_degree();
            if (d <= 0) throw std::logic_error("homotopy term without jet degree");
            out.add_term(mono, coeff / Rat(d));
        }
    }
    return out;
}

Functional::Functional(DiffPoly density, Characteristics euler)
    : density_(std::move(density)), euler_(std::move(euler)) {}

Functional::Functional(const DiffPoly& raw)
    : density_(raw.comps()), euler_(Characteristics::zero(Role::Covector, raw.comps(), raw.comps())) {
    if (!raw.all_terms_have_jet())
        throw std::invalid_argument(
            "functional density must have positive jet degree in every term");
    euler_ = euler_all(raw);
    density_ = homotopy_density(euler_);
}

Functional Functional::zero(int comps) {
    return Functional(DiffPoly(comps),
                      Characteristics::zero(Role::Covector, comps, comps));
}

Functional Functional::operator+(const Functional& other) const {
    if (comps() != other.comps()) throw std::invalid_argument("component mismatch in functional sum");
    return Functional(density_ + other.density_);
}

Functional Functional::operator-(const Functional& other) const {
    if (comps() != other.comps()) throw std::invalid_argument("component mismatch in functional sum");
    return Functional(density_ - other.density_);
}

Functional Functional::scaled(const Rat& factor) const {
    Functional out = *this;
    out.density_ = density_.scaled(factor);
    out.euler_ = euler_.scaled(factor);
    // Scaling commutes with the Euler operator and with the homotopy, so the
    // scaled representative is already canonical.
    return out;
}

Functional lie_derivative(const Characteristics& e, const Functional& f) {
    return Functional(prolong_apply(e, f.density()));
}

}  // namespace lenard
