#pragma once

#include "diffpoly.hpp"

#include <vector>

namespace lenard {

enum class Role { Covector, Vector };

// Tuple of one DiffPoly per field component. Covectors hold variational
// derivatives, vectors hold evolutionary characteristics; the tag is checked
// by every consumer, mixing roles is a contract violation.
class Characteristics {
public:
    Characteristics(Role role, std::vector<DiffPoly> comps);
    static Characteristics zero(Role role, int dim, int comps);

    Role role() const { return role_; }
    int dim() const { return static_cast<int>(comps_.size()); }
    int poly_comps() const { return comps_.front().comps(); }
    const DiffPoly& operator[](int i) const { return comps_.at(i); }
    const std::vector<DiffPoly>& components() const { return comps_; }

    bool is_zero() const;
    Characteristics scaled(const Rat& factor) const;
    Characteristics operator+(const Characteristics& other) const;
    Characteristics operator-(const Characteristics& other) const;
    bool operator==(const Characteristics& other) const;

    void require_role(Role expected) const;

private:
    Role role_;
    std::vector<DiffPoly> comps_;
};

// Prolonged action of the evolutionary field with characteristic Q on a
// density: sum over (m, j) of dx^j(Q_m) * d(p)/du[m,j].
DiffPoly prolong_apply(const Characteristics& q, const DiffPoly& p);

// Commutator of evolutionary fields: component m is pr_X(Y_m) - pr_Y(X_m).
Characteristics evo_commutator(const Characteristics& x, const Characteristics& y);

// Variational-derivative tuple of a density.
Characteristics euler_all(const DiffPoly& density);

// True iff the integral of p over the line vanishes for decaying data, i.e.
// every variational derivative of p is identically zero. Requires every
// monomial of p to contain a jet factor; terms in x alone have an undecidable
// boundary contribution and are rejected.
bool is_zero_functional(const DiffPoly& p);

// Right inverse of the Euler operator on its image: a density with the given
// variational derivatives, built by scaling each monomial of <xi, u> by its
// jet degree (Volterra homotopy). Functionals that are equal get identical
// homotopy densities, which makes this the canonical representative.
DiffPoly homotopy_density(const Characteristics& xi);

// Equivalence class of a density modulo total x-derivatives. Stores the
// canonical (homotopy) representative together with its variational
// derivatives.
class Functional {
public:
    explicit Functional(const DiffPoly& density);
    static Functional zero(int comps);

    int comps() const { return density_.comps(); }
    const DiffPoly& density() const { return density_; }
    const Characteristics& variational() const { return euler_; }

    bool is_zero() const { return density_.is_zero(); }
    bool operator==(const Functional& other) const { return density_ == other.density_; }

    Functional operator+(const Functional& other) const;
    Functional operator-(const Functional& other) const;
    Functional scaled(const Rat& factor) const;

private:
    Functional(DiffPoly density, Characteristics euler);
    DiffPoly density_;
    Characteristics euler_;
};

// Lie derivative of a functional along an evolutionary field.
Functional lie_derivative(const Characteristics& e, const Functional& f);

}  // namespace lenard
