#pragma once

#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace lenard {

using ParamId = std::uint16_t;

// Registry of named symbolic constants (dispersion coefficient and the like).
// Ids are assigned in registration order; "c", "k", "m" are pre-registered so
// canonical term ordering is stable across runs.
class Params {
public:
    static Params& instance();
    ParamId id(const std::string& name);
    const std::string& name(ParamId id) const;
    bool lookup(const std::string& name, ParamId& out) const;

private:
    Params();
    std::vector<std::string> names_;
    std::map<std::string, ParamId> index_;
};

// A generator is x, a symbolic parameter, or a jet variable u[m,j] (the j-th
// x-derivative of field component m). Each is encoded in one key so that raw
// comparison orders x < parameters < jets, jets by (component, order).
namespace genkey {

constexpr std::uint64_t x_key = 0;

inline std::uint64_t param(ParamId id) { return (1ull << 62) | id; }

inline std::uint64_t jet(int comp, int order) {
    return (2ull << 62) | (static_cast<std::uint64_t>(comp) << 32) |
           static_cast<std::uint32_t>(order);
}

inline bool is_x(std::uint64_t k) { return k == x_key; }
inline bool is_param(std::uint64_t k) { return (k >> 62) == 1; }
inline bool is_jet(std::uint64_t k) { return (k >> 62) == 2; }
inline ParamId param_id(std::uint64_t k) { return static_cast<ParamId>(k & 0xffff); }
inline int jet_comp(std::uint64_t k) { return static_cast<int>((k >> 32) & 0x3fffffff); }
inline int jet_order(std::uint64_t k) { return static_cast<int>(k & 0xffffffff); }

}  // namespace genkey

// Product of generator powers. Factors are sorted by generator key and carry
// strictly positive exponents; total degree is cached.
struct Monomial {
    std::vector<std::pair<std::uint64_t, int>> factors;
    int degree = 0;

    static Monomial unit() { return Monomial{}; }
    static Monomial single(std::uint64_t key, int exp = 1);

    int exponent_of(std::uint64_t key) const;
    int jet_degree() const;
    bool has_jet() const;
    int max_jet_order() const;  // -1 when no jet factor

    Monomial times(const Monomial& other) const;
    // Exponent of `key` shifted by delta (delta < 0 requires divisibility).
    Monomial shifted(std::uint64_t key, int delta) const;

    bool operator==(const Monomial& other) const { return factors == other.factors; }
};

// Graded lexicographic order, highest term first: higher total degree wins,
// ties broken by the earliest generator with differing exponent (larger
// exponent first). Map iteration order is therefore the canonical print order.
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial in x, symbolic parameters and jet variables,
// with rational coefficients. The carrier for densities, characteristics and
// residuals. Immutable in practice: all operations return new values.
class DiffPoly {
public:
    DiffPoly() : comps_(0) {}
    explicit DiffPoly(int comps);

    static DiffPoly constant(int comps, const Rat& value);
    static DiffPoly x(int comps);
    static DiffPoly param(int comps, const std::string& name);
    static DiffPoly jet(int comps, int comp, int order);

    int comps() const { return comps_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat, MonoOrder>& terms() const { return terms_; }

    DiffPoly& operator+=(const DiffPoly& other);
    DiffPoly& operator-=(const DiffPoly& other);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    DiffPoly operator-() const;
    DiffPoly operator*(const DiffPoly& other) const;
    DiffPoly scaled(const Rat& factor) const;
    DiffPoly pow(int exponent) const;
    bool operator==(const DiffPoly& other) const;

    // Total x-derivative: d/dx + sum over jets of u[m,j+1] * d/du[m,j].
    DiffPoly dx() const;
    DiffPoly dx_n(int n) const;
    DiffPoly partial_x() const;
    DiffPoly partial_jet(int comp, int order) const;
    // Variational derivative with respect to component `comp`.
    DiffPoly euler(int comp) const;

    int max_jet_order() const;
    int max_jet_order_of(int comp) const;
    bool all_terms_have_jet() const;
    bool contains_generator(std::uint64_t key) const;
    bool contains_x() const { return contains_generator(genkey::x_key); }

    // Substitutes a numeric value for every generator.
    double eval(const std::function<double(std::uint64_t)>& gen_value) const;

    std::string str() const;

    // Internal: adds coeff*mono, dropping the term if it cancels.
    void add_term(const Monomial& mono, const Rat& coeff);

private:
    void require_same_comps(const DiffPoly& other) const;

    int comps_;
    std::map<Monomial, Rat, MonoOrder> terms_;
};

std::string gen_str(std::uint64_t key);

}  // namespace lenard
