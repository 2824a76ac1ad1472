#include "diffpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lenard {

Params::Params() {
    for (const char* n : {"c", "k", "m"}) id(n);
}

Params& Params::instance() {
    static Params p;
    return p;
}

ParamId Params::id(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (names_.size() >= 0xffff) throw std::runtime_error("parameter table full");
    ParamId pid = static_cast<ParamId>(names_.size());
    names_.push_back(name);
    index_[name] = pid;
    return pid;
}

const std::string& Params::name(ParamId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown parameter id");
    return names_[id];
}

bool Params::lookup(const std::string& name, ParamId& out) const {
    auto it = index_.find(name);
    if (it == index_.end()) return false;
    out = it->second;
    return true;
}

Monomial Monomial::single(std::uint64_t key, int exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) {
        m.factors.emplace_back(key, exp);
        m.degree = exp;
    }
    return m;
}

int Monomial::exponent_of(std::uint64_t key) const {
    for (const auto& [k, e] : factors)
        if (k == key) return e;
    return 0;
}

int Monomial::jet_degree() const {
    int d = 0;
    for (const auto& [k, e] : factors)
        if (genkey::is_jet(k)) d += e;
    return d;
}

bool Monomial::has_jet() const {
    for (const auto& [k, e] : factors) {
        (void)e;
        if (genkey::is_jet(k)) return true;
    }
    return false;
}

int Monomial::max_jet_order() const {
    int order = -1;
    for (const auto& [k, e] : factors) {
        (void)e;
        if (genkey::is_jet(k)) order = std::max(order, genkey::jet_order(k));
    }
    return order;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors.reserve(factors.size() + other.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < other.factors.size()) {
        if (j == other.factors.size() ||
            (i < factors.size() && factors[i].first < other.factors[j].first)) {
            out.factors.push_back(factors[i++]);
        } else if (i == factors.size() || other.factors[j].first < factors[i].first) {
            out.factors.push_back(other.factors[j++]);
        } else {
            out.factors.emplace_back(factors[i].first, factors[i].second + other.factors[j].second);
            ++i;
            ++j;
        }
    }
    out.degree = degree + other.degree;
    return out;
}

Monomial Monomial::shifted(std::uint64_t key, int delta) const {
    Monomial out;
    out.factors.reserve(factors.size() + 1);
    bool placed = false;
    for (const auto& f : factors) {
        if (f.first == key) {
            int e = f.second + delta;
            if (e < 0) throw std::logic_error("monomial exponent underflow");
            if (e > 0) out.factors.emplace_back(key, e);
            placed = true;
        } else {
            if (!placed && key < f.first) {
                if (delta < 0) throw std::logic_error("monomial exponent underflow");
                if (delta > 0) out.factors.emplace_back(key, delta);
                placed = true;
            }
            out.factors.push_back(f);
        }
    }
    if (!placed) {
        if (delta < 0) throw std::logic_error("monomial exponent underflow");
        if (delta > 0) out.factors.emplace_back(key, delta);
    }
    out.degree = degree + delta;
    return out;
}

bool MonoOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            return a.factors[i].first < b.factors[j].first;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second;
        ++i;
        ++j;
    }
    return i < a.factors.size();
}

DiffPoly::DiffPoly(int comps) : comps_(comps) {
    if (comps <= 0) throw std::invalid_argument("component count must be positive");
}

DiffPoly DiffPoly::constant(int comps, const Rat& value) {
    DiffPoly p(comps);
    p.add_term(Monomial::unit(), value);
    return p;
}

DiffPoly DiffPoly::x(int comps) {
    DiffPoly p(comps);
    p.add_term(Monomial::single(genkey::x_key), Rat(1));
    return p;
}

DiffPoly DiffPoly::param(int comps, const std::string& name) {
    DiffPoly p(comps);
    p.add_term(Monomial::single(genkey::param(Params::instance().id(name))), Rat(1));
    return p;
}

DiffPoly DiffPoly::jet(int comps, int comp, int order) {
    if (comp < 0 || comp >= comps) throw std::out_of_range("component index out of range");
    if (order < 0) throw std::invalid_argument("negative jet order");
    DiffPoly p(comps);
    p.add_term(Monomial::single(genkey::jet(comp, order)), Rat(1));
    return p;
}

void DiffPoly::add_term(const Monomial& mono, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void DiffPoly::require_same_comps(const DiffPoly& other) const {
    if (comps_ != other.comps_)
        throw std::invalid_argument("component count mismatch between polynomials");
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) {
    require_same_comps(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& other) {
    require_same_comps(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out(comps_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

DiffPoly DiffPoly::operator*(const DiffPoly& other) const {
    require_same_comps(other);
    DiffPoly out(comps_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

DiffPoly DiffPoly::scaled(const Rat& factor) const {
    DiffPoly out(comps_);
    if (factor == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
    return out;
}

DiffPoly DiffPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    DiffPoly out = DiffPoly::constant(comps_, Rat(1));
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

bool DiffPoly::operator==(const DiffPoly& other) const {
    return comps_ == other.comps_ && terms_ == other.terms_;
}

DiffPoly DiffPoly::dx() const {
    DiffPoly out(comps_);
    for (const auto& [m, c] : terms_) {
        for (const auto& [k, e] : m.factors) {
            if (genkey::is_param(k)) continue;
            Rat coeff = c * Rat(e);
            if (genkey::is_x(k)) {
                out.add_term(m.shifted(k, -1), coeff);
            } else {
                Monomial lowered = m.shifted(k, -1);
                out.add_term(lowered.shifted(genkey::jet(genkey::jet_comp(k), genkey::jet_order(k) + 1), 1),
                             coeff);
            }
        }
    }
    return out;
}

DiffPoly DiffPoly::dx_n(int n) const {
    DiffPoly out = *this;
    for (int i = 0; i < n; ++i) out = out.dx();
    return out;
}

DiffPoly DiffPoly::partial_x() const {
    DiffPoly out(comps_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(genkey::x_key);
        if (e > 0) out.add_term(m.shifted(genkey::x_key, -1), c * Rat(e));
    }
    return out;
}

DiffPoly DiffPoly::partial_jet(int comp, int order) const {
    const std::uint64_t key = genkey::jet(comp, order);
    DiffPoly out(comps_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(key);
        if (e > 0) out.add_term(m.shifted(key, -1), c * Rat(e));
    }
    return out;
}

DiffPoly DiffPoly::euler(int comp) const {
    if (comp < 0 || comp >= comps_) throw std::out_of_range("component index out of range");
    DiffPoly out(comps_);
    int top = max_jet_order_of(comp);
    for (int j = 0; j <= top; ++j) {
        DiffPoly term = partial_jet(comp, j).dx_n(j);
        if (j % 2 == 1) term = -term;
        out += term;
    }
    return out;
}

int DiffPoly::max_jet_order() const {
    int order = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        order = std::max(order, m.max_jet_order());
    }
    return order;
}

int DiffPoly::max_jet_order_of(int comp) const {
    int order = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        for (const auto& [k, e] : m.factors) {
            (void)e;
            if (genkey::is_jet(k) && genkey::jet_comp(k) == comp)
                order = std::max(order, genkey::jet_order(k));
        }
    }
    return order;
}

bool DiffPoly::all_terms_have_jet() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (!m.has_jet()) return false;
    }
    return true;
}

bool DiffPoly::contains_generator(std::uint64_t key) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.exponent_of(key) > 0) return true;
    }
    return false;
}

double DiffPoly::eval(const std::function<double(std::uint64_t)>& gen_value) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = rat_to_double(c);
        for (const auto& [k, e] : m.factors) t *= std::pow(gen_value(k), e);
        total += t;
    }
    return total;
}

std::string gen_str(std::uint64_t key) {
    if (genkey::is_x(key)) return "x";
    if (genkey::is_param(key)) return Params::instance().name(genkey::param_id(key));
    std::ostringstream os;
    os << "u[" << genkey::jet_comp(key) << "," << genkey::jet_order(key) << "]";
    return os.str();
}

std::string DiffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool coeff_printed = false;
        if (mag != 1 || m.factors.empty()) {
            os << rat_str(mag);
            coeff_printed = true;
        }
        for (const auto& [k, e] : m.factors) {
            if (coeff_printed) os << "*";
            coeff_printed = true;
            os << gen_str(k);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace lenard
