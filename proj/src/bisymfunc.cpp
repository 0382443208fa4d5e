#include "equichar/bisymfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace equichar {

BiSymFunc BiSymFunc::tensor(const SymFunc& x, const SymFunc& y)
{
    if (x.basis() != y.basis()) throw std::invalid_argument("tensor: legs in different bases");
    BiSymFunc out(x.basis());
    for (const auto& [lx, cx] : x.terms())
        for (const auto& [ly, cy] : y.terms()) out.add_term(lx, ly, cx * cy);
    return out;
}

BiSymFunc BiSymFunc::one(Basis basis)
{
    BiSymFunc out(basis);
    out.add_term({}, {}, 1);
    return out;
}

QPoly BiSymFunc::coeff(const Partition& x, const Partition& y) const
{
    auto it = terms_.find({x, y});
    return it == terms_.end() ? QPoly{} : it->second;
}

std::set<std::pair<int, int>> BiSymFunc::bidegrees() const
{
    std::set<std::pair<int, int>> out;
    for (const auto& [key, c] : terms_) out.emplace(key.first.size(), key.second.size());
    return out;
}

std::pair<int, int> BiSymFunc::bidegree() const
{
    const auto ds = bidegrees();
    if (ds.size() != 1) throw std::invalid_argument("bidegree of a zero or inhomogeneous bicharacter");
    return *ds.begin();
}

int BiSymFunc::q_degree() const
{
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, c.degree());
    return d;
}

void BiSymFunc::add_term(const Partition& x, const Partition& y, const QPoly& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({x, y}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BiSymFunc::check_same_basis(const BiSymFunc& o) const
{
    if (basis_ != o.basis_) throw std::invalid_argument("bicharacters in different bases");
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& o)
{
    check_same_basis(o);
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BiSymFunc& BiSymFunc::operator-=(const BiSymFunc& o)
{
    check_same_basis(o);
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BiSymFunc& BiSymFunc::operator*=(const QPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

SymFunc BiSymFunc::y_leg() const
{
    SymFunc out(basis_);
    for (const auto& [key, c] : terms_) {
        if (!key.first.empty()) throw std::logic_error("y_leg: x-leg is not trivial");
        out.add_term(key.second, c);
    }
    return out;
}

SymFunc BiSymFunc::x_leg() const
{
    SymFunc out(basis_);
    for (const auto& [key, c] : terms_) {
        if (!key.second.empty()) throw std::logic_error("x_leg: y-leg is not trivial");
        out.add_term(key.first, c);
    }
    return out;
}

BiSymFunc BiSymFunc::swap_legs() const
{
    BiSymFunc out(basis_);
    for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
    return out;
}

BiSymFunc BiSymFunc::q_component(int i) const
{
    BiSymFunc out(basis_);
    for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, QPoly(c.coeff(i)));
    return out;
}

std::string BiSymFunc::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
        PresentationLess less;
        if (a->first.first != b->first.first) return less(a->first.first, b->first.first);
        return less(a->first.second, b->first.second);
    });
    const char sym = basis_ == Basis::PowerSum ? 'p' : 's';
    std::ostringstream os;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << " + ";
        os << '(' << sorted[i]->second << ")*" << sym << "x" << sorted[i]->first.first << '*' << sym << "y"
           << sorted[i]->first.second;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiSymFunc& f) { return os << f.to_string(); }

namespace {

enum class Leg { X, Y };

// Converts one leg between bases, leaving the other untouched.
BiSymFunc convert_leg(const BiSymFunc& f, Leg leg, Basis target)
{
    BiSymFunc out(target);
    for (const auto& [key, c] : f.terms()) {
        const Partition& src = leg == Leg::X ? key.first : key.second;
        for (const auto& dst : partitions_of(src.size())) {
            std::int64_t chi;
            Rational factor;
            if (target == Basis::Schur) {
                chi = character_value(dst, src);
                factor = Rational(static_cast<long>(chi));
            } else {
                chi = character_value(src, dst);
                factor = Rational(static_cast<long>(chi)) / from_uint(centralizer_order(dst));
            }
            if (chi == 0) continue;
            if (leg == Leg::X)
                out.add_term(dst, key.second, c * factor);
            else
                out.add_term(key.first, dst, c * factor);
        }
    }
    return out;
}

}  // namespace

BiSymFunc to_powersum(const BiSymFunc& f)
{
    if (f.basis() == Basis::PowerSum) return f;
    return convert_leg(convert_leg(f, Leg::X, Basis::PowerSum), Leg::Y, Basis::PowerSum);
}

BiSymFunc to_schur(const BiSymFunc& f)
{
    if (f.basis() == Basis::Schur) return f;
    return convert_leg(convert_leg(f, Leg::X, Basis::Schur), Leg::Y, Basis::Schur);
}

bool is_effective(const BiSymFunc& f)
{
    const BiSymFunc schur = to_schur(f);
    for (const auto& [key, c] : schur.terms())
        if (!c.is_effective()) return false;
    return true;
}

BiSymFunc restrict_full(const SymFunc& f, int k)
{
    const SymFunc g = to_powersum(f);
    BiSymFunc out(Basis::PowerSum);
    if (g.is_zero()) return out;
    const int n = g.degree();
    if (k < 0 || k > n)
        throw std::invalid_argument("restrict_full: k=" + std::to_string(k) + " outside [0," + std::to_string(n) + "]");
    for (const auto& lambda : partitions_of(n - k)) {
        const SymFunc d = pderiv(g, lambda);
        for (const auto& [mu, c] : d.terms()) out.add_term(mu, lambda, c);
    }
    return out;
}

BiSymFunc x_deriv_decompose(const BiSymFunc& f, const Partition& nu)
{
    const BiSymFunc g = to_powersum(f);
    for (const auto& [key, c] : g.terms())
        if (nu.size() > key.first.size())
            throw std::invalid_argument("x_deriv_decompose: |nu| exceeds the x-degree");
    // Group by y-leg so that each x-polynomial is differentiated once.
    std::map<Partition, SymFunc> by_y;
    for (const auto& [key, c] : g.terms()) {
        auto [it, inserted] = by_y.try_emplace(key.second, Basis::PowerSum);
        it->second.add_term(key.first, c);
    }
    BiSymFunc out(Basis::PowerSum);
    for (const auto& [y, xs] : by_y) {
        const SymFunc d = pderiv(xs, nu);
        for (const auto& [x, c] : d.terms()) out.add_term(x, y, c);
    }
    return out;
}

SymFunc induce_to_full(const BiSymFunc& f)
{
    const BiSymFunc g = to_powersum(f);
    SymFunc out(Basis::PowerSum);
    for (const auto& [key, c] : g.terms()) out.add_term(union_of(key.first, key.second), c);
    return out;
}

BiSymFunc bimultiply(const BiSymFunc& f, const BiSymFunc& g)
{
    const BiSymFunc a = to_powersum(f);
    const BiSymFunc b = to_powersum(g);
    BiSymFunc out(Basis::PowerSum);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add_term(union_of(ka.first, kb.first), union_of(ka.second, kb.second), ca * cb);
    return out;
}

BiSymFunc plethysm_y(const BiSymFunc& f, const SymFunc& g)
{
    const BiSymFunc a = to_powersum(f);
    const SymFunc inner = to_powersum(g);
    std::map<Partition, SymFunc> cache;
    BiSymFunc out(Basis::PowerSum);
    for (const auto& [key, c] : a.terms()) {
        auto it = cache.find(key.second);
        if (it == cache.end()) it = cache.emplace(key.second, plethysm(SymFunc::p(key.second), inner)).first;
        for (const auto& [y, cy] : it->second.terms()) out.add_term(key.first, y, c * cy);
    }
    return out;
}

QPoly dimension_specialize(const BiSymFunc& f)
{
    if (f.is_zero()) return {};
    const auto [k, rest] = f.bidegree();
    if (f.basis() == Basis::Schur) {
        QPoly out;
        for (const auto& [key, c] : f.terms()) {
            const std::uint64_t dx = key.first.empty() ? 1 : irrep_dimension(key.first);
            const std::uint64_t dy = key.second.empty() ? 1 : irrep_dimension(key.second);
            out += c * (from_uint(dx) * from_uint(dy));
        }
        return out;
    }
    return f.coeff(Partition::rectangle(1, k), Partition::rectangle(1, rest)) *
           (from_uint(factorial(k)) * from_uint(factorial(rest)));
}

}  // namespace equichar
