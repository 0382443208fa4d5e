#include "equichar/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace equichar {

std::string basis_name(Basis b) { return b == Basis::PowerSum ? "powersum" : "schur"; }

SymFunc SymFunc::p(const Partition& lambda, QPoly coeff)
{
    SymFunc f(Basis::PowerSum);
    f.add_term(lambda, coeff);
    return f;
}

SymFunc SymFunc::s(const Partition& lambda, QPoly coeff)
{
    SymFunc f(Basis::Schur);
    f.add_term(lambda, coeff);
    return f;
}

SymFunc SymFunc::one(Basis basis) { return scalar(1, basis); }

SymFunc SymFunc::scalar(QPoly c, Basis basis)
{
    SymFunc f(basis);
    f.add_term(Partition{}, c);
    return f;
}

QPoly SymFunc::coeff(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? QPoly{} : it->second;
}

std::set<int> SymFunc::degrees() const
{
    std::set<int> out;
    for (const auto& [lambda, c] : terms_) out.insert(lambda.size());
    return out;
}

int SymFunc::degree() const
{
    const auto ds = degrees();
    if (ds.size() != 1)
        throw std::invalid_argument(ds.empty() ? "degree of zero symmetric function"
                                               : "degree of inhomogeneous symmetric function");
    return *ds.begin();
}

SymFunc SymFunc::homogeneous_component(int degree) const
{
    SymFunc out(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == degree) out.terms_.emplace(lambda, c);
    return out;
}

SymFunc SymFunc::q_component(int i) const
{
    SymFunc out(basis_);
    for (const auto& [lambda, c] : terms_) out.add_term(lambda, QPoly(c.coeff(i)));
    return out;
}

int SymFunc::q_degree() const
{
    int d = -1;
    for (const auto& [lambda, c] : terms_) d = std::max(d, c.degree());
    return d;
}

void SymFunc::add_term(const Partition& lambda, const QPoly& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SymFunc::check_same_basis(const SymFunc& o) const
{
    if (basis_ != o.basis_)
        throw std::invalid_argument("symmetric functions in different bases: " + basis_name(basis_) +
                                    " and " + basis_name(o.basis_));
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    check_same_basis(o);
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    check_same_basis(o);
    for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const QPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

std::string SymFunc::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return PresentationLess{}(a->first, b->first); });
    std::ostringstream os;
    const char sym = basis_ == Basis::PowerSum ? 'p' : 's';
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i) os << " + ";
        os << '(' << sorted[i]->second << ")*" << sym << sorted[i]->first;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace {

struct CharacterTable {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, Partition>, std::int64_t> values;
};

CharacterTable& character_table()
{
    static CharacterTable table;
    return table;
}

std::int64_t character_uncached(const Partition& lambda, const Partition& mu)
{
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    const int r = mu[0];
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));

    // Beta numbers beta_i = lambda_i + (l - 1 - i); a rim hook of length r
    // is a bead that can slide down r places to a free position.
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[i] + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > to && b < from) ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        const std::int64_t sub = character_value(Partition(std::move(parts)), rest);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: " + lambda.to_string() + " and " +
                                    mu.to_string() + " have different sizes");
    auto& table = character_table();
    const auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(table.mutex);
        if (auto it = table.values.find(key); it != table.values.end()) return it->second;
    }
    const std::int64_t value = character_uncached(lambda, mu);
    std::unique_lock lock(table.mutex);
    table.values.emplace(key, value);
    return value;
}

// ---------------------------------------------------------------------------
// Basis changes

SymFunc schur_to_powersum(const SymFunc& f)
{
    if (f.basis() != Basis::Schur) throw std::invalid_argument("schur_to_powersum: input not in Schur basis");
    SymFunc out(Basis::PowerSum);
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& mu : partitions_of(lambda.size())) {
            const std::int64_t chi = character_value(lambda, mu);
            if (chi == 0) continue;
            Rational factor(static_cast<long>(chi));
            factor /= from_uint(centralizer_order(mu));
            out.add_term(mu, c * factor);
        }
    }
    return out;
}

SymFunc powersum_to_schur(const SymFunc& f)
{
    if (f.basis() != Basis::PowerSum) throw std::invalid_argument("powersum_to_schur: input not in power-sum basis");
    SymFunc out(Basis::Schur);
    for (const auto& [mu, c] : f.terms()) {
        for (const auto& lambda : partitions_of(mu.size())) {
            const std::int64_t chi = character_value(lambda, mu);
            if (chi != 0) out.add_term(lambda, c * Rational(static_cast<long>(chi)));
        }
    }
    return out;
}

SymFunc to_powersum(const SymFunc& f) { return f.basis() == Basis::PowerSum ? f : schur_to_powersum(f); }

SymFunc to_schur(const SymFunc& f) { return f.basis() == Basis::Schur ? f : powersum_to_schur(f); }

// ---------------------------------------------------------------------------
// Ring operations in the power-sum basis

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
    const SymFunc a = to_powersum(f);
    const SymFunc b = to_powersum(g);
    SymFunc out(Basis::PowerSum);
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) out.add_term(union_of(la, lb), ca * cb);
    return out;
}

SymFunc power(const SymFunc& f, int exponent)
{
    if (exponent < 0) throw std::invalid_argument("power: negative exponent");
    SymFunc result = SymFunc::one();
    for (int i = 0; i < exponent; ++i) result = multiply(result, f);
    return result;
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g)
{
    const SymFunc a = to_powersum(f);
    const SymFunc b = to_powersum(g);
    if (a.is_zero() || b.is_zero()) return SymFunc(Basis::PowerSum);
    if (a.degree() != b.degree())
        throw std::invalid_argument("kronecker: operands have different degrees");
    SymFunc out(Basis::PowerSum);
    for (const auto& [lambda, ca] : a.terms()) {
        auto it = b.terms().find(lambda);
        if (it == b.terms().end()) continue;
        const Rational z = from_uint(centralizer_order(lambda));
        out.add_term(lambda, ca * it->second * z);
    }
    return out;
}

namespace {

// p_n o g: every p_j becomes p_{nj} and every q^k becomes q^{nk}.
SymFunc adams(const SymFunc& g, int n)
{
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : g.terms()) {
        std::vector<int> parts = mu.parts();
        for (int& x : parts) x *= n;
        out.add_term(Partition(std::move(parts)), c.dilate(n));
    }
    return out;
}

}  // namespace

SymFunc plethysm(const SymFunc& f, const SymFunc& g)
{
    const SymFunc outer = to_powersum(f);
    const SymFunc inner = to_powersum(g);
    std::map<int, SymFunc> adams_cache;
    auto adams_of = [&](int n) -> const SymFunc& {
        auto it = adams_cache.find(n);
        if (it == adams_cache.end()) it = adams_cache.emplace(n, adams(inner, n)).first;
        return it->second;
    };

    SymFunc out(Basis::PowerSum);
    for (const auto& [lambda, c] : outer.terms()) {
        SymFunc term = SymFunc::scalar(c);
        for (int part : lambda.parts()) {
            term = multiply(term, adams_of(part));
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

SymFunc pderiv(const SymFunc& f, const Partition& lambda)
{
    const SymFunc a = to_powersum(f);
    const auto need = multiplicity_vector(lambda);
    SymFunc out(Basis::PowerSum);
    for (const auto& [mu, c] : a.terms()) {
        auto have = multiplicity_vector(mu);
        mpz_class factor = 1;
        bool ok = true;
        for (auto [part, m] : need) {
            const int avail = have[part];
            if (avail < m) {
                ok = false;
                break;
            }
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(avail), static_cast<unsigned long>(m));
            factor *= binom;
            have[part] = avail - m;
        }
        if (!ok) continue;
        std::vector<int> remaining;
        for (auto it = have.rbegin(); it != have.rend(); ++it)
            remaining.insert(remaining.end(), static_cast<std::size_t>(it->second), it->first);
        out.add_term(Partition(std::move(remaining)), c * Rational(factor));
    }
    return out;
}

QPoly dimension_specialize(const SymFunc& f, int n)
{
    for (int d : f.degrees())
        if (d != n) throw std::invalid_argument("dimension_specialize: input has a component of degree " + std::to_string(d) +
                                                ", expected " + std::to_string(n));
    QPoly out;
    if (f.basis() == Basis::Schur) {
        for (const auto& [lambda, c] : f.terms()) {
            const std::uint64_t dim = lambda.empty() ? 1 : irrep_dimension(lambda);
            out += c * from_uint(dim);
        }
        return out;
    }
    const Partition ones = Partition::rectangle(1, n);
    return f.coeff(ones) * from_uint(factorial(n));
}

bool is_effective(const SymFunc& f)
{
    const SymFunc schur = to_schur(f);
    for (const auto& [lambda, c] : schur.terms())
        if (!c.is_effective()) return false;
    return true;
}

}  // namespace equichar
