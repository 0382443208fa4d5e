#include "equichar/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace equichar::oracle {

MonomialPoly MonomialPoly::constant(int variables, const QPoly& c)
{
    MonomialPoly out(variables);
    for (const auto& [e, v] : c.terms()) {
        Exponents ex(static_cast<std::size_t>(variables + 1), 0);
        ex.back() = e;
        out.add_term(ex, v);
    }
    return out;
}

void MonomialPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    if (static_cast<int>(e.size()) != variables_ + 1) throw std::invalid_argument("MonomialPoly: exponent vector of wrong length");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MonomialPoly& MonomialPoly::operator+=(const MonomialPoly& o)
{
    if (o.variables_ != variables_) throw std::invalid_argument("MonomialPoly: variable counts differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b)
{
    if (a.variables_ != b.variables_) throw std::invalid_argument("MonomialPoly: variable counts differ");
    MonomialPoly out(a.variables_);
    MonomialPoly::Exponents e(static_cast<std::size_t>(a.variables_ + 1));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool MonomialPoly::symmetric_under(int i, int j) const
{
    for (const auto& [e, c] : terms_) {
        Exponents swapped = e;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
        auto it = terms_.find(swapped);
        if (it == terms_.end() || it->second != c) return false;
    }
    return true;
}

bool MonomialPoly::is_symmetric() const
{
    for (int i = 0; i + 1 < variables_; ++i)
        if (!symmetric_under(i, i + 1)) return false;
    return true;
}

namespace {

// A weighted monomial x^a q^b of an alphabet.
struct Letter {
    MonomialPoly::Exponents exponents;
    Rational multiplicity;
};

MonomialPoly power_sum_of(const std::vector<Letter>& alphabet, int k, int variables)
{
    MonomialPoly out(variables);
    for (const auto& letter : alphabet) {
        MonomialPoly::Exponents e = letter.exponents;
        for (int& x : e) x *= k;
        out.add_term(e, letter.multiplicity);
    }
    return out;
}

// Evaluates f (in power sums) on an alphabet; coefficients of f are not
// touched by the substitution.
MonomialPoly evaluate_on(const SymFunc& f, const std::vector<Letter>& alphabet, int variables)
{
    const SymFunc pf = to_powersum(f);
    std::map<int, MonomialPoly> sums;
    MonomialPoly out(variables);
    for (const auto& [lambda, c] : pf.terms()) {
        MonomialPoly term = MonomialPoly::constant(variables, c);
        for (int part : lambda.parts()) {
            auto it = sums.find(part);
            if (it == sums.end()) it = sums.emplace(part, power_sum_of(alphabet, part, variables)).first;
            term = term * it->second;
        }
        out += term;
    }
    return out;
}

std::vector<Letter> variables_alphabet(int variables)
{
    std::vector<Letter> out;
    for (int i = 0; i < variables; ++i) {
        MonomialPoly::Exponents e(static_cast<std::size_t>(variables + 1), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.push_back({e, Rational(1)});
    }
    return out;
}

int max_degree(const SymFunc& f)
{
    const auto ds = f.degrees();
    return ds.empty() ? 0 : *ds.rbegin();
}

}  // namespace

MonomialPoly expand(const SymFunc& f, int variables)
{
    if (variables < max_degree(f))
        throw std::invalid_argument("expand: " + std::to_string(variables) + " variables cannot represent degree " +
                                    std::to_string(max_degree(f)) + " faithfully");
    return evaluate_on(f, variables_alphabet(variables), variables);
}

MonomialPoly oracle_plethysm(const SymFunc& f, const SymFunc& g, int variables)
{
    if (variables < max_degree(f) * max_degree(g))
        throw std::invalid_argument("oracle_plethysm: too few variables for the output degree");
    const MonomialPoly inner = expand(g, variables);
    std::vector<Letter> alphabet;
    for (const auto& [e, c] : inner.terms()) {
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument("oracle_plethysm: inner function has a monomial coefficient that is not a non-negative integer");
        alphabet.push_back({e, c});
    }
    return evaluate_on(f, alphabet, variables);
}

SymFunc complete_homogeneous_newton(int n)
{
    if (n < 0) throw std::invalid_argument("complete_homogeneous_newton: negative degree");
    std::vector<SymFunc> h{SymFunc::one()};
    for (int d = 1; d <= n; ++d) {
        SymFunc acc(Basis::PowerSum);
        for (int i = 1; i <= d; ++i) acc += multiply(SymFunc::p(Partition{i}), h[static_cast<std::size_t>(d - i)]);
        acc *= QPoly(Rational(1, d));
        h.push_back(std::move(acc));
    }
    return h.back();
}

SymFunc jacobi_trudi_to_powersum(const Partition& lambda)
{
    const int len = lambda.length();
    if (len == 0) return SymFunc::one();
    std::map<int, SymFunc> h_cache;
    auto h = [&](int d) -> SymFunc {
        if (d < 0) return SymFunc(Basis::PowerSum);
        auto it = h_cache.find(d);
        if (it == h_cache.end()) it = h_cache.emplace(d, complete_homogeneous_newton(d)).first;
        return it->second;
    };

    // Laplace expansion row by row; memo on the set of columns already used.
    std::map<unsigned, SymFunc> memo;
    std::function<SymFunc(unsigned)> minor = [&](unsigned used) -> SymFunc {
        const int row = __builtin_popcount(used);
        if (row == len) return SymFunc::one();
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        SymFunc acc(Basis::PowerSum);
        int free_before = 0;
        for (int col = 0; col < len; ++col) {
            if (used & (1u << col)) continue;
            SymFunc entry = h(lambda[row] - row + col);
            if (!entry.is_zero()) {
                SymFunc term = multiply(entry, minor(used | (1u << col)));
                if (free_before % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++free_before;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return minor(0);
}

}  // namespace equichar::oracle
