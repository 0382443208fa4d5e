#include "equichar/moduli.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>

#include "equichar/cache.hpp"

namespace equichar {

namespace {

std::string triple(int n, int k, int l)
{
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

SymFunc h(int n) { return to_powersum(SymFunc::s(Partition::rectangle(n, 1))); }

// Divides every Schur coefficient by q^3 - q and insists on a zero remainder.
SymFunc divide_by_q3_minus_q(const SymFunc& numerator, const char* what)
{
    const QPoly divisor = QPoly::q_power(3) - QPoly::q_power(1);
    SymFunc quotient(Basis::Schur);
    const SymFunc schur = to_schur(numerator);
    for (const auto& [lambda, c] : schur.terms()) {
        auto [quot, rem] = divmod(c, divisor);
        if (!rem.is_zero())
            throw std::logic_error(std::string(what) + ": coefficient of s" + lambda.to_string() +
                                   " leaves remainder " + rem.to_string() + " modulo q^3-q");
        quotient.add_term(lambda, quot);
    }
    return to_powersum(quotient);
}

}  // namespace

int stabilization_level(int n, int k)
{
    if (n < 3) throw std::invalid_argument("need at least 3 marked points, got n=" + std::to_string(n));
    if (k < 0 || k > n) throw std::invalid_argument("k=" + std::to_string(k) + " outside [0,n]");
    if (k == 0) return (n - 1) / 2;
    if (k == 1) return n - 2;
    if (k < n) return n - k;
    return 1;
}

MemoKey MemoKey::normalized(int n, int k, int l)
{
    const int r = stabilization_level(n, k);
    if (l < 1) throw std::invalid_argument("l must be at least 1, got " + std::to_string(l));
    return {n, k, std::min(l, r)};
}

SymFunc git_polynomial(int n)
{
    if (n < 1) throw std::invalid_argument("git_polynomial: n must be positive");
    SymFunc out(Basis::PowerSum);
    for (int i = 0; i <= n / 2; ++i) {
        const QPoly weight = QPoly::q_power(n - i) - QPoly::q_power(i + 1);
        if (weight.is_zero()) continue;
        out += multiply(h(n - i), h(i)) * weight;
    }
    return out;
}

SymFunc blowup_fiber_character(int m, int l)
{
    if (m < 1) throw std::invalid_argument("blowup_fiber_character: m must be positive");
    if (l < 1) throw std::invalid_argument("blowup_fiber_character: l must be positive");
    SymFunc out(Basis::PowerSum);
    if (l == 1) return out;

    // (m_1, ..., m_{l-1}): m_i tensor factors sit in degree q^i.
    std::vector<int> counts(static_cast<std::size_t>(l - 1), 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == l - 2) {
            counts[static_cast<std::size_t>(slot)] = remaining;
            int weight = 0;
            SymFunc term = SymFunc::one();
            for (int i = 0; i < l - 1; ++i) {
                const int c = counts[static_cast<std::size_t>(i)];
                weight += (i + 1) * c;
                term = multiply(term, h(c));
            }
            out += term * QPoly::q_power(weight);
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            counts[static_cast<std::size_t>(slot)] = c;
            rec(slot + 1, remaining - c);
        }
    };
    rec(0, m);
    return out;
}

BiSymFunc git_base_odd(int n)
{
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("git_base_odd: n must be odd and >= 3");
    return BiSymFunc::y_only(divide_by_q3_minus_q(git_polynomial(n), "git_base_odd"));
}

BiSymFunc projective_space_character(int n)
{
    if (n < 3) throw std::invalid_argument("projective_space_character: n must be >= 3");
    return BiSymFunc::tensor(h(1), h(n - 1)) * QPoly::geometric(n - 2);
}

BiSymFunc git_base_even(int n)
{
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("git_base_even: n must be even and >= 4");
    const int m = n / 2;
    const SymFunc hm = h(m);
    const SymFunc e2 = to_powersum(SymFunc::s({1, 1}));

    SymFunc numerator = git_polynomial(n);
    numerator -= multiply(hm, hm) * QPoly::q_power(m);
    numerator += plethysm(h(2), hm) * QPoly::q_power(1);
    numerator += plethysm(e2, hm) * QPoly::q_power(2);
    SymFunc value = divide_by_q3_minus_q(numerator, "git_base_even");

    // Two-component curves, each component a copy of P^{m-2} with the node
    // as its heavy point, swapped by S_2.
    const SymFunc component = x_deriv_decompose(projective_space_character(m + 1), {1}).y_leg();
    value += plethysm(h(2), component);
    return BiSymFunc::y_only(value);
}

// ---------------------------------------------------------------------------

ModuliEngine::ModuliEngine() = default;

ModuliEngine::ModuliEngine(std::filesystem::path cache_dir)
    : disk_(std::make_unique<DiskCache>(std::move(cache_dir)))
{
}

ModuliEngine::~ModuliEngine() = default;

std::size_t ModuliEngine::memo_size() const
{
    std::shared_lock lock(mutex_);
    return memo_.size();
}

BiSymFunc ModuliEngine::E(int n, int k, int l)
{
    const MemoKey key = MemoKey::normalized(n, k, l);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::optional<BiSymFunc> value;
    if (disk_) {
        value = disk_->load(key);
        if (value) {
            check_genuine(key, *value);
            ++disk_hits_;
        }
    }
    if (!value) {
        value = compute(key);
        check_genuine(key, *value);
        if (disk_) disk_->store(key, *value);
    }
    std::unique_lock lock(mutex_);
    return memo_.emplace(key, std::move(*value)).first->second;
}

SymFunc ModuliEngine::cohomology_character(int n) { return E(n, 0, 1).y_leg(); }

BiSymFunc ModuliEngine::correction(int n, int k, int m, int l)
{
    if (l < 1 || m < 1 || m > (n - k) / (l + 1))
        throw std::invalid_argument("correction: m=" + std::to_string(m) + " outside [1, (n-k)/(l+1)] for " +
                                    triple(n, k, l));
    const int sub_n = n - l * m;
    if (sub_n < 3) throw std::logic_error("correction: collision stratum " + triple(sub_n, k + m, l + 1) + " does not exist");

    const BiSymFunc stratum = E(sub_n, k + m, l + 1);
    const SymFunc fiber = blowup_fiber_character(m, l);
    const SymFunc cluster = h(l + 1);

    BiSymFunc out(Basis::PowerSum);
    for (const auto& nu : partitions_of(m)) {
        const BiSymFunc coefficients = x_deriv_decompose(stratum, nu);
        if (coefficients.is_zero()) continue;
        const SymFunc wreath = plethysm(kronecker(SymFunc::p(nu), fiber), cluster);
        out += bimultiply(coefficients, BiSymFunc::y_only(wreath));
    }
    return out;
}

BiSymFunc ModuliEngine::compute(const MemoKey& key)
{
    const auto [n, k, l] = key;
    if (n == 3) return BiSymFunc::tensor(h(k), h(3 - k));
    if (k == n) return E(n, 0, 1).swap_legs();

    const int r = stabilization_level(n, k);
    if (k == 0) {
        if (l == r) return n % 2 == 1 ? git_base_odd(n) : git_base_even(n);
        // The first reduction map only contracts points.
        if (l == 1) return E(n, 0, 2);
        BiSymFunc value = E(n, 0, l + 1);
        for (int m = 1; m <= n / (l + 1); ++m) value += correction(n, 0, m, l);
        return value;
    }

    if (l <= 2) return restrict_full(E(n, 0, 1).y_leg(), k);
    BiSymFunc value = E(n, k, l - 1);
    for (int m = 1; m <= (n - k) / l; ++m) value -= correction(n, k, m, l - 1);
    return value;
}

void ModuliEngine::check_genuine(const MemoKey& key, const BiSymFunc& value) const
{
    const auto expected = std::make_pair(key.k, key.n - key.k);
    if (value.is_zero() || value.bidegree() != expected)
        throw std::logic_error("E" + triple(key.n, key.k, key.l) + " has the wrong bidegree");
    if (!is_effective(value))
        throw std::logic_error("E" + triple(key.n, key.k, key.l) + " is not a genuine character");
}

QPoly poincare_polynomial(ModuliEngine& engine, int n) { return dimension_specialize(engine.E(n, 0, 1)); }

}  // namespace equichar
