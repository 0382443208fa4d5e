#pragma once

#include <atomic>
#include <compare>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>

#include "equichar/bisymfunc.hpp"

namespace equichar {

// Spaces of genus-zero curves with k points of weight 1 and n-k points of
// weight 1/l. The reduction maps M(n,k,l) -> M(n,k,l+1) are isomorphisms
// from l = stabilization_level(n, k) on.
int stabilization_level(int n, int k);

struct MemoKey {
    int n = 0;
    int k = 0;
    int l = 1;

    // Clamps l to stabilization_level(n, k); throws on an inadmissible triple.
    static MemoKey normalized(int n, int k, int l);
    friend auto operator<=>(const MemoKey&, const MemoKey&) = default;
};

// sum_{i=0}^{floor(n/2)} s_(n-i) s_(i) (q^{n-i} - q^{i+1}), in power sums.
SymFunc git_polynomial(int n);

// Graded character of H^+(P^{l-1})^{(x) m} as an S_m-module; zero for l = 1.
SymFunc blowup_fiber_character(int m, int l);

// Character of the GIT quotient (P^1)^n // PGL(2), n odd.
BiSymFunc git_base_odd(int n);
// Character of Kirwan's resolution of (P^1)^n // PGL(2), n even.
BiSymFunc git_base_even(int n);
// s^x_(1) s^y_(n-1) (1 + q + ... + q^{n-3}): the space with one heavy point
// at its last non-trivial weight is P^{n-3}.
BiSymFunc projective_space_character(int n);

class DiskCache;

// Memoized evaluation of the equivariant Poincare-Serre polynomials
// E(n,k,l) in Lambda^x (x) Lambda^y [q] via the blow-up recursion.
//
// k = 0 descends in l from the GIT base case; k >= 1 starts from the
// restriction of E(n,0,1) and climbs in l by subtracting the same blow-up
// corrections. Every result is checked to be a genuine character.
//
// Concurrent calls are allowed: the memo takes concurrent readers and
// idempotent inserts.
class ModuliEngine {
public:
    ModuliEngine();
    explicit ModuliEngine(std::filesystem::path cache_dir);
    ~ModuliEngine();
    ModuliEngine(const ModuliEngine&) = delete;
    ModuliEngine& operator=(const ModuliEngine&) = delete;

    // Power-sum basis result; l above the stabilization level is clamped.
    BiSymFunc E(int n, int k, int l);
    // S_n-character of H^*(M_{0,n}bar), i.e. E(n,0,1) seen in Lambda^y.
    SymFunc cohomology_character(int n);

    // Sum over nu |- m of (d/dp^x_nu E(n-lm, k+m, l+1)) * ((p_nu * F_{m,l}) o s_(l+1))^y.
    BiSymFunc correction(int n, int k, int m, int l);

    std::size_t memo_size() const;
    std::size_t disk_hits() const noexcept { return disk_hits_; }

private:
    BiSymFunc compute(const MemoKey& key);
    void check_genuine(const MemoKey& key, const BiSymFunc& value) const;

    mutable std::shared_mutex mutex_;
    std::map<MemoKey, BiSymFunc> memo_;
    std::unique_ptr<DiskCache> disk_;
    std::atomic<std::size_t> disk_hits_{0};
};

// Graded Betti numbers of M_{0,n}bar: the dimension of E(n,0,1).
QPoly poincare_polynomial(ModuliEngine& engine, int n);

}  // namespace equichar
