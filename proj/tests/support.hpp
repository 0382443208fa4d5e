#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's character or conversion code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "equichar/bisymfunc.hpp"

namespace support {

using equichar::Partition;

// Number of standard Young tableaux, by removing the cell holding the
// largest entry in every possible way.
inline std::uint64_t count_syt(std::vector<int> shape)
{
    static std::map<std::vector<int>, std::uint64_t> memo;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
        if (!corner) continue;
        std::vector<int> smaller = shape;
        --smaller[r];
        total += count_syt(smaller);
    }
    memo[shape] = total;
    return total;
}

inline std::uint64_t syt(const Partition& p) { return count_syt(p.parts()); }

// Cycle type of a permutation given in one-line notation.
inline Partition cycle_type(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(lengths);
}

// Class sizes of S_n by enumerating all n! permutations.
inline std::map<Partition, std::uint64_t> class_sizes(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, std::uint64_t> out;
    do {
        ++out[cycle_type(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Evaluates the dimension of every Schur coefficient with SYT counts.
inline equichar::QPoly syt_dimension(const equichar::SymFunc& schur)
{
    equichar::QPoly out;
    for (const auto& [lambda, c] : schur.terms())
        out += c * equichar::from_uint(syt(lambda));
    return out;
}

// Dimension of an S_k x S_{n-k} character induced up to S_n:
// multinomial(n; k) * dim(x) * dim(y).
inline equichar::QPoly induced_syt_dimension(const equichar::BiSymFunc& schur)
{
    equichar::QPoly out;
    for (const auto& [key, c] : schur.terms()) {
        const int a = key.first.size();
        const int b = key.second.size();
        std::uint64_t binom = 1;
        for (int i = 1; i <= a; ++i) binom = binom * static_cast<std::uint64_t>(b + i) / static_cast<std::uint64_t>(i);
        out += c * equichar::from_uint(binom * syt(key.first) * syt(key.second));
    }
    return out;
}

// Polynomial from ascending coefficients: poly({1,2}) = 1 + 2q.
inline equichar::QPoly poly(std::initializer_list<long> coeffs)
{
    equichar::QPoly p;
    int e = 0;
    for (long c : coeffs) p.add_term(e++, equichar::Rational(c));
    return p;
}

}  // namespace support
