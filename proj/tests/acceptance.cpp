// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "equichar/cache.hpp"
#include "equichar/length.hpp"
#include "equichar/moduli.hpp"
#include "equichar/oracle.hpp"
#include "equichar/render.hpp"
#include "equichar/serialize.hpp"
#include "support.hpp"

using namespace equichar;
using support::poly;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

BiSymFunc term(const Partition& x, const Partition& y, QPoly c)
{
    BiSymFunc f(Basis::Schur);
    f.add_term(x, y, c);
    return f;
}

BiSymFunc y(const Partition& p, QPoly c) { return term({}, p, std::move(c)); }

struct Golden {
    const char* name;
    int n, k, l;
    BiSymFunc value;
};

// The nine closed forms for n <= 8, transcribed term by term.
std::vector<Golden> goldens()
{
    return {
        {"E5_{0,1}", 5, 0, 1, y({5}, poly({1, 1, 1})) + y({4, 1}, poly({0, 1}))},
        {"E5_{1,3}", 5, 1, 3, term({1}, {4}, poly({1, 1, 1}))},
        {"E6_{0,1}", 6, 0, 1, y({6}, poly({1, 2, 2, 1})) + y({5, 1}, poly({0, 1, 1})) + y({4, 2}, poly({0, 1, 1}))},
        {"E6_{1,3}", 6, 1, 3, term({1}, {5}, poly({1, 2, 2, 1})) + term({1}, {4, 1}, poly({0, 1, 1}))},
        {"E4_{2,3}", 4, 2, 3, term({2}, {2}, poly({1, 1}))},
        {"E7_{0,3}", 7, 0, 3, y({7}, poly({1, 1, 2, 1, 1})) + y({6, 1}, poly({0, 1, 1, 1})) + y({5, 2}, poly({0, 0, 1}))},
        {"E7_{0,1}", 7, 0, 1,
         y({7}, poly({1, 2, 4, 2, 1})) + y({6, 1}, poly({0, 2, 3, 2})) + y({5, 2}, poly({0, 1, 3, 1})) +
             y({4, 3}, poly({0, 1, 2, 1})) + y({4, 2, 1}, poly({0, 0, 1}))},
        {"E8_{0,3}", 8, 0, 3,
         y({8}, poly({1, 2, 3, 3, 2, 1})) + y({7, 1}, poly({0, 1, 2, 2, 1})) + y({6, 2}, poly({0, 1, 2, 2, 1})) +
             y({5, 3}, poly({0, 0, 1, 1})) + y({4, 4}, poly({0, 1, 1, 1, 1}))},
        {"E8_{0,1}", 8, 0, 1,
         y({8}, poly({1, 3, 6, 6, 3, 1})) + y({7, 1}, poly({0, 2, 6, 6, 2})) + y({6, 2}, poly({0, 2, 7, 7, 2})) +
             y({6, 1, 1}, poly({0, 0, 1, 1})) + y({5, 3}, poly({0, 1, 5, 5, 1})) + y({5, 2, 1}, poly({0, 0, 2, 2})) +
             y({4, 4}, poly({0, 1, 3, 3, 1})) + y({4, 3, 1}, poly({0, 0, 2, 2})) + y({4, 2, 2}, poly({0, 0, 1, 1}))},
    };
}

Outcome golden_reproduction()
{
    ModuliEngine engine;
    int matched = 0;
    std::string bad;
    for (const auto& g : goldens()) {
        if (to_schur(engine.E(g.n, g.k, g.l)) == g.value)
            ++matched;
        else
            bad += std::string(" ") + g.name;
    }
    return {bad.empty(), std::to_string(matched) + "/9 closed forms match" + bad};
}

Outcome base_case_division()
{
    int done = 0;
    try {
        for (int n = 3; n <= 15; n += 2, ++done) git_base_odd(n);
        for (int n = 4; n <= 16; n += 2, ++done) git_base_even(n);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    return {true, std::to_string(done) + " base cases divide exactly by q^3-q"};
}

Outcome duality()
{
    ModuliEngine engine;
    for (int n = 3; n <= 12; ++n) {
        const BiSymFunc e = to_schur(engine.E(n, 0, 1));
        for (const auto& [key, c] : e.terms())
            if (c.reversed(n - 3) != c) return {false, "n=" + std::to_string(n) + " coefficient of s" + key.second.to_string()};
    }
    return {true, "E(n,0,1) palindromic of degree n-3 for 3 <= n <= 12"};
}

Outcome length_sweep()
{
    ModuliEngine engine;
    int rows = 0, star_rows = 0, lambda_rows = 0;
    for (int n = 3; n <= 12; ++n) {
        const SymFunc character = to_schur(engine.cohomology_character(n));
        for (int i = 0; i <= n - 3; ++i) {
            ++rows;
            const SymFunc part = character.q_component(i);
            const std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
            // Length and leading term read directly off the Schur terms.
            int len = 0;
            Partition w;
            std::vector<int> w_conj;
            for (const auto& [lambda, c] : part.terms()) {
                len = std::max(len, lambda.length());
                const auto conj = conjugate(lambda).parts();
                if (w_conj.empty() || conj > w_conj) {
                    w = lambda;
                    w_conj = conj;
                }
            }
            if (len != std::min(i + 1, n - i - 2)) return {false, where + " length " + std::to_string(len)};
            // lambda_{n,i} needs a part 4, so it only exists from n = 4 on.
            const bool exceptional = n >= 4 && (n % 2 == 0 ? (2 * i == n - 4 || 2 * i == n - 2) : 2 * i == n - 3);
            if (exceptional) {
                std::vector<int> parts{4};
                for (int t = 0; t < (n % 2 == 0 ? (n - 4) / 2 : (n - 5) / 2); ++t) parts.push_back(2);
                if (n % 2 == 1) parts.push_back(1);
                const Partition lambda(parts);
                if (w != lambda || part.coeff(lambda) != 1) return {false, where + " w=" + w.to_string()};
                ++lambda_rows;
            } else if (i >= 1 && i <= n - 4) {
                const int b = std::min(i + 1, n - i - 2);
                const Partition c = conjugate(w);
                if (!(c[0] == b && c[1] == b && c[2] >= 1)) return {false, where + " w=" + w.to_string() + " lacks star"};
                ++star_rows;
            }
        }
        if (!length_theorem_report(engine, n).all_ok()) return {false, "library report disagrees at n=" + std::to_string(n)};
    }
    return {true, std::to_string(rows) + " degrees: lengths sharp, " + std::to_string(star_rows) + " star rows, " +
                      std::to_string(lambda_rows) + " exceptional rows with multiplicity 1"};
}

SymFunc random_schur(std::mt19937& rng, int degree, bool positive)
{
    const auto& parts = partitions_of(degree);
    std::uniform_int_distribution<int> coeff(positive ? 0 : -3, 3);
    SymFunc f(Basis::Schur);
    for (const auto& lambda : parts) f.add_term(lambda, coeff(rng));
    if (f.is_zero()) f.add_term(parts.front(), 1);
    return f;
}

Outcome oracle_equivalence()
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            if (oracle::jacobi_trudi_to_powersum(lambda) != schur_to_powersum(SymFunc::s(lambda)))
                return {false, "Jacobi-Trudi differs at " + lambda.to_string()};
    int plethysms = 0;
    std::vector<std::pair<SymFunc, SymFunc>> pairs;
    for (int a = 1; a <= 3; ++a)
        for (const auto& la : partitions_of(a))
            for (int b = 1; b <= 3; ++b)
                for (const auto& lb : partitions_of(b)) pairs.emplace_back(SymFunc::s(la), SymFunc::s(lb));
    pairs.emplace_back(SymFunc::s({2}), SymFunc::s({3}));
    pairs.emplace_back(SymFunc::s({1, 1}), SymFunc::s({3}));
    for (const auto& [f, g] : pairs) {
        const int vars = f.degree() * g.degree();
        if (oracle::expand(plethysm(f, g), vars) != oracle::oracle_plethysm(f, g, vars))
            return {false, "plethysm differs at " + f.to_string() + " o " + g.to_string()};
        ++plethysms;
    }
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int t = 0; t < 100; ++t) {
        const SymFunc f = random_schur(rng, deg(rng), false);
        const SymFunc g = random_schur(rng, deg(rng), false);
        const int vars = f.degree() + g.degree();
        if (oracle::expand(multiply(f, g), vars) != oracle::expand(f, vars) * oracle::expand(g, vars))
            return {false, "product differs on random pair " + std::to_string(t)};
    }
    return {true, "Jacobi-Trudi |lambda|<=8, " + std::to_string(plethysms) + " plethysms, 100 random products"};
}

Partition w_of(const SymFunc& f)
{
    Partition best;
    std::vector<int> best_conj;
    const SymFunc schur = to_schur(f);
    for (const auto& [lambda, c] : schur.terms()) {
        const auto conj = conjugate(lambda).parts();
        if (best_conj.empty() || conj > best_conj) {
            best = lambda;
            best_conj = conj;
        }
    }
    return best;
}

Outcome leading_term_properties()
{
    std::mt19937 rng(8128);
    std::uniform_int_distribution<int> deg(1, 8);
    for (int t = 0; t < 200; ++t) {
        const SymFunc f = random_schur(rng, deg(rng), true);
        const SymFunc g = random_schur(rng, deg(rng), true);
        if (w_of(f * g) != union_of(w_of(f), w_of(g))) return {false, "product rule fails on pair " + std::to_string(t)};
    }
    int cases = 0;
    for (int size = 1; size <= 4; ++size)
        for (const auto& mu : partitions_of(size))
            for (int m = 1; m <= 4; ++m, ++cases) {
                // ((m-1)^{|mu|}) + mu for odd m, + mu' for even m.
                const Partition expected =
                    sum_of(Partition::rectangle(m - 1, size), m % 2 == 1 ? mu : conjugate(mu));
                const Partition got = w_of(plethysm(SymFunc::s(mu), SymFunc::s({m})));
                if (got != expected || plethysm_leading_closed_form(mu, m) != expected)
                    return {false, "plethysm leading term at mu=" + mu.to_string() + " m=" + std::to_string(m)};
            }
    return {true, "200 random products, " + std::to_string(cases) + " plethysm leading terms"};
}

Outcome betti_vectors()
{
    ModuliEngine engine;
    std::string detail;
    for (const auto& g : goldens()) {
        if (g.k != 0 || g.l != 1) continue;
        const QPoly derived = support::induced_syt_dimension(g.value);
        const QPoly computed = poincare_polynomial(engine, g.n);
        if (computed != derived) return {false, "n=" + std::to_string(g.n) + " disagrees with the closed form"};
        std::ostringstream os;
        os << " n=" << g.n << ":(";
        for (int i = 0; i <= computed.degree(); ++i) os << (i ? "," : "") << computed.coeff(i).get_str();
        os << ")";
        detail += os.str();
    }
    const bool literal = poincare_polynomial(engine, 6) == poly({1, 16, 16, 1}) &&
                         poincare_polynomial(engine, 8) == poly({1, 99, 715, 715, 99, 1});
    return {literal, "hook dimensions of the closed forms:" + detail};
}

Outcome cache_integrity()
{
    std::random_device rd;
    const fs::path dir = fs::temp_directory_path() / ("equichar-acceptance-" + std::to_string(rd()));
    std::vector<std::string> cold, warm, uncached;
    std::size_t hits = 0;
    const auto sweep = [](ModuliEngine& engine, std::vector<std::string>& out) {
        for (int n = 3; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                for (int l = 1; l <= stabilization_level(n, k); ++l) {
                    out.push_back(render(engine.E(n, k, l), Format::Json));
                    out.push_back(render(engine.E(n, k, l), Format::Latex));
                }
    };
    try {
        {
            ModuliEngine engine(dir);
            sweep(engine, cold);
        }
        {
            ModuliEngine engine(dir);
            sweep(engine, warm);
            hits = engine.disk_hits();
        }
        ModuliEngine engine;
        sweep(engine, uncached);
    } catch (const std::exception& e) {
        fs::remove_all(dir);
        return {false, e.what()};
    }
    fs::remove_all(dir);
    const bool ok = cold == warm && cold == uncached && hits > 0;
    return {ok, std::to_string(cold.size()) + " renderings byte-identical across cold, warm (" + std::to_string(hits) +
                    " disk hits) and uncached runs"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"golden closed forms", golden_reproduction},
        {"base-case exact division", base_case_division},
        {"Poincare duality n<=12", duality},
        {"length theorem sweep n<=12", length_sweep},
        {"oracle equivalence", oracle_equivalence},
        {"leading-term properties", leading_term_properties},
        {"Betti vectors", betti_vectors},
        {"cache determinism n<=10", cache_integrity},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.passed ? 0 : 1;
        std::printf("%s [%zu] %s: %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    outcome.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
