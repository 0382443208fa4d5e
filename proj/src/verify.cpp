#include "equichar/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "equichar/length.hpp"
#include "equichar/oracle.hpp"

namespace equichar {

namespace {

// Ascending coefficients: poly({1,2,4}) = 1 + 2q + 4q^2.
QPoly poly(std::initializer_list<long> coeffs)
{
    QPoly p;
    int e = 0;
    for (long c : coeffs) p.add_term(e++, Rational(c));
    return p;
}

BiSymFunc y_schur(std::initializer_list<std::pair<Partition, QPoly>> terms)
{
    BiSymFunc f(Basis::Schur);
    for (const auto& [lambda, c] : terms) f.add_term({}, lambda, c);
    return f;
}

BiSymFunc xy_schur(std::initializer_list<std::tuple<Partition, Partition, QPoly>> terms)
{
    BiSymFunc f(Basis::Schur);
    for (const auto& [x, y, c] : terms) f.add_term(x, y, c);
    return f;
}

bool palindromic(const BiSymFunc& f, int degree)
{
    for (const auto& [key, c] : f.terms())
        if (c.reversed(degree) != c) return false;
    return true;
}

CheckResult check(std::string name, bool passed, std::string detail = {})
{
    return {std::move(name), passed, std::move(detail)};
}

SuiteResult paper_examples_suite(ModuliEngine& engine)
{
    SuiteResult result{"paper-examples", {}};
    for (const auto& g : golden_examples()) {
        const BiSymFunc got = to_schur(engine.E(g.n, g.k, g.l));
        result.checks.push_back(check(g.label, got == g.expected, got == g.expected ? "" : got.to_string()));
    }
    return result;
}

SuiteResult duality_suite(ModuliEngine& engine, int n_max)
{
    SuiteResult result{"duality", {}};
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int l = 1; l <= stabilization_level(n, k); ++l) {
                const BiSymFunc e = to_schur(engine.E(n, k, l));
                // H^0 is the trivial representation of S_k x S_{n-k}.
                const BiSymFunc trivial = BiSymFunc::tensor(SymFunc::s(Partition::rectangle(k, 1)),
                                                            SymFunc::s(Partition::rectangle(n - k, 1)));
                std::ostringstream name;
                name << "E(" << n << "," << k << "," << l << ")";
                result.checks.push_back(check(name.str(), palindromic(e, n - 3) && e.q_component(0) == trivial));
            }
        }
    }
    return result;
}

SymFunc random_schur(std::mt19937& rng, int degree)
{
    const auto& parts = partitions_of(degree);
    std::uniform_int_distribution<int> coeff(-3, 3);
    SymFunc f(Basis::Schur);
    for (const auto& lambda : parts) f.add_term(lambda, coeff(rng));
    if (f.is_zero()) f.add_term(parts.front(), 1);
    return f;
}

SuiteResult oracles_suite()
{
    SuiteResult result{"oracles", {}};

    bool jt_ok = true;
    std::string jt_detail;
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            if (oracle::jacobi_trudi_to_powersum(lambda) != schur_to_powersum(SymFunc::s(lambda))) {
                jt_ok = false;
                jt_detail += lambda.to_string() + " ";
            }
    result.checks.push_back(check("schur_to_powersum vs Jacobi-Trudi, |lambda| <= 8", jt_ok, jt_detail));

    std::vector<std::pair<SymFunc, SymFunc>> grid;
    for (int a = 1; a <= 3; ++a)
        for (const auto& la : partitions_of(a))
            for (int b = 1; b <= 3; ++b)
                for (const auto& lb : partitions_of(b)) grid.emplace_back(SymFunc::s(la), SymFunc::s(lb));
    bool pl_ok = true;
    std::string pl_detail;
    for (const auto& [f, g] : grid) {
        const int vars = f.degree() * g.degree();
        if (oracle::expand(plethysm(f, g), vars) != oracle::oracle_plethysm(f, g, vars)) {
            pl_ok = false;
            pl_detail += f.to_string() + " o " + g.to_string() + "; ";
        }
    }
    result.checks.push_back(check("plethysm vs monomial substitution, |f|,|g| <= 3", pl_ok, pl_detail));

    // Sym^2(Sym^3 C^3) has dimension 55 = 28 + 27, so no s_(2,2,2) here;
    // that term belongs to s_(3) o s_(2).
    const SymFunc s2_s3 = SymFunc::s({6}) + SymFunc::s({4, 2});
    result.checks.push_back(check("s_(2) o s_(3) = s_(6)+s_(4,2)",
                                  to_schur(plethysm(SymFunc::s({2}), SymFunc::s({3}))) == s2_s3 &&
                                      oracle::oracle_plethysm(SymFunc::s({2}), SymFunc::s({3}), 6) ==
                                          oracle::expand(s2_s3, 6)));
    const SymFunc e2_s3 = SymFunc::s({5, 1}) + SymFunc::s({3, 3});
    result.checks.push_back(check("s_(1,1) o s_(3) = s_(5,1)+s_(3,3)",
                                  to_schur(plethysm(SymFunc::s({1, 1}), SymFunc::s({3}))) == e2_s3 &&
                                      oracle::oracle_plethysm(SymFunc::s({1, 1}), SymFunc::s({3}), 6) ==
                                          oracle::expand(e2_s3, 6)));

    std::mt19937 rng(20101);
    std::uniform_int_distribution<int> deg(1, 4);
    bool mul_ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        const SymFunc f = random_schur(rng, deg(rng));
        const SymFunc g = random_schur(rng, deg(rng));
        const int vars = f.degree() + g.degree();
        if (oracle::expand(multiply(f, g), vars) != oracle::expand(f, vars) * oracle::expand(g, vars)) mul_ok = false;
    }
    result.checks.push_back(check("multiply vs monomial product, 100 random pairs", mul_ok));
    return result;
}

SuiteResult length_suite(ModuliEngine& engine, int n_max)
{
    SuiteResult result{"length-theorem", {}};
    for (int n = 3; n <= n_max; ++n) {
        const LengthReport report = length_theorem_report(engine, n);
        for (const auto& row : report.rows) {
            std::ostringstream name, detail;
            name << "n=" << n << " i=" << row.i;
            detail << "length " << row.length << " bound " << row.bound << " w " << row.w;
            result.checks.push_back(check(name.str(), row.ok, detail.str()));
        }
    }
    return result;
}

}  // namespace

const std::vector<GoldenExample>& golden_examples()
{
    static const std::vector<GoldenExample> examples = [] {
        std::vector<GoldenExample> v;
        v.push_back({"E^5_{0,1}", 5, 0, 1, y_schur({{{5}, poly({1, 1, 1})}, {{4, 1}, poly({0, 1})}})});
        v.push_back({"E^5_{1,3}", 5, 1, 3, xy_schur({{{1}, {4}, poly({1, 1, 1})}})});
        v.push_back({"E^6_{0,1}", 6, 0, 1,
                     y_schur({{{6}, poly({1, 2, 2, 1})}, {{5, 1}, poly({0, 1, 1})}, {{4, 2}, poly({0, 1, 1})}})});
        v.push_back({"E^6_{1,3}", 6, 1, 3,
                     xy_schur({{{1}, {5}, poly({1, 2, 2, 1})}, {{1}, {4, 1}, poly({0, 1, 1})}})});
        v.push_back({"E^4_{2,3}", 4, 2, 3, xy_schur({{{2}, {2}, poly({1, 1})}})});
        v.push_back({"E^7_{0,3}", 7, 0, 3,
                     y_schur({{{7}, poly({1, 1, 2, 1, 1})}, {{6, 1}, poly({0, 1, 1, 1})}, {{5, 2}, poly({0, 0, 1})}})});
        v.push_back({"E^7_{0,1}", 7, 0, 1,
                     y_schur({{{7}, poly({1, 2, 4, 2, 1})},
                              {{6, 1}, poly({0, 2, 3, 2})},
                              {{5, 2}, poly({0, 1, 3, 1})},
                              {{4, 3}, poly({0, 1, 2, 1})},
                              {{4, 2, 1}, poly({0, 0, 1})}})});
        v.push_back({"E^8_{0,3}", 8, 0, 3,
                     y_schur({{{8}, poly({1, 2, 3, 3, 2, 1})},
                              {{7, 1}, poly({0, 1, 2, 2, 1})},
                              {{6, 2}, poly({0, 1, 2, 2, 1})},
                              {{5, 3}, poly({0, 0, 1, 1})},
                              {{4, 4}, poly({0, 1, 1, 1, 1})}})});
        v.push_back({"E^8_{0,1}", 8, 0, 1,
                     y_schur({{{8}, poly({1, 3, 6, 6, 3, 1})},
                              {{7, 1}, poly({0, 2, 6, 6, 2})},
                              {{6, 2}, poly({0, 2, 7, 7, 2})},
                              {{6, 1, 1}, poly({0, 0, 1, 1})},
                              {{5, 3}, poly({0, 1, 5, 5, 1})},
                              {{5, 2, 1}, poly({0, 0, 2, 2})},
                              {{4, 4}, poly({0, 1, 3, 3, 1})},
                              {{4, 3, 1}, poly({0, 0, 2, 2})},
                              {{4, 2, 2}, poly({0, 0, 1, 1})}})});
        return v;
    }();
    return examples;
}

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const
{
    std::size_t n = 0;
    for (const auto& c : checks) n += c.passed ? 0 : 1;
    return n;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"paper-examples", "duality", "oracles", "length-theorem"};
    return names;
}

SuiteResult run_suite(const std::string& suite, ModuliEngine& engine, int n_max)
{
    if (suite == "paper-examples") return paper_examples_suite(engine);
    if (suite == "duality") return duality_suite(engine, n_max);
    if (suite == "oracles") return oracles_suite();
    if (suite == "length-theorem") return length_suite(engine, n_max);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

Json to_json(const SuiteResult& result)
{
    Json j;
    j["suite"] = result.suite;
    j["passed"] = result.passed();
    j["total"] = result.checks.size();
    j["failures"] = result.failures();
    Json checks = Json::array();
    for (const auto& c : result.checks) {
        Json item;
        item["name"] = c.name;
        item["passed"] = c.passed;
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace equichar
