#pragma once

#include <string>
#include <vector>

#include "equichar/moduli.hpp"
#include "equichar/serialize.hpp"

namespace equichar {

// A value of E(n,k,l) printed in closed form in the literature, in Schur basis.
struct GoldenExample {
    std::string label;
    int n;
    int k;
    int l;
    BiSymFunc expected;
};

// The nine worked examples for n <= 8.
const std::vector<GoldenExample>& golden_examples();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
};

// Suites: paper-examples, duality, oracles, length-theorem. n_max bounds the
// sweeps of duality and length-theorem. Throws std::invalid_argument on an
// unknown suite name.
SuiteResult run_suite(const std::string& suite, ModuliEngine& engine, int n_max);

const std::vector<std::string>& suite_names();

Json to_json(const SuiteResult& result);

}  // namespace equichar
