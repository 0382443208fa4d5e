#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "equichar/partition.hpp"
#include "equichar/qpoly.hpp"

namespace equichar {

enum class Basis { PowerSum, Schur };

std::string basis_name(Basis b);

// Element of Lambda (x) Q[q]: a finite combination of p_lambda or s_lambda
// with QPoly coefficients. Terms of different degrees may coexist; the
// per-degree view is `homogeneous_component`.
class SymFunc {
public:
    using Terms = std::map<Partition, QPoly>;

    explicit SymFunc(Basis basis = Basis::PowerSum) : basis_(basis) {}

    static SymFunc p(const Partition& lambda, QPoly coeff = 1);
    static SymFunc s(const Partition& lambda, QPoly coeff = 1);
    static SymFunc one(Basis basis = Basis::PowerSum);
    static SymFunc scalar(QPoly c, Basis basis = Basis::PowerSum);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coeff(const Partition& lambda) const;

    // Set of sizes |lambda| present in the support.
    std::set<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    // The single degree of a homogeneous non-zero value; throws otherwise.
    int degree() const;
    SymFunc homogeneous_component(int degree) const;
    // Coefficient of q^i, as a q-free symmetric function.
    SymFunc q_component(int i) const;
    // Largest q-exponent in any coefficient, -1 for zero.
    int q_degree() const;

    void add_term(const Partition& lambda, const QPoly& c);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const QPoly& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const QPoly& c) { return a *= c; }
    friend SymFunc operator*(const QPoly& c, SymFunc a) { return a *= c; }
    friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

    std::string to_string() const;

private:
    void check_same_basis(const SymFunc& o) const;

    Basis basis_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

// Irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama).
// Values are memoized in a process-wide table safe for concurrent use.
std::int64_t character_value(const Partition& lambda, const Partition& mu);

SymFunc schur_to_powersum(const SymFunc& f);
SymFunc powersum_to_schur(const SymFunc& f);
// Basis-agnostic conversions; no-ops when already in the target basis.
SymFunc to_powersum(const SymFunc& f);
SymFunc to_schur(const SymFunc& f);

// Induction product. Inputs may be in either basis; the result is in power sums.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return multiply(f, g); }
SymFunc power(const SymFunc& f, int exponent);

// Internal (tensor) product. Both sides must be homogeneous of one degree.
SymFunc kronecker(const SymFunc& f, const SymFunc& g);

// f o g. Coefficients of f multiply the result unchanged; inside g,
// p_n o (q^k p_mu) = q^{nk} p_{n mu}.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// (prod_j 1/m_j(lambda)!) d/dp_{lambda_1} ... d/dp_{lambda_l} f.
SymFunc pderiv(const SymFunc& f, const Partition& lambda);

// Graded dimension of a degree-n character. Schur input goes through hook
// lengths, power-sum input through n! [p_{1^n}].
QPoly dimension_specialize(const SymFunc& f, int n);

// Every Schur coefficient lies in Z_{>=0}[q].
bool is_effective(const SymFunc& f);

}  // namespace equichar
