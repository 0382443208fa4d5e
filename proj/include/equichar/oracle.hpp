#pragma once

#include <map>
#include <vector>

#include "equichar/symfunc.hpp"

// Slow, independent models of the symmetric-function kernel, used to
// re-certify it. Nothing here shares code with the power-sum arithmetic
// beyond the SymFunc container itself.
namespace equichar::oracle {

// Polynomial in x_1..x_N and q with rational coefficients. Exponent vectors
// have N+1 entries; the last one is the power of q.
class MonomialPoly {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    explicit MonomialPoly(int variables) : variables_(variables) {}
    static MonomialPoly constant(int variables, const QPoly& c);

    int variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    void add_term(const Exponents& e, const Rational& c);

    MonomialPoly& operator+=(const MonomialPoly& o);
    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b);
    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) = default;

    // Invariant under the transposition of x_i and x_j.
    bool symmetric_under(int i, int j) const;
    // Invariant under every adjacent transposition.
    bool is_symmetric() const;

private:
    int variables_;
    Terms terms_;
};

// Image of f in N variables; faithful when N >= deg f.
MonomialPoly expand(const SymFunc& f, int variables);

// f o g computed by substituting the monomials of g, with multiplicity, as
// the alphabet of f. Requires non-negative integer monomial coefficients in g.
MonomialPoly oracle_plethysm(const SymFunc& f, const SymFunc& g, int variables);

// h_n in power sums via Newton's identity n h_n = sum_i p_i h_{n-i}.
SymFunc complete_homogeneous_newton(int n);

// det[h_{lambda_i - i + j}] expanded in power sums.
SymFunc jacobi_trudi_to_powersum(const Partition& lambda);

}  // namespace equichar::oracle
