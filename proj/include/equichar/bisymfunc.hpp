#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "equichar/symfunc.hpp"

namespace equichar {

using PartitionPair = std::pair<Partition, Partition>;

// Element of Lambda^x (x) Lambda^y [q], the character ring of S_k x S_{n-k}.
// Both legs always share one basis.
class BiSymFunc {
public:
    using Terms = std::map<PartitionPair, QPoly>;

    explicit BiSymFunc(Basis basis = Basis::PowerSum) : basis_(basis) {}

    // f^x (x) g^y.
    static BiSymFunc tensor(const SymFunc& x, const SymFunc& y);
    static BiSymFunc x_only(const SymFunc& x) { return tensor(x, SymFunc::one(x.basis())); }
    static BiSymFunc y_only(const SymFunc& y) { return tensor(SymFunc::one(y.basis()), y); }
    static BiSymFunc one(Basis basis = Basis::PowerSum);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    QPoly coeff(const Partition& x, const Partition& y) const;
    std::set<std::pair<int, int>> bidegrees() const;
    // The single bidegree (|x|, |y|) of a homogeneous non-zero value.
    std::pair<int, int> bidegree() const;
    int q_degree() const;

    void add_term(const Partition& x, const Partition& y, const QPoly& c);

    BiSymFunc& operator+=(const BiSymFunc& o);
    BiSymFunc& operator-=(const BiSymFunc& o);
    BiSymFunc& operator*=(const QPoly& c);
    friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }
    friend BiSymFunc operator-(BiSymFunc a, const BiSymFunc& b) { return a -= b; }
    friend BiSymFunc operator*(BiSymFunc a, const QPoly& c) { return a *= c; }
    friend bool operator==(const BiSymFunc& a, const BiSymFunc& b) = default;

    // Collapses a value whose x-leg is everywhere empty onto Lambda^y.
    SymFunc y_leg() const;
    // Collapses a value whose y-leg is everywhere empty onto Lambda^x.
    SymFunc x_leg() const;
    BiSymFunc swap_legs() const;
    BiSymFunc q_component(int i) const;

    std::string to_string() const;

private:
    void check_same_basis(const BiSymFunc& o) const;

    Basis basis_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const BiSymFunc& f);

BiSymFunc to_powersum(const BiSymFunc& f);
BiSymFunc to_schur(const BiSymFunc& f);
bool is_effective(const BiSymFunc& f);

// ch_{k,n-k} of the restriction from S_n to S_k x S_{n-k}:
// sum over lambda |- n-k of (d/dp_lambda f)^x (x) p^y_lambda.
BiSymFunc restrict_full(const SymFunc& f, int k);

// The normalized d/dp^x_nu applied to the x-leg only.
BiSymFunc x_deriv_decompose(const BiSymFunc& f, const Partition& nu);

// Multiplies the two legs inside Lambda: the character of the induced
// representation of S_n.
SymFunc induce_to_full(const BiSymFunc& f);

// Legwise product; bidegrees add.
BiSymFunc bimultiply(const BiSymFunc& f, const BiSymFunc& g);
inline BiSymFunc operator*(const BiSymFunc& f, const BiSymFunc& g) { return bimultiply(f, g); }

// Replaces every y-leg h by h o g, leaving the x-leg and the coefficients inert.
BiSymFunc plethysm_y(const BiSymFunc& f, const SymFunc& g);

// Graded dimension of a character of S_k x S_{n-k} at the identity.
QPoly dimension_specialize(const BiSymFunc& f);

}  // namespace equichar
