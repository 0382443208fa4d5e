#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace equichar {

using Rational = mpq_class;

inline Rational from_uint(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

// "num/den" in lowest terms, or "num" when the denominator is 1.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Univariate polynomial in q with exact rational coefficients, stored sparsely.
// Zero coefficients are never stored.
class QPoly {
public:
    using Terms = std::map<int, Rational>;

    QPoly() = default;
    QPoly(long c);  // NOLINT: constants convert implicitly
    QPoly(Rational c);  // NOLINT
    static QPoly monomial(Rational c, int exponent);
    static QPoly q_power(int exponent) { return monomial(Rational(1), exponent); }
    // 1 + q + ... + q^{count-1}
    static QPoly geometric(int count);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // -1 for the zero polynomial.
    int degree() const noexcept;
    Rational coeff(int exponent) const;

    void add_term(int exponent, const Rational& c);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    QPoly operator-() const;
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    // q -> q^factor.
    QPoly dilate(int factor) const;
    Rational evaluate(const Rational& q) const;
    // q^degree * f(1/q); the palindrome test is reversed(d) == *this.
    QPoly reversed(int degree) const;
    // Every coefficient an integer >= 0.
    bool is_effective() const;

    std::string to_string() const;

private:
    Terms terms_;
};

// Euclidean division by a non-zero divisor: returns {quotient, remainder}.
std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace equichar
