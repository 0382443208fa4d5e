#include "equichar/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace equichar {

std::string rational_to_string(const Rational& value)
{
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s)
{
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational canonical = r;
    canonical.canonicalize();
    if (canonical.get_num() != r.get_num() || canonical.get_den() != r.get_den())
        throw std::invalid_argument("rational '" + s + "' not in lowest terms");
    return canonical;
}

QPoly::QPoly(long c) : QPoly(Rational(c)) {}

QPoly::QPoly(Rational c)
{
    if (c != 0) terms_.emplace(0, std::move(c));
}

QPoly QPoly::monomial(Rational c, int exponent)
{
    if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
    QPoly p;
    if (c != 0) p.terms_.emplace(exponent, std::move(c));
    return p;
}

QPoly QPoly::geometric(int count)
{
    QPoly p;
    for (int i = 0; i < count; ++i) p.terms_.emplace(i, Rational(1));
    return p;
}

bool QPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int QPoly::degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Rational QPoly::coeff(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QPoly::add_term(int exponent, const Rational& c)
{
    if (c == 0) return;
    if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly out = *this;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

QPoly QPoly::dilate(int factor) const
{
    QPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
    return out;
}

Rational QPoly::evaluate(const Rational& q) const
{
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational power = 1;
        for (int i = 0; i < e; ++i) power *= q;
        sum += c * power;
    }
    return sum;
}

QPoly QPoly::reversed(int degree) const
{
    QPoly out;
    for (const auto& [e, c] : terms_) out.add_term(degree - e, c);
    return out;
}

bool QPoly::is_effective() const
{
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1 || c < 0) return false;
    return true;
}

std::string QPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || e == 0) os << rational_to_string(mag);
        if (e > 0) {
            if (!unit) os << '*';
            os << 'q';
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor)
{
    if (divisor.is_zero()) throw std::domain_error("QPoly division by zero");
    const int dd = divisor.degree();
    const Rational lead = divisor.coeff(dd);
    QPoly quotient;
    QPoly remainder = dividend;
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const int shift = remainder.degree() - dd;
        const Rational factor = remainder.coeff(remainder.degree()) / lead;
        QPoly step = QPoly::monomial(factor, shift);
        quotient += step;
        remainder -= step * divisor;
    }
    return {quotient, remainder};
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace equichar
