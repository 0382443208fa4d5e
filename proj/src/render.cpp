#include "equichar/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "equichar/serialize.hpp"

namespace equichar {

Format format_from_string(const std::string& s)
{
    if (s == "text") return Format::Text;
    if (s == "latex") return Format::Latex;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

std::string latex_rational(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string q_power(int e, Format format)
{
    if (e == 0) return "";
    if (e == 1) return "q";
    if (format == Format::Latex) return e < 10 ? "q^" + std::to_string(e) : "q^{" + std::to_string(e) + "}";
    return "q^" + std::to_string(e);
}

// Polynomial body without an overall sign decision: terms in descending
// powers, e.g. "q^2+q+1" (LaTeX) or "q^2 + q + 1" (text).
std::string qpoly_body(const QPoly& p, Format format)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else if (format == Format::Latex)
            os << (c < 0 ? "-" : "+");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const bool unit = mag == 1 && e > 0;
        if (!unit) os << (format == Format::Latex ? latex_rational(mag) : rational_to_string(mag));
        if (!unit && e > 0 && format == Format::Text) os << '*';
        os << q_power(e, format);
    }
    return os.str();
}

std::string schur_symbol(const Partition& p, const char* leg, Format format)
{
    std::string parts = p.to_string();
    if (format == Format::Latex) return std::string("s") + leg + "_{" + parts + "}";
    return std::string("s") + leg + parts;
}

std::string basis_element(const Partition& x, const Partition& y, Format format)
{
    const bool show_x = !x.empty();
    const bool show_y = !y.empty();
    if (!show_x && !show_y) return "";
    if (!show_x) return schur_symbol(y, "", format);
    const char* xs = format == Format::Latex ? "^x" : "x";
    const char* ys = format == Format::Latex ? "^y" : "y";
    if (!show_y) return schur_symbol(x, xs, format);
    const std::string sep = format == Format::Latex ? "" : "*";
    return schur_symbol(x, xs, format) + sep + schur_symbol(y, ys, format);
}

// "coefficient times element", with the sign of a one-term coefficient
// pulled out so that it can join the running sum.
std::pair<bool, std::string> product(const QPoly& c, const std::string& element, Format format)
{
    const std::string sep = format == Format::Latex ? "" : "*";
    if (c.terms().size() == 1) {
        const auto& [e, v] = *c.terms().begin();
        const bool negative = v < 0;
        const QPoly mag = QPoly::monomial(abs(v), e);
        if (element.empty()) return {negative, qpoly_body(mag, format)};
        if (e == 0 && abs(v) == 1) return {negative, element};
        return {negative, qpoly_body(mag, format) + sep + element};
    }
    if (element.empty()) return {false, "(" + qpoly_body(c, format) + ")"};
    return {false, "(" + qpoly_body(c, format) + ")" + sep + element};
}

std::string join(const std::vector<std::pair<bool, std::string>>& items, Format format)
{
    if (items.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& [negative, body] = items[i];
        if (i == 0)
            os << (negative ? "-" : "");
        else if (format == Format::Latex)
            os << (negative ? "-" : "+");
        else
            os << (negative ? " - " : " + ");
        os << body;
    }
    return os.str();
}

bool key_less(const PartitionPair& a, const PartitionPair& b)
{
    PresentationLess less;
    if (a.first != b.first) return less(a.first, b.first);
    return less(a.second, b.second);
}

}  // namespace

std::string render_qpoly(const QPoly& p, Format format)
{
    if (format == Format::Json) return to_json(p).dump();
    return qpoly_body(p, format);
}

std::string render(const BiSymFunc& f, Format format, bool group_by_q)
{
    const BiSymFunc s = to_schur(f);
    if (format == Format::Json) return to_json(s).dump(2);

    std::vector<PartitionPair> keys;
    for (const auto& [key, c] : s.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), key_less);

    std::vector<std::pair<bool, std::string>> items;
    if (!group_by_q) {
        for (const auto& key : keys)
            items.push_back(product(s.coeff(key.first, key.second), basis_element(key.first, key.second, format), format));
        return join(items, format);
    }

    const std::string sep = format == Format::Latex ? "" : "*";
    for (int e = 0; e <= s.q_degree(); ++e) {
        std::vector<std::pair<bool, std::string>> inner;
        for (const auto& key : keys) {
            const Rational c = s.coeff(key.first, key.second).coeff(e);
            if (c != 0) inner.push_back(product(QPoly(c), basis_element(key.first, key.second, format), format));
        }
        if (inner.empty()) continue;
        const std::string q = q_power(e, format);
        if (inner.size() == 1)
            items.push_back({inner[0].first, inner[0].second + (q.empty() ? "" : sep + q)});
        else
            items.push_back({false, "(" + join(inner, format) + ")" + (q.empty() ? "" : sep + q)});
    }
    return join(items, format);
}

}  // namespace equichar
