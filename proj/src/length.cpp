#include "equichar/length.hpp"

#include <algorithm>
#include <stdexcept>

namespace equichar {

Partition leading_partition(const SymFunc& f)
{
    const SymFunc s = to_schur(f);
    if (s.is_zero()) throw std::invalid_argument("leading_partition of zero");
    const Partition* best = nullptr;
    for (const auto& [lambda, c] : s.terms())
        if (!best || compare(lambda, *best) == Ordering::Greater) best = &lambda;
    return *best;
}

int max_length(const SymFunc& f)
{
    const SymFunc s = to_schur(f);
    if (s.is_zero()) throw std::invalid_argument("max_length of zero");
    int len = 0;
    for (const auto& [lambda, c] : s.terms()) len = std::max(len, lambda.length());
    return len;
}

int length_bound(int n, int i) { return std::min(i + 1, n - i - 2); }

bool star_property(const Partition& lambda, int n, int i)
{
    if (lambda.size() != n)
        throw std::invalid_argument("star_property: " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    const Partition c = conjugate(lambda);
    const int b = length_bound(n, i);
    return c[0] == b && c[1] == b && c[2] >= 1;
}

bool in_exceptional_degrees(int n, int i)
{
    if (n % 2 == 0) return 2 * i == n - 4 || 2 * i == n - 2;
    return 2 * i == n - 3;
}

std::optional<Partition> exceptional_lambda(int n, int i)
{
    if (n < 4 || !in_exceptional_degrees(n, i)) return std::nullopt;
    std::vector<int> parts{4};
    const int twos = n % 2 == 0 ? (n - 4) / 2 : (n - 5) / 2;
    parts.insert(parts.end(), static_cast<std::size_t>(twos), 2);
    if (n % 2 == 1) parts.push_back(1);
    return Partition(std::move(parts));
}

Partition plethysm_leading_closed_form(const Partition& mu, int m)
{
    if (m < 1) throw std::invalid_argument("plethysm_leading_closed_form: m must be positive");
    const Partition base = Partition::rectangle(m - 1, mu.size());
    return sum_of(base, m % 2 == 1 ? mu : conjugate(mu));
}

bool LengthReport::all_ok() const
{
    return std::all_of(rows.begin(), rows.end(), [](const LengthRow& r) { return r.ok; });
}

LengthReport length_theorem_report(ModuliEngine& engine, int n)
{
    LengthReport report;
    report.n = n;
    const SymFunc character = to_schur(engine.cohomology_character(n));
    for (int i = 0; i <= n - 3; ++i) {
        LengthRow row;
        row.i = i;
        const SymFunc graded = character.q_component(i);
        row.length = max_length(graded);
        row.bound = length_bound(n, i);
        row.w = leading_partition(graded);
        bool shape_ok = true;
        if (auto lambda = exceptional_lambda(n, i)) {
            row.exceptional = true;
            const Rational mult = graded.coeff(*lambda).coeff(0);
            row.lambda_mult = mult.get_den() == 1 ? std::optional<long>(mult.get_num().get_si()) : std::nullopt;
            shape_ok = row.w == *lambda && row.lambda_mult == 1L;
        } else if (i >= 1 && i <= n - 4) {
            row.star_applies = true;
            row.star = star_property(row.w, n, i);
            shape_ok = row.star;
        }
        row.ok = row.length == row.bound && shape_ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Json to_json(const LengthReport& report)
{
    Json j;
    j["n"] = report.n;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["i"] = row.i;
        r["length"] = row.length;
        r["w"] = to_json(row.w);
        r["star"] = row.star;
        r["lambda_mult"] = row.lambda_mult ? Json(*row.lambda_mult) : Json(nullptr);
        r["bound"] = row.bound;
        r["star_applies"] = row.star_applies;
        r["exceptional"] = row.exceptional;
        r["ok"] = row.ok;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace equichar
