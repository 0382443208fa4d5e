#include "equichar/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace equichar {

namespace {

void check_parts(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int total(const std::vector<int>& parts)
{
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    check_parts(parts_);
    size_ = total(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int value, int count)
{
    if (value == 0 || count <= 0) return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition conjugate(const Partition& p)
{
    if (p.empty()) return {};
    std::vector<int> c(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i) ++c[static_cast<std::size_t>(i)];
    return Partition(std::move(c));
}

Partition union_of(const Partition& a, const Partition& b)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a.length() + b.length()));
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

Partition sum_of(const Partition& a, const Partition& b)
{
    const int len = std::max(a.length(), b.length());
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
    return Partition(std::move(out));
}

Ordering compare(const Partition& a, const Partition& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("compare: partitions of different sizes " + a.to_string() +
                                    " and " + b.to_string());
    // Column heights are counted in place; no conjugate is materialized.
    const int cols = std::max(a[0], b[0]);
    int ha = a.length(), hb = b.length();
    for (int col = 1; col <= cols; ++col) {
        while (ha > 0 && a[ha - 1] < col) --ha;
        while (hb > 0 && b[hb - 1] < col) --hb;
        if (ha != hb) return ha > hb ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

bool PresentationLess::operator()(const Partition& a, const Partition& b) const
{
    if (a.size() != b.size()) return a.size() < b.size();
    return compare(a, b) == Ordering::Less;
}

const std::vector<Partition>& partitions_of(int n)
{
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> table;
    std::lock_guard lock(mutex);
    if (auto it = table.find(n); it != table.end()) return it->second;

    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return compare(a, b) == Ordering::Greater;
    });
    return table.emplace(n, std::move(out)).first->second;
}

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20) throw std::out_of_range("factorial: argument outside [0,20]");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::map<int, int> multiplicity_vector(const Partition& p)
{
    std::map<int, int> m;
    for (int part : p.parts()) ++m[part];
    return m;
}

std::uint64_t centralizer_order(const Partition& p)
{
    std::uint64_t z = 1;
    for (auto [part, mult] : multiplicity_vector(p)) {
        for (int i = 0; i < mult; ++i) z *= static_cast<std::uint64_t>(part);
        z *= factorial(mult);
    }
    return z;
}

std::uint64_t irrep_dimension(const Partition& p)
{
    if (p.empty()) throw std::invalid_argument("irrep_dimension: empty partition");
    const Partition c = conjugate(p);
    std::uint64_t hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j)
            hooks *= static_cast<std::uint64_t>((p[i] - j - 1) + (c[j] - i - 1) + 1);
    return factorial(p.size()) / hooks;
}

}  // namespace equichar
