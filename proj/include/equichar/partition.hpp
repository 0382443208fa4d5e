#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace equichar {

// Integer partition stored as a weakly decreasing list of positive parts.
// The empty partition is a valid value (size 0, length 0).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Builds a partition from parts in any order (zeros are dropped).
    static Partition from_unsorted(std::vector<int> parts);
    // (value^count), e.g. rectangle(2, 3) = (2,2,2).
    static Partition rectangle(int value, int count);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    // i-th part, 0-based; 0 past the end.
    int operator[](int i) const noexcept
    {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    // Lexicographic on parts; a storage order for containers, not the
    // conjugate-lexicographic order of `compare`.
    friend auto operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class Ordering { Less, Equal, Greater };

Partition conjugate(const Partition& p);
// Multiset union of parts.
Partition union_of(const Partition& a, const Partition& b);
// Componentwise sum with missing parts read as 0.
Partition sum_of(const Partition& a, const Partition& b);

// lambda > mu iff the conjugates first differ at a column where lambda's is
// taller. Throws std::invalid_argument when the sizes differ.
Ordering compare(const Partition& a, const Partition& b);

// Strict weak order for presentation: by size, then ascending under
// `compare`. (n) comes first and (1^n) last within each size.
struct PresentationLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

// All partitions of n, in decreasing order under `compare`; (1^n) first.
const std::vector<Partition>& partitions_of(int n);

// z_lambda = prod_i i^{m_i} m_i!, the order of a centralizer of cycle type lambda.
std::uint64_t centralizer_order(const Partition& p);

// Hook-length formula. Throws on the empty partition.
std::uint64_t irrep_dimension(const Partition& p);

std::map<int, int> multiplicity_vector(const Partition& p);

std::uint64_t factorial(int n);

}  // namespace equichar
