#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include "equichar/moduli.hpp"

namespace equichar {

inline constexpr int kCacheSchemaVersion = 1;

// A cache file exists but cannot be trusted: unreadable, wrong schema
// version, or describing a different key.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One JSON file per normalized key, E_{n}_{k}_{l}.json, holding the Schur
// expansion. Writes go through a temporary file and a rename, so concurrent
// writers of the same key leave one complete file behind.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(const MemoKey& key) const;

    std::optional<BiSymFunc> load(const MemoKey& key) const;
    void store(const MemoKey& key, const BiSymFunc& value) const;

    std::vector<MemoKey> entries() const;
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

}  // namespace equichar
