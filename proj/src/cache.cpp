#include "equichar/cache.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <system_error>
#include <thread>

#include "equichar/serialize.hpp"

namespace equichar {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir))
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path DiskCache::path_for(const MemoKey& key) const
{
    return dir_ / ("E_" + std::to_string(key.n) + "_" + std::to_string(key.k) + "_" + std::to_string(key.l) + ".json");
}

std::optional<BiSymFunc> DiskCache::load(const MemoKey& key) const
{
    const fs::path path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const Json j = Json::parse(in);
        if (!j.contains("v") || j.at("v") != kCacheSchemaVersion)
            throw CacheError("schema version mismatch in " + path.string());
        if (j.at("n") != key.n || j.at("k") != key.k || j.at("l") != key.l)
            throw CacheError("cache file " + path.string() + " describes a different key");
        return to_powersum(bisymfunc_from_json(j.at("value")));
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError("corrupt cache file " + path.string() + ": " + e.what());
    }
}

void DiskCache::store(const MemoKey& key, const BiSymFunc& value) const
{
    Json j;
    j["v"] = kCacheSchemaVersion;
    j["n"] = key.n;
    j["k"] = key.k;
    j["l"] = key.l;
    j["value"] = to_json(to_schur(value));

    const fs::path target = path_for(key);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id();
    fs::path tmp = target;
    tmp += suffix.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out << j.dump(1) << '\n';
        if (!out) throw CacheError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw CacheError("cannot move " + tmp.string() + " into place: " + ec.message());
}

std::vector<MemoKey> DiskCache::entries() const
{
    static const std::regex pattern(R"(E_(\d+)_(\d+)_(\d+)\.json)");
    std::vector<MemoKey> out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        std::smatch m;
        const std::string name = entry.path().filename().string();
        if (std::regex_match(name, m, pattern))
            out.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t DiskCache::clear() const
{
    std::size_t removed = 0;
    for (const auto& key : entries())
        if (fs::remove(path_for(key))) ++removed;
    return removed;
}

}  // namespace equichar
