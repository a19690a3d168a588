#include "cmint/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "cmint/error.hpp"

namespace cmint {

std::filesystem::path default_cache_dir()
{
    if (char const* dir = std::getenv("CMINT_CACHE_DIR"); dir != nullptr && *dir != '\0') {
        return dir;
    }
    if (char const* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "cmint";
    }
    if (char const* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "cmint";
    }
    return std::filesystem::temp_directory_path() / "cmint";
}

std::string cache_key(const CMFieldData& field, long m)
{
    return field.D.get_str() + "|" + field.delta.x().get_str() + "|" + field.delta.y().get_str() + "|" +
           field.delta.den().get_str() + "|" + to_string(field.mode) + "|" + std::to_string(m);
}

Cache::Cache(std::filesystem::path dir) : file_(std::move(dir) / "bm.jsonl") { load(); }

void Cache::load()
{
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        // A torn or foreign line is skipped rather than trusted.
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || j.value("version", "") != cache_version || !j.contains("key") ||
            !j["key"].is_string() || !j.contains("value")) {
            continue;
        }
        entries_[j["key"].get<std::string>()] = std::move(j["value"]);
    }
}

std::optional<Json> Cache::lookup(const std::string& key) const
{
    auto const it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void Cache::store(const std::string& key, const Json& value)
{
    std::error_code ec;
    std::filesystem::create_directories(file_.parent_path(), ec);
    std::ofstream out(file_, std::ios::app);
    if (!out) {
        throw ResourceError("cannot append to cache file " + file_.string());
    }
    Json line;
    line["version"] = cache_version;
    line["key"] = key;
    line["value"] = value;
    out << line.dump() << "\n";
    entries_[key] = value;
}

Json bm_report_json(const CMFieldData& field, long m, Cache* cache)
{
    std::string const key = cache_key(field, m);
    if (cache != nullptr) {
        if (auto hit = cache->lookup(key)) {
            return *hit;
        }
    }
    Json value = bm_report(field, m).to_json();
    if (cache != nullptr) {
        cache->store(key, value);
    }
    return value;
}

}  // namespace cmint
