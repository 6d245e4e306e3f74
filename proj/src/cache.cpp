#include "brownlab/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "brownlab/io.hpp"

namespace brownlab {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::resolve_dir(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return *flag;
    if (const char* env = std::getenv("BROWNLAB_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return fs::path(xdg) / "brownlab";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return fs::path(home) / ".cache" / "brownlab";
    }
    return fs::temp_directory_path() / "brownlab-cache";
}

fs::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (fnv1a_hex(key) + ".json");
}

std::optional<nlohmann::json> ResultCache::load(
    const std::string& key, const std::function<bool(const nlohmann::json&)>& validate) const {
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    const auto doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
    if (!doc.contains("key") || doc["key"] != key) return std::nullopt;
    if (!doc.contains("version") || doc["version"] != kVersion) return std::nullopt;
    if (!doc.contains("result") || !doc["result"].is_object()) return std::nullopt;
    try {
        if (validate && !validate(doc["result"])) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::optional<nlohmann::json>(std::in_place, doc["result"]);
}

void ResultCache::store(const std::string& key, const nlohmann::json& result) const {
    fs::create_directories(dir_);
    const nlohmann::json doc = {{"key", key}, {"version", kVersion}, {"result", result}};
    std::random_device rd;
    const fs::path tmp = dir_ / (".tmp-" + fnv1a_hex(key) + "-" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump() << '\n';
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    fs::rename(tmp, path_for(key));
}

}  // namespace brownlab
