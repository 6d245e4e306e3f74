#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace brownlab {

// Content-addressed store of exact results. Each entry is a JSON file named by a
// hash of its key and records the key, the producing version and the result.
// Entries whose key, version or shape does not match, or that fail the caller's
// validator, are treated as absent.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    // flag, then $BROWNLAB_CACHE, then $XDG_CACHE_HOME/brownlab, then ~/.cache/brownlab.
    static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

    std::filesystem::path path_for(const std::string& key) const;

    std::optional<nlohmann::json> load(
        const std::string& key,
        const std::function<bool(const nlohmann::json&)>& validate = {}) const;

    // Writes to a temporary file in the cache directory and renames it into place.
    void store(const std::string& key, const nlohmann::json& result) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

}  // namespace brownlab
