#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace crged {

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "CRGED_CACHE_DIR";

std::string sha256_hex(const std::string& data);

/// Content-addressed result cache. Keys hash the canonical job description together
/// with the module version, so a version change misses. Entries carry a checksum of
/// their payload; a damaged entry reads as a miss.
class ResultCache {
public:
    /// An unusable directory disables the cache and writes one warning to `warnings`.
    ResultCache(std::filesystem::path dir, std::string version, std::ostream* warnings = nullptr);

    bool enabled() const noexcept { return enabled_; }
    std::string key_for(const std::string& canonical_job) const;

    std::optional<std::string> get(const std::string& key) const;
    /// Writes via a temporary file and rename, so concurrent writers of the same key
    /// leave one complete entry.
    void put(const std::string& key, const std::string& payload);

    std::filesystem::path entry_path(const std::string& key) const;

private:
    std::filesystem::path dir_;
    std::string version_;
    std::ostream* warnings_;
    bool enabled_ = false;
};

} // namespace crged
