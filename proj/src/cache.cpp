#include "crged/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace crged {

namespace {

constexpr const char* kEntryMagic = "crged-cache v1 ";

// Distinct across processes and threads, so concurrent writers never share a temp file.
std::string unique_suffix() {
    static std::atomic<unsigned> counter{0};
    return std::to_string(::getpid()) + "-" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
           "-" + std::to_string(counter++);
}

} // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version, std::ostream* warnings)
    : dir_(std::move(dir)), version_(std::move(version)), warnings_(warnings) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto probe = dir_ / (".probe-" + unique_suffix());
    {
        std::ofstream f(probe);
        enabled_ = !ec && f.good() && static_cast<bool>(f << "ok");
    }
    std::filesystem::remove(probe, ec);
    if (!enabled_ && warnings_) *warnings_ << "warning: cache directory " << dir_ << " is not writable; caching disabled\n";
}

std::string ResultCache::key_for(const std::string& canonical_job) const {
    return sha256_hex("crged " + version_ + "\n" + canonical_job);
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const { return dir_ / (key + ".entry"); }

std::optional<std::string> ResultCache::get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream f(entry_path(key), std::ios::binary);
    if (!f) return std::nullopt;
    std::string header;
    if (!std::getline(f, header) || !header.starts_with(kEntryMagic)) return std::nullopt;
    std::ostringstream body;
    body << f.rdbuf();
    std::string payload = body.str();
    if (header.substr(std::char_traits<char>::length(kEntryMagic)) != sha256_hex(payload)) return std::nullopt;
    return payload;
}

void ResultCache::put(const std::string& key, const std::string& payload) {
    if (!enabled_) return;
    const auto tmp = dir_ / (key + ".tmp-" + unique_suffix());
    {
        std::ofstream f(tmp, std::ios::binary);
        f << kEntryMagic << sha256_hex(payload) << "\n" << payload;
        if (!f) {
            if (warnings_) *warnings_ << "warning: could not write cache entry " << tmp << "\n";
            return;
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, entry_path(key), ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        if (warnings_) *warnings_ << "warning: could not install cache entry for " << key << "\n";
    }
}

} // namespace crged
