#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace grakit {

// Content-addressed result store. One file per key, written via temp file
// plus atomic rename, so readers never observe partial entries.
class Cache {
public:
    explicit Cache(std::filesystem::path root);

    // Returns the stored payload, or nullopt on miss/corruption. Corrupt
    // entries are treated as misses; they get overwritten on store.
    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

    struct GcSummary {
        int removed = 0;
        int kept = 0;
        std::vector<std::string> errors;  // per-entry, non-fatal
    };
    // Drop entries older than max_age_days; then, oldest first, drop until
    // total size fits under max_bytes.
    GcSummary gc(std::optional<double> max_age_days,
                 std::optional<std::uintmax_t> max_bytes) const;

    const std::filesystem::path& root() const { return root_; }

    // GRAKIT_CACHE_DIR if set, otherwise <system temp>/grakit-cache.
    static std::filesystem::path default_root();

private:
    std::filesystem::path entry_path(const std::string& key) const;
    std::filesystem::path root_;
};

}  // namespace grakit
