#include "grakit/cache.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>

#include "grakit/errors.hpp"

namespace fs = std::filesystem;

namespace grakit {

namespace {

const char kMagic[] = "grakit-cache-v1\n";

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (!in.good() && !in.eof()) return std::nullopt;
    return data;
}

}  // namespace

Cache::Cache(fs::path root) : root_(std::move(root)) { fs::create_directories(root_); }

fs::path Cache::entry_path(const std::string& key) const {
    // two-level fanout keeps directories small
    return root_ / key.substr(0, 2) / (key + ".entry");
}

std::optional<std::string> Cache::load(const std::string& key) const {
    auto data = read_file(entry_path(key));
    if (!data) return std::nullopt;
    // payload re-validates on load: magic header and embedded key
    std::string header = std::string(kMagic) + key + "\n";
    if (data->size() < header.size() || data->compare(0, header.size(), header) != 0)
        return std::nullopt;
    return data->substr(header.size());
}

void Cache::store(const std::string& key, const std::string& payload) const {
    fs::path dest = entry_path(key);
    fs::create_directories(dest.parent_path());
    static std::mt19937_64 rng(std::random_device{}());
    fs::path tmp = dest;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw resource_error("cannot write cache entry " + tmp.string(), 0);
        out << kMagic << key << "\n" << payload;
        if (!out.good()) {
            out.close();
            fs::remove(tmp);
            throw resource_error("short write to cache entry " + tmp.string(), 0);
        }
    }
    std::error_code ec;
    fs::rename(tmp, dest, ec);
    if (ec) {
        fs::remove(tmp);
        throw resource_error("cache rename failed: " + ec.message(), 0);
    }
}

Cache::GcSummary Cache::gc(std::optional<double> max_age_days,
                           std::optional<std::uintmax_t> max_bytes) const {
    GcSummary s;
    struct Entry {
        fs::path path;
        fs::file_time_type mtime;
        std::uintmax_t size;
    };
    std::vector<Entry> entries;
    std::error_code ec;
    for (auto it = fs::recursive_directory_iterator(root_, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) {
            s.errors.push_back(ec.message());
            break;
        }
        if (!it->is_regular_file()) continue;
        fs::path p = it->path();
        // stray temp files from interrupted writes are always garbage
        if (p.extension() != ".entry" && p.string().find(".tmp") == std::string::npos) continue;
        std::error_code fec;
        Entry e{p, fs::last_write_time(p, fec), fs::file_size(p, fec)};
        if (fec) {
            s.errors.push_back(p.string() + ": " + fec.message());
            continue;
        }
        entries.push_back(std::move(e));
    }
    auto now = fs::file_time_type::clock::now();
    std::vector<Entry> live;
    for (auto& e : entries) {
        bool stale = e.path.extension() != ".entry";
        if (!stale && max_age_days) {
            auto age = std::chrono::duration_cast<std::chrono::seconds>(now - e.mtime).count();
            stale = age > static_cast<long long>(*max_age_days * 86400.0);
        }
        if (stale) {
            std::error_code rec;
            if (fs::remove(e.path, rec))
                ++s.removed;
            else if (rec)
                s.errors.push_back(e.path.string() + ": " + rec.message());
        } else {
            live.push_back(std::move(e));
        }
    }
    if (max_bytes) {
        std::uintmax_t total = 0;
        for (const auto& e : live) total += e.size;
        std::sort(live.begin(), live.end(),
                  [](const Entry& a, const Entry& b) { return a.mtime < b.mtime; });
        for (const auto& e : live) {
            if (total <= *max_bytes) break;
            std::error_code rec;
            if (fs::remove(e.path, rec)) {
                ++s.removed;
                total -= e.size;
            } else if (rec) {
                s.errors.push_back(e.path.string() + ": " + rec.message());
            }
        }
        s.kept = static_cast<int>(live.size()) - (s.removed);
    }
    s.kept = 0;
    for (auto it = fs::recursive_directory_iterator(root_, ec);
         it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) break;
        if (it->is_regular_file() && it->path().extension() == ".entry") ++s.kept;
    }
    return s;
}

fs::path Cache::default_root() {
    if (const char* env = std::getenv("GRAKIT_CACHE_DIR")) return fs::path(env);
    return fs::temp_directory_path() / "grakit-cache";
}

}  // namespace grakit
