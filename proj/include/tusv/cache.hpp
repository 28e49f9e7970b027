#pragma once

#include "tusv/generator.hpp"
#include "tusv/mask.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace tusv {

// On-disk memo of per-term value masks.
//
// File layout, little-endian: magic "TUSV", u8 version (0x01), u64 bound,
// then ceil((bound+1)/64) u64 words. Writes land in a temp file first and are
// renamed into place, so readers never see a half-written mask. Unreadable or
// stale entries are treated as misses and rebuilt.
class MaskCache {
public:
    explicit MaskCache(std::filesystem::path dir);

    // Resolution order: TUSV_CACHE_DIR, then the platform cache dir.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }

    // Mask for g on [0, bound], loading or computing+storing as needed.
    ValueMask get_term_mask(const Generator& g, long long bound);

    std::optional<ValueMask> load(const std::string& key, long long bound);
    void store(const std::string& key, const ValueMask& mask);

    // Cache key: canonical term spelling plus domain tag. Bound is part of
    // the file payload, not the key, so a longer run replaces a shorter one.
    static std::string term_key(const Generator& g);

    std::filesystem::path path_for(const std::string& key) const;

    struct Stats {
        long long hits = 0;
        long long misses = 0;
        long long rebuilds = 0; // corrupt or short files replaced
    };
    const Stats& stats() const { return stats_; }

    void clear();

private:
    std::filesystem::path dir_;
    Stats stats_;
};

} // namespace tusv
