#include "tusv/cache.hpp"

#include "tusv/grammar.hpp"
#include "tusv/sieve.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

namespace tusv {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[4] = {'T', 'U', 'S', 'V'};
constexpr std::uint8_t kVersion = 0x01;

void put_u64(std::ofstream& out, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
    out.write(b, 8);
}

bool get_u64(std::ifstream& in, std::uint64_t& v) {
    char b[8];
    if (!in.read(b, 8)) return false;
    v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    return true;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace

MaskCache::MaskCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec); // best effort; store() reports failures
}

fs::path MaskCache::default_dir() {
    if (const char* env = std::getenv("TUSV_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "tusv";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "tusv";
    return fs::temp_directory_path() / "tusv-cache";
}

std::string MaskCache::term_key(const Generator& g) { return spell_term(g); }

fs::path MaskCache::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.mask",
                  static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / name;
}

std::optional<ValueMask> MaskCache::load(const std::string& key, long long bound) {
    std::ifstream in(path_for(key), std::ios::binary);
    if (!in) {
        ++stats_.misses;
        return std::nullopt;
    }
    char magic[4];
    char version = 0;
    std::uint64_t stored_bound = 0;
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic) ||
        !in.get(version) || static_cast<std::uint8_t>(version) != kVersion ||
        !get_u64(in, stored_bound)) {
        ++stats_.rebuilds; // corrupt or foreign file; treat as a rebuildable miss
        return std::nullopt;
    }
    if (stored_bound < static_cast<std::uint64_t>(bound)) {
        ++stats_.misses; // stale short mask; a longer run will replace it
        return std::nullopt;
    }
    const std::size_t stored_words = stored_bound / 64 + 1;
    ValueMask m(bound);
    const std::size_t want = m.word_count();
    std::vector<std::uint64_t> buf(stored_words);
    for (std::size_t i = 0; i < stored_words; ++i) {
        if (!get_u64(in, buf[i])) {
            ++stats_.rebuilds; // truncated payload
            return std::nullopt;
        }
    }
    std::copy(buf.begin(), buf.begin() + want, m.data());
    const unsigned tail = static_cast<unsigned>(bound % 64);
    if (tail != 63) m.data()[want - 1] &= (std::uint64_t{2} << tail) - 1;
    ++stats_.hits;
    return m;
}

void MaskCache::store(const std::string& key, const ValueMask& mask) {
    const fs::path final_path = path_for(key);
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(static_cast<unsigned long long>(
               reinterpret_cast<std::uintptr_t>(&mask) ^ fnv1a(key)));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return; // cache is an optimization; failure to write is not fatal
        out.write(kMagic, 4);
        out.put(static_cast<char>(kVersion));
        put_u64(out, static_cast<std::uint64_t>(mask.bound()));
        for (std::size_t i = 0; i < mask.word_count(); ++i) put_u64(out, mask.data()[i]);
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            return;
        }
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec); // atomic on POSIX; readers never see partial data
    if (ec) fs::remove(tmp, ec);
}

ValueMask MaskCache::get_term_mask(const Generator& g, long long bound) {
    const std::string key = term_key(g);
    if (auto m = load(key, bound)) return *std::move(m);
    ValueMask m = term_mask(g, bound);
    store(key, m);
    return m;
}

void MaskCache::clear() {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir_, ec)) {
        if (entry.path().extension() == ".mask") fs::remove(entry.path(), ec);
    }
    stats_ = {};
}

} // namespace tusv
