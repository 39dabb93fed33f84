#pragma once

// Shared plumbing: error types, a portable deterministic RNG, hashing,
// small string/file helpers. Everything else in jabwock/ builds on this.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

namespace jabwock {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public Error {
    using Error::Error;
};
class FormatError : public Error {
    using Error::Error;
};
class ResourceError : public Error {
    using Error::Error;
};
class ConfigError : public Error {
    using Error::Error;
};
class CapacityError : public Error {
    using Error::Error;
};
class NotInvertibleError : public Error {
    using Error::Error;
};
class StatError : public Error {
    using Error::Error;
};
class TransportError : public Error {
    using Error::Error;
};
class EmptyResponseError : public Error {
    using Error::Error;
};

// Deterministic RNG with a stable cross-platform sequence (splitmix64 core).
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done here with unbiased rejection.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below: n must be >= 1");
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

// Stable 64-bit seed derivation for per-item streams (seed, "passage-7", ...).
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx|", static_cast<unsigned long long>(base));
    return fnv1a64(tag, fnv1a64(buf));
}

inline std::string hex_encode(const unsigned char* data, std::size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

// Content-address hash for the response cache.
inline std::string sha256_hex(std::string_view s) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw Error("sha256: EVP_MD_CTX_new failed");
    bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx, s.data(), s.size()) == 1 &&
              EVP_DigestFinal_ex(ctx, digest, &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) throw Error("sha256: digest failed");
    return hex_encode(digest, len);
}

// ---- small string helpers (ASCII case only; non-ASCII bytes pass through) --

inline char lower_ascii(char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; }
inline char upper_ascii(char c) { return (c >= 'a' && c <= 'z') ? char(c - 'a' + 'A') : c; }

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = lower_ascii(c);
    return out;
}

inline std::string to_upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = upper_ascii(c);
    return out;
}

inline bool is_ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Fixed-format float for deterministic tables (no locale, no platform drift).
inline std::string fmt_double(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

// ---- file helpers -----------------------------------------------------------

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Atomic write: temp file in the same directory, then rename over the target.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw IoError("short write: " + tmp.string());
    }
    fs::rename(tmp, path);
}

inline std::filesystem::path repo_dir() {
#ifdef JABWOCK_REPO_DIR
    return std::filesystem::path(JABWOCK_REPO_DIR);
#else
    return std::filesystem::current_path();
#endif
}

inline std::filesystem::path default_data_dir() { return repo_dir() / "data"; }

}  // namespace jabwock
