#ifndef APEXION_COMMON_HPP
#define APEXION_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apexion {

// Thrown when an exhaustive routine would exceed its configured budget.
// Over-budget paths must fail loudly instead of returning an approximation.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Smallest odd integer >= x.
inline int odd_up(int x) { return (x % 2 == 0) ? x + 1 : x; }

// FNV-1a, used for fingerprints and run digests.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 1469598103934665603ULL) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    a ^= b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return a;
}

inline std::uint64_t hash_u64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_ints(const std::vector<int>& xs,
                               std::uint64_t seed = 0) {
    std::uint64_t h = hash_u64(seed ^ 0x51ed270b3ca4a5cbULL);
    for (int x : xs) h = hash_combine(h, hash_u64(static_cast<std::uint64_t>(x) + 0x1234567));
    return h;
}

}  // namespace apexion

#endif
