#include "hypvis/enumeration.hpp"

#include <algorithm>
#include <map>

namespace hypvis {

namespace detail {

std::vector<std::uint32_t> smallest_factor_table(i64 n) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (i64 j = i; j <= n; j += i) {
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
    return spf;
}

namespace {

i64 mod_pow(i64 base, i64 exp, i64 mod) {
    i128 result = 1;
    i128 b = base % mod;
    if (b < 0) b += mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<i64>(result);
}

// For prime p = 1 (mod 4): n^((p-1)/4) with n a quadratic non-residue.
i64 sqrt_minus_one_mod_prime(i64 p) {
    for (i64 n = 2;; ++n) {
        if (mod_pow(n, (p - 1) / 2, p) == p - 1) {
            i64 r = mod_pow(n, (p - 1) / 4, p);
            return std::min(r, p - r);
        }
    }
}

// Lift a root r of x^2 = -1 (mod p^k) to mod p^(k+1).
i64 hensel_lift(i64 r, i64 p, i64 pk, i64 pk1) {
    i128 f = (i128(r) * r + 1) / pk % p;
    i64 inv = mod_pow((2 * r) % p, p - 2, p);  // 2r invertible, p odd
    i64 t = static_cast<i64>((p - f * inv % p) % p);
    return static_cast<i64>((i128(r) + i128(t) * pk) % pk1);
}

}  // namespace

std::vector<i64> sqrt_minus_one_roots(i64 d, const std::vector<std::uint32_t>& spf) {
    if (d == 1) return {0};
    if (d % 4 == 0) return {};
    // roots modulo each prime power, combined by the Chinese remainder theorem
    std::vector<std::pair<i64, std::vector<i64>>> parts;  // (p^k, roots)
    i64 m = d;
    while (m > 1) {
        i64 p = spf[m];
        i64 pk = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        if (p == 2) {
            parts.push_back({2, {1}});
            continue;
        }
        if (p % 4 == 3) return {};
        i64 r = sqrt_minus_one_mod_prime(p);
        i64 q = p;
        while (q < pk) {
            r = hensel_lift(r, p, q, q * p);
            q *= p;
        }
        parts.push_back({pk, {r, pk - r}});
    }
    std::vector<i64> roots = {0};
    i64 mod = 1;
    for (const auto& [pk, rs] : parts) {
        std::vector<i64> next;
        next.reserve(roots.size() * rs.size());
        // x = r0 (mod) and x = r1 (pk): x = r0 + mod * t, t = (r1 - r0) / mod (pk)
        i64 inv = 1;
        {
            // modular inverse of mod modulo pk via extended Euclid
            i64 a = mod % pk, b = pk, x0 = 1, x1 = 0;
            while (b != 0) {
                i64 q2 = a / b;
                i64 t = a - q2 * b;
                a = b;
                b = t;
                t = x0 - q2 * x1;
                x0 = x1;
                x1 = t;
            }
            inv = ((x0 % pk) + pk) % pk;
        }
        for (i64 r0 : roots) {
            for (i64 r1 : rs) {
                i64 diff = ((r1 - r0) % pk + pk) % pk;
                i64 t = static_cast<i64>(i128(diff) * inv % pk);
                next.push_back(r0 + mod * t);
            }
        }
        roots = std::move(next);
        mod *= pk;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

namespace {

void emit_candidates_for_modulus(i64 d, i64 n, const std::vector<i64>& roots,
                                 std::vector<OrbitPoint>& out) {
    // usable B satisfy B^2 <= d*(n-d) - 1, i.e. A + d <= n
    i128 m = i128(d) * (n - d) - 1;
    if (m < 0) return;
    i64 bmax = isqrt64(static_cast<i64>(std::min<i128>(m, INT64_MAX)));
    for (i64 r : roots) {
        for (i64 b = r; b <= bmax; b += d) out.emplace_back(b, d);
        for (i64 b = r - d; b >= -bmax; b -= d) out.emplace_back(b, d);
    }
}

std::vector<OrbitPoint> enumerate_scan(i64 n, bool include_origin) {
    std::vector<OrbitPoint> pts;
    for (i64 d = 1; d <= n - 1; ++d) {
        i128 m = i128(d) * (n - d) - 1;
        if (m < 0) continue;
        i64 bmax = isqrt64(static_cast<i64>(std::min<i128>(m, INT64_MAX)));
        for (i64 b = -bmax; b <= bmax; ++b) {
            if ((i128(b) * b + 1) % d == 0) pts.emplace_back(b, d);
        }
    }
    if (!include_origin) std::erase_if(pts, [](const OrbitPoint& p) { return p.is_origin(); });
    std::sort(pts.begin(), pts.end(), orbit_order);
    return pts;
}

std::vector<OrbitPoint> enumerate_sieve(i64 n, bool include_origin) {
    std::vector<OrbitPoint> pts;
    auto spf = detail::smallest_factor_table(std::max<i64>(n, 2));
    for (i64 d = 1; d <= n - 1; ++d) {
        auto roots = detail::sqrt_minus_one_roots(d, spf);
        if (!roots.empty()) emit_candidates_for_modulus(d, n, roots, pts);
    }
    if (!include_origin) std::erase_if(pts, [](const OrbitPoint& p) { return p.is_origin(); });
    std::sort(pts.begin(), pts.end(), orbit_order);
    return pts;
}

}  // namespace

std::vector<OrbitPoint> enumerate_points(const EnumerationConfig& cfg) {
    if (cfg.max_trace > kMaxEnumerationTrace)
        throw std::invalid_argument("enumerate_points: trace bound above 2^31");
    i64 n = cfg.max_trace;
    if (n < 2) return {};
    switch (cfg.method) {
        case EnumerationMethod::kScan: return enumerate_scan(n, cfg.include_origin);
        case EnumerationMethod::kSieve: return enumerate_sieve(n, cfg.include_origin);
        case EnumerationMethod::kAuto:
            return n >= 512 ? enumerate_sieve(n, cfg.include_origin)
                            : enumerate_scan(n, cfg.include_origin);
    }
    throw std::logic_error("enumerate_points: unknown method");
}

i64 count_points(i64 max_trace) {
    return static_cast<i64>(enumerate_points({.max_trace = max_trace, .include_origin = false}).size());
}

}  // namespace hypvis
