#pragma once

// Test-only helpers: naive polynomial walkers and brute-force number theory,
// kept independent of the oracle module's enumeration.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "sepcount/poly.hpp"

namespace sepcount::testutil {

/// Calls fn for every coefficient tuple of length len over [0, n).
inline void for_each_tuple(std::uint64_t n, std::size_t len,
                           const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> c(len, 0);
    while (true) {
        fn(c);
        std::size_t i = 0;
        while (i < len && ++c[i] == n) c[i++] = 0;
        if (i == len) return;
    }
}

/// Every polynomial of degree <= max_deg (zero included).
inline void for_each_poly(const Modulus& m, std::size_t max_deg, const std::function<void(const PolyZn&)>& fn) {
    for_each_tuple(m.value(), max_deg + 1, [&](const auto& c) { fn(PolyZn(m, c)); });
}

/// Every monic polynomial of degree exactly deg.
inline void for_each_monic(const Modulus& m, std::size_t deg, const std::function<void(const PolyZn&)>& fn) {
    for_each_tuple(m.value(), deg, [&](const auto& c) {
        auto full = c;
        full.push_back(1);
        fn(PolyZn(m, full));
    });
}

inline std::uint64_t brute_totient(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1 ? 1 : 0;
    return count;
}

/// Over F_p: f is squarefree iff no monic g of degree >= 1 has g^2 | f.
inline bool brute_squarefree_over_prime(const PolyZn& f) {
    const std::size_t deg = *f.degree();
    bool squarefree = true;
    for (std::size_t dg = 1; 2 * dg <= deg && squarefree; ++dg) {
        for_each_monic(f.modulus(), dg, [&](const PolyZn& g) {
            if (squarefree && rem_by_monic(f, mul(g, g)).is_zero()) squarefree = false;
        });
    }
    return squarefree;
}

}  // namespace sepcount::testutil
