#pragma once

// Closed-form counts of separable polynomials over Z/n.
//
// Conventions for small degrees, shared with the enumeration oracle:
//   * monic degree 0 is the constant 1 (separable), monic degree 1 is x - a
//     (always separable), so those counts are 1 and n;
//   * "degree <= d" ranges over all n^{d+1} coefficient tuples, zero included;
//   * "degree exactly d" means the x^d coefficient is nonzero in Z/n.

#include <cstdint>
#include <string_view>

#include "sepcount/arith.hpp"

namespace sepcount {

enum class CountMode { monic, leq, exact };

std::string_view to_string(CountMode mode);
/// Accepts "monic", "leq", "exact"; throws std::invalid_argument otherwise.
CountMode parse_count_mode(std::string_view text);

struct CountResult {
    Natural count;
    Natural total;
    Rational proportion;

    static CountResult of(Natural count, Natural total);
};

/// Size of the polynomial family a mode counts over: n^d, n^{d+1} or (n-1)n^d.
Natural family_size(const Modulus& m, unsigned d, CountMode mode);

Natural count_monic_separable_prime(std::uint64_t p, unsigned d);
Natural count_monic_separable_primepower(std::uint64_t p, unsigned k, unsigned d);
Natural count_monic_separable(const Modulus& m, unsigned d);

/// prod (1 - 1/p) over the primes dividing n; requires d >= 2.
Rational proportion_monic_separable(const Modulus& m, unsigned d);

Natural count_separable_leq_primepower(std::uint64_t p, unsigned k, unsigned d);
CountResult count_separable_leq(const Modulus& m, unsigned d);
Natural count_separable_exact(const Modulus& m, unsigned d);

/// a_d = phi(p^{kd}) phi(p^k) + p^{k-1} a_{d-1}, seeded with
/// a_1 = phi(p^k)(p^k + p^{k-1}); requires d >= 1.
Natural count_leq_recurrence(std::uint64_t p, unsigned k, unsigned d);

/// phi(b^d) + l phi(b^{d-1}) + ... + l^{d-2} phi(b^2) with b = p^k, l = p^{k-1},
/// in closed form p^{(k-1)d+1}(p^{d-1} - 1); requires d >= 2.
Natural geometric_sum(std::uint64_t p, unsigned k, unsigned d);

/// Dispatches on mode; total is family_size().
CountResult count(const Modulus& m, unsigned d, CountMode mode);

/// Decimal rendering of a rational rounded half-up to `digits` fractional digits.
std::string to_decimal(const Rational& r, unsigned digits);

}  // namespace sepcount
