#include "sepcount/census.hpp"

#include <stdexcept>
#include <string>

namespace sepcount {

std::string_view to_string(CountMode mode) {
    switch (mode) {
        case CountMode::monic:
            return "monic";
        case CountMode::leq:
            return "leq";
        case CountMode::exact:
            return "exact";
    }
    return "?";
}

CountMode parse_count_mode(std::string_view text) {
    if (text == "monic") return CountMode::monic;
    if (text == "leq") return CountMode::leq;
    if (text == "exact") return CountMode::exact;
    throw std::invalid_argument("unknown count mode '" + std::string(text) + "'");
}

CountResult CountResult::of(Natural count, Natural total) {
    Rational proportion(count, total);
    return {std::move(count), std::move(total), std::move(proportion)};
}

Natural family_size(const Modulus& m, unsigned d, CountMode mode) {
    const std::uint64_t n = m.value();
    switch (mode) {
        case CountMode::monic:
            return pow(n, d);
        case CountMode::leq:
            return pow(n, d + 1);
        case CountMode::exact:
            return pow(n, d) * (n - 1);
    }
    return 0;
}

Natural count_monic_separable_prime(std::uint64_t p, unsigned d) {
    return count_monic_separable_primepower(p, 1, d);
}

Natural count_monic_separable_primepower(std::uint64_t p, unsigned k, unsigned d) {
    if (d == 0) return 1;
    if (d == 1) return pow(p, k);
    return prime_power_totient(p, k * d);
}

Natural count_monic_separable(const Modulus& m, unsigned d) {
    Natural out = 1;
    for (const auto& f : m.factors()) out *= count_monic_separable_primepower(f.prime, f.exponent, d);
    return out;
}

Rational proportion_monic_separable(const Modulus& m, unsigned d) {
    if (d < 2) throw DomainError("proportion_monic_separable: degree must be at least 2");
    Rational out = 1;
    for (const auto& f : m.factors()) out *= Rational(Natural(f.prime - 1), Natural(f.prime));
    return out;
}

Natural count_separable_leq_primepower(std::uint64_t p, unsigned k, unsigned d) {
    const Natural unit_count = prime_power_totient(p, k);
    if (d == 0) return unit_count;
    return unit_count * pow(p, (k - 1) * d) * (pow(p, d) + 1);
}

CountResult count_separable_leq(const Modulus& m, unsigned d) {
    Natural count = 1;
    for (const auto& f : m.factors()) count *= count_separable_leq_primepower(f.prime, f.exponent, d);
    return CountResult::of(std::move(count), family_size(m, d, CountMode::leq));
}

Natural count_separable_exact(const Modulus& m, unsigned d) {
    if (d == 0) return totient(m);
    return count_separable_leq(m, d).count - count_separable_leq(m, d - 1).count;
}

Natural count_leq_recurrence(std::uint64_t p, unsigned k, unsigned d) {
    if (d < 1) throw DomainError("count_leq_recurrence: degree must be at least 1");
    const Natural unit_count = prime_power_totient(p, k);
    const Natural lambda = pow(p, k - 1);
    Natural a = unit_count * (pow(p, k) + lambda);
    for (unsigned e = 2; e <= d; ++e) a = prime_power_totient(p, k * e) * unit_count + lambda * a;
    return a;
}

Natural geometric_sum(std::uint64_t p, unsigned k, unsigned d) {
    if (d < 2) throw DomainError("geometric_sum: degree must be at least 2");
    return pow(p, (k - 1) * d + 1) * (pow(p, d - 1) - 1);
}

CountResult count(const Modulus& m, unsigned d, CountMode mode) {
    switch (mode) {
        case CountMode::monic:
            return CountResult::of(count_monic_separable(m, d), family_size(m, d, mode));
        case CountMode::leq:
            return count_separable_leq(m, d);
        case CountMode::exact:
            return CountResult::of(count_separable_exact(m, d), family_size(m, d, mode));
    }
    throw std::logic_error("count: bad mode");
}

std::string to_decimal(const Rational& r, unsigned digits) {
    Natural num = boost::multiprecision::numerator(r);
    const Natural den = boost::multiprecision::denominator(r);
    const bool negative = num < 0;
    if (negative) num = -num;
    const Natural scale = pow(Natural(10), digits);
    Natural scaled = (num * scale * 2 + den) / (den * 2);
    const Natural whole = scaled / scale;
    std::string frac = Natural(scaled % scale).str();
    std::string out = (negative ? "-" : "") + whole.str();
    if (digits > 0) out += "." + std::string(digits - frac.size(), '0') + frac;
    return out;
}

}  // namespace sepcount
