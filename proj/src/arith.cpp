#include "sepcount/arith.hpp"

#include <array>
#include <limits>

namespace sepcount {

namespace {

using u128 = unsigned __int128;

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % n);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return a >= b ? a - b : static_cast<std::uint64_t>(static_cast<u128>(a) + n - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t neg_mod(std::uint64_t a, std::uint64_t n) { return a == 0 ? 0 : n - a; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) {
    // Extended Euclid with signed 128-bit cofactors.
    __int128 old_r = a % n, r = n;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        if (n == 1) return 0;
        return std::nullopt;
    }
    __int128 inv = old_s % static_cast<__int128>(n);
    if (inv < 0) inv += n;
    return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : bases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 2) throw DomainError("factorize: n must be at least 2, got " + std::to_string(n));
    std::vector<PrimePower> out;
    bool cofactor_prime = false;
    auto strip = [&](std::uint64_t p) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k != 0) {
            out.push_back({p, k});
            cofactor_prime = is_prime(n);
        }
    };
    cofactor_prime = is_prime(n);
    strip(2);
    strip(3);
    // Candidates 6j +/- 1.
    for (std::uint64_t p = 5; n > 1 && !cofactor_prime && p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

Modulus::Modulus(std::uint64_t n) : Modulus(n, factorize(n)) {}

Modulus::Modulus(std::uint64_t n, std::vector<PrimePower> factors) {
    auto data = std::make_shared<Data>();
    data->n = n;
    data->factors = std::move(factors);
    const auto& fs = data->factors;
    if (fs.size() > 1) {
        for (const auto& f : fs) data->components.push_back(Modulus(f.value(), {f}));
    }
    if (!(fs.size() == 1 && fs[0].exponent == 1)) {
        for (const auto& f : fs) data->fields.push_back(Modulus(f.prime, {{f.prime, 1}}));
    }
    data_ = std::move(data);
}

Modulus Modulus::from_signed(std::int64_t n) {
    std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    if (mag < 2) throw DomainError("modulus must satisfy |n| >= 2, got " + std::to_string(n));
    return Modulus(mag);
}

bool Modulus::is_prime() const {
    return data_->factors.size() == 1 && data_->factors[0].exponent == 1;
}

Modulus Modulus::component(std::size_t i) const {
    if (i >= data_->factors.size()) throw std::out_of_range("Modulus::component");
    if (data_->components.empty()) return *this;
    return data_->components[i];
}

Modulus Modulus::residue_field(std::size_t i) const {
    if (i >= data_->factors.size()) throw std::out_of_range("Modulus::residue_field");
    if (data_->fields.empty()) return *this;
    return data_->fields[i];
}

std::uint64_t Modulus::reduce_signed(std::int64_t v) const {
    const std::uint64_t n = data_->n;
    if (v >= 0) return static_cast<std::uint64_t>(v) % n;
    std::uint64_t mag = (0 - static_cast<std::uint64_t>(v)) % n;
    return neg_mod(mag, n);
}

Residue::Residue(std::uint64_t value, Modulus modulus)
    : value_(modulus.reduce(value)), modulus_(std::move(modulus)) {}

Natural pow(const Natural& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

Natural pow(std::uint64_t base, unsigned exp) { return pow(Natural(base), exp); }

Natural prime_power_totient(std::uint64_t p, unsigned k) {
    if (k == 0) return 1;
    return pow(p, k - 1) * (p - 1);
}

Natural totient(const Modulus& m) {
    Natural out = 1;
    for (const auto& f : m.factors()) out *= prime_power_totient(f.prime, f.exponent);
    return out;
}

Natural totient_of_power(const Modulus& m, unsigned e) {
    if (e == 0) return 1;
    Natural out = 1;
    for (const auto& f : m.factors()) out *= prime_power_totient(f.prime, f.exponent * e);
    return out;
}

bool is_unit(const Residue& a) { return gcd(a.value(), a.modulus().value()) == 1; }

std::vector<Residue> crt_split(const Residue& a) {
    const Modulus& m = a.modulus();
    std::vector<Residue> out;
    out.reserve(m.component_count());
    for (std::size_t i = 0; i < m.component_count(); ++i) {
        Modulus c = m.component(i);
        out.emplace_back(a.value() % c.value(), c);
    }
    return out;
}

Residue crt_combine(std::span<const Residue> parts) {
    if (parts.empty()) throw DomainError("crt_combine: no parts");
    Natural modulus = 1;
    Natural value = 0;
    for (const auto& part : parts) {
        const std::uint64_t mi = part.modulus().value();
        if (boost::multiprecision::gcd(modulus, Natural(mi)) != 1) {
            throw DomainError("crt_combine: moduli are not pairwise coprime");
        }
        // value + modulus * t == part (mod mi)
        const auto mod_mi = static_cast<std::uint64_t>(modulus % mi);
        const auto val_mi = static_cast<std::uint64_t>(value % mi);
        const std::uint64_t t = mul_mod(sub_mod(part.value(), val_mi, mi), *inverse_mod(mod_mi, mi), mi);
        value += modulus * t;
        modulus *= mi;
    }
    if (modulus > std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("crt_combine: combined modulus exceeds 64 bits");
    }
    return Residue(static_cast<std::uint64_t>(value), Modulus(static_cast<std::uint64_t>(modulus)));
}

std::string to_string(const Natural& v) { return v.str(); }

std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

}  // namespace sepcount
