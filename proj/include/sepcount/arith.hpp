#pragma once

// Modular integer arithmetic over Z/n: factorization, totients, units and the
// Chinese remainder split/combine.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepcount {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for inputs outside an operation's mathematical domain
/// (n < 2, non-monic where monic is required, mismatched moduli, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    std::uint64_t value() const;
    bool operator==(const PrimePower&) const = default;
};

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division; primes come out strictly increasing.
std::vector<PrimePower> factorize(std::uint64_t n);

// Scalar helpers on canonical representatives in [0, n).
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t neg_mod(std::uint64_t a, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// The ring Z/n together with its prime-power factorization. A cheap handle:
/// copies share one immutable factorization.
class Modulus {
   public:
    explicit Modulus(std::uint64_t n);

    /// Accepts any n with |n| >= 2.
    static Modulus from_signed(std::int64_t n);

    std::uint64_t value() const { return data_->n; }
    std::span<const PrimePower> factors() const { return data_->factors; }
    std::size_t component_count() const { return data_->factors.size(); }

    bool is_prime() const;
    bool is_prime_power() const { return data_->factors.size() == 1; }

    /// Z/p_i^{k_i} for the i-th factor.
    Modulus component(std::size_t i) const;
    /// Z/p_i for the i-th factor.
    Modulus residue_field(std::size_t i) const;

    /// Reduces an arbitrary unsigned value into [0, n).
    std::uint64_t reduce(std::uint64_t v) const { return v % data_->n; }
    std::uint64_t reduce_signed(std::int64_t v) const;

    bool operator==(const Modulus& other) const { return value() == other.value(); }

   private:
    struct Data {
        std::uint64_t n = 0;
        std::vector<PrimePower> factors;
        std::vector<Modulus> components;  // empty when n is a prime power
        std::vector<Modulus> fields;      // empty when n is prime
    };

    Modulus(std::uint64_t n, std::vector<PrimePower> factors);

    std::shared_ptr<const Data> data_;
};

/// An element of Z/n, stored as its canonical representative.
class Residue {
   public:
    Residue(std::uint64_t value, Modulus modulus);

    std::uint64_t value() const { return value_; }
    const Modulus& modulus() const { return modulus_; }

    bool operator==(const Residue& other) const {
        return value_ == other.value_ && modulus_ == other.modulus_;
    }

   private:
    std::uint64_t value_;
    Modulus modulus_;
};

Natural prime_power_totient(std::uint64_t p, unsigned k);

Natural totient(const Modulus& m);

/// phi(n^e), from the factorization of n.
Natural totient_of_power(const Modulus& m, unsigned e);

bool is_unit(const Residue& a);

std::vector<Residue> crt_split(const Residue& a);

/// Throws DomainError unless the part moduli are pairwise coprime.
Residue crt_combine(std::span<const Residue> parts);

Natural pow(const Natural& base, unsigned exp);
Natural pow(std::uint64_t base, unsigned exp);

std::string to_string(const Natural& v);
std::string to_string(const Rational& r);

}  // namespace sepcount
