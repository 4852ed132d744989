#pragma once

// The polynomial ring Z/n[x] in dense canonical form.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sepcount/arith.hpp"

namespace sepcount {

/// Degree of a polynomial; the zero polynomial has none.
using Degree = std::optional<std::size_t>;

/// A polynomial over Z/n. Coefficients are stored lowest degree first, each in
/// [0, n), with no trailing zeros; the zero polynomial has no coefficients.
class PolyZn {
   public:
    explicit PolyZn(Modulus modulus);
    /// Reduces every coefficient mod n and strips trailing zeros.
    PolyZn(Modulus modulus, std::vector<std::uint64_t> coeffs);
    PolyZn(Modulus modulus, std::span<const std::int64_t> coeffs);

    static PolyZn constant(Modulus modulus, std::uint64_t c);
    /// x^e
    static PolyZn monomial(Modulus modulus, std::size_t e, std::uint64_t c = 1);

    const Modulus& modulus() const { return modulus_; }
    std::span<const std::uint64_t> coeffs() const { return coeffs_; }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Degree degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1 % modulus_.value(); }
    /// Zero for the zero polynomial.
    std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    bool operator==(const PolyZn& other) const {
        return modulus_ == other.modulus_ && coeffs_ == other.coeffs_;
    }

   private:
    void canonicalize();

    Modulus modulus_;
    std::vector<std::uint64_t> coeffs_;
};

PolyZn add(const PolyZn& f, const PolyZn& g);
PolyZn sub(const PolyZn& f, const PolyZn& g);
PolyZn mul(const PolyZn& f, const PolyZn& g);
PolyZn negate(const PolyZn& f);
PolyZn scale(const PolyZn& f, std::uint64_t c);

inline PolyZn operator+(const PolyZn& f, const PolyZn& g) { return add(f, g); }
inline PolyZn operator-(const PolyZn& f, const PolyZn& g) { return sub(f, g); }
inline PolyZn operator*(const PolyZn& f, const PolyZn& g) { return mul(f, g); }

PolyZn derivative(const PolyZn& f);

/// f(x + a).
PolyZn shift(const PolyZn& f, std::uint64_t a);

/// Image of f in Z/m[x]; m must divide n.
PolyZn reduce_modulus(const PolyZn& f, const Modulus& m);
PolyZn reduce_modulus(const PolyZn& f, std::uint64_t m);

/// Remainder of f on division by a monic g.
PolyZn rem_by_monic(const PolyZn& f, const PolyZn& g);

// Field-only operations; the modulus must be prime.
PolyZn make_monic_over_prime_field(const PolyZn& f);
PolyZn gcd_over_prime_field(const PolyZn& f, const PolyZn& g);

/// Raised by parse() with the byte offset of the offending character.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

/// Accepts "3x^2+x+5" style text or an ascending coefficient list "5,1,3".
PolyZn parse(std::string_view text, const Modulus& m);

/// Canonical display form, descending powers; parse(format(f)) == f.
std::string format(const PolyZn& f);

}  // namespace sepcount
