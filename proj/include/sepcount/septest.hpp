#pragma once

// Separability decision procedures for polynomials over Z/n.
//
// Monic polynomials can be decided through the trace form: the N x N matrix of
// traces tr(x^{i+j}) on the free basis 1, x, ..., x^{N-1} of Z/n[x]/(f); f is
// separable exactly when its determinant is a unit. Arbitrary polynomials are
// decided componentwise: f is separable over Z/n iff its image over Z/p is
// separable for every prime p dividing n, and over a field that means
// gcd(f, f') = 1 (nonzero constants count as separable, zero does not).

#include <cstdint>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/poly.hpp"

namespace sepcount {

using Integer = boost::multiprecision::cpp_int;

class TraceForm {
   public:
    TraceForm(Modulus modulus, std::size_t dim, std::vector<std::uint64_t> entries);

    const Modulus& modulus() const { return modulus_; }
    std::size_t dim() const { return dim_; }
    std::uint64_t entry(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Residue residue(std::size_t i, std::size_t j) const { return Residue(entry(i, j), modulus_); }

    bool operator==(const TraceForm&) const = default;

   private:
    Modulus modulus_;
    std::size_t dim_;
    std::vector<std::uint64_t> entries_;  // row-major
};

/// Trace of multiplication by g on Z/n[x]/(f). f monic of degree >= 1, deg g < deg f.
Residue trace(const PolyZn& g, const PolyZn& f);

TraceForm trace_form(const PolyZn& f);

/// Exact determinant of a square integer matrix (fraction-free elimination).
Integer integer_determinant(std::vector<std::vector<Integer>> rows);

/// Determinant of the trace form, lifted to integers and reduced mod n.
Residue discriminant(const PolyZn& f);

bool is_separable_monic(const PolyZn& f);

bool is_separable_over_prime_field(const PolyZn& f);

bool is_separable(const PolyZn& f);

/// Raw-coefficient variant for hot loops: coeffs in [0, n), lowest degree
/// first, trailing zeros allowed. Agrees with is_separable.
bool is_separable(const Modulus& m, std::span<const std::uint64_t> coeffs);

}  // namespace sepcount
