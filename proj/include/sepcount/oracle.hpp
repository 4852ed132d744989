#pragma once

// Brute-force enumeration of polynomial families over Z/n, counting the
// separable members. This is the ground truth the census formulas are
// checked against.
//
// The family is walked as a mixed-radix counter over the coefficient tuple and
// split into contiguous index ranges, one per worker. Each worker counts its
// range independently; partial counts are summed in range order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepcount/arith.hpp"
#include "sepcount/census.hpp"

namespace sepcount {

struct EnumerationQuery {
    Modulus modulus;
    unsigned degree = 0;
    CountMode mode = CountMode::leq;
};

struct EnumerationOptions {
    static constexpr std::uint64_t kDefaultBudget = 100'000'000;

    /// Maximum number of candidate polynomials one enumeration may test.
    std::uint64_t budget = kDefaultBudget;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

class BudgetExceeded : public DomainError {
   public:
    BudgetExceeded(Natural required, std::uint64_t budget);
    const Natural& required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

   private:
    Natural required_;
    std::uint64_t budget_;
};

/// Number of candidates the query walks; throws BudgetExceeded past the budget.
std::uint64_t enumeration_size(const EnumerationQuery& q, std::uint64_t budget);

/// Separable count over candidate indices [begin, end) of the query's family.
std::uint64_t enumerate_range(const EnumerationQuery& q, std::uint64_t begin, std::uint64_t end);

Natural enumerate_count(const EnumerationQuery& q, const EnumerationOptions& opts = {});

/// Enumerates each prime-power component of Z/n separately and combines the
/// component counts. Exact-degree counts are not multiplicative, so that mode
/// is derived from two "degree <= d" products.
Natural crt_product_count(const Modulus& m, unsigned d, CountMode mode, const EnumerationOptions& opts = {});

struct VerificationReport {
    EnumerationQuery query;
    std::optional<Natural> oracle_count;  // empty when skipped for budget
    Natural formula_count;
    bool match = false;
    std::chrono::nanoseconds elapsed{0};

    bool skipped() const { return !oracle_count.has_value(); }
};

/// One report per (d, mode) for d in [0, d_max].
std::vector<VerificationReport> verify(const Modulus& m, unsigned d_max, const EnumerationOptions& opts = {});

/// True when no report that ran disagrees with its formula.
bool all_match(const std::vector<VerificationReport>& reports);

}  // namespace sepcount
