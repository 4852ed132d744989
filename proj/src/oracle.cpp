#include "sepcount/oracle.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "sepcount/septest.hpp"

namespace sepcount {

namespace {

struct Digit {
    std::uint64_t low;    // smallest coefficient value
    std::uint64_t radix;  // number of values
};

// Digit i is the coefficient of x^i; digit 0 varies fastest.
std::vector<Digit> digit_layout(const EnumerationQuery& q) {
    const std::uint64_t n = q.modulus.value();
    std::vector<Digit> digits(q.degree + 1, Digit{0, n});
    switch (q.mode) {
        case CountMode::monic:
            digits.back() = {1, 1};
            break;
        case CountMode::exact:
            digits.back() = {1, n - 1};
            break;
        case CountMode::leq:
            break;
    }
    return digits;
}

}  // namespace

BudgetExceeded::BudgetExceeded(Natural required, std::uint64_t budget)
    : DomainError("enumeration needs " + required.str() + " candidates, budget is " + std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

std::uint64_t enumeration_size(const EnumerationQuery& q, std::uint64_t budget) {
    Natural size = family_size(q.modulus, q.degree, q.mode);
    if (size > budget) throw BudgetExceeded(std::move(size), budget);
    return static_cast<std::uint64_t>(size);
}

std::uint64_t enumerate_range(const EnumerationQuery& q, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return 0;
    const std::vector<Digit> layout = digit_layout(q);
    std::vector<std::uint64_t> digit(layout.size());
    std::vector<std::uint64_t> coeffs(layout.size());
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        digit[i] = rest % layout[i].radix;
        rest /= layout[i].radix;
        coeffs[i] = layout[i].low + digit[i];
    }
    std::uint64_t found = 0;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (is_separable(q.modulus, coeffs)) ++found;
        for (std::size_t i = 0; i < layout.size(); ++i) {
            if (++digit[i] < layout[i].radix) {
                ++coeffs[i];
                break;
            }
            digit[i] = 0;
            coeffs[i] = layout[i].low;
        }
    }
    return found;
}

Natural enumerate_count(const EnumerationQuery& q, const EnumerationOptions& opts) {
    const std::uint64_t total = enumeration_size(q, opts.budget);
    unsigned workers = opts.workers != 0 ? opts.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));

    std::vector<std::uint64_t> partial(workers, 0);
    auto bounds = [&](unsigned w) { return total / workers * w + std::min<std::uint64_t>(w, total % workers); };
    if (workers == 1) {
        partial[0] = enumerate_range(q, 0, total);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] { partial[w] = enumerate_range(q, bounds(w), bounds(w + 1)); });
        }
    }
    Natural sum = 0;
    for (std::uint64_t c : partial) sum += c;
    return sum;
}

Natural crt_product_count(const Modulus& m, unsigned d, CountMode mode, const EnumerationOptions& opts) {
    auto product = [&](unsigned degree, CountMode component_mode) {
        Natural out = 1;
        for (std::size_t i = 0; i < m.component_count(); ++i) {
            out *= enumerate_count({m.component(i), degree, component_mode}, opts);
        }
        return out;
    };
    if (mode != CountMode::exact) return product(d, mode);
    if (d == 0) return product(0, CountMode::leq);
    return product(d, CountMode::leq) - product(d - 1, CountMode::leq);
}

std::vector<VerificationReport> verify(const Modulus& m, unsigned d_max, const EnumerationOptions& opts) {
    std::vector<VerificationReport> reports;
    for (unsigned d = 0; d <= d_max; ++d) {
        for (CountMode mode : {CountMode::monic, CountMode::leq, CountMode::exact}) {
            VerificationReport report{{m, d, mode}, std::nullopt, count(m, d, mode).count};
            const auto start = std::chrono::steady_clock::now();
            try {
                report.oracle_count = enumerate_count(report.query, opts);
                report.match = *report.oracle_count == report.formula_count;
            } catch (const BudgetExceeded&) {
                report.match = false;
            }
            report.elapsed = std::chrono::steady_clock::now() - start;
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

bool all_match(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.skipped() || r.match; });
}

}  // namespace sepcount
