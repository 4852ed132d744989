#include "sepcount/septest.hpp"

#include <utility>

namespace sepcount {

namespace {

void require_monic(const PolyZn& f, const char* op) {
    if (!f.is_monic()) throw DomainError(std::string(op) + ": polynomial is not monic");
    if (*f.degree() < 1) throw DomainError(std::string(op) + ": polynomial must have degree >= 1");
}

// h <- x*h mod f, where h has exactly deg(f) slots and f is monic.
void multiply_by_x_mod(std::vector<std::uint64_t>& h, std::span<const std::uint64_t> f, std::uint64_t n) {
    const std::size_t dim = h.size();
    const std::uint64_t top = h[dim - 1];
    for (std::size_t i = dim - 1; i > 0; --i) h[i] = h[i - 1];
    h[0] = 0;
    if (top == 0) return;
    for (std::size_t i = 0; i < dim; ++i) h[i] = sub_mod(h[i], mul_mod(top, f[i], n), n);
}

std::uint64_t trace_of_reduced(std::vector<std::uint64_t> h, std::span<const std::uint64_t> f, std::uint64_t n) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        sum = add_mod(sum, h[i], n);
        if (i + 1 < h.size()) multiply_by_x_mod(h, f, n);
    }
    return sum;
}

void trim(std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// a <- a mod b over F_p; b nonzero and trimmed.
void field_rem(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = *inverse_mod(b.back(), p);
    while (a.size() > db) {
        const std::uint64_t q = mul_mod(a.back(), inv, p);
        const std::size_t off = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[off + j] = sub_mod(a[off + j], mul_mod(q, b[j], p), p);
        trim(a);
    }
}

bool separable_mod_prime(std::span<const std::uint64_t> coeffs, std::uint64_t p, std::vector<std::uint64_t>& a,
                         std::vector<std::uint64_t>& b) {
    a.assign(coeffs.begin(), coeffs.end());
    for (auto& c : a) c %= p;
    trim(a);
    if (a.empty()) return false;
    if (a.size() == 1) return true;
    b.assign(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = mul_mod(i % p, a[i], p);
    trim(b);
    while (!b.empty()) {
        field_rem(a, b, p);
        std::swap(a, b);
    }
    return a.size() == 1;
}

}  // namespace

TraceForm::TraceForm(Modulus modulus, std::size_t dim, std::vector<std::uint64_t> entries)
    : modulus_(std::move(modulus)), dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) throw std::invalid_argument("TraceForm: entry count does not match dim");
}

Residue trace(const PolyZn& g, const PolyZn& f) {
    require_monic(f, "trace");
    if (!(g.modulus() == f.modulus())) throw DomainError("trace: modulus mismatch");
    const std::uint64_t n = f.modulus().value();
    const std::size_t dim = *f.degree();
    PolyZn r = rem_by_monic(g, f);
    std::vector<std::uint64_t> h(dim, 0);
    std::copy(r.coeffs().begin(), r.coeffs().end(), h.begin());
    return Residue(trace_of_reduced(std::move(h), f.coeffs(), n), f.modulus());
}

TraceForm trace_form(const PolyZn& f) {
    require_monic(f, "trace_form");
    const std::uint64_t n = f.modulus().value();
    const std::size_t dim = *f.degree();
    // traces[m] = tr(x^m mod f) for m in [0, 2*dim - 2]
    std::vector<std::uint64_t> traces(2 * dim - 1);
    std::vector<std::uint64_t> power(dim, 0);
    power[0] = 1 % n;
    for (std::size_t m = 0; m < traces.size(); ++m) {
        traces[m] = trace_of_reduced(power, f.coeffs(), n);
        multiply_by_x_mod(power, f.coeffs(), n);
    }
    std::vector<std::uint64_t> entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) entries[i * dim + j] = traces[i + j];
    }
    return TraceForm(f.modulus(), dim, std::move(entries));
}

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
    // Bareiss: every intermediate division is exact.
    const std::size_t dim = a.size();
    if (dim == 0) return 1;
    for (const auto& row : a) {
        if (row.size() != dim) throw std::invalid_argument("integer_determinant: matrix is not square");
    }
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < dim; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < dim && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == dim) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < dim; ++i) {
            for (std::size_t j = k + 1; j < dim; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[dim - 1][dim - 1];
}

Residue discriminant(const PolyZn& f) {
    require_monic(f, "discriminant");
    const TraceForm form = trace_form(f);
    const std::size_t dim = form.dim();
    std::vector<std::vector<Integer>> lifted(dim, std::vector<Integer>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) lifted[i][j] = form.entry(i, j);
    }
    const Integer n = f.modulus().value();
    Integer det = integer_determinant(std::move(lifted)) % n;
    if (det < 0) det += n;
    return Residue(static_cast<std::uint64_t>(det), f.modulus());
}

bool is_separable_monic(const PolyZn& f) {
    require_monic(f, "is_separable_monic");
    return is_unit(discriminant(f));
}

bool is_separable_over_prime_field(const PolyZn& f) {
    if (!f.modulus().is_prime()) {
        throw DomainError("is_separable_over_prime_field: modulus " + std::to_string(f.modulus().value()) +
                          " is not prime");
    }
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    const PolyZn g = gcd_over_prime_field(make_monic_over_prime_field(f), derivative(f));
    return g == PolyZn::constant(f.modulus(), 1);
}

bool is_separable(const PolyZn& f) {
    const Modulus& m = f.modulus();
    for (std::size_t i = 0; i < m.component_count(); ++i) {
        if (!is_separable_over_prime_field(reduce_modulus(f, m.residue_field(i)))) return false;
    }
    return true;
}

bool is_separable(const Modulus& m, std::span<const std::uint64_t> coeffs) {
    thread_local std::vector<std::uint64_t> a;
    thread_local std::vector<std::uint64_t> b;
    for (const auto& factor : m.factors()) {
        if (!separable_mod_prime(coeffs, factor.prime, a, b)) return false;
    }
    return true;
}

}  // namespace sepcount
