#include "sepcount/poly.hpp"

#include <algorithm>
#include <cctype>

namespace sepcount {

namespace {

void require_same_modulus(const PolyZn& f, const PolyZn& g, const char* op) {
    if (!(f.modulus() == g.modulus())) {
        throw DomainError(std::string(op) + ": modulus mismatch (" + std::to_string(f.modulus().value()) +
                          " vs " + std::to_string(g.modulus().value()) + ")");
    }
}

void require_prime(const Modulus& m, const char* op) {
    if (!m.is_prime()) {
        throw DomainError(std::string(op) + ": modulus " + std::to_string(m.value()) + " is not prime");
    }
}

// Exponents beyond this are rejected to keep dense storage bounded.
constexpr std::uint64_t kMaxExponent = 1U << 20U;

class Parser {
   public:
    Parser(std::string_view text, const Modulus& m) : text_(text), m_(m) {}

    PolyZn parse_terms() {
        std::vector<std::uint64_t> coeffs;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        parse_term(coeffs, negative);
        for (skip_ws(); pos_ < text_.size(); skip_ws()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            parse_term(coeffs, c == '-');
        }
        return PolyZn(m_, std::move(coeffs));
    }

    PolyZn parse_list() {
        std::vector<std::uint64_t> coeffs;
        while (true) {
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
                skip_ws();
            }
            if (!is_digit(peek())) fail("expected a coefficient");
            std::uint64_t v = parse_nat_mod();
            coeffs.push_back(negative ? neg_mod(v, m_.value()) : v);
            skip_ws();
            if (pos_ == text_.size()) break;
            if (text_[pos_] != ',') fail("expected ','");
            ++pos_;
        }
        return PolyZn(m_, std::move(coeffs));
    }

   private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    std::uint64_t parse_nat_mod() {
        const std::uint64_t n = m_.value();
        std::uint64_t v = 0;
        while (is_digit(peek())) {
            v = add_mod(mul_mod(v, 10, n), static_cast<std::uint64_t>(text_[pos_] - '0') % n, n);
            ++pos_;
        }
        return v;
    }

    std::uint64_t parse_exponent() {
        if (peek() == '-') fail("negative exponent");
        if (!is_digit(peek())) fail("expected an exponent");
        std::uint64_t e = 0;
        while (is_digit(peek())) {
            e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (e > kMaxExponent) fail("exponent too large");
            ++pos_;
        }
        return e;
    }

    void parse_term(std::vector<std::uint64_t>& coeffs, bool negative) {
        skip_ws();
        const std::uint64_t n = m_.value();
        std::uint64_t c = 1;
        bool have_coeff = false;
        if (is_digit(peek())) {
            c = parse_nat_mod();
            have_coeff = true;
            skip_ws();
        }
        std::uint64_t e = 0;
        if (peek() == 'x') {
            ++pos_;
            e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_exponent();
            }
        } else if (!have_coeff) {
            fail("expected a coefficient or 'x'");
        }
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] = negative ? sub_mod(coeffs[e], c % n, n) : add_mod(coeffs[e], c % n, n);
    }

    std::string_view text_;
    const Modulus& m_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyZn::PolyZn(Modulus modulus) : modulus_(std::move(modulus)) {}

PolyZn::PolyZn(Modulus modulus, std::vector<std::uint64_t> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    const std::uint64_t n = modulus_.value();
    for (auto& c : coeffs_) c %= n;
    canonicalize();
}

PolyZn::PolyZn(Modulus modulus, std::span<const std::int64_t> coeffs) : modulus_(std::move(modulus)) {
    coeffs_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) coeffs_.push_back(modulus_.reduce_signed(c));
    canonicalize();
}

PolyZn PolyZn::constant(Modulus modulus, std::uint64_t c) { return PolyZn(std::move(modulus), {c}); }

PolyZn PolyZn::monomial(Modulus modulus, std::size_t e, std::uint64_t c) {
    std::vector<std::uint64_t> coeffs(e + 1, 0);
    coeffs[e] = c;
    return PolyZn(std::move(modulus), std::move(coeffs));
}

void PolyZn::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree PolyZn::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

PolyZn add(const PolyZn& f, const PolyZn& g) {
    require_same_modulus(f, g, "add");
    const std::uint64_t n = f.modulus().value();
    std::vector<std::uint64_t> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(f.coeff(i), g.coeff(i), n);
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn sub(const PolyZn& f, const PolyZn& g) {
    require_same_modulus(f, g, "sub");
    const std::uint64_t n = f.modulus().value();
    std::vector<std::uint64_t> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(f.coeff(i), g.coeff(i), n);
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn mul(const PolyZn& f, const PolyZn& g) {
    require_same_modulus(f, g, "mul");
    if (f.is_zero() || g.is_zero()) return PolyZn(f.modulus());
    const std::uint64_t n = f.modulus().value();
    auto fc = f.coeffs();
    auto gc = g.coeffs();
    std::vector<std::uint64_t> out(fc.size() + gc.size() - 1, 0);
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i] == 0) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            out[i + j] = add_mod(out[i + j], mul_mod(fc[i], gc[j], n), n);
        }
    }
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn negate(const PolyZn& f) {
    const std::uint64_t n = f.modulus().value();
    std::vector<std::uint64_t> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : out) c = neg_mod(c, n);
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn scale(const PolyZn& f, std::uint64_t c) {
    const std::uint64_t n = f.modulus().value();
    c %= n;
    std::vector<std::uint64_t> out(f.coeffs().begin(), f.coeffs().end());
    for (auto& a : out) a = mul_mod(a, c, n);
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn derivative(const PolyZn& f) {
    const std::uint64_t n = f.modulus().value();
    auto fc = f.coeffs();
    if (fc.size() <= 1) return PolyZn(f.modulus());
    std::vector<std::uint64_t> out(fc.size() - 1);
    for (std::size_t i = 1; i < fc.size(); ++i) out[i - 1] = mul_mod(static_cast<std::uint64_t>(i) % n, fc[i], n);
    return PolyZn(f.modulus(), std::move(out));
}

PolyZn shift(const PolyZn& f, std::uint64_t a) {
    const Modulus& m = f.modulus();
    const PolyZn x_plus_a(m, std::vector<std::uint64_t>{a, 1});
    PolyZn result(m);
    auto fc = f.coeffs();
    for (std::size_t i = fc.size(); i-- > 0;) result = add(mul(result, x_plus_a), PolyZn::constant(m, fc[i]));
    return result;
}

PolyZn reduce_modulus(const PolyZn& f, const Modulus& m) {
    if (f.modulus().value() % m.value() != 0) {
        throw DomainError("reduce_modulus: " + std::to_string(m.value()) + " does not divide " +
                          std::to_string(f.modulus().value()));
    }
    return PolyZn(m, std::vector<std::uint64_t>(f.coeffs().begin(), f.coeffs().end()));
}

PolyZn reduce_modulus(const PolyZn& f, std::uint64_t m) {
    if (m < 2 || f.modulus().value() % m != 0) {
        throw DomainError("reduce_modulus: " + std::to_string(m) + " does not divide " +
                          std::to_string(f.modulus().value()));
    }
    return reduce_modulus(f, Modulus(m));
}

PolyZn rem_by_monic(const PolyZn& f, const PolyZn& g) {
    require_same_modulus(f, g, "rem_by_monic");
    if (!g.is_monic()) throw DomainError("rem_by_monic: divisor is not monic");
    const std::uint64_t n = f.modulus().value();
    const std::size_t dg = *g.degree();
    auto gc = g.coeffs();
    std::vector<std::uint64_t> r(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t top = r.size(); top-- > dg;) {
        const std::uint64_t q = r[top];
        if (q == 0) continue;
        const std::size_t off = top - dg;
        for (std::size_t j = 0; j <= dg; ++j) r[off + j] = sub_mod(r[off + j], mul_mod(q, gc[j], n), n);
    }
    if (r.size() > dg) r.resize(dg);
    return PolyZn(f.modulus(), std::move(r));
}

PolyZn make_monic_over_prime_field(const PolyZn& f) {
    require_prime(f.modulus(), "make_monic_over_prime_field");
    if (f.is_zero()) throw DomainError("make_monic_over_prime_field: zero polynomial");
    return scale(f, *inverse_mod(f.leading(), f.modulus().value()));
}

PolyZn gcd_over_prime_field(const PolyZn& f, const PolyZn& g) {
    require_same_modulus(f, g, "gcd_over_prime_field");
    require_prime(f.modulus(), "gcd_over_prime_field");
    PolyZn a = f;
    PolyZn b = g;
    while (!b.is_zero()) {
        PolyZn r = rem_by_monic(a, make_monic_over_prime_field(b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : make_monic_over_prime_field(a);
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what), position_(position) {}

PolyZn parse(std::string_view text, const Modulus& m) {
    Parser parser(text, m);
    if (text.find(',') != std::string_view::npos) return parser.parse_list();
    return parser.parse_terms();
}

std::string format(const PolyZn& f) {
    if (f.is_zero()) return "0";
    std::string out;
    auto fc = f.coeffs();
    for (std::size_t i = fc.size(); i-- > 0;) {
        if (fc[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0 || fc[i] != 1) out += std::to_string(fc[i]);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

}  // namespace sepcount
