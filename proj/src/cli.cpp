#include "sepcount/cli.hpp"

#include <charconv>
#include <chrono>
#include <limits>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "sepcount/census.hpp"
#include "sepcount/oracle.hpp"
#include "sepcount/poly.hpp"
#include "sepcount/septest.hpp"

namespace sepcount::cli {

using nlohmann::ordered_json;

nlohmann::ordered_json OutputRecord::to_json() const {
    ordered_json j;
    j["command"] = command;
    ordered_json in = ordered_json::object();
    for (const auto& [key, value] : inputs) in[key] = value;
    j["inputs"] = std::move(in);
    j["result"] = result;
    j["provenance"] = provenance;
    return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::ordered_json& j) {
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items()) r.inputs.emplace_back(key, value.get<std::string>());
    r.result = j.at("result");
    r.provenance = j.at("provenance").get<std::string>();
    return r;
}

OutputRecord OutputRecord::parse_line(std::string_view line) {
    return from_json(ordered_json::parse(line.begin(), line.end()));
}

std::uint64_t parse_modulus_text(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    std::uint64_t mag = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mag);
    if (ec == std::errc::result_out_of_range) {
        throw DomainError("modulus " + std::string(text) + " exceeds the supported 64-bit range");
    }
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw std::invalid_argument("modulus '" + std::string(text) + "' is not an integer");
    }
    if (mag < 2) throw DomainError("modulus must satisfy |n| >= 2, got " + std::string(text));
    return mag;
}

namespace {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const OutputRecord& record) { out << record.to_line() << '\n'; }

ordered_json count_value(const CountResult& c, std::optional<unsigned> decimal) {
    ordered_json v;
    v["type"] = "count";
    v["value"] = to_string(c.count);
    v["total"] = to_string(c.total);
    v["proportion"] = to_string(c.proportion);
    if (decimal) {
        v["decimal"] = to_decimal(c.proportion, *decimal);
        v["approximate"] = true;
    }
    return v;
}

ordered_json rational_value(const Rational& r, std::optional<unsigned> decimal) {
    ordered_json v;
    v["type"] = "rational";
    v["value"] = to_string(r);
    if (decimal) {
        v["decimal"] = to_decimal(r, *decimal);
        v["approximate"] = true;
    }
    return v;
}

struct Options {
    std::string modulus;
    std::string polynomial;
    unsigned degree = 2;
    unsigned d_min = 0;
    unsigned d_max = 2;
    std::string n_min = "2";
    std::string n_max;
    std::string mode = "leq";
    std::vector<std::string> modes;
    std::string format = "csv";
    std::uint64_t budget = EnumerationOptions::kDefaultBudget;
    unsigned workers = 0;
    bool crt = false;
    std::optional<unsigned> decimal;
};

Modulus modulus_of(const Options& o) { return Modulus(parse_modulus_text(o.modulus)); }

PolyZn polynomial_of(const Options& o, const Modulus& m) {
    try {
        return parse(o.polynomial, m);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    }
}

CountMode mode_of(const std::string& text) {
    try {
        return parse_count_mode(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_factor(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    ordered_json factors = ordered_json::array();
    for (const auto& f : m.factors()) {
        factors.push_back({{"prime", std::to_string(f.prime)}, {"exponent", std::to_string(f.exponent)}});
    }
    ordered_json result;
    result["type"] = "factors";
    result["value"] = std::move(factors);
    result["totient"] = to_string(totient(m));
    emit(out, {"factor", {{"modulus", std::to_string(m.value())}}, std::move(result), "formula"});
    return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const PolyZn f = polynomial_of(o, m);
    ordered_json result;
    result["type"] = "boolean";
    result["value"] = is_separable(f);
    result["monic"] = f.is_monic();
    if (f.is_monic() && *f.degree() >= 1) {
        const Residue disc = discriminant(f);
        result["discriminant"] = std::to_string(disc.value());
        result["discriminant_is_unit"] = is_unit(disc);
    }
    emit(out, {"check", {{"modulus", std::to_string(m.value())}, {"polynomial", format(f)}}, std::move(result),
               "formula"});
    return kOk;
}

int cmd_disc(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const PolyZn f = polynomial_of(o, m);
    const Residue disc = discriminant(f);
    ordered_json result;
    result["type"] = "residue";
    result["value"] = std::to_string(disc.value());
    result["modulus"] = std::to_string(m.value());
    emit(out, {"disc", {{"modulus", std::to_string(m.value())}, {"polynomial", format(f)}}, std::move(result),
               "formula"});
    return kOk;
}

int cmd_trace_form(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const PolyZn f = polynomial_of(o, m);
    const TraceForm form = trace_form(f);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < form.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < form.dim(); ++j) row.push_back(std::to_string(form.entry(i, j)));
        rows.push_back(std::move(row));
    }
    ordered_json result;
    result["type"] = "matrix";
    result["value"] = std::move(rows);
    result["modulus"] = std::to_string(m.value());
    emit(out, {"trace-form", {{"modulus", std::to_string(m.value())}, {"polynomial", format(f)}},
               std::move(result), "formula"});
    return kOk;
}

std::vector<std::pair<std::string, std::string>> count_inputs(const Modulus& m, unsigned d, CountMode mode) {
    return {{"modulus", std::to_string(m.value())}, {"degree", std::to_string(d)}, {"mode", std::string(to_string(mode))}};
}

int cmd_count(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const CountMode mode = mode_of(o.mode);
    emit(out, {"count", count_inputs(m, o.degree, mode), count_value(count(m, o.degree, mode), o.decimal), "formula"});
    return kOk;
}

int cmd_proportion(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const Rational r = proportion_monic_separable(m, o.degree);
    emit(out, {"proportion", count_inputs(m, o.degree, CountMode::monic), rational_value(r, o.decimal), "formula"});
    return kOk;
}

EnumerationOptions enumeration_options(const Options& o) { return {o.budget, o.workers}; }

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const CountMode mode = mode_of(o.mode);
    const EnumerationOptions opts = enumeration_options(o);
    Natural found = o.crt ? crt_product_count(m, o.degree, mode, opts)
                          : enumerate_count({m, o.degree, mode}, opts);
    auto inputs = count_inputs(m, o.degree, mode);
    inputs.emplace_back("method", o.crt ? "crt-product" : "full-ring");
    emit(out, {"enumerate", std::move(inputs),
               count_value(CountResult::of(std::move(found), family_size(m, o.degree, mode)), o.decimal),
               "enumeration"});
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Modulus m = modulus_of(o);
    const auto reports = verify(m, o.d_max, enumeration_options(o));
    for (const auto& r : reports) {
        ordered_json result;
        result["type"] = "verification";
        result["value"] = r.match;
        result["oracle"] = r.oracle_count ? ordered_json(to_string(*r.oracle_count)) : ordered_json(nullptr);
        result["formula"] = to_string(r.formula_count);
        result["skipped"] = r.skipped();
        result["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
        emit(out, {"verify", count_inputs(m, r.query.degree, r.query.mode), std::move(result), "both"});
    }
    return all_match(reports) ? kOk : kMismatch;
}

int cmd_table(const Options& o, std::ostream& out) {
    const std::uint64_t lo = parse_modulus_text(o.n_min);
    const std::uint64_t hi = parse_modulus_text(o.n_max.empty() ? o.n_min : o.n_max);
    if (lo > hi) throw UsageError("table: --n-min exceeds --n-max");
    if (o.d_min > o.d_max) throw UsageError("table: --d-min exceeds --d-max");
    std::vector<CountMode> modes;
    if (o.modes.empty()) {
        modes = {CountMode::monic, CountMode::leq, CountMode::exact};
    } else {
        for (const auto& text : o.modes) modes.push_back(mode_of(text));
    }
    const bool csv = o.format == "csv";
    if (csv) out << "n,d,mode,count,proportion\n";
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const Modulus m(n);
        for (unsigned d = o.d_min; d <= o.d_max; ++d) {
            for (CountMode mode : modes) {
                const CountResult c = count(m, d, mode);
                if (csv) {
                    out << n << ',' << d << ',' << to_string(mode) << ',' << to_string(c.count) << ','
                        << to_string(c.proportion) << '\n';
                } else {
                    emit(out, {"table", count_inputs(m, d, mode), count_value(c, o.decimal), "formula"});
                }
            }
        }
        if (n == std::numeric_limits<std::uint64_t>::max()) break;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide and count separable polynomials over Z/n."};
    app.name("sepcount");
    app.require_subcommand(1, 1);
    Options o;

    auto add_modulus = [&](CLI::App* sub) { sub->add_option("-n,--modulus", o.modulus, "modulus n, |n| >= 2")->required(); };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("-f,--poly", o.polynomial, "polynomial, e.g. \"3x^2+x+5\" or \"5,1,3\"")->required();
    };
    auto add_decimal = [&](CLI::App* sub) {
        sub->add_option("--decimal", o.decimal, "also print an approximate decimal with this many digits");
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "monic | leq | exact")->check(CLI::IsMember({"monic", "leq", "exact"}));
    };

    auto* factor = app.add_subcommand("factor", "prime factorization of n");
    add_modulus(factor);

    auto* check = app.add_subcommand("check", "decide separability of a polynomial");
    add_modulus(check);
    add_poly(check);

    auto* disc = app.add_subcommand("disc", "trace-form discriminant of a monic polynomial");
    add_modulus(disc);
    add_poly(disc);

    auto* tform = app.add_subcommand("trace-form", "trace-form matrix of a monic polynomial");
    add_modulus(tform);
    add_poly(tform);

    auto* cnt = app.add_subcommand("count", "closed-form count of separable polynomials");
    add_modulus(cnt);
    add_mode(cnt);
    cnt->add_option("-d,--degree", o.degree, "degree")->required();
    add_decimal(cnt);

    auto* prop = app.add_subcommand("proportion", "proportion of monic polynomials that are separable (d >= 2)");
    add_modulus(prop);
    prop->add_option("-d,--degree", o.degree, "degree (default 2)");
    add_decimal(prop);

    auto* enumerate = app.add_subcommand("enumerate", "brute-force count by enumeration");
    add_modulus(enumerate);
    add_mode(enumerate);
    enumerate->add_option("-d,--degree", o.degree, "degree")->required();
    enumerate->add_option("--budget", o.budget, "maximum candidates per enumeration");
    enumerate->add_option("--workers", o.workers, "worker threads (0 = hardware)");
    enumerate->add_flag("--crt", o.crt, "enumerate prime-power components separately");
    add_decimal(enumerate);

    auto* ver = app.add_subcommand("verify", "compare enumeration with the formulas for every d <= d-max");
    add_modulus(ver);
    ver->add_option("--d-max", o.d_max, "largest degree (default 2)");
    ver->add_option("--budget", o.budget, "maximum candidates per enumeration");
    ver->add_option("--workers", o.workers, "worker threads (0 = hardware)");

    auto* table = app.add_subcommand("table", "counts over ranges of n and d");
    table->add_option("--n-min", o.n_min, "smallest modulus (default 2)");
    table->add_option("--n-max", o.n_max, "largest modulus")->required();
    table->add_option("--d-min", o.d_min, "smallest degree (default 0)");
    table->add_option("--d-max", o.d_max, "largest degree (default 2)");
    table->add_option("--mode", o.modes, "modes to include (default all)")
        ->check(CLI::IsMember({"monic", "leq", "exact"}));
    table->add_option("--format", o.format, "csv | jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    add_decimal(table);

    std::vector<const char*> argv;
    argv.push_back("sepcount");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*factor) return cmd_factor(o, out);
        if (*check) return cmd_check(o, out);
        if (*disc) return cmd_disc(o, out);
        if (*tform) return cmd_trace_form(o, out);
        if (*cnt) return cmd_count(o, out);
        if (*prop) return cmd_proportion(o, out);
        if (*enumerate) return cmd_enumerate(o, out);
        if (*ver) return cmd_verify(o, out);
        if (*table) return cmd_table(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sepcount::cli
