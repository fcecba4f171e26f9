// Command-line front end: approximant tables, target constants, denominator
// growth diagnostics, and the library verification suite, as text, CSV, or
// JSON. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 violated mathematical precondition (series pole or zero factor).

#include <CLI11.hpp>
#include <json.hpp>

#include "qpade/approximants.hpp"
#include "qpade/cyclotomic.hpp"
#include "qpade/verify.hpp"

#include <clocale>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::ordered_json;
using namespace qpade;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMathPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SeriesKind parse_kind(const std::string& kind) {
    if (kind == "hp1") return SeriesKind::harmonic_q;
    if (kind == "lnp2") return SeriesKind::log_q2;
    if (kind == "lambert") return SeriesKind::lambert;
    throw UsageError("unknown kind '" + kind + "' (expected hp1, lnp2, or lambert)");
}

// "auto" consults QPADE_PRECISION_BITS; absent both, the caller's policy wins.
std::optional<mpfr_prec_t> parse_precision(const std::string& text) {
    std::string value = text;
    if (value == "auto") {
        const char* env = std::getenv("QPADE_PRECISION_BITS");
        if (env == nullptr) return std::nullopt;
        value = env;
    }
    try {
        size_t used = 0;
        long bits = std::stol(value, &used);
        if (used != value.size() || bits <= 0) throw std::invalid_argument(value);
        return static_cast<mpfr_prec_t>(bits);
    } catch (const std::exception&) {
        throw UsageError("invalid precision '" + value + "' (expected a positive integer or auto)");
    }
}

Rational parse_c(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("invalid rational '" + text + "' (expected a/b or an integer)");
    }
}

// Sinks either stdout or --output.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output path '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct RecordStrings {
    std::string n, a, b, ratio, residual, residual_error_bound, exponent, b_exponent,
        measure_estimate;
};

RecordStrings render_record(const ApproximantRecord& rec) {
    RecordStrings out;
    out.n = std::to_string(rec.n);
    out.a = to_string(rec.a);
    out.b = to_string(rec.b);
    BigFloat ratio = BigFloat::from_integer(rec.a) / BigFloat::from_integer(rec.b);
    out.ratio = ratio.value_general_string(30);
    out.residual = rec.residual.value_string(17);
    out.residual_error_bound = rec.residual.error_string();
    out.exponent = rec.exponent.value_fixed_string(6);
    out.b_exponent = rec.b_exponent.value_fixed_string(6);
    out.measure_estimate = rec.measure_estimate.value_fixed_string(6);
    return out;
}

void emit_records(std::ostream& os, const std::vector<ApproximantRecord>& records,
                  const std::string& format) {
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& rec : records) {
            RecordStrings s = render_record(rec);
            rows.push_back({{"n", rec.n},
                            {"a", s.a},
                            {"b", s.b},
                            {"ratio", s.ratio},
                            {"residual", s.residual},
                            {"residual_error_bound", s.residual_error_bound},
                            {"exponent", s.exponent},
                            {"b_exponent", s.b_exponent},
                            {"measure_estimate", s.measure_estimate}});
        }
        os << rows.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        os << "n,a,b,ratio,residual,residual_error_bound,exponent,b_exponent,measure_estimate\n";
        for (const auto& rec : records) {
            RecordStrings s = render_record(rec);
            os << s.n << ',' << s.a << ',' << s.b << ',' << s.ratio << ',' << s.residual << ','
               << s.residual_error_bound << ',' << s.exponent << ',' << s.b_exponent << ','
               << s.measure_estimate << "\n";
        }
        return;
    }
    os << "n  a  b  ratio  residual  exponent  b_exponent  measure_estimate\n";
    for (const auto& rec : records) {
        RecordStrings s = render_record(rec);
        os << s.n << "  " << s.a << "  " << s.b << "  " << s.ratio << "  " << s.residual << "  "
           << s.exponent << "  " << s.b_exponent << "  " << s.measure_estimate << "\n";
    }
}

struct ApproxOptions {
    std::string kind = "hp1";
    unsigned long p = 2;
    std::string c;
    unsigned n_max = 20;
    std::string precision = "auto";
    std::string format = "table";
    std::string output;
};

int run_approx(const ApproxOptions& opts) {
    const SeriesKind kind = parse_kind(opts.kind);
    if (opts.p < 2) throw UsageError("p must be an integer greater than 1");
    if (opts.n_max < 1) throw UsageError("n-max must be at least 1");
    Rational c(1);
    if (kind == SeriesKind::lambert) {
        if (opts.c.empty()) throw UsageError("lambert requires --c a/b");
        c = parse_c(opts.c);
    } else if (kind == SeriesKind::log_q2) {
        c = -1;
    }
    auto precision = parse_precision(opts.precision);

    std::vector<ApproximantRecord> records;
    if (opts.n_max == 1) {
        switch (kind) {
            case SeriesKind::harmonic_q:
                records.push_back(approximant_harmonic(1, opts.p));
                break;
            case SeriesKind::log_q2:
                records.push_back(approximant_log2(1, opts.p));
                break;
            case SeriesKind::lambert:
                records.push_back(approximant_lambert(1, opts.p, c));
                break;
        }
    } else {
        records = convergence_table(kind, opts.p, c, opts.n_max, precision);
    }

    OutputSink sink(opts.output);
    emit_records(sink.stream(), records, opts.format);
    return kExitOk;
}

struct ConstantsOptions {
    std::string kind = "hp1";
    unsigned long p = 2;
    std::string c;
    std::string precision = "auto";
    std::string format = "table";
    std::string output;
};

int run_constants(const ConstantsOptions& opts) {
    const SeriesKind kind = parse_kind(opts.kind);
    if (opts.p < 2) throw UsageError("p must be an integer greater than 1");
    Rational c(1);
    if (kind == SeriesKind::lambert) {
        if (opts.c.empty()) throw UsageError("lambert requires --c a/b");
        c = parse_c(opts.c);
    }
    const mpfr_prec_t bits = parse_precision(opts.precision).value_or(256);

    TargetConstant constant = eval_constant(kind, opts.p, c, bits);
    const int digits = std::max(8, static_cast<int>(bits * 0.30103));
    const std::string value = constant.value.value_string(digits);
    const std::string error = constant.value.error_string();

    OutputSink sink(opts.output);
    std::ostream& os = sink.stream();
    if (opts.format == "json") {
        ordered_json body = {{"kind", opts.kind},
                             {"p", opts.p},
                             {"precision_bits", static_cast<long>(bits)},
                             {"value", value},
                             {"error_bound", error}};
        if (kind == SeriesKind::lambert) body["c"] = to_string(c);
        os << body.dump(2) << "\n";
    } else if (opts.format == "csv") {
        os << "kind,p,c,precision_bits,value,error_bound\n";
        os << opts.kind << ',' << opts.p << ','
           << (kind == SeriesKind::lambert ? to_string(c) : std::string("")) << ',' << bits << ','
           << value << ',' << error << "\n";
    } else {
        os << opts.kind << " (p = " << opts.p;
        if (kind == SeriesKind::lambert) os << ", c = " << to_string(c);
        os << ")\nvalue       = " << value << "\nerror bound = " << error << "\n";
    }
    return kExitOk;
}

struct GrowthOptions {
    unsigned long p = 2;
    unsigned n_max = 20;
    std::string variant = "standard";
    std::string format = "table";
    std::string output;
};

int run_growth(const GrowthOptions& opts) {
    if (opts.p < 2) throw UsageError("p must be an integer greater than 1");
    if (opts.n_max < 1) throw UsageError("n-max must be at least 1");
    DenomVariant variant;
    if (opts.variant == "standard")
        variant = DenomVariant::standard;
    else if (opts.variant == "squared")
        variant = DenomVariant::squared;
    else
        throw UsageError("unknown variant '" + opts.variant + "' (expected standard or squared)");

    const DenominatorSequence seq = denominator_sequence(opts.p, opts.n_max, variant);
    const std::vector<BigFloat> rates = growth_report(opts.p, opts.n_max, variant);
    std::ostringstream target_text;
    target_text.setf(std::ios::fixed);
    target_text.precision(6);
    target_text << growth_limit(variant);

    OutputSink sink(opts.output);
    std::ostream& os = sink.stream();
    if (opts.format == "json") {
        ordered_json rows = ordered_json::array();
        for (unsigned n = 1; n <= opts.n_max; ++n)
            rows.push_back({{"n", n},
                            {"digits", seq.at(n).get_str().size()},
                            {"exponent_estimate", rates[n - 1].value_fixed_string(6)},
                            {"target", target_text.str()}});
        os << rows.dump(2) << "\n";
        return kExitOk;
    }
    const char* separator = opts.format == "csv" ? "," : "  ";
    os << "n" << separator << "digits" << separator << "exponent_estimate" << separator
       << "target\n";
    for (unsigned n = 1; n <= opts.n_max; ++n)
        os << n << separator << seq.at(n).get_str().size() << separator
           << rates[n - 1].value_fixed_string(6) << separator << target_text.str() << "\n";
    return kExitOk;
}

struct VerifyCliOptions {
    unsigned n_max = 20;
    std::string primes = "2,3,5";
    bool inject_fault = false;
    std::string output;
};

int run_verify(const VerifyCliOptions& opts) {
    if (opts.n_max < 1) throw UsageError("n-max must be at least 1");
    VerifyOptions options;
    options.n_max = opts.n_max;
    options.inject_fault = opts.inject_fault;

    if (!opts.primes.empty()) {
        std::vector<unsigned long> ps;
        std::stringstream parts(opts.primes);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                size_t used = 0;
                unsigned long p = std::stoul(part, &used);
                if (used != part.size() || p < 2) throw std::invalid_argument(part);
                ps.push_back(p);
            } catch (const std::exception&) {
                throw UsageError("invalid p list entry '" + part + "'");
            }
        }
        if (ps.empty()) throw UsageError("empty p list");
        options.exact_primes = ps;
        options.integer_primes = ps;
        options.residual_primes.clear();
        for (unsigned long p : ps)
            if (p <= 5) options.residual_primes.push_back(p);
        if (options.residual_primes.empty()) options.residual_primes.push_back(2);
    }

    OutputSink sink(opts.output);
    std::ostream& os = sink.stream();
    const auto results = run_verification(options);
    for (const auto& result : results)
        os << (result.ok ? "[PASS] " : "[FAIL] ") << result.name << " (" << result.detail << ")\n";
    const bool ok = all_passed(results);
    os << (ok ? "verification passed" : "verification FAILED") << " (" << results.size()
       << " checks)\n";
    return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Rational approximants to q-harmonic series, q-logarithms, and Lambert series "
                 "via little q-Legendre Pade approximation"};
    app.require_subcommand(1);

    ApproxOptions approx;
    CLI::App* approx_cmd =
        app.add_subcommand("approx", "Emit the approximant table a_n, b_n with diagnostics");
    approx_cmd->add_option("--kind", approx.kind, "Target kind: hp1, lnp2, lambert")
        ->capture_default_str();
    approx_cmd->add_option("--p", approx.p, "Integer base p > 1")->capture_default_str();
    approx_cmd->add_option("--c", approx.c, "Rational c = a/b (lambert only)");
    approx_cmd->add_option("--n-max", approx.n_max, "Rows 1..n_max")->capture_default_str();
    approx_cmd->add_option("--precision-bits", approx.precision,
                           "Constant evaluation target in bits, or auto");
    approx_cmd->add_option("--format", approx.format, "table, csv, or json")
        ->capture_default_str();
    approx_cmd->add_option("--output", approx.output, "Write to a file instead of stdout");

    ConstantsOptions constants;
    CLI::App* constants_cmd =
        app.add_subcommand("constants", "Evaluate the target constant with a certified bound");
    constants_cmd->add_option("--kind", constants.kind, "Target kind: hp1, lnp2, lambert")
        ->capture_default_str();
    constants_cmd->add_option("--p", constants.p, "Integer base p > 1")->capture_default_str();
    constants_cmd->add_option("--c", constants.c, "Rational c = a/b (lambert only)");
    constants_cmd->add_option("--precision-bits", constants.precision,
                              "Precision in bits, or auto (default 256)");
    constants_cmd->add_option("--format", constants.format, "table, csv, or json")
        ->capture_default_str();
    constants_cmd->add_option("--output", constants.output, "Write to a file instead of stdout");

    GrowthOptions growth;
    CLI::App* growth_cmd =
        app.add_subcommand("growth", "Denominator growth diagnostics log_p(d_n)/n^2");
    growth_cmd->add_option("--p", growth.p, "Integer base p > 1")->capture_default_str();
    growth_cmd->add_option("--n-max", growth.n_max, "Rows 1..n_max")->capture_default_str();
    growth_cmd->add_option("--variant", growth.variant, "standard (d_n(p)) or squared (d_n(p^2))")
        ->capture_default_str();
    growth_cmd->add_option("--format", growth.format, "table, csv, or json")
        ->capture_default_str();
    growth_cmd->add_option("--output", growth.output, "Write to a file instead of stdout");

    VerifyCliOptions verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the module invariant suites at configured sizes");
    verify_cmd->add_option("--n-max", verify.n_max, "Main size knob")->capture_default_str();
    verify_cmd->add_option("--p", verify.primes, "Comma-separated bases")->capture_default_str();
    verify_cmd->add_option("--output", verify.output, "Write to a file instead of stdout");
    verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");  // test hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (approx_cmd->parsed()) return run_approx(approx);
        if (constants_cmd->parsed()) return run_constants(constants);
        if (growth_cmd->parsed()) return run_growth(growth);
        if (verify_cmd->parsed()) return run_verify(verify);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathPrecondition;
    } catch (const ZeroFactorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
