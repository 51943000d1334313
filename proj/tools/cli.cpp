#include "cli.hpp"

#include "wittrep/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace wittrep {

namespace {

enum Exit { ExitPass = 0, ExitFalsified = 1, ExitParse = 2, ExitConfig = 3 };

struct Options {
    unsigned p = 0;
    std::uint64_t q = 0;
    unsigned r = 0;
    std::string modulus;
    std::string element;
    std::string suite = "all";
    std::string format = "json";
    std::uint64_t budget = 0;
    std::uint64_t pair_budget = 10'000'000;
    std::uint64_t seed = 1;
    std::string out;
    std::string query;
    bool count_only = false;
};

struct UsageError : std::runtime_error {
    int code;
    UsageError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return ExitParse;
        case ErrorKind::NotPrime:
        case ErrorKind::Reducible:
        case ErrorKind::InvalidArgument:
        case ErrorKind::BadPrime:
        case ErrorKind::TooLarge:
        case ErrorKind::BudgetExceeded:
        case ErrorKind::WindowTooSmall:
        case ErrorKind::ZeroTorusParameter:
            return ExitConfig;
        default: return ExitFalsified;
    }
}

std::vector<unsigned> parse_modulus(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw UsageError(ExitParse, "--modulus: '" + item + "' is not a non-negative integer");
        }
        if (used != item.size()) throw UsageError(ExitParse, "--modulus: '" + item + "' is not a non-negative integer");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

FieldPtr resolve_field(const Options& o) {
    if (o.p == 0) throw UsageError(ExitConfig, "--p is required");
    if (!is_prime(o.p)) throw Error(ErrorKind::NotPrime, std::to_string(o.p) + " is not prime");
    unsigned r = o.r == 0 ? 1 : o.r;
    if (o.q != 0) {
        unsigned k = 0;
        std::uint64_t x = o.q;
        while (x % o.p == 0) {
            x /= o.p;
            ++k;
        }
        if (x != 1 || k == 0)
            throw Error(ErrorKind::InvalidArgument, "q = " + std::to_string(o.q) + " is not a power of p = " + std::to_string(o.p));
        if (o.r != 0 && o.r != k) throw Error(ErrorKind::InvalidArgument, "--q and --r disagree");
        r = k;
    }
    if (ipow(o.p, r) > 65536) throw Error(ErrorKind::TooLarge, "fields above 65536 elements are not supported");
    std::optional<std::vector<unsigned>> modulus;
    if (!o.modulus.empty()) modulus = parse_modulus(o.modulus);
    return make_field_context(o.p, r, modulus);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("WITTREP_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(ExitConfig, "WITTREP_BUDGET is not an integer");
        }
    }
    return 2'000'000;
}

std::string matrix_text(const Matrix<Fq>& m, const std::vector<std::string>& names) {
    std::ostringstream os;
    std::size_t w = 1;
    for (const auto& n : names) w = std::max(w, n.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w = std::max(w, coefficient_text(m(i, j)).size());
    os << std::setw(static_cast<int>(w)) << "";
    for (const auto& n : names) os << " " << std::setw(static_cast<int>(w)) << n;
    os << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << std::setw(static_cast<int>(w)) << names[i];
        for (std::size_t j = 0; j < m.cols(); ++j) os << " " << std::setw(static_cast<int>(w)) << coefficient_text(m(i, j));
        os << "\n";
    }
    return os.str();
}

std::string report_text(const CheckReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(8) << to_string(r.status) << r.check << "  (" << std::fixed << std::setprecision(1)
       << r.timing_ms << " ms)";
    if (!r.details.is_null()) os << "\n        " << r.details.dump();
    if (!r.witness.is_null()) os << "\n        witness: " << r.witness.dump();
    return os.str();
}

int cmd_rho(const Options& o, std::ostream& out) {
    if (o.element.empty()) throw UsageError(ExitParse, "--element is required");
    const FieldPtr ctx = resolve_field(o);
    const GroupFq g = parse_element(o.element, *ctx);
    const RhoEvaluator rho(ctx);
    const Matrix<Fq> m = rho(g);
    if (o.format == "text") {
        out << "rho_" << ctx->p() << "(" << o.element << ") over " << ctx->describe() << "\n"
            << matrix_text(m, rho.basis().names);
    } else {
        out << rep_matrix_json(m, rho.basis(), *ctx).dump() << "\n";
    }
    return ExitPass;
}

std::vector<std::string> split_suites(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item != "all" && !is_suite(item)) throw UsageError(ExitConfig, "unknown suite '" + item + "'");
        out.push_back(item);
    }
    if (out.empty()) throw UsageError(ExitConfig, "no suite selected");
    return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const FieldPtr ctx = resolve_field(o);
    SuiteOptions so;
    so.budget = o.budget;
    so.pair_budget = o.pair_budget;
    so.seed = o.seed;

    std::vector<std::pair<std::string, bool>> plan;  // (suite, explicitly requested)
    for (const auto& s : split_suites(o.suite)) {
        if (s == "all") {
            for (const auto& name : suite_names()) plan.emplace_back(name, false);
        } else {
            plan.emplace_back(s, true);
        }
    }
    std::vector<CheckReport> reports;
    for (const auto& [suite, explicit_request] : plan) {
        const std::string why = suite_inapplicable(suite, *ctx, so);
        if (!why.empty()) {
            if (explicit_request) throw UsageError(ExitConfig, suite + ": " + why);
            CheckReport r;
            r.check = suite;
            r.p = ctx->p();
            r.q = ctx->q();
            r.status = Status::Skipped;
            r.witness = {{"reason", why}};
            reports.push_back(std::move(r));
            continue;
        }
        auto part = run_suite(suite, ctx, so);
        reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }

    const CheckReport* first_failure = nullptr;
    for (const auto& r : reports)
        if (r.status == Status::Fail && !first_failure) first_failure = &r;

    if (o.format == "text") {
        for (const auto& r : reports) out << report_text(r) << "\n";
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    }
    if (first_failure) {
        err << "falsified: " << to_json(*first_failure).dump() << "\n";
        return ExitFalsified;
    }
    return ExitPass;
}

int cmd_report(const Options& o, std::ostream& out) {
    json result;
    if (o.query == "gauss") {
        if (o.p == 0) throw UsageError(ExitConfig, "--p is required");
        const auto rep = gaussian_example_report(o.p);
        if (!rep.applicable) throw UsageError(ExitConfig, rep.note);
        result = to_json(rep);
    } else if (o.query == "order") {
        if (o.element.empty()) throw UsageError(ExitParse, "--element is required");
        const FieldPtr ctx = resolve_field(o);
        const GroupFq g = parse_element(o.element, *ctx);
        result = {{"element", o.element}, {"p", ctx->p()}, {"q", ctx->q()}, {"order", element_order(g)}};
        const Matrix<Fq> m = RhoEvaluator(ctx)(g);
        try {
            const JordanType jt = jordan_type(m);
            result["rho_jordan_type"] = jt.partition;
            result["rho_order"] = jt.order;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotUnipotent) throw;
            result["rho_jordan_type"] = nullptr;
            result["note"] = "rho(g) is not unipotent";
        }
    } else if (o.query == "enumerate") {
        const FieldPtr ctx = resolve_field(o);
        if (o.count_only) {
            std::uint64_t n = 0;
            for_each_group_element(*ctx, o.budget, [&](const GroupFq&) { ++n; });
            result = {{"p", ctx->p()}, {"q", ctx->q()}, {"count", n}};
        } else {
            json els = json::array();
            for_each_group_element(*ctx, o.budget, [&](const GroupFq& g) { els.push_back(to_json(g)); });
            result = {{"p", ctx->p()}, {"q", ctx->q()}, {"count", els.size()}, {"elements", els}};
        }
    } else {
        throw UsageError(ExitParse, "report query must be one of order, gauss, enumerate");
    }
    if (o.format == "text") {
        for (const auto& [k, v] : result.items()) out << k << ": " << v.dump() << "\n";
    } else {
        out << result.dump(2) << "\n";
    }
    return ExitPass;
}

void add_field_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--p", o.p, "characteristic");
    cmd->add_option("--q", o.q, "field order p^r");
    cmd->add_option("--r", o.r, "extension degree");
    cmd->add_option("--modulus", o.modulus, "monic modulus coefficients, constant term first, e.g. 1,0,1");
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--budget", o.budget, "maximum group elements to enumerate");
    cmd->add_option("--pair-budget", o.pair_budget, "maximum ordered pairs in a sweep");
    cmd->add_option("--seed", o.seed, "seed for randomized spot checks");
    cmd->add_option("--out", o.out, "write output to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with SL_2(W_2(F_q)) and its (p+3)-dimensional representation", "wittrep"};
    app.require_subcommand(1);
    Options o;

    auto* rho = app.add_subcommand("rho", "print rho_p of a group element");
    add_field_options(rho, o);
    rho->add_option("--element", o.element, "element expression, e.g. \"X(1,0)*Phi(2)\"");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_field_options(verify, o);
    verify->add_option("--suite", o.suite, "comma list of suites or \"all\"");

    auto* report = app.add_subcommand("report", "informational queries: order, gauss, enumerate");
    add_field_options(report, o);
    report->add_option("query", o.query, "order | gauss | enumerate")->required();
    report->add_option("--element", o.element, "element expression");
    report->add_flag("--count-only", o.count_only, "print only the element count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitPass : ExitParse;
    }

    std::ostringstream buffer;
    int code = ExitPass;
    try {
        if (o.budget == 0) o.budget = default_budget();
        if (*rho) code = cmd_rho(o, buffer);
        else if (*verify) code = cmd_verify(o, buffer, err);
        else code = cmd_report(o, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n" << "  " << o.element << "\n  "
            << std::string(std::min(e.position(), o.element.size()), ' ') << "^\n";
        return ExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out);
        if (!file) {
            err << "error: cannot write " << o.out << "\n";
            return ExitConfig;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace wittrep
