#pragma once

// JSON encodings and the named verification suites the CLI runs.

#include "wittrep/analysis.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wittrep {

using nlohmann::json;

/// Base-p digits, constant coefficient first.
json to_json(const Fq& x);
json to_json(const WittFq& w);
json to_json(const GroupFq& g);
json to_json(const Matrix<Fq>& m);
/// {"p", "q", "dim", "basis", "matrix"}
json rep_matrix_json(const Matrix<Fq>& m, const RepBasis& basis, const FieldContext& ctx);

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status s);

struct CheckReport {
    std::string check;
    unsigned p = 0;
    std::uint64_t q = 0;
    Status status = Status::Pass;
    json witness;  ///< null unless the check failed or was skipped
    json details;  ///< computed values
    double timing_ms = 0;
};

/// {check, p, q, status, witness?, details?, timing_ms}
json to_json(const CheckReport& r);

struct SuiteOptions {
    std::uint64_t budget = 2'000'000;       ///< group elements per enumeration
    std::uint64_t pair_budget = 10'000'000; ///< ordered pairs per sweep
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Empty when the suite can run on this field, else the reason it cannot.
std::string suite_inapplicable(const std::string& name, const FieldContext& ctx, const SuiteOptions& opts);

/// Runs one suite. Configuration problems surface as Error.
std::vector<CheckReport> run_suite(const std::string& name, const FieldPtr& ctx, const SuiteOptions& opts);

json to_json(const GaussianReport& r);

}  // namespace wittrep
