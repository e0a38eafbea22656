#pragma once

// Verification suites behind the `lk verify` command and their reports.

#include "lk/check.hpp"
#include "lk/specht.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lk {

// Bad flags or flag combinations; the CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultMaxN = 8;

struct SuiteConfig {
    std::string suite;
    int n_min = 3;
    int n_max = 3;
    std::optional<std::string> l;       // Laurent monomial or case tag
    std::optional<std::string> l_case;  // case tag
    std::optional<std::string> t_case;
    std::optional<std::string> field;   // ratfunc | cyclotomic:<m> | rational:<p>/<q>
    std::uint64_t seed = 1;
    int trials = 5;
    int max_n = kDefaultMaxN;
};

const std::vector<std::string>& suite_names();

struct FieldChoice {
    FieldDescriptor field = FieldDescriptor::ratfunc();
    std::optional<Rational> r_value;  // set for rational:<p>/<q>
};

FieldChoice parse_field(const std::string& text);

struct SubspaceRecord {
    std::string label;
    std::size_t dim = 0;
    std::string partition;
    ModuleSignature signature;
};

struct CaseResult {
    int n = 0;
    std::string field;
    std::string case_label;
    std::string r;
    std::string l;
    std::optional<std::size_t> k_n;
    std::vector<SubspaceRecord> subspaces;
    std::vector<std::pair<std::string, std::string>> extra;
    CheckList checks;
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CaseResult> results;
    bool pass() const;
};

// Throws ConfigError for invalid configurations; lower layers may throw
// std::domain_error or std::logic_error at run time.
SuiteReport run_suite(const SuiteConfig& cfg);

enum class ReportFormat { json, text };

std::string emit_report(const SuiteReport& report, ReportFormat format);

}  // namespace lk
