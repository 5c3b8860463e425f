#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/algebra.hpp"
#include "fusionkit/tables.hpp"
#include "fusionkit/tadpole.hpp"

namespace fusionkit {

enum class Suite { rules, tadpole, tables, structure };

std::string to_string(Suite suite);
/// Throws ParseError.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Test hook: shifts one closed-form branch by `delta` before comparison.
struct FormulaFault {
    Family family = Family::B;
    int residue = 0;
    int delta = 1;
};

/// Parses "B:1" or "B:1:+2". Throws ParseError.
FormulaFault parse_fault(std::string_view text);

struct VerifyOptions {
    int max_rank = 4;
    int max_level = 6;
    std::vector<Suite> suites;  ///< empty means all
    unsigned threads = 1;
    FormulaVariant variant = FormulaVariant::corrected;
    Transcription copy = Transcription::corrected;
    std::optional<FormulaFault> fault;
};

struct Counterexample {
    Suite suite = Suite::rules;
    std::string algebra;
    int level = -1;  ///< -1 when not level-specific
    std::string detail;
};

struct SuiteResult {
    Suite suite = Suite::rules;
    long long checks = 0;
    std::vector<Counterexample> failures;  ///< canonical order: algebra, level, weight
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    bool ok() const;
    const Counterexample* first_failure() const;
};

/// Every algebra of rank <= max_rank, in canonical order (A, B, C, D, E, F, G by rank).
std::vector<AlgebraId> algebras_up_to(int max_rank);

/// "J", "2J+1", "6J+4".
std::string branch_name(int period, int residue);

/// Runs the requested suites. Work is split by (algebra, level) across
/// `threads` workers; the report is identical for every thread count.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace fusionkit
