#pragma once

#include <string>

#include "kconn/graph.hpp"

namespace kconn {

/// Strict mode re-checks every preservation claim made by a transform and
/// throws InvariantViolation when one fails. Fast mode skips those checks.
enum class AssertionLevel { Strict, Fast };

void set_assertion_level(AssertionLevel level);
AssertionLevel assertion_level();
inline bool strict_assertions() { return assertion_level() == AssertionLevel::Strict; }

/// Throws InvariantViolation naming the claim and the offending graph.
[[noreturn]] void report_violation(const std::string& claim, const Graph& g);

}  // namespace kconn
