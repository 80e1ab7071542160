#include "kconn/assertions.hpp"

#include <atomic>

#include "kconn/graph6.hpp"

namespace kconn {

namespace {
std::atomic<AssertionLevel> g_level{AssertionLevel::Strict};
}

void set_assertion_level(AssertionLevel level) { g_level.store(level); }

AssertionLevel assertion_level() { return g_level.load(); }

void report_violation(const std::string& claim, const Graph& g) {
    throw InvariantViolation(claim + " fails on " + to_graph6(g));
}

}  // namespace kconn
