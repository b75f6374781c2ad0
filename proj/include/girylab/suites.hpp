#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girylab/json_io.hpp"
#include "girylab/report.hpp"

namespace girylab {

struct SuiteContext {
    const ModelFile* model = nullptr; // optional; fixture spaces are used too
    std::uint64_t seed = 0;
    std::size_t max_enum = 1000000;
    bool parallel = true;
};

struct SuiteInfo {
    std::string name;
    std::string covers;
};

/// The named suites, in canonical run order.
const std::vector<SuiteInfo>& suite_registry();

/// Runs one suite. Unknown names throw input_error.
SuiteReport run_suite(const std::string& name, const SuiteContext& ctx);

/// Runs the named suites (all of them when names is empty). Reports come
/// back in registry order regardless of worker completion order.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const SuiteContext& ctx, bool parallel = true);

/// Every meet-semilattice structure on 1..max_elems labeled elements,
/// enumerated by brute force over commutative idempotent tables and
/// filtered for associativity.
std::vector<ConvexSpace> all_semilattices(int max_elems);

} // namespace girylab
