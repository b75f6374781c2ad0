#include <doctest.h>

#include "girylab/suites.hpp"

using namespace girylab;

TEST_CASE("registry names are unique and resolvable") {
    std::set<std::string> names;
    for (const auto& info : suite_registry()) {
        CHECK(names.insert(info.name).second);
        CHECK_FALSE(info.covers.empty());
    }
    SuiteContext ctx;
    CHECK_THROWS_AS(run_suite("no-such-suite", ctx), input_error);
    CHECK_THROWS_AS(run_suites({"no-such-suite"}, ctx), input_error);
}

TEST_CASE("small semilattice enumeration") {
    auto all = all_semilattices(2);
    // One singleton plus the two orderings of a 2-chain.
    CHECK(all.size() == 3);
    for (const auto& a : all) CHECK(axiom_suite(a).ok());
}

TEST_CASE("parallel and serial runs agree") {
    SuiteContext ctx;
    ctx.seed = 9;
    std::vector<std::string> names = {"separation", "sigma", "integral", "discrepancies"};
    auto serial = run_suites(names, ctx, false);
    auto parallel = run_suites(names, ctx, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i].to_json() == parallel[i].to_json());
}

TEST_CASE("seeded runs are reproducible") {
    SuiteContext ctx;
    ctx.seed = 1234;
    auto a = run_suite("integral", ctx);
    auto b = run_suite("integral", ctx);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("model spaces feed the space-driven suites") {
    ModelFile m;
    m.spaces["S"] = FinMeasSpace::discrete({"only"});
    SuiteContext ctx;
    ctx.model = &m;
    CHECK(run_suite("monad", ctx).ok());
}
