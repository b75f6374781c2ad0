#include <doctest.h>

#include <random>

#include "girylab/algebra.hpp"
#include "girylab/probes.hpp"
#include "girylab/suites.hpp"

using namespace girylab;

TEST_CASE("structure map of the 2-chain") {
    GiryAlgebra alg = algebra_from_convex(ConvexSpace::two());
    CHECK(alg.space == FinMeasSpace::discrete({"0", "1"}));
    for (const auto& p : enumerate_probs(alg.space, 4)) {
        // The class is 1 exactly when all mass sits on 1.
        CHECK(alg.h(p) == (p.of_atom_key("1").is_one() ? "1" : "0"));
    }
}

TEST_CASE("structure map of chains is the meet of the support") {
    ConvexSpace c3 = ConvexSpace::chain({"a", "b", "c"});
    GiryAlgebra alg = algebra_from_convex(c3);
    for (const auto& p : enumerate_probs(alg.space, 3)) {
        Point expected = "c";
        for (std::size_t i = 0; i < alg.space.atom_count(); ++i)
            if (!p.weights[i].is_zero()) {
                expected = alg.space.atom_key(i);
                break;
            }
        CHECK(alg.h(p) == expected);
    }
}

TEST_CASE("singleton algebra") {
    GiryAlgebra alg = algebra_from_convex(ConvexSpace::chain({"s"}));
    CHECK(alg.space.atom_count() == 1);
    CHECK(alg.h(Prob::dirac(alg.space, "s")) == "s");
}

TEST_CASE("law-checking constructor rejects corrupted evaluators") {
    FinMeasSpace x = FinMeasSpace::discrete({"a", "b"});
    auto pool = enumerate_probs(x, 2);
    auto metas = enumerate_metaprobs(x, pool, 2, 2);
    // Swapped dirac outputs break the unit law.
    CHECK_THROWS_AS(make_algebra(
                        x,
                        [&x](const Prob& p) {
                            return p.weights[0].is_one() ? std::string("b") : std::string("a");
                        },
                        metas),
                    consistency_error);
    // An evaluator ignoring half the mass breaks multiplication.
    CHECK_THROWS_AS(make_algebra(
                        x,
                        [&x](const Prob& p) {
                            return p.weights[0] > Rat(1, 2) ? std::string("a") : std::string("b");
                        },
                        metas),
                    consistency_error);
}

TEST_CASE("random towers satisfy the laws for counit algebras") {
    GiryAlgebra alg = algebra_from_convex(ConvexSpace::chain({"a", "b", "c"}));
    std::mt19937_64 rng(31);
    std::vector<MetaProb> metas;
    for (int i = 0; i < 100; ++i) metas.push_back(random_metaprob(alg.space, rng));
    CHECK(algebra_law_suite(alg, metas).ok());
}

TEST_CASE("coequalizer of the 2-chain algebra") {
    GiryAlgebra alg = algebra_from_convex(ConvexSpace::two());
    auto pool = enumerate_probs(alg.space, 4);
    auto metas = enumerate_metaprobs(alg.space, pool, 3, 4);
    Coequalizer c = coequalizer(alg, pool, metas);
    CHECK(c.report.ok());
    CHECK(c.quotient == ConvexSpace::two());
    CHECK(coeq_q(c, Prob::make(alg.space, {Rat(1, 3), Rat(2, 3)})) == "0");

    // q is affine into the induced structure.
    for (const auto& p : pool)
        for (const auto& q : pool)
            for (const Rat& al : {Rat(1, 3), Rat(1, 2)}) {
                Elem lhs{coeq_q(c, convex_comb(p, q, al))};
                Elem rhs = c.quotient.cc(Elem{coeq_q(c, p)}, Elem{coeq_q(c, q)}, al);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("h-fibers form a congruence on probes") {
    GiryAlgebra alg = algebra_from_convex(ConvexSpace::chain({"a", "b", "c"}));
    auto pool = enumerate_probs(alg.space, 2);
    for (const auto& p : pool)
        for (const auto& q : pool) {
            if (alg.h(p) != alg.h(q)) continue;
            for (const auto& p2 : pool)
                for (const auto& q2 : pool) {
                    if (alg.h(p2) != alg.h(q2)) continue;
                    CHECK(alg.h(convex_comb(p, p2, Rat(1, 2))) ==
                          alg.h(convex_comb(q, q2, Rat(1, 2))));
                }
        }
}

TEST_CASE("theta") {
    for (const auto& a : {ConvexSpace::two(), ConvexSpace::chain({"a", "b", "c"})}) {
        GiryAlgebra alg = algebra_from_convex(a);
        auto pool = enumerate_probs(alg.space, 3);
        auto metas = enumerate_metaprobs(alg.space, pool, 2, 3);
        CHECK(theta_check(alg, pool, metas).ok());
    }
}

TEST_CASE("equivalence round trips") {
    CHECK(equivalence_roundtrip(ConvexSpace::two(), 4, 3).ok());
    CHECK(equivalence_roundtrip(ConvexSpace::chain({"s"}), 4, 3).ok());
    CHECK(equivalence_roundtrip(ConvexSpace::chain({"a", "b", "c"}), 3, 2).ok());
    // The diamond: the four-element lattice with two incomparable middles.
    std::map<std::pair<std::string, std::string>, std::string> meet;
    std::vector<std::string> e = {"bot", "l", "r", "top"};
    for (const auto& x : e) {
        meet[{x, x}] = x;
        meet[{"bot", x}] = "bot";
        meet[{x, "bot"}] = "bot";
        meet[{"top", x}] = x;
        meet[{x, "top"}] = x;
    }
    meet[{"l", "r"}] = "bot";
    meet[{"r", "l"}] = "bot";
    CHECK(equivalence_roundtrip(ConvexSpace::semilattice(e, meet), 2, 2).ok());
}
