#include <doctest.h>

#include <algorithm>
#include <random>

#include "girylab/factorization.hpp"
#include "girylab/probes.hpp"

using namespace girylab;

namespace {
FinMeasSpace d2() { return FinMeasSpace::discrete({"a", "b"}); }
FinMeasSpace d3() { return FinMeasSpace::discrete({"a", "b", "c"}); }
Elem vertex(int n, int i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = Rat(1);
    return Elem{v};
}
} // namespace

TEST_CASE("the integral pairing") {
    Prob p = Prob::make(d2(), {Rat(1, 3), Rat(2, 3)});
    ProbeFunction f = ProbeFunction::make(d2(), {Rat(0), Rat(3, 4)});
    CHECK(integral(p, f) == Rat(1, 2));
    CHECK(integral(p, ProbeFunction::constant(d2(), Rat(1, 3))) == Rat(1, 3));
    CHECK(integral(Prob::dirac(d2(), "b"), f) == Rat(3, 4));
    CHECK_THROWS_AS(ProbeFunction::make(d2(), {Rat(2), Rat(0)}), input_error);
}

TEST_CASE("functional pair round trip and naturality") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        Prob p = random_prob(d3(), rng);
        SpecElement alpha = spec_from_measure(p);
        CHECK(measure_from_spec(alpha) == p);
        CHECK(alpha.alpha_2({0, 1, 2}) == 1);
    }
    // dirac gives the evaluation pattern.
    SpecElement ev = spec_from_measure(Prob::dirac(d3(), "b"));
    CHECK(ev.alpha_2({1}) == 1);
    CHECK(ev.alpha_2({0, 2}) == 0);

    // Collapse map: spec after pushforward = pushforward of spec.
    FinMeasSpace y = d2();
    MeasurableMap f = make_measurable_map(d3(), y, {{"a", "a"}, {"b", "a"}, {"c", "b"}});
    for (int i = 0; i < 20; ++i) {
        Prob p = random_prob(d3(), rng);
        SpecElement left = spec_from_measure(pushforward(f, p));
        for (std::uint32_t mask = 0; mask < 4; ++mask) {
            std::set<std::size_t> v, pre;
            for (std::size_t k = 0; k < 2; ++k)
                if (mask & (1u << k)) v.insert(k);
            for (std::size_t k = 0; k < 3; ++k)
                if (v.count(y.atom_of(f(d3().atom_key(k))))) pre.insert(k);
            CHECK(left.alpha_2(v) == spec_from_measure(p).alpha_2(pre));
        }
    }
}

TEST_CASE("set-function validation gate") {
    Prob q = Prob::make(d3(), {Rat(1, 6), Rat(1, 3), Rat(1, 2)});
    auto nu = [&q](const std::set<std::size_t>& u) {
        Rat m;
        for (auto i : u) m += q.weights[i];
        return m;
    };
    CHECK(measure_from_set_function(d3(), nu) == q);
    CHECK_THROWS_AS(measure_from_set_function(
                        d3(),
                        [&nu](const std::set<std::size_t>& u) {
                            return u.size() == 2 ? Rat(1, 7) : nu(u);
                        }),
                    consistency_error);
}

TEST_CASE("scaling and limit laws") {
    std::vector<ProbeFunction> probes;
    for (const Rat& u : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)})
        probes.push_back(ProbeFunction::constant(d3(), u));
    probes.push_back(ProbeFunction::make(d3(), {Rat(0), Rat(1, 2), Rat(1)}));
    probes.push_back(ProbeFunction::make(d3(), {Rat(1), Rat(0), Rat(1, 4)}));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        SpecElement alpha = spec_from_measure(random_prob(d3(), rng));
        CHECK(lemma_suite_scale_preserve(alpha, probes).ok());
    }
}

TEST_CASE("point recovery from the 0-1 pattern") {
    for (const auto& x : {d2(), d3()})
        for (std::size_t i = 0; i < x.atom_count(); ++i) {
            SpecElement alpha = spec_from_measure(Prob::dirac(x, x.atom_key(i)));
            CHECK(point_from_alpha2(x, [&](const std::set<std::size_t>& u) {
                      return alpha.alpha_2(u);
                  }) == x.atom_key(i));
        }
    // A pattern that is 1 exactly on supersets of atom 1.
    CHECK(point_from_alpha2(d3(), [](const std::set<std::size_t>& u) {
              return u.count(1) ? 1 : 0;
          }) == "b");
    // Patterns violating the complement law are rejected.
    CHECK_THROWS_AS(point_from_alpha2(d2(), [](const std::set<std::size_t>&) { return 1; }),
                    consistency_error);
}

TEST_CASE("weakly averaging affine set functionals are evaluations") {
    for (const auto& x : {d2(), d3()}) {
        auto families = enumerate_wa_affine_two_functionals(x);
        CHECK(families.size() == x.atom_count());
        for (std::size_t i = 0; i < x.atom_count(); ++i) {
            std::set<std::uint32_t> fam;
            for (std::uint32_t u = 0; u < (1u << x.atom_count()); ++u)
                if (u & (1u << i)) fam.insert(u);
            CHECK(std::count(families.begin(), families.end(), fam) == 1);
        }
    }
}

TEST_CASE("barycenters") {
    ConvexSpace s = ConvexSpace::simplex(3);
    ConvexMeasure p = ConvexMeasure::make(
        s, {{Rat(1, 6), vertex(3, 0)}, {Rat(1, 3), vertex(3, 1)}, {Rat(1, 2), vertex(3, 2)}});
    Elem b = counit(s, p);
    CHECK(b == Elem{std::vector<Rat>{Rat(1, 6), Rat(1, 3), Rat(1, 2)}});
    CHECK(counit_oracle_check(s, p, b).ok());

    ConvexSpace two = ConvexSpace::two();
    ConvexMeasure q = ConvexMeasure::make(
        two, {{Rat(1, 3), Elem{std::string("0")}}, {Rat(2, 3), Elem{std::string("1")}}});
    CHECK(counit(two, q) == Elem{std::string("0")});
    CHECK(counit(two, ConvexMeasure::dirac(two, Elem{std::string("1")})) ==
          Elem{std::string("1")});
}

TEST_CASE("adjunct of a map into the interval") {
    MapIntoSigma f = MapIntoSigma::make(d2(), ConvexSpace::intervalQ(),
                                        {{"a", Elem{Rat(0)}}, {"b", Elem{Rat(1)}}});
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        Prob p = random_prob(d2(), rng);
        CHECK(apply_adjunct(f, p) == Elem{p.of_atom_key("b")});
    }
}

TEST_CASE("triangle identities") {
    auto pool = enumerate_probs(d2(), 4);
    auto metas = enumerate_metaprobs(d2(), pool, 3, 4);
    CHECK(triangle_suite(d2(), ConvexSpace::two(), pool, metas).ok());

    FinMeasSpace one = FinMeasSpace::discrete({"p"});
    auto pool1 = enumerate_probs(one, 2);
    CHECK(triangle_suite(one, ConvexSpace::two(), pool1,
                         enumerate_metaprobs(one, pool1, 2, 2))
              .ok());
}

TEST_CASE("measure paths affine in the parameter") {
    Prob p0 = Prob::make(d2(), {Rat(1), Rat(0)});
    Prob p1 = Prob::make(d2(), {Rat(0), Rat(1)});
    std::vector<std::pair<Rat, Prob>> interp, constant, kinked;
    for (const Rat& r : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)}) {
        interp.push_back({r, convex_comb(p0, p1, r)});
        constant.push_back({r, p0});
        kinked.push_back({r, convex_comb(p0, p1, r < Rat(1, 2) ? r : Rat(1, 2))});
    }
    CHECK(affine_measure_path_check(interp).ok());
    CHECK(affine_measure_path_check(constant).ok());
    CHECK_FALSE(affine_measure_path_check(kinked).ok());
}

TEST_CASE("convex measure validation") {
    ConvexSpace two = ConvexSpace::two();
    CHECK_THROWS_AS(ConvexMeasure::make(two, {{Rat(1, 2), Elem{std::string("0")}}}),
                    input_error);
    CHECK_THROWS_AS(ConvexMeasure::make(two, {{Rat(1), Elem{std::string("q")}}}), input_error);
}
