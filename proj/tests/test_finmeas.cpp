#include <doctest.h>

#include "girylab/finmeas.hpp"

using namespace girylab;

namespace {
FinMeasSpace nonsep3() {
    return FinMeasSpace::from_atoms({"x", "y", "z"}, {{"x", "y"}, {"z"}});
}
} // namespace

TEST_CASE("space construction and validation") {
    FinMeasSpace x = nonsep3();
    CHECK(x.atom_count() == 2);
    CHECK(x.atom_of("y") == x.atom_of("x"));
    CHECK_FALSE(x.separated());
    CHECK(FinMeasSpace::discrete({"a", "b"}).separated());

    CHECK_THROWS_AS(FinMeasSpace::from_atoms({"a", "b"}, {{"a"}, {"a", "b"}}), input_error);
    CHECK_THROWS_AS(FinMeasSpace::from_atoms({"a", "b"}, {{"a"}}), input_error);
    CHECK_THROWS_AS(FinMeasSpace::from_atoms({"a", "a"}, {{"a"}}), input_error);
    CHECK_THROWS_AS(FinMeasSpace::from_atoms({"a"}, {{"a"}, {}}), input_error);
    CHECK_THROWS_AS(nonsep3().atom_of("w"), input_error);
}

TEST_CASE("measurable sets are atom unions") {
    FinMeasSpace x = nonsep3();
    MeasSet u(x, {"x", "y"});
    CHECK(u.complement().members == PointSet{"z"});
    CHECK_THROWS_AS(MeasSet(x, {"x"}), input_error);
}

TEST_CASE("sigma generation") {
    std::vector<Point> pts = {"a", "b", "c"};
    FinMeasSpace g = generate_sigma(pts, {{"a", "b"}});
    CHECK(g == FinMeasSpace::from_atoms(pts, {{"a", "b"}, {"c"}}));
    CHECK(generate_sigma(pts, {}) == FinMeasSpace::indiscrete(pts));
    CHECK(generate_sigma(pts, {{"a"}, {"b"}, {"c"}}) == FinMeasSpace::discrete(pts));
    CHECK_THROWS_AS(generate_sigma(pts, {{"q"}}), input_error);
    // Overlapping generators refine each other.
    CHECK(generate_sigma(pts, {{"a", "b"}, {"b", "c"}}) == FinMeasSpace::discrete(pts));
}

TEST_CASE("measurability of maps") {
    FinMeasSpace ind = FinMeasSpace::indiscrete({"u", "v"});
    FinMeasSpace dis = FinMeasSpace::discrete({"u", "v"});
    std::map<Point, Point> id{{"u", "u"}, {"v", "v"}};
    CHECK(is_measurable(dis, ind, id));
    CHECK_FALSE(is_measurable(ind, dis, id));
    CHECK_THROWS_AS(make_measurable_map(ind, dis, id), input_error);
    MeasurableMap f = make_measurable_map(dis, ind, id);
    CHECK(f("u") == "u");
}

TEST_CASE("separation quotient") {
    FinMeasSpace x = nonsep3();
    Separation s = separate(x);
    CHECK(s.quotient.separated());
    CHECK(s.quotient.points() == std::vector<Point>{"x", "z"});
    CHECK(s.q("y") == "x");
    CHECK(s.q("z") == "z");
    Separation again = separate(s.quotient);
    CHECK(again.quotient == s.quotient);
    CHECK(again.q == MeasurableMap::identity(s.quotient));

    FinMeasSpace ind = FinMeasSpace::indiscrete({"u", "v"});
    CHECK(separate(ind).quotient.atom_count() == 1);
}

TEST_CASE("induced maps between quotients") {
    FinMeasSpace x = nonsep3();
    FinMeasSpace y = FinMeasSpace::discrete({"p", "q"});
    MeasurableMap f =
        make_measurable_map(x, y, {{"x", "p"}, {"y", "p"}, {"z", "q"}});
    MeasurableMap fs = induced_map(f);
    CHECK(fs.dom == separate(x).quotient);
    CHECK(fs("x") == "p");
    CHECK(fs("z") == "q");
}

TEST_CASE("map enumeration and the function space") {
    FinMeasSpace d2 = FinMeasSpace::discrete({"a", "b"});
    CHECK(enumerate_measurable_maps(d2, d2).size() == 4);
    // Maps out of an indiscrete pair into a separated space are constant.
    FinMeasSpace ind = FinMeasSpace::indiscrete({"u", "v"});
    CHECK(enumerate_measurable_maps(ind, d2).size() == 2);

    FunctionSpace fs = hom_and_function_space(d2, d2);
    CHECK(fs.maps.size() == 4);
    CHECK(fs.space.separated());
}

TEST_CASE("hom bijection through the separation quotient") {
    FinMeasSpace y = FinMeasSpace::discrete({"a", "b"});
    for (const auto& x : {nonsep3(), FinMeasSpace::indiscrete({"u", "v"}),
                          FinMeasSpace::discrete({"a", "b", "c"})}) {
        SuiteReport rep = check_S_adjunction(x, y);
        CHECK(rep.ok());
    }
}
