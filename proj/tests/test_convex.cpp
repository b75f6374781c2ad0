#include <doctest.h>

#include <algorithm>
#include <random>

#include "girylab/convex.hpp"

using namespace girylab;

namespace {
Elem vertex(int n, int i) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = Rat(1);
    return Elem{v};
}
} // namespace

TEST_CASE("combination rules per variant") {
    ConvexSpace two = ConvexSpace::two();
    CHECK(two.cc(Elem{std::string("0")}, Elem{std::string("1")}, Rat(1, 2)) ==
          Elem{std::string("0")});
    CHECK(two.cc(Elem{std::string("0")}, Elem{std::string("1")}, Rat(0)) ==
          Elem{std::string("0")});
    CHECK(two.cc(Elem{std::string("0")}, Elem{std::string("1")}, Rat(1)) ==
          Elem{std::string("1")});

    ConvexSpace r = ConvexSpace::rinfty();
    CHECK(r.cc(Elem{ExtRat::finite(Rat(5))}, Elem{ExtRat::infinity()}, Rat(1, 2)) ==
          Elem{ExtRat::infinity()});
    CHECK(r.cc(Elem{ExtRat::finite(Rat(5))}, Elem{ExtRat::infinity()}, Rat(0)) ==
          Elem{ExtRat::finite(Rat(5))});
    CHECK(r.cc(Elem{ExtRat::finite(Rat(1))}, Elem{ExtRat::finite(Rat(3))}, Rat(1, 2)) ==
          Elem{ExtRat::finite(Rat(2))});

    ConvexSpace s = ConvexSpace::simplex(3);
    CHECK(s.cc(vertex(3, 0), vertex(3, 1), Rat(1, 2)) ==
          Elem{std::vector<Rat>{Rat(1, 2), Rat(1, 2), Rat(0)}});

    ConvexSpace i = ConvexSpace::intervalQ();
    CHECK(i.cc(Elem{Rat(0)}, Elem{Rat(1)}, Rat(1, 3)) == Elem{Rat(1, 3)});
}

TEST_CASE("finite convex sums") {
    ConvexSpace two = ConvexSpace::two();
    CHECK(two.combo({{Rat(1, 3), Elem{std::string("0")}}, {Rat(2, 3), Elem{std::string("1")}}}) ==
          Elem{std::string("0")});
    CHECK(two.combo({{Rat(1), Elem{std::string("1")}}}) == Elem{std::string("1")});

    ConvexSpace s = ConvexSpace::simplex(3);
    CHECK(s.combo({{Rat(1, 6), vertex(3, 0)}, {Rat(1, 3), vertex(3, 1)}, {Rat(1, 2), vertex(3, 2)}}) ==
          Elem{std::vector<Rat>{Rat(1, 6), Rat(1, 3), Rat(1, 2)}});

    CHECK_THROWS_AS(s.combo({{Rat(1, 2), vertex(3, 0)}}), input_error);
}

TEST_CASE("combo invariant under permutation of its pairs") {
    ConvexSpace s = ConvexSpace::simplex(3);
    std::vector<std::pair<Rat, Elem>> pairs = {{Rat(1, 6), vertex(3, 0)},
                                               {Rat(1, 3), vertex(3, 1)},
                                               {Rat(1, 2), vertex(3, 2)}};
    Elem base = s.combo(pairs);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(pairs.begin(), pairs.end(), rng);
        CHECK(s.combo(pairs) == base);
    }
    ConvexSpace c = ConvexSpace::chain({"p", "q", "r"});
    std::vector<std::pair<Rat, Elem>> sl = {{Rat(1, 4), Elem{std::string("q")}},
                                            {Rat(1, 4), Elem{std::string("r")}},
                                            {Rat(1, 2), Elem{std::string("r")}}};
    Elem meet = c.combo(sl);
    CHECK(meet == Elem{std::string("q")});
    for (int i = 0; i < 10; ++i) {
        std::shuffle(sl.begin(), sl.end(), rng);
        CHECK(c.combo(sl) == meet);
    }
}

TEST_CASE("semilattice combo is the meet of the support, weights ignored") {
    ConvexSpace c = ConvexSpace::chain({"p", "q", "r"});
    for (const Rat& w : {Rat(1, 4), Rat(1, 2), Rat(3, 4)})
        CHECK(c.combo({{w, Elem{std::string("p")}}, {Rat(1) - w, Elem{std::string("r")}}}) ==
              Elem{std::string("p")});
}

TEST_CASE("the interval-to-2 collapse map") {
    AffineMap e2 = epsilon2();
    CHECK(e2(Elem{Rat(1, 2)}) == Elem{std::string("0")});
    CHECK(e2(Elem{Rat(0)}) == Elem{std::string("0")});
    CHECK(e2(Elem{Rat(1)}) == Elem{std::string("1")});

    std::vector<AffinityProbe> probes;
    for (int pd = 1; pd <= 6; ++pd)
        for (int pn = 0; pn <= pd; ++pn)
            for (int qn = 0; qn <= pd; ++qn)
                probes.push_back({Elem{Rat(pn, pd)}, Elem{Rat(qn, pd)}, Rat(1, 3)});
    CHECK(is_affine(e2, probes));
}

TEST_CASE("affinity checks") {
    ConvexSpace two = ConvexSpace::two();
    AffineMap neg = AffineMap::table(
        two, two,
        {{Elem{std::string("0")}, Elem{std::string("1")}},
         {Elem{std::string("1")}, Elem{std::string("0")}}});
    CHECK_FALSE(is_affine(neg));
    CHECK(is_affine(AffineMap::constant(two, two, Elem{std::string("0")})));
    CHECK(is_affine(AffineMap::identity(two)));

    AffineMap id_i = AffineMap::identity(ConvexSpace::intervalQ());
    std::vector<AffinityProbe> probes = {{Elem{Rat(1, 4)}, Elem{Rat(3, 4)}, Rat(1, 2)}};
    CHECK(is_affine(id_i, probes));

    // Path maps are affine on rational grids.
    ConvexSpace s = ConvexSpace::simplex(2);
    AffineMap path = AffineMap::path(s, vertex(2, 0), vertex(2, 1));
    std::vector<AffinityProbe> grid;
    for (int pd = 1; pd <= 6; ++pd)
        for (int pn = 0; pn <= pd; ++pn)
            for (int qn = 0; qn <= pd; ++qn)
                for (const Rat& al : canonical_alphas())
                    grid.push_back({Elem{Rat(pn, pd)}, Elem{Rat(qn, pd)}, al});
    CHECK(is_affine(path, grid));
}

TEST_CASE("axiom suite") {
    CHECK(axiom_suite(ConvexSpace::two()).ok());
    CHECK(axiom_suite(ConvexSpace::chain({"a", "b", "c"})).ok());
    std::vector<std::tuple<Elem, Elem, Elem>> triples = {
        {vertex(3, 0), vertex(3, 1), vertex(3, 2)},
        {vertex(3, 1), vertex(3, 1), vertex(3, 0)}};
    CHECK(axiom_suite(ConvexSpace::simplex(3), triples).ok());
    std::vector<std::tuple<Elem, Elem, Elem>> itr = {
        {Elem{Rat(0)}, Elem{Rat(1, 2)}, Elem{Rat(1)}},
        {Elem{Rat(1, 3)}, Elem{Rat(1, 3)}, Elem{Rat(2, 3)}}};
    CHECK(axiom_suite(ConvexSpace::intervalQ(), itr).ok());
    std::vector<std::tuple<Elem, Elem, Elem>> rtr = {
        {Elem{ExtRat::finite(Rat(0))}, Elem{ExtRat::infinity()}, Elem{ExtRat::finite(Rat(2))}}};
    CHECK(axiom_suite(ConvexSpace::rinfty(), rtr).ok());

    // Negative control: a table that is not associative slips past the
    // factory only by constructing the payload directly.
    Semilattice bad;
    bad.elems = {"a", "b", "c"};
    for (const auto& e : bad.elems) bad.meet_table[{e, e}] = e;
    bad.meet_table[{"a", "b"}] = "c";
    bad.meet_table[{"b", "a"}] = "c";
    bad.meet_table[{"a", "c"}] = "b";
    bad.meet_table[{"c", "a"}] = "b";
    bad.meet_table[{"b", "c"}] = "a";
    bad.meet_table[{"c", "b"}] = "a";
    CHECK_THROWS_AS(ConvexSpace::semilattice(bad.elems, bad.meet_table), input_error);
    CHECK_FALSE(axiom_suite(ConvexSpace(ConvexSpace::Payload{bad})).ok());
}

TEST_CASE("affine map enumeration") {
    ConvexSpace two = ConvexSpace::two();
    CHECK(hom_enum(two, two).size() == 3);
    ConvexSpace single = ConvexSpace::chain({"s"});
    CHECK(hom_enum(two, single).size() == 1);
    // Chains into 2: constants plus the upward-closed characteristics.
    CHECK(hom_enum(ConvexSpace::chain({"a", "b", "c"}), two).size() == 4);
}

TEST_CASE("polytopes") {
    std::vector<std::vector<Rat>> gens = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    ConvexSpace p = ConvexSpace::polytope(2, gens);
    Elem mid = p.cc(Elem{gens[1]}, Elem{gens[2]}, Rat(1, 2));
    CHECK(mid == Elem{std::vector<Rat>{Rat(1, 2), Rat(1, 2)}});
}

TEST_CASE("quotients respect combination") {
    ConvexSpace two = ConvexSpace::two();
    ConvexSpace q = ConvexSpace::quotient(
        two, {{Elem{std::string("0")}, Elem{std::string("1")}}});
    CHECK(q.carrier().size() == 1);
}

TEST_CASE("midpoint-affine grid tables are paths") {
    // On the dyadic grid {0,1/4,1/2,3/4,1} every table passing the
    // midpoint probes interpolates its endpoints.
    std::vector<Rat> grid = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
    ConvexSpace i = ConvexSpace::intervalQ();
    std::vector<std::size_t> pick(grid.size(), 0);
    int affine_count = 0;
    bool all_paths = true;
    while (true) {
        std::map<Elem, Elem> graph;
        for (std::size_t k = 0; k < grid.size(); ++k) graph[Elem{grid[k]}] = Elem{grid[pick[k]]};
        AffineMap t = AffineMap::table(i, i, graph);
        std::vector<AffinityProbe> probes;
        for (std::size_t a = 0; a < grid.size(); ++a)
            for (std::size_t b = 0; b < grid.size(); ++b) {
                Rat mid = (grid[a] + grid[b]) * Rat(1, 2);
                if (std::find(grid.begin(), grid.end(), mid) != grid.end())
                    probes.push_back({Elem{grid[a]}, Elem{grid[b]}, Rat(1, 2)});
            }
        if (is_affine(t, probes)) {
            ++affine_count;
            AffineMap path = AffineMap::path(i, graph.at(Elem{Rat(0)}), graph.at(Elem{Rat(1)}));
            for (const Rat& r : grid)
                if (!(t(Elem{r}) == path(Elem{r}))) all_paths = false;
        }
        std::size_t k = 0;
        for (;; ++k) {
            if (k == grid.size()) break;
            if (++pick[k] < grid.size()) break;
            pick[k] = 0;
        }
        if (k == grid.size()) break;
    }
    CHECK(affine_count > 0);
    CHECK(all_paths);
}
