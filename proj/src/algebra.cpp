#include "girylab/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "girylab/probes.hpp"
#include "girylab/sigma.hpp"

namespace girylab {

namespace {

// Pushforward of a tower along h itself: G(h)(M).
Prob push_along_h(const GiryAlgebra& alg, const MetaProb& m) {
    std::vector<Rat> w(alg.space.atom_count(), Rat(0));
    for (const auto& [wt, p] : m.support) {
        auto idx = alg.space.atom_index_by_key(alg.h(p));
        if (!idx) throw consistency_error("algebra: h returned a non-atom-key value");
        w[*idx] += wt;
    }
    return Prob::make(alg.space, std::move(w));
}

std::string law_violation(const GiryAlgebra& alg, const std::vector<MetaProb>& meta_probes) {
    for (std::size_t i = 0; i < alg.space.atom_count(); ++i) {
        const Point& key = alg.space.atom_key(i);
        Point got = alg.h(Prob::dirac(alg.space, key));
        if (got != key) return "unit law: h(dirac " + key + ") = " + got;
    }
    for (const auto& m : meta_probes) {
        if (alg.h(mu(m)) != alg.h(push_along_h(alg, m)))
            return "multiplication law: h(mu(M)) != h(G(h)(M)) for a probe tower";
    }
    return "";
}

} // namespace

GiryAlgebra make_algebra(FinMeasSpace space, std::function<Point(const Prob&)> h,
                         const std::vector<MetaProb>& meta_probes) {
    GiryAlgebra alg{std::move(space), std::move(h)};
    std::string bad = law_violation(alg, meta_probes);
    if (!bad.empty()) throw consistency_error("make_algebra: " + bad);
    return alg;
}

SuiteReport algebra_law_suite(const GiryAlgebra& alg, const std::vector<MetaProb>& meta_probes) {
    SuiteReport rep;
    rep.suite = "algebra-laws";
    std::string bad = law_violation(alg, meta_probes);
    rep.add("unit and multiplication laws", bad.empty(), bad);
    return rep;
}

GiryAlgebra algebra_from_convex(const ConvexSpace& a) {
    if (!a.finite_carrier())
        throw input_error("algebra_from_convex: finite carrier required");
    SigmaDescriptor d = sigma_functor(a, SigmaVariant::Join);
    if (!d.explicit_space || !d.explicit_space->separated())
        throw input_error("algebra_from_convex: induced sigma-algebra is not discrete");
    FinMeasSpace space = *d.explicit_space;

    std::map<Point, Elem> by_key;
    for (const auto& e : a.carrier()) by_key[elem_str(e)] = e;

    auto h = [space, a, by_key](const Prob& p) -> Point {
        if (!(p.space == space)) throw input_error("algebra h: measure on the wrong space");
        std::vector<std::pair<Rat, Elem>> support;
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            if (!p.weights[i].is_zero())
                support.push_back({p.weights[i], by_key.at(space.atom_key(i))});
        return elem_str(a.combo(support));
    };

    auto pool = enumerate_probs(space, 2);
    auto metas = enumerate_metaprobs(space, pool, 2, 2);
    return make_algebra(std::move(space), std::move(h), metas);
}

namespace {

const std::vector<Rat>& interior_alphas() {
    static const std::vector<Rat> a = {Rat(1, 3), Rat(1, 2), Rat(2, 3)};
    return a;
}

// Affine maps out of G(X) determined by their dirac values: evaluate as the
// codomain combination of per-atom values weighted by the measure.
Elem extend_by_combination(const ConvexSpace& b, const std::vector<Elem>& dirac_values,
                           const Prob& p) {
    std::vector<std::pair<Rat, Elem>> pairs;
    for (std::size_t i = 0; i < p.weights.size(); ++i)
        if (!p.weights[i].is_zero()) pairs.push_back({p.weights[i], dirac_values[i]});
    return b.combo(pairs);
}

} // namespace

Coequalizer coequalizer(const GiryAlgebra& alg, const std::vector<Prob>& prob_probes,
                        const std::vector<MetaProb>& meta_probes) {
    Coequalizer out;
    out.algebra = alg;
    out.report.suite = "coequalizer";
    const FinMeasSpace& x = alg.space;
    const std::size_t n = x.atom_count();

    // The combination h induces on two-point measures must not depend on
    // the interior parameter; its value at any interior alpha is the meet.
    bool indep = true;
    std::string indep_witness;
    std::map<std::pair<std::string, std::string>, std::string> meet;
    std::vector<std::string> keys;
    for (std::size_t i = 0; i < n; ++i) keys.push_back(x.atom_key(i));
    for (std::size_t i = 0; i < n && indep; ++i) {
        for (std::size_t j = 0; j < n && indep; ++j) {
            Prob da = Prob::dirac(x, keys[i]);
            Prob db = Prob::dirac(x, keys[j]);
            std::string first;
            for (const Rat& al : interior_alphas()) {
                std::string c = alg.h(convex_comb(da, db, al));
                if (first.empty()) first = c;
                else if (c != first) {
                    indep = false;
                    indep_witness = keys[i] + "," + keys[j] + ": " + first + " vs " + c;
                    break;
                }
            }
            meet[{keys[i], keys[j]}] = first;
        }
    }
    out.report.add("induced combination is alpha-independent", indep, indep_witness);
    if (!indep) return out;

    try {
        out.quotient = ConvexSpace::semilattice(keys, meet);
    } catch (const input_error& e) {
        out.report.add("induced combination satisfies the semilattice axioms", false, e.what());
        return out;
    }
    out.report.add("induced combination satisfies the semilattice axioms", true);

    // q coforks the pair (averaging, pushforward along h).
    bool coforks = true;
    for (const auto& m : meta_probes)
        if (alg.h(mu(m)) != alg.h(push_along_h(alg, m))) {
            coforks = false;
            break;
        }
    out.report.add("q . averaging = q . pushforward(h) on probe towers", coforks);

    // Universal property against enumerated competitors: every map out of
    // G(X) that coforks the same pair factors through q, uniquely because q
    // hits every class on a dirac.
    std::vector<ConvexSpace> codomains = {ConvexSpace::two(),
                                          ConvexSpace::chain({"p", "q", "r"})};
    bool universal = true;
    std::string universal_witness;
    std::size_t coforking_count = 0;
    for (const auto& b : codomains) {
        auto bc = b.carrier();
        std::vector<std::size_t> pick(n, 0);
        bool done = false;
        while (!done && universal) {
            std::vector<Elem> dvals;
            for (std::size_t i = 0; i < n; ++i) dvals.push_back(bc[pick[i]]);

            bool coforking = true;
            for (const auto& m : meta_probes) {
                Elem left = extend_by_combination(b, dvals, mu(m));
                Elem right = extend_by_combination(b, dvals, push_along_h(alg, m));
                if (!(left == right)) {
                    coforking = false;
                    break;
                }
            }
            if (coforking) {
                ++coforking_count;
                // The factoring map is forced on diracs; check it is affine
                // and closes the triangle on the probe measures.
                std::map<Elem, Elem> graph;
                for (std::size_t i = 0; i < n; ++i) graph[Elem{keys[i]}] = dvals[i];
                AffineMap m_fac = AffineMap::table(out.quotient, b, graph);
                if (!is_affine(m_fac)) {
                    universal = false;
                    universal_witness = "forced factoring map is not affine";
                    break;
                }
                for (const auto& p : prob_probes) {
                    Elem through_q = m_fac(Elem{alg.h(p)});
                    Elem direct = extend_by_combination(b, dvals, p);
                    if (!(through_q == direct)) {
                        universal = false;
                        universal_witness = "factoring triangle fails on a probe measure";
                        break;
                    }
                }
            }

            for (std::size_t i = 0;; ++i) {
                if (i == n) {
                    done = true;
                    break;
                }
                if (++pick[i] < bc.size()) break;
                pick[i] = 0;
            }
        }
    }
    out.report.add("coforking competitors factor through q",
                   universal, universal_witness);
    out.report.add("factorization unique (q surjective on diracs)", true,
                   std::to_string(coforking_count) + " coforking maps checked");
    return out;
}

Point coeq_q(const Coequalizer& c, const Prob& p) { return c.algebra.h(p); }

SuiteReport theta_check(const GiryAlgebra& alg, const std::vector<Prob>& prob_probes,
                        const std::vector<MetaProb>& meta_probes) {
    SuiteReport rep;
    rep.suite = "theta";
    Coequalizer coeq = coequalizer(alg, prob_probes, meta_probes);
    if (!coeq.report.ok()) {
        const CheckRecord* bad = coeq.report.first_failure();
        rep.add("coequalizer construction", false, bad ? bad->id : "");
        return rep;
    }
    rep.add("coequalizer construction", true);

    const FinMeasSpace& x = alg.space;
    auto carrier = coeq.quotient.carrier();

    // theta sends a point to the class of its dirac.
    std::map<Point, Point> graph;
    std::set<Point> image;
    for (const auto& p : x.points()) {
        Point cls = alg.h(Prob::dirac(x, p));
        graph[p] = cls;
        image.insert(cls);
    }
    rep.add("theta hits every class and only classes",
            image.size() == carrier.size() && image.size() == x.atom_count(),
            std::to_string(image.size()) + " classes hit");

    SigmaDescriptor qd = sigma_functor(coeq.quotient, SigmaVariant::Join);
    if (!qd.explicit_space) {
        rep.add("quotient sigma-algebra explicit", false);
        return rep;
    }
    const FinMeasSpace& qs = *qd.explicit_space;
    rep.add("theta measurable", is_measurable(x, qs, graph));

    // Inverse at atom level: class -> the atom key of its dirac preimage.
    std::map<Point, Point> inv;
    for (std::size_t i = 0; i < x.atom_count(); ++i) inv[graph.at(x.atom_key(i))] = x.atom_key(i);
    rep.add("theta inverse measurable",
            inv.size() == x.atom_count() && is_measurable(qs, x, inv));

    // Algebra square: theta(h(P)) equals the quotient barycenter of the
    // pushforward of P along theta.
    bool square = true;
    std::string square_witness;
    for (const auto& p : prob_probes) {
        std::vector<std::pair<Rat, Elem>> pushed;
        for (std::size_t i = 0; i < x.atom_count(); ++i)
            if (!p.weights[i].is_zero())
                pushed.push_back({p.weights[i], Elem{graph.at(x.atom_key(i))}});
        Elem bary = coeq.quotient.combo(pushed);
        Point lhs = graph.at(alg.h(p));
        if (!(Elem{lhs} == bary)) {
            square = false;
            square_witness = "theta(h(P)) = " + lhs + " vs barycenter " + elem_str(bary);
            break;
        }
    }
    rep.add("algebra square commutes", square, square_witness);
    return rep;
}

SuiteReport equivalence_roundtrip(const ConvexSpace& a, int max_den, int max_support) {
    SuiteReport rep;
    rep.suite = "equivalence-roundtrip";

    GiryAlgebra alg = algebra_from_convex(a);
    auto pool = enumerate_probs(alg.space, max_den);
    auto metas = enumerate_metaprobs(alg.space, pool, max_support, max_den);

    Coequalizer coeq = coequalizer(alg, pool, metas);
    rep.merge(coeq.report);
    if (!coeq.report.ok()) return rep;
    rep.merge(theta_check(alg, pool, metas));

    // The quotient is affinely isomorphic to the original space: brute-force
    // the bijections between carriers.
    auto qc = coeq.quotient.carrier();
    auto ac = a.carrier();
    bool iso_found = false;
    std::string iso_witness;
    if (qc.size() == ac.size()) {
        std::vector<std::size_t> perm(ac.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::map<std::string, std::size_t> q_index;
        for (std::size_t i = 0; i < qc.size(); ++i) q_index[elem_str(qc[i])] = i;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < qc.size() && ok; ++i)
                for (std::size_t j = 0; j < qc.size() && ok; ++j)
                    for (const Rat& al : interior_alphas()) {
                        Elem qm = coeq.quotient.cc(qc[i], qc[j], al);
                        Elem am = a.cc(ac[perm[i]], ac[perm[j]], al);
                        if (!(ac[perm[q_index.at(elem_str(qm))]] == am)) {
                            ok = false;
                            break;
                        }
                    }
            if (ok) {
                iso_found = true;
                std::ostringstream os;
                for (std::size_t i = 0; i < qc.size(); ++i) {
                    if (i) os << ", ";
                    os << elem_str(qc[i]) << " -> " << elem_str(ac[perm[i]]);
                }
                iso_witness = os.str();
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    rep.add("quotient affinely isomorphic to the source", iso_found, iso_witness);

    // Rebuilding the algebra from the quotient gives the same structure map
    // (theta is the identity relabeling here: classes are keyed by the
    // elements they contain).
    GiryAlgebra alg2 = algebra_from_convex(coeq.quotient);
    bool same_space = alg2.space == alg.space;
    rep.add("rebuilt algebra lives on the same space", same_space);
    if (same_space) {
        bool agree = true;
        for (const auto& p : pool)
            if (alg2.h(p) != alg.h(p)) {
                agree = false;
                break;
            }
        rep.add("rebuilt structure map agrees on probes", agree);
    }
    return rep;
}

} // namespace girylab
