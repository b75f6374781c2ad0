#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "girylab/convex.hpp"
#include "girylab/giry.hpp"
#include "girylab/sigma.hpp"

namespace girylab {

/// An element of I^X (or 2^X when 0/1-valued): atom-keyed, hence
/// automatically measurable.
struct ProbeFunction {
    FinMeasSpace space;
    std::vector<Rat> values; // per atom, in [0,1]

    static ProbeFunction make(FinMeasSpace sp, std::vector<Rat> vals) {
        if (vals.size() != sp.atom_count())
            throw input_error("ProbeFunction: value count != atom count");
        for (const auto& v : vals)
            if (v < Rat(0) || v > Rat(1))
                throw input_error("ProbeFunction: value outside [0,1]");
        return ProbeFunction{std::move(sp), std::move(vals)};
    }
    static ProbeFunction constant(const FinMeasSpace& sp, const Rat& u) {
        return make(sp, std::vector<Rat>(sp.atom_count(), u));
    }
    /// chi_U for U given by atom indices.
    static ProbeFunction chi(const FinMeasSpace& sp, const std::set<std::size_t>& atom_idx) {
        std::vector<Rat> v(sp.atom_count(), Rat(0));
        for (auto i : atom_idx) v.at(i) = Rat(1);
        return ProbeFunction{sp, std::move(v)};
    }
    bool is_two_valued() const {
        for (const auto& v : values)
            if (!v.is_zero() && !v.is_one()) return false;
        return true;
    }
};

/// The weakly averaging affine functional of a measure: integral(P, f) =
/// sum over atoms of P(a) f(a). Affine in P and in f separately.
Rat integral(const Prob& p, const ProbeFunction& f);

/// The pair (alpha_2, alpha_I) of a natural-transformation candidate,
/// carried losslessly by its generating measure.
struct SpecElement {
    Prob carrier;

    Rat alpha_I(const ProbeFunction& f) const { return integral(carrier, f); }
    /// 1 iff the carried measure gives the set full mass.
    int alpha_2(const std::set<std::size_t>& atom_idx) const {
        Rat mass;
        for (auto i : atom_idx) mass += carrier.weights.at(i);
        return mass.is_one() ? 1 : 0;
    }
    int alpha_2(const ProbeFunction& chi) const;
};

SpecElement spec_from_measure(const Prob& p);
Prob measure_from_spec(const SpecElement& alpha);

/// Validation gate for hand-built evaluators: a set function on atom-unions
/// must be finitely additive, nonnegative and total mass 1; otherwise a
/// consistency_error is thrown.
Prob measure_from_set_function(const FinMeasSpace& space,
                               const std::function<Rat(const std::set<std::size_t>&)>& nu);

/// Weak averaging, scaling, naturality against path maps and epsilon_2, and
/// limit preservation on stabilizing decreasing chains.
SuiteReport lemma_suite_scale_preserve(const SpecElement& alpha,
                                       const std::vector<ProbeFunction>& probes);

/// The unique point a with alpha_2 = ev_a on a separated space, computed as
/// the intersection of the 0-1 pattern. The complement law (alpha_2(U)=1
/// iff alpha_2(U^c)=0) is asserted en route.
Point point_from_alpha2(const FinMeasSpace& space,
                        const std::function<int(const std::set<std::size_t>&)>& alpha2);

/// Exhaustive enumeration of the weakly-averaging affine maps 2^X -> 2,
/// each returned as the bitmask family {U : g(chi_U) = 1} over atom
/// subsets. On separated X these are exactly the evaluation maps.
std::vector<std::set<std::uint32_t>> enumerate_wa_affine_two_functionals(const FinMeasSpace& x);

/// A finitely-supported probability measure on the elements of a convex
/// space (a Prob on a finite presentation of Sigma-hat A).
struct ConvexMeasure {
    ConvexSpace space;
    std::vector<std::pair<Rat, Elem>> support;

    static ConvexMeasure make(ConvexSpace sp, std::vector<std::pair<Rat, Elem>> supp);
    static ConvexMeasure dirac(const ConvexSpace& sp, Elem e) {
        return make(sp, {{Rat(1), std::move(e)}});
    }
    Rat mass_where(const std::function<bool(const Elem&)>& pred) const {
        Rat m;
        for (const auto& [w, e] : support)
            if (pred(e)) m += w;
        return m;
    }
};

ConvexMeasure convex_comb(const ConvexMeasure& p, const ConvexMeasure& q, const Rat& alpha);
ConvexMeasure push_measure(const AffineMap& m, const ConvexMeasure& p);

/// The barycenter map: weighted ambient sum on geometric spaces, meet of
/// the support on semilattices (both via combo).
Elem counit(const ConvexSpace& a, const ConvexMeasure& p);

/// Oracle check that ev_{counit(A,P)} agrees with alpha_2 on every Boolean
/// pair of A (coordinate faces for simplices).
SuiteReport counit_oracle_check(const ConvexSpace& a, const ConvexMeasure& p, const Elem& result);

/// A measurable map X -> Sigma-hat A, atom-constant by measurability.
struct MapIntoSigma {
    FinMeasSpace dom;
    ConvexSpace cod;
    std::map<Point, Elem> graph; // total on points, constant on atoms

    static MapIntoSigma make(FinMeasSpace dom, ConvexSpace cod, std::map<Point, Elem> graph);
    const Elem& operator()(const Point& p) const { return graph.at(p); }
};

/// The adjunct f-hat = epsilon_A . P(f) applied to a measure.
Elem apply_adjunct(const MapIntoSigma& f, const Prob& p);

/// Both triangle identities, mu = Sigma(epsilon_{P(X)}), and forced-value
/// uniqueness of the adjunct, on the given probes.
SuiteReport triangle_suite(const FinMeasSpace& x, const ConvexSpace& a,
                           const std::vector<Prob>& prob_probes,
                           const std::vector<MetaProb>& meta_probes,
                           std::size_t cap = 1000000);

/// Lemma PII at desk scale: a grid family r |-> P_r is affine in r iff the
/// curried functional is; checked as P_{(1-t)r+ts} = (1-t)P_r + t P_s on
/// the grid.
SuiteReport affine_measure_path_check(const std::vector<std::pair<Rat, Prob>>& family);

} // namespace girylab
