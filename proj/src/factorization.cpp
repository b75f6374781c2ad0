#include "girylab/factorization.hpp"

#include <algorithm>

namespace girylab {

Rat integral(const Prob& p, const ProbeFunction& f) {
    if (!(p.space == f.space)) throw input_error("integral: space mismatch");
    Rat total;
    for (std::size_t i = 0; i < p.weights.size(); ++i) total += p.weights[i] * f.values[i];
    return total;
}

int SpecElement::alpha_2(const ProbeFunction& chi) const {
    if (!chi.is_two_valued()) throw input_error("alpha_2: probe is not 0/1-valued");
    std::set<std::size_t> idx;
    for (std::size_t i = 0; i < chi.values.size(); ++i)
        if (chi.values[i].is_one()) idx.insert(i);
    return alpha_2(idx);
}

SpecElement spec_from_measure(const Prob& p) { return SpecElement{p}; }

Prob measure_from_spec(const SpecElement& alpha) {
    // Recover P(U) := alpha_I(chi_U) atomwise.
    const FinMeasSpace& x = alpha.carrier.space;
    std::vector<Rat> w(x.atom_count());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = alpha.alpha_I(ProbeFunction::chi(x, {i}));
    return Prob::make(x, std::move(w));
}

Prob measure_from_set_function(const FinMeasSpace& space,
                               const std::function<Rat(const std::set<std::size_t>&)>& nu) {
    std::vector<Rat> w(space.atom_count());
    Rat total;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = nu({i});
        if (w[i] < Rat(0)) throw consistency_error("evaluator: negative mass");
        total += w[i];
    }
    if (!total.is_one()) throw consistency_error("evaluator: total mass " + total.str());
    // Finite additivity against the atom decomposition of every subset.
    std::set<std::size_t> all;
    for (std::size_t n = 0; n < (std::size_t(1) << space.atom_count()); ++n) {
        std::set<std::size_t> u;
        Rat sum;
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            if (n & (std::size_t(1) << i)) {
                u.insert(i);
                sum += w[i];
            }
        if (!(nu(u) == sum))
            throw consistency_error("evaluator: fails additivity on a partition");
    }
    (void)all;
    return Prob::make(space, std::move(w));
}

namespace {

ProbeFunction map_probe(const ProbeFunction& f, const std::function<Rat(const Rat&)>& g) {
    std::vector<Rat> v;
    v.reserve(f.values.size());
    for (const auto& r : f.values) v.push_back(g(r));
    return ProbeFunction::make(f.space, std::move(v));
}

} // namespace

SuiteReport lemma_suite_scale_preserve(const SpecElement& alpha,
                                       const std::vector<ProbeFunction>& probes) {
    SuiteReport rep;
    rep.suite = "scale-preserve";
    const FinMeasSpace& x = alpha.carrier.space;

    // Weak averaging on constants.
    bool wa = true;
    std::string wit;
    for (const Rat& u : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)})
        if (!(alpha.alpha_I(ProbeFunction::constant(x, u)) == u)) {
            wa = false;
            wit = "u=" + u.str();
        }
    rep.add("weakly averaging", wa, wit);

    // Scaling and naturality against path maps gamma_{u,v}.
    bool scale = true, nat = true, eps_nat = true;
    for (const auto& f : probes) {
        for (const Rat& v : {Rat(1, 2), Rat(1, 3), Rat(1)}) {
            auto scaled = map_probe(f, [&](const Rat& r) { return v * r; });
            if (!(alpha.alpha_I(scaled) == v * alpha.alpha_I(f))) scale = false;
        }
        for (const Rat& u : {Rat(0), Rat(1, 4)})
            for (const Rat& v : {Rat(1), Rat(1, 2)}) {
                // gamma_{u,v}(r) = (1-r) u + r v.
                auto g = [&](const Rat& r) { return (Rat(1) - r) * u + r * v; };
                if (!(alpha.alpha_I(map_probe(f, g)) == g(alpha.alpha_I(f)))) nat = false;
            }
        if (f.is_two_valued()) {
            // The epsilon_2 square: alpha_2(eps2 . f) = eps2(alpha_I(f)).
            int lhs = alpha.alpha_2(f);
            int rhs = alpha.alpha_I(f).is_one() ? 1 : 0;
            if (lhs != rhs) eps_nat = false;
        }
    }
    rep.add("scaling", scale);
    rep.add("path-map naturality", nat);
    rep.add("epsilon_2 square", eps_nat);

    // Limit preservation on stabilizing decreasing chains: on a finite
    // space every chain to the empty set stabilizes, and alpha_2 must reach
    // and stay at 0.
    bool limit = true;
    std::set<std::size_t> u;
    for (std::size_t i = 0; i < x.atom_count(); ++i) u.insert(i);
    int prev = alpha.alpha_2(u);
    while (!u.empty()) {
        u.erase(*u.begin());
        int cur = alpha.alpha_2(u);
        if (cur > prev) limit = false; // monotone along the chain
        prev = cur;
    }
    if (alpha.alpha_2(std::set<std::size_t>{}) != 0) limit = false;
    rep.add("stabilizing chains reach 0", limit);
    return rep;
}

Point point_from_alpha2(const FinMeasSpace& space,
                        const std::function<int(const std::set<std::size_t>&)>& alpha2) {
    if (!space.separated()) throw input_error("point_from_alpha2: space must be separated");
    std::set<std::size_t> everything;
    for (std::size_t i = 0; i < space.atom_count(); ++i) everything.insert(i);

    std::set<std::size_t> intersection = everything;
    for (std::size_t n = 0; n < (std::size_t(1) << space.atom_count()); ++n) {
        std::set<std::size_t> u, uc;
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            (n & (std::size_t(1) << i) ? u : uc).insert(i);
        int vu = alpha2(u), vc = alpha2(uc);
        if ((vu == 1) == (vc == 1))
            throw consistency_error("alpha_2 violates the complement law");
        if (vu == 1) {
            std::set<std::size_t> next;
            std::set_intersection(intersection.begin(), intersection.end(), u.begin(), u.end(),
                                  std::inserter(next, next.begin()));
            intersection = std::move(next);
        }
    }
    if (intersection.size() != 1)
        throw consistency_error("alpha_2 pattern has no unique point (intersection size " +
                                std::to_string(intersection.size()) + ")");
    return space.atom_key(*intersection.begin());
}

std::vector<std::set<std::uint32_t>> enumerate_wa_affine_two_functionals(const FinMeasSpace& x) {
    const std::size_t n = x.atom_count();
    if (n > 4) throw resource_error("enumerate_wa_affine_two_functionals: too many atoms");
    const std::uint32_t nmask = std::uint32_t(1) << n;      // subsets of atoms
    const std::uint64_t ngraph = std::uint64_t(1) << nmask; // candidate graphs

    std::vector<std::set<std::uint32_t>> out;
    for (std::uint64_t g = 0; g < ngraph; ++g) {
        auto val = [&](std::uint32_t u) -> int { return (g >> u) & 1; };
        // Weakly averaging: chi_empty -> 0, chi_full -> 1.
        if (val(0) != 0 || val(nmask - 1) != 1) continue;
        // Affinity in the pointwise convex structure of 2^X: interior
        // combinations are intersections.
        bool affine = true;
        for (std::uint32_t u = 0; u < nmask && affine; ++u)
            for (std::uint32_t v = 0; v < nmask && affine; ++v)
                if (val(u & v) != (val(u) & val(v))) affine = false;
        if (!affine) continue;
        // Complement law: the value on a set and on its complement must
        // differ, ruling out the principal filters at larger sets.
        bool complemented = true;
        for (std::uint32_t u = 0; u < nmask && complemented; ++u)
            if (val(u) == val((nmask - 1) & ~u)) complemented = false;
        if (!complemented) continue;
        std::set<std::uint32_t> family;
        for (std::uint32_t u = 0; u < nmask; ++u)
            if (val(u)) family.insert(u);
        out.push_back(std::move(family));
    }
    return out;
}

ConvexMeasure ConvexMeasure::make(ConvexSpace sp, std::vector<std::pair<Rat, Elem>> supp) {
    Rat total;
    for (std::size_t i = 0; i < supp.size(); ++i) {
        if (!(supp[i].first > Rat(0))) throw input_error("ConvexMeasure: weight must be > 0");
        if (!sp.contains(supp[i].second))
            throw input_error("ConvexMeasure: support point outside carrier: " +
                              elem_str(supp[i].second));
        total += supp[i].first;
        for (std::size_t j = i + 1; j < supp.size(); ++j)
            if (supp[i].second == supp[j].second)
                throw input_error("ConvexMeasure: duplicate support element");
    }
    if (!total.is_one()) throw input_error("ConvexMeasure: weights sum to " + total.str());
    std::sort(supp.begin(), supp.end(), [](const auto& a, const auto& b) {
        return elem_str(a.second) < elem_str(b.second);
    });
    return ConvexMeasure{std::move(sp), std::move(supp)};
}

ConvexMeasure convex_comb(const ConvexMeasure& p, const ConvexMeasure& q, const Rat& alpha) {
    if (!(p.space == q.space)) throw input_error("convex_comb: space mismatch");
    std::vector<std::pair<Rat, Elem>> supp;
    auto push = [&supp](const Rat& w, const Elem& e) {
        if (w.is_zero()) return;
        for (auto& [w2, e2] : supp)
            if (e2 == e) {
                w2 += w;
                return;
            }
        supp.push_back({w, e});
    };
    for (const auto& [w, e] : p.support) push((Rat(1) - alpha) * w, e);
    for (const auto& [w, e] : q.support) push(alpha * w, e);
    return ConvexMeasure::make(p.space, std::move(supp));
}

ConvexMeasure push_measure(const AffineMap& m, const ConvexMeasure& p) {
    std::vector<std::pair<Rat, Elem>> supp;
    for (const auto& [w, e] : p.support) {
        Elem img = m(e);
        bool merged = false;
        for (auto& [w2, e2] : supp)
            if (e2 == img) {
                w2 += w;
                merged = true;
            }
        if (!merged) supp.push_back({w, std::move(img)});
    }
    return ConvexMeasure::make(m.cod, std::move(supp));
}

Elem counit(const ConvexSpace& a, const ConvexMeasure& p) {
    if (!(p.space == a)) throw input_error("counit: measure lives on a different space");
    return a.combo(p.support);
}

SuiteReport counit_oracle_check(const ConvexSpace& a, const ConvexMeasure& p, const Elem& result) {
    SuiteReport rep;
    rep.suite = "counit-oracle";
    auto check_pair = [&](const std::string& name, const std::function<bool(const Elem&)>& in_part) {
        bool full_mass = p.mass_where(in_part).is_one();
        bool ev = in_part(result);
        rep.add("ev agrees on " + name, full_mass == ev,
                "alpha_2=" + std::to_string(full_mass) + " ev=" + std::to_string(ev));
    };
    if (a.finite_carrier() || a.as<IntervalQ>() || a.as<RInftySp>()) {
        for (const auto& bp : boolean_pairs(a))
            check_pair(bp.desc(), [&bp](const Elem& e) { return bp.contains(e); });
        return rep;
    }
    if (const auto* s = a.as<Simplex>()) {
        // Coordinate faces: eps2 composed with the i-th barycentric
        // functional gives the Boolean pair ({x_i = 1}, rest).
        for (int i = 0; i < s->n; ++i)
            check_pair("face x" + std::to_string(i) + "=1", [i](const Elem& e) {
                return std::get<std::vector<Rat>>(e).at(i).is_one();
            });
        return rep;
    }
    throw input_error("counit_oracle_check: unsupported space kind " + a.kind());
}

MapIntoSigma MapIntoSigma::make(FinMeasSpace dom, ConvexSpace cod, std::map<Point, Elem> graph) {
    for (const auto& p : dom.points())
        if (!graph.count(p)) throw input_error("MapIntoSigma: missing point " + p);
    for (const auto& [p, e] : graph)
        if (!cod.contains(e)) throw input_error("MapIntoSigma: value outside carrier at " + p);
    // Measurability into a separated space forces atom-constancy.
    for (const auto& atom : dom.atoms())
        for (const auto& p : atom)
            if (!(graph.at(p) == graph.at(atom.front())))
                throw input_error("MapIntoSigma: not constant on atom " + atom.front());
    return MapIntoSigma{std::move(dom), std::move(cod), std::move(graph)};
}

Elem apply_adjunct(const MapIntoSigma& f, const Prob& p) {
    if (!(p.space == f.dom)) throw input_error("adjunct: measure on wrong space");
    std::vector<std::pair<Rat, Elem>> supp;
    for (std::size_t i = 0; i < p.space.atom_count(); ++i) {
        if (p.weights[i].is_zero()) continue;
        const Elem& img = f(p.space.atoms()[i].front());
        bool merged = false;
        for (auto& [w, e] : supp)
            if (e == img) {
                w += p.weights[i];
                merged = true;
            }
        if (!merged) supp.push_back({p.weights[i], img});
    }
    return counit(f.cod, ConvexMeasure::make(f.cod, std::move(supp)));
}

namespace {

/// Enumerates all atom-constant maps X -> carrier(A) (all measurable maps
/// into the separated Sigma-hat A).
std::vector<MapIntoSigma> enumerate_maps_into(const FinMeasSpace& x, const ConvexSpace& a,
                                              std::size_t cap) {
    auto carrier = a.carrier();
    double candidates = 1;
    for (std::size_t i = 0; i < x.atom_count(); ++i) candidates *= double(carrier.size());
    if (candidates > double(cap)) throw resource_error("triangle_suite: cap exceeded");

    std::vector<MapIntoSigma> out;
    std::vector<std::size_t> choice(x.atom_count(), 0);
    while (true) {
        std::map<Point, Elem> graph;
        for (std::size_t i = 0; i < x.atom_count(); ++i)
            for (const auto& p : x.atoms()[i]) graph[p] = carrier[choice[i]];
        out.push_back(MapIntoSigma::make(x, a, std::move(graph)));
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < carrier.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size() || choice.empty()) break;
    }
    return out;
}

} // namespace

SuiteReport triangle_suite(const FinMeasSpace& x, const ConvexSpace& a,
                           const std::vector<Prob>& prob_probes,
                           const std::vector<MetaProb>& meta_probes, std::size_t cap) {
    SuiteReport rep;
    rep.suite = "triangles";

    // First triangle: epsilon_{P(X)} . P(eta_X) = id. Pushing P along eta
    // yields its dirac expansion; the barycenter in P(X) must recover P.
    bool t1 = true;
    std::string wit;
    for (const auto& p : prob_probes) {
        std::vector<std::pair<Rat, Prob>> supp;
        for (std::size_t i = 0; i < x.atom_count(); ++i)
            if (!p.weights[i].is_zero())
                supp.push_back({p.weights[i], Prob::dirac(x, x.atom_key(i))});
        if (!(mu(MetaProb::make(x, supp)) == p)) t1 = false;
    }
    rep.add("triangle: eps_{P(X)} . P(eta) = id", t1);

    // Second triangle: Sigma(eps_A) . eta_{Sigma A} = id on elements of A.
    bool t2 = true;
    if (a.finite_carrier()) {
        for (const auto& e : a.carrier())
            if (!(counit(a, ConvexMeasure::dirac(a, e)) == e)) {
                t2 = false;
                wit = elem_str(e);
            }
    } else {
        for (const Rat& r : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)})
            if (a.as<IntervalQ>() && !(counit(a, ConvexMeasure::dirac(a, r)) == Elem(r))) t2 = false;
    }
    rep.add("triangle: Sigma(eps_A) . eta = id", t2, wit);

    // mu = Sigma(eps_{P(X)}): the barycenter of a MetaProb, computed by
    // folding pairwise convex combinations of its support measures, equals
    // the averaging multiplication.
    bool mu_eq = true;
    for (const auto& m : meta_probes) {
        Prob folded = m.support[0].second;
        Rat acc_w = m.support[0].first;
        for (std::size_t i = 1; i < m.support.size(); ++i) {
            Rat denom = acc_w + m.support[i].first;
            folded = convex_comb(folded, m.support[i].second, m.support[i].first / denom);
            acc_w = denom;
        }
        if (!(folded == mu(m))) mu_eq = false;
    }
    rep.add("mu = Sigma(eps_{P(X)})", mu_eq);

    // Adjunct laws, over every measurable map f: X -> Sigma-hat A.
    if (a.finite_carrier()) {
        bool commutes = true, unique = true;
        for (const auto& f : enumerate_maps_into(x, a, cap)) {
            // Sigma(adjunct f) . eta_X = f pointwise.
            for (const auto& p : x.points())
                if (!(apply_adjunct(f, Prob::dirac(x, p)) == f(p))) commutes = false;
            // Uniqueness: affinity forces the adjunct's value on every
            // probe to the convex combination of the dirac values, so any
            // competing affine g through eta agrees.
            for (const auto& p : prob_probes) {
                std::vector<std::pair<Rat, Elem>> pairs;
                for (std::size_t i = 0; i < x.atom_count(); ++i)
                    if (!p.weights[i].is_zero())
                        pairs.push_back({p.weights[i], f(x.atoms()[i].front())});
                if (!(apply_adjunct(f, p) == a.combo(pairs))) unique = false;
            }
        }
        rep.add("adjunct commutes through eta", commutes);
        rep.add("adjunct uniqueness (forced values)", unique);
    }
    return rep;
}

SuiteReport affine_measure_path_check(const std::vector<std::pair<Rat, Prob>>& family) {
    SuiteReport rep;
    rep.suite = "affine-measure-path";
    if (family.size() < 3) throw input_error("affine_measure_path_check: need a grid of size >= 3");
    bool ok = true;
    std::string wit;
    for (const auto& [r, pr] : family)
        for (const auto& [s, ps] : family)
            for (const Rat& t : canonical_alphas()) {
                Rat target = (Rat(1) - t) * r + t * s;
                for (const auto& [u, pu] : family)
                    if (u == target) {
                        if (!(pu == convex_comb(pr, ps, t))) {
                            ok = false;
                            wit = "r=" + r.str() + " s=" + s.str() + " t=" + t.str();
                        }
                    }
            }
    rep.add("family affine in r", ok, wit);
    return rep;
}

} // namespace girylab
