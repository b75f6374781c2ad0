#include "girylab/giry.hpp"

#include <sstream>

namespace girylab {

namespace {

std::string prob_str(const Prob& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (i) os << ",";
        os << p.weights[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace

Prob convex_comb(const Prob& p, const Prob& q, const Rat& alpha) {
    if (!(p.space == q.space)) throw input_error("convex_comb: space mismatch");
    if (alpha < Rat(0) || alpha > Rat(1)) throw input_error("convex_comb: alpha not in [0,1]");
    std::vector<Rat> w(p.weights.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (Rat(1) - alpha) * p.weights[i] + alpha * q.weights[i];
    return Prob{p.space, std::move(w)};
}

Prob pushforward(const MeasurableMap& f, const Prob& p) {
    if (!(p.space == f.dom)) throw input_error("pushforward: space mismatch");
    std::vector<Rat> w(f.cod.atom_count(), Rat(0));
    for (std::size_t i = 0; i < f.dom.atom_count(); ++i)
        w[f.cod.atom_of(f(f.dom.atoms()[i].front()))] += p.weights[i];
    return Prob{f.cod, std::move(w)};
}

MetaProb push_meta(const MeasurableMap& f, const MetaProb& m) {
    // Push each support measure forward, merging collisions.
    std::vector<std::pair<Rat, Prob>> supp;
    for (const auto& [w, p] : m.support) {
        Prob q = pushforward(f, p);
        bool merged = false;
        for (auto& [w2, p2] : supp)
            if (p2 == q) {
                w2 += w;
                merged = true;
            }
        if (!merged) supp.push_back({w, std::move(q)});
    }
    return MetaProb::make(f.cod, std::move(supp));
}

Prob mu(const MetaProb& m) {
    std::vector<Rat> w(m.base.atom_count(), Rat(0));
    for (const auto& [wt, p] : m.support)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += wt * p.weights[i];
    return Prob{m.base, std::move(w)};
}

Kernel kleisli_compose(const Kernel& k1, const Kernel& k2) {
    if (!(k1.cod == k2.dom)) throw input_error("kleisli_compose: space mismatch");
    std::vector<Prob> rows;
    for (const auto& row : k1.rows) {
        std::vector<Rat> w(k2.cod.atom_count(), Rat(0));
        for (std::size_t b = 0; b < k2.dom.atom_count(); ++b)
            for (std::size_t c = 0; c < w.size(); ++c)
                w[c] += row.weights[b] * k2.rows[b].weights[c];
        rows.push_back(Prob{k2.cod, std::move(w)});
    }
    return Kernel{k1.dom, k2.cod, std::move(rows)};
}

MetaProb convex_comb(const MetaProb& m1, const MetaProb& m2, const Rat& alpha) {
    if (!(m1.base == m2.base)) throw input_error("convex_comb: base mismatch");
    std::vector<std::pair<Rat, Prob>> supp;
    auto push = [&supp](const Rat& w, const Prob& p) {
        if (w.is_zero()) return;
        for (auto& [w2, p2] : supp)
            if (p2 == p) {
                w2 += w;
                return;
            }
        supp.push_back({w, p});
    };
    for (const auto& [w, p] : m1.support) push((Rat(1) - alpha) * w, p);
    for (const auto& [w, p] : m2.support) push(alpha * w, p);
    return MetaProb::make(m1.base, std::move(supp));
}

SuiteReport monad_law_suite(const FinMeasSpace& x, const std::vector<Prob>& prob_probes,
                            const std::vector<MetaProb>& meta_probes) {
    SuiteReport rep;
    rep.suite = "monad-laws";
    for (const auto& p : prob_probes) {
        if (!(p.space == x)) throw input_error("monad_law_suite: probe on wrong space");
        // Right unit: mu(delta_P) = P.
        if (!(mu(MetaProb::dirac(p)) == p)) {
            rep.add("right unit", false, prob_str(p));
            return rep;
        }
        // Left unit: mu of the image of P under eta at the inner level,
        // i.e. P expanded over dirac measures, recovers P.
        std::vector<std::pair<Rat, Prob>> supp;
        for (std::size_t i = 0; i < x.atom_count(); ++i)
            if (!p.weights[i].is_zero())
                supp.push_back({p.weights[i], Prob::dirac(x, x.atom_key(i))});
        if (!(mu(MetaProb::make(x, supp)) == p)) {
            rep.add("left unit", false, prob_str(p));
            return rep;
        }
    }
    rep.add("right unit", true);
    rep.add("left unit", true);

    // Associativity via three-level towers built over pairs of probe
    // MetaProbs: averaging inner levels first or outer level first agree.
    const Rat alphas[] = {Rat(1, 3), Rat(1, 2), Rat(3, 4)};
    for (std::size_t i = 0; i < meta_probes.size(); ++i) {
        for (std::size_t j = i; j < meta_probes.size(); ++j) {
            const MetaProb& m1 = meta_probes[i];
            const MetaProb& m2 = meta_probes[j];
            for (const Rat& a : alphas) {
                Prob inner_first = convex_comb(mu(m1), mu(m2), a);
                Prob outer_first = mu(convex_comb(m1, m2, a));
                if (!(inner_first == outer_first)) {
                    rep.add("associativity", false,
                            "towers " + std::to_string(i) + "," + std::to_string(j) +
                                " alpha=" + a.str());
                    return rep;
                }
            }
        }
    }
    rep.add("associativity", true);
    return rep;
}

} // namespace girylab
