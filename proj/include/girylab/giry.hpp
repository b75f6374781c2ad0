#pragma once

#include <vector>

#include "girylab/finmeas.hpp"
#include "girylab/rational.hpp"
#include "girylab/report.hpp"

namespace girylab {

/// A finitely-supported probability measure on a finite measurable space.
/// Weights are keyed by atom index; keying by atoms makes dirac collapse on
/// nonseparated points hold by construction.
struct Prob {
    FinMeasSpace space;
    std::vector<Rat> weights; // one per atom, sums to exactly 1

    static Prob make(FinMeasSpace sp, std::vector<Rat> w) {
        if (w.size() != sp.atom_count())
            throw input_error("Prob: weight count != atom count");
        Rat total;
        for (const auto& r : w) {
            if (r < Rat(0)) throw input_error("Prob: negative weight");
            total += r;
        }
        if (!total.is_one()) throw input_error("Prob: weights sum to " + total.str());
        return Prob{std::move(sp), std::move(w)};
    }

    static Prob dirac(const FinMeasSpace& sp, const Point& x) {
        std::vector<Rat> w(sp.atom_count(), Rat(0));
        w[sp.atom_of(x)] = Rat(1);
        return Prob{sp, std::move(w)};
    }

    Rat of(const MeasSet& u) const {
        if (!(u.space == space)) throw input_error("Prob::of: space mismatch");
        Rat total;
        for (std::size_t i = 0; i < space.atom_count(); ++i)
            if (u.members.count(space.atoms()[i].front())) total += weights[i];
        return total;
    }

    Rat of_atom_key(const Point& key) const {
        auto i = space.atom_index_by_key(key);
        if (!i) throw input_error("unknown atom key '" + key + "'");
        return weights[*i];
    }

    friend bool operator==(const Prob& a, const Prob& b) {
        return a.space == b.space && a.weights == b.weights;
    }
    friend bool operator<(const Prob& a, const Prob& b) { return a.weights < b.weights; }
};

/// (1-alpha) P + alpha Q.
Prob convex_comb(const Prob& p, const Prob& q, const Rat& alpha);

/// A Markov kernel: one Prob on cod per dom atom. Per-atom rows make the
/// measurability of x |-> P_x(U) automatic.
struct Kernel {
    FinMeasSpace dom;
    FinMeasSpace cod;
    std::vector<Prob> rows; // one per dom atom

    static Kernel make(FinMeasSpace dom, FinMeasSpace cod, std::vector<Prob> rows) {
        if (rows.size() != dom.atom_count())
            throw input_error("Kernel: row count != dom atom count");
        for (const auto& r : rows)
            if (!(r.space == cod)) throw input_error("Kernel: row space mismatch");
        return Kernel{std::move(dom), std::move(cod), std::move(rows)};
    }

    static Kernel identity(const FinMeasSpace& x) {
        std::vector<Prob> rows;
        for (std::size_t i = 0; i < x.atom_count(); ++i)
            rows.push_back(Prob::dirac(x, x.atom_key(i)));
        return Kernel{x, x, std::move(rows)};
    }

    friend bool operator==(const Kernel& a, const Kernel& b) {
        return a.dom == b.dom && a.cod == b.cod && a.rows == b.rows;
    }
};

/// A finitely-supported measure over measures: an element of G^2(X) at desk
/// scale. Listed Probs are pairwise distinct, weights positive and sum to 1.
struct MetaProb {
    FinMeasSpace base;
    std::vector<std::pair<Rat, Prob>> support;

    static MetaProb make(FinMeasSpace base, std::vector<std::pair<Rat, Prob>> supp) {
        Rat total;
        for (std::size_t i = 0; i < supp.size(); ++i) {
            if (!(supp[i].second.space == base))
                throw input_error("MetaProb: support measure on wrong base");
            if (!(supp[i].first > Rat(0))) throw input_error("MetaProb: weight must be > 0");
            total += supp[i].first;
            for (std::size_t j = i + 1; j < supp.size(); ++j)
                if (supp[i].second == supp[j].second)
                    throw input_error("MetaProb: duplicate support measure");
        }
        if (!total.is_one()) throw input_error("MetaProb: weights sum to " + total.str());
        return MetaProb{std::move(base), std::move(supp)};
    }

    static MetaProb dirac(const Prob& p) { return MetaProb{p.space, {{Rat(1), p}}}; }
};

/// Pushforward P f^{-1}.
Prob pushforward(const MeasurableMap& f, const Prob& p);

/// Pushforward of a MetaProb at both levels along f.
MetaProb push_meta(const MeasurableMap& f, const MetaProb& m);

/// Monad multiplication: averaging. mu(M)(U) = sum_i w_i P_i(U).
Prob mu(const MetaProb& m);

/// Chapman-Kolmogorov composition of kernels.
Kernel kleisli_compose(const Kernel& k1, const Kernel& k2);

/// (1-alpha) M1 + alpha M2 as MetaProbs (merging equal support measures).
MetaProb convex_comb(const MetaProb& m1, const MetaProb& m2, const Rat& alpha);

/// Left/right unit and associativity of the monad, checked exactly on the
/// given probes. Reports the first counterexample on failure.
SuiteReport monad_law_suite(const FinMeasSpace& x, const std::vector<Prob>& prob_probes,
                            const std::vector<MetaProb>& meta_probes);

} // namespace girylab
