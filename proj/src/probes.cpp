#include "girylab/probes.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace girylab {

std::vector<Prob> enumerate_probs(const FinMeasSpace& x, int max_den) {
    const std::size_t n = x.atom_count();
    std::set<std::vector<Rat>> seen;
    std::vector<Prob> out;
    std::vector<int> parts(n, 0);
    for (int q = 1; q <= max_den; ++q) {
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
            if (i + 1 == n) {
                parts[i] = rem;
                std::vector<Rat> w;
                w.reserve(n);
                for (int p : parts) w.emplace_back(p, q);
                if (seen.insert(w).second) out.push_back(Prob::make(x, std::move(w)));
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                parts[i] = v;
                rec(i + 1, rem - v);
            }
        };
        rec(0, q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Positive integer compositions of q into k parts, as weight vectors c_i/q.
std::vector<std::vector<Rat>> positive_weightings(int k, int max_den) {
    std::set<std::vector<Rat>> seen;
    std::vector<int> parts(k, 0);
    for (int q = k; q <= max_den; ++q) {
        std::function<void(int, int)> rec = [&](int i, int rem) {
            if (i + 1 == k) {
                parts[i] = rem;
                std::vector<Rat> w;
                for (int p : parts) w.emplace_back(p, q);
                seen.insert(std::move(w));
                return;
            }
            for (int v = 1; v <= rem - (k - 1 - i); ++v) {
                parts[i] = v;
                rec(i + 1, rem - v);
            }
        };
        if (q >= k) rec(0, q);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::vector<MetaProb> enumerate_metaprobs(const FinMeasSpace& x, const std::vector<Prob>& pool,
                                          int max_support, int max_den) {
    std::vector<MetaProb> out;
    const std::size_t m = pool.size();
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!idx.empty()) {
            for (const auto& w : positive_weightings(static_cast<int>(idx.size()), max_den)) {
                std::vector<std::pair<Rat, Prob>> supp;
                for (std::size_t j = 0; j < idx.size(); ++j)
                    supp.emplace_back(w[j], pool[idx[j]]);
                out.push_back(MetaProb::make(x, std::move(supp)));
            }
        }
        if (idx.size() == static_cast<std::size_t>(max_support)) return;
        for (std::size_t i = start; i < m; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

Prob random_prob(const FinMeasSpace& x, std::mt19937_64& rng, int max_den) {
    const std::size_t n = x.atom_count();
    std::uniform_int_distribution<int> den_dist(1, max_den);
    int q = den_dist(rng);
    std::vector<int> counts(n, 0);
    std::uniform_int_distribution<std::size_t> box(0, n - 1);
    for (int b = 0; b < q; ++b) counts[box(rng)]++;
    std::vector<Rat> w;
    w.reserve(n);
    for (int c : counts) w.emplace_back(c, q);
    return Prob::make(x, std::move(w));
}

MetaProb random_metaprob(const FinMeasSpace& x, std::mt19937_64& rng, int max_support,
                         int max_den) {
    std::uniform_int_distribution<int> size_dist(1, max_support);
    int k = size_dist(rng);
    std::vector<Prob> supp;
    for (int attempts = 0; static_cast<int>(supp.size()) < k && attempts < 64; ++attempts) {
        Prob p = random_prob(x, rng, max_den);
        if (std::find(supp.begin(), supp.end(), p) == supp.end()) supp.push_back(std::move(p));
    }
    k = static_cast<int>(supp.size());
    std::uniform_int_distribution<int> den_dist(k, std::max(k, max_den));
    int q = den_dist(rng);
    std::vector<int> counts(k, 1);
    std::uniform_int_distribution<int> box(0, k - 1);
    for (int b = k; b < q; ++b) counts[box(rng)]++;
    std::vector<std::pair<Rat, Prob>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(Rat(counts[i], q), supp[i]);
    return MetaProb::make(x, std::move(pairs));
}

} // namespace girylab
