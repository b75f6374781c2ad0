#pragma once

#include <random>
#include <vector>

#include "girylab/giry.hpp"

namespace girylab {

/// All Probs on x whose weights share a denominator <= max_den.
std::vector<Prob> enumerate_probs(const FinMeasSpace& x, int max_den);

/// All two-level towers with support <= max_support drawn from the pool,
/// outer weights with denominator <= max_den.
std::vector<MetaProb> enumerate_metaprobs(const FinMeasSpace& x, const std::vector<Prob>& pool,
                                          int max_support, int max_den);

Prob random_prob(const FinMeasSpace& x, std::mt19937_64& rng, int max_den = 12);
MetaProb random_metaprob(const FinMeasSpace& x, std::mt19937_64& rng, int max_support = 3,
                         int max_den = 12);

} // namespace girylab
