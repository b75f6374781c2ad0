#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "girylab/convex.hpp"
#include "girylab/finmeas.hpp"
#include "girylab/report.hpp"

namespace girylab {

/// A subset/complement pair of a convex space whose characteristic map into
/// 2 is affine. Finite carriers hold the part explicitly; IntervalQ and
/// RInfty use symbolic descriptors.
struct BooleanPair {
    enum class Kind { FiniteSet, Empty, Full, ZeroPoint, OnePoint, FinitePart };

    ConvexSpace space;
    Kind kind = Kind::Empty;
    std::set<std::string> part_keys; // FiniteSet only

    static BooleanPair finite(ConvexSpace sp, std::set<std::string> keys) {
        return BooleanPair{std::move(sp), Kind::FiniteSet, std::move(keys)};
    }
    static BooleanPair symbolic(ConvexSpace sp, Kind k) {
        return BooleanPair{std::move(sp), k, {}};
    }

    bool contains(const Elem& e) const;
    /// Characteristic map into 2; Table body for finite carriers.
    AffineMap chi() const;
    std::string desc() const;

    friend bool operator==(const BooleanPair&, const BooleanPair&) = default;
};

/// Exactly the parts with affine characteristic maps. Finite carriers are
/// handled by exhaustive hom_enum into 2; IntervalQ and RInfty return their
/// closed-form lists.
std::vector<BooleanPair> boolean_pairs(const ConvexSpace& a, std::size_t cap = 1000000);

enum class SigmaVariant { Sigma2, SigmaI, Join };

std::string variant_name(SigmaVariant v);

/// The sigma-algebra the Sigma functor endows a convex space with: explicit
/// for finite carriers, a generator family with a membership oracle
/// otherwise.
struct SigmaDescriptor {
    ConvexSpace source;
    SigmaVariant variant = SigmaVariant::Join;
    std::optional<FinMeasSpace> explicit_space;
    std::vector<BooleanPair> boolean_gens;
    bool interval_family = false; // the rational half-open intervals [0, u)

    bool trivial() const {
        return explicit_space ? explicit_space->atom_count() <= 1
                              : (boolean_gens.empty() && !interval_family);
    }
};

SigmaDescriptor sigma_functor(const ConvexSpace& a, SigmaVariant variant);

/// The measurable map Sigma-hat(m) between explicit descriptors of finite
/// carriers; throws if m is not measurable (it always is, asserted).
MeasurableMap sigma_map(const AffineMap& m, SigmaVariant variant = SigmaVariant::Join);

/// Lemma-style check: Sigma2(A) decomposes as the Meas-coproduct of the
/// Sigma2 of a Boolean pair's two induced subspaces.
SuiteReport mcoprod_check(const ConvexSpace& a, const BooleanPair& pair);

struct CosepWitness {
    bool ok = false;
    std::string set_desc; // the measurable set separating the pair
    std::string trace;    // which generator produced it
};

/// Finds a measurable set of the Sigma-algebra separating two distinct
/// elements: a filter characteristic for semilattices, a rescaled
/// coordinate-functional threshold for geometric spaces.
CosepWitness cosep_witness(const ConvexSpace& a, const Elem& a1, const Elem& a2);

/// For all (given) distinct pairs, cosep_witness succeeds within the
/// variant's generator family.
SuiteReport separated_check(const ConvexSpace& a, SigmaVariant variant,
                            const std::vector<std::pair<Elem, Elem>>& pairs);
/// Exhaustive pair version for finite carriers.
SuiteReport separated_check(const ConvexSpace& a, SigmaVariant variant);

} // namespace girylab
