#pragma once

#include <functional>
#include <vector>

#include "girylab/convex.hpp"
#include "girylab/giry.hpp"
#include "girylab/report.hpp"

namespace girylab {

/// An Eilenberg-Moore structure map for the distribution monad on a finite
/// space: every measure is sent to an atom key. make_algebra validates the
/// unit law exhaustively and the multiplication law on the given probe
/// towers, throwing consistency_error on a violation.
struct GiryAlgebra {
    FinMeasSpace space;
    std::function<Point(const Prob&)> h;
};

GiryAlgebra make_algebra(FinMeasSpace space, std::function<Point(const Prob&)> h,
                         const std::vector<MetaProb>& meta_probes);

/// Reporting variant of the same two laws.
SuiteReport algebra_law_suite(const GiryAlgebra& alg, const std::vector<MetaProb>& meta_probes);

/// The structure map a finite separated convex space carries: read the atoms
/// as elements and take the barycenter. Requires the induced sigma-algebra
/// on the carrier to be discrete.
GiryAlgebra algebra_from_convex(const ConvexSpace& a);

/// Coequalizer of averaging and the pushforward of h, presented concretely:
/// the carrier is the atom set of the algebra's space, with the combination
/// h induces on two-point measures. The report records alpha-independence of
/// that combination, the coforking identity on probe towers, and the
/// universal property against enumerated competitor maps.
struct Coequalizer {
    ConvexSpace quotient;
    GiryAlgebra algebra;
    SuiteReport report;
};

Coequalizer coequalizer(const GiryAlgebra& alg, const std::vector<Prob>& prob_probes,
                        const std::vector<MetaProb>& meta_probes);

/// The quotient map on measures: the class h assigns.
Point coeq_q(const Coequalizer& c, const Prob& p);

/// theta: the space's points into the quotient carrier via x |-> q(dirac x).
/// Checks it is a measurable bijection onto the quotient (with measurable
/// inverse) and that it intertwines h with the quotient barycenter.
SuiteReport theta_check(const GiryAlgebra& alg, const std::vector<Prob>& prob_probes,
                        const std::vector<MetaProb>& meta_probes);

/// Round trips of the equivalence: space -> algebra -> coequalizer recovers
/// the space up to affine isomorphism, and the rebuilt algebra agrees with
/// the original up to the theta relabeling. Probe towers are generated
/// internally with the given denominator and support bounds.
SuiteReport equivalence_roundtrip(const ConvexSpace& a, int max_den = 3, int max_support = 2);

} // namespace girylab
