#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "girylab/finmeas.hpp"
#include "girylab/rational.hpp"
#include "girylab/report.hpp"

namespace girylab {

/// Element of the extended line (-inf, +inf]: a rational or the absorbing
/// point at infinity.
struct ExtRat {
    bool inf = false;
    Rat value;

    static ExtRat infinity() { return ExtRat{true, Rat(0)}; }
    static ExtRat finite(Rat r) { return ExtRat{false, std::move(r)}; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.inf == b.inf && (a.inf || a.value == b.value);
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf != b.inf) return b.inf; // finite < infinity
        if (a.inf) return false;
        return a.value < b.value;
    }
};

/// An element of a convex space. Which alternative is meaningful depends on
/// the space: Rat for IntervalQ, vector<Rat> for simplices/polytopes,
/// string for semilattice/quotient members, ExtRat for RInfty.
using Elem = std::variant<Rat, std::vector<Rat>, std::string, ExtRat>;

std::string elem_str(const Elem& e);

struct Simplex {
    int n = 0; // vertex count; elements are barycentric vectors of length n
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

struct Polytope {
    int dim = 0;
    std::vector<std::vector<Rat>> generators;
    friend bool operator==(const Polytope&, const Polytope&) = default;
};

/// Finite meet-semilattice: the model of discrete convex spaces. Interior
/// convex combinations are the meet.
struct Semilattice {
    std::vector<std::string> elems; // sorted
    std::map<std::pair<std::string, std::string>, std::string> meet_table;

    const std::string& meet(const std::string& a, const std::string& b) const;
    friend bool operator==(const Semilattice&, const Semilattice&) = default;
};

struct IntervalQ {
    friend bool operator==(const IntervalQ&, const IntervalQ&) = default;
};

struct RInftySp {
    friend bool operator==(const RInftySp&, const RInftySp&) = default;
};

class ConvexSpace;

/// Quotient of a finite-carrier space by a congruence, given as an element
/// partition. Elements are class keys (least member key).
struct QuotientSp {
    std::shared_ptr<const ConvexSpace> base;
    std::vector<std::vector<Elem>> classes;
    friend bool operator==(const QuotientSp& a, const QuotientSp& b);
};

class ConvexSpace {
public:
    using Payload = std::variant<Simplex, Polytope, Semilattice, IntervalQ, RInftySp, QuotientSp>;

    ConvexSpace() : payload_(IntervalQ{}) {}
    explicit ConvexSpace(Payload p) : payload_(std::move(p)) {}

    static ConvexSpace simplex(int n);
    static ConvexSpace polytope(int dim, std::vector<std::vector<Rat>> generators);
    /// Meet table is validated: idempotent, commutative, associative.
    static ConvexSpace semilattice(std::vector<std::string> elems,
                                   std::map<std::pair<std::string, std::string>, std::string> meet);
    /// A totally ordered semilattice with meet = min by list position.
    static ConvexSpace chain(std::vector<std::string> elems);
    /// The discrete two-point space: the chain 0 < 1.
    static ConvexSpace two();
    static ConvexSpace intervalQ() { return ConvexSpace(Payload{IntervalQ{}}); }
    static ConvexSpace rinfty() { return ConvexSpace(Payload{RInftySp{}}); }
    /// Quotient of a finite-carrier space; checks the congruence respects
    /// combination.
    static ConvexSpace quotient(const ConvexSpace& base, std::vector<std::vector<Elem>> classes);

    const Payload& payload() const { return payload_; }
    template <class T> const T* as() const { return std::get_if<T>(&payload_); }

    std::string kind() const;
    bool finite_carrier() const;
    /// Carrier elements in canonical order. Throws on infinite carriers.
    std::vector<Elem> carrier() const;
    /// Membership check to the extent decidable: exact for finite carriers,
    /// IntervalQ and RInfty; for Simplex/Polytope checks shape constraints
    /// (elements are always produced by combination).
    bool contains(const Elem& e) const;

    /// a +_alpha b = (1-alpha) a + alpha b per the variant's rule.
    Elem cc(const Elem& a, const Elem& b, const Rat& alpha) const;

    /// Finite convex sum, folded left-to-right through cc. Weights must be
    /// >= 0 and sum to 1.
    Elem combo(const std::vector<std::pair<Rat, Elem>>& pairs) const;

    /// Canonical printable key of an element; stable across runs.
    std::string elem_key(const Elem& e) const { return elem_str(e); }

    friend bool operator==(const ConvexSpace& a, const ConvexSpace& b) {
        return a.payload_ == b.payload_;
    }

private:
    Payload payload_;
};

/// Structure-preserving map between convex spaces.
struct TableBody {
    std::map<Elem, Elem> graph;
    friend bool operator==(const TableBody&, const TableBody&) = default;
};
struct LinearBody {
    std::vector<std::vector<Rat>> matrix; // rows x cols over ambient coords
    std::vector<Rat> offset;
    friend bool operator==(const LinearBody&, const LinearBody&) = default;
};
struct PathBody {
    Elem a1, a2; // dom = IntervalQ; r |-> a1 +_r a2 in cod
    friend bool operator==(const PathBody&, const PathBody&) = default;
};
struct ConstBody {
    Elem value;
    friend bool operator==(const ConstBody&, const ConstBody&) = default;
};

struct AffineMap {
    ConvexSpace dom;
    ConvexSpace cod;
    std::variant<TableBody, LinearBody, PathBody, ConstBody> body;

    Elem operator()(const Elem& e) const;

    static AffineMap table(ConvexSpace dom, ConvexSpace cod, std::map<Elem, Elem> graph) {
        return AffineMap{std::move(dom), std::move(cod), TableBody{std::move(graph)}};
    }
    static AffineMap path(ConvexSpace cod, Elem a1, Elem a2) {
        return AffineMap{ConvexSpace::intervalQ(), std::move(cod),
                         PathBody{std::move(a1), std::move(a2)}};
    }
    static AffineMap linear(ConvexSpace dom, ConvexSpace cod,
                            std::vector<std::vector<Rat>> m, std::vector<Rat> b) {
        return AffineMap{std::move(dom), std::move(cod), LinearBody{std::move(m), std::move(b)}};
    }
    static AffineMap identity(const ConvexSpace& a);
    static AffineMap constant(const ConvexSpace& dom, const ConvexSpace& cod, Elem value);

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// The unique non-constant affine map I -> 2: alpha |-> 0 on [0,1), 1 at 1.
AffineMap epsilon2();

using AffinityProbe = std::tuple<Elem, Elem, Rat>;

/// Canonical alpha probe set {0, 1/3, 1/2, 2/3, 1}: boundary values are
/// where semilattice combination changes branch.
const std::vector<Rat>& canonical_alphas();

/// Exhaustive probe set over carrier pairs for finite-carrier spaces.
std::vector<AffinityProbe> exhaustive_probes(const ConvexSpace& a);

/// True iff m(a +_al b) = m(a) +_al m(b) on every probe.
bool is_affine(const AffineMap& m, const std::vector<AffinityProbe>& probes);
/// Exhaustive check for finite carriers.
bool is_affine(const AffineMap& m);

/// Barycentric-algebra axioms (idempotence, parametric commutativity and
/// associativity) on probe triples.
SuiteReport axiom_suite(const ConvexSpace& a, const std::vector<std::tuple<Elem, Elem, Elem>>& triples);
SuiteReport axiom_suite(const ConvexSpace& a); // exhaustive, finite carriers

/// All affine maps between finite carriers: every graph passing exhaustive
/// is_affine. Throws resource_error above the cap.
std::vector<AffineMap> hom_enum(const ConvexSpace& a, const ConvexSpace& b,
                                std::size_t cap = 1000000);

} // namespace girylab
