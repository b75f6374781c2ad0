#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace girylab {

using Point = std::string;
using PointSet = std::set<Point>;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite measurable space: ordered point set plus the atom partition of
/// its sigma-algebra. Measurable sets are exactly the unions of atoms.
/// Atoms are kept sorted by least member so equal spaces compare equal.
class FinMeasSpace {
public:
    FinMeasSpace() = default;

    static FinMeasSpace from_atoms(std::vector<Point> points,
                                   std::vector<std::vector<Point>> atoms) {
        FinMeasSpace x;
        std::sort(points.begin(), points.end());
        x.points_ = std::move(points);
        for (auto& a : atoms) std::sort(a.begin(), a.end());
        std::sort(atoms.begin(), atoms.end());
        x.atoms_ = std::move(atoms);
        x.validate();
        return x;
    }

    static FinMeasSpace discrete(std::vector<Point> points) {
        std::vector<std::vector<Point>> atoms;
        for (const auto& p : points) atoms.push_back({p});
        return from_atoms(std::move(points), std::move(atoms));
    }

    static FinMeasSpace indiscrete(std::vector<Point> points) {
        std::vector<std::vector<Point>> atoms{points};
        return from_atoms(std::move(points), std::move(atoms));
    }

    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::vector<Point>>& atoms() const { return atoms_; }
    std::size_t atom_count() const { return atoms_.size(); }

    bool has_point(const Point& p) const {
        return std::binary_search(points_.begin(), points_.end(), p);
    }

    /// Index of the atom containing p. Throws input_error on unknown point.
    std::size_t atom_of(const Point& p) const {
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (std::binary_search(atoms_[i].begin(), atoms_[i].end(), p)) return i;
        throw input_error("unknown point '" + p + "'");
    }

    /// Canonical atom key: the least member point id.
    const Point& atom_key(std::size_t i) const { return atoms_.at(i).front(); }

    std::optional<std::size_t> atom_index_by_key(const Point& key) const {
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (atoms_[i].front() == key) return i;
        return std::nullopt;
    }

    bool is_atom_union(const PointSet& s) const {
        for (const auto& atom : atoms_) {
            bool in = s.count(atom.front()) > 0;
            for (const auto& p : atom)
                if ((s.count(p) > 0) != in) return false;
        }
        for (const auto& p : s)
            if (!has_point(p)) return false;
        return true;
    }

    bool separated() const {
        for (const auto& a : atoms_)
            if (a.size() != 1) return false;
        return true;
    }

    friend bool operator==(const FinMeasSpace& a, const FinMeasSpace& b) {
        return a.points_ == b.points_ && a.atoms_ == b.atoms_;
    }

private:
    void validate() const {
        PointSet seen;
        for (const auto& a : atoms_) {
            if (a.empty()) throw input_error("empty atom");
            for (const auto& p : a) {
                if (!has_point(p)) throw input_error("atom point '" + p + "' not in carrier");
                if (!seen.insert(p).second) throw input_error("atoms overlap at '" + p + "'");
            }
        }
        if (seen.size() != points_.size()) throw input_error("atoms do not cover carrier");
        PointSet uniq(points_.begin(), points_.end());
        if (uniq.size() != points_.size()) throw input_error("duplicate point id");
    }

    std::vector<Point> points_;
    std::vector<std::vector<Point>> atoms_;
};

/// A measurable set of a space, validated as a union of atoms on construction.
struct MeasSet {
    FinMeasSpace space;
    PointSet members;

    MeasSet(FinMeasSpace sp, PointSet m) : space(std::move(sp)), members(std::move(m)) {
        if (!space.is_atom_union(members))
            throw input_error("MeasSet is not a union of atoms");
    }

    MeasSet complement() const {
        PointSet c;
        for (const auto& p : space.points())
            if (!members.count(p)) c.insert(p);
        return MeasSet(space, std::move(c));
    }
};

/// A total function between finite measurable spaces. Construction checks
/// measurability: the preimage of every codomain atom is a union of atoms.
struct MeasurableMap {
    FinMeasSpace dom;
    FinMeasSpace cod;
    std::map<Point, Point> graph;

    const Point& operator()(const Point& p) const {
        auto it = graph.find(p);
        if (it == graph.end()) throw input_error("map not defined at '" + p + "'");
        return it->second;
    }

    static MeasurableMap identity(const FinMeasSpace& x) {
        MeasurableMap f;
        f.dom = x;
        f.cod = x;
        for (const auto& p : x.points()) f.graph[p] = p;
        return f;
    }

    friend MeasurableMap compose(const MeasurableMap& g, const MeasurableMap& f) {
        if (!(f.cod == g.dom)) throw input_error("compose: space mismatch");
        MeasurableMap h;
        h.dom = f.dom;
        h.cod = g.cod;
        for (const auto& [p, q] : f.graph) h.graph[p] = g(q);
        return h;
    }

    friend bool operator==(const MeasurableMap& a, const MeasurableMap& b) {
        return a.dom == b.dom && a.cod == b.cod && a.graph == b.graph;
    }
    friend bool operator<(const MeasurableMap& a, const MeasurableMap& b) {
        return a.graph < b.graph;
    }
};

/// Pure predicate: is the given graph measurable dom -> cod?
bool is_measurable(const FinMeasSpace& dom, const FinMeasSpace& cod,
                   const std::map<Point, Point>& graph);

/// Validating constructor for MeasurableMap.
MeasurableMap make_measurable_map(FinMeasSpace dom, FinMeasSpace cod,
                                  std::map<Point, Point> graph);

/// Smallest sigma-algebra containing the generators: atoms are the blocks of
/// the coarsest partition refining every generator/complement split.
FinMeasSpace generate_sigma(const std::vector<Point>& points,
                            const std::vector<PointSet>& generators);

/// The separation quotient: X_s has the atoms of X as points, discrete
/// sigma-algebra (final sigma-algebra on a finite quotient), and q maps each
/// point to its block key.
struct Separation {
    FinMeasSpace quotient;
    MeasurableMap q;
};
Separation separate(const FinMeasSpace& x);

/// The induced map between separation quotients, [x] -> [f(x)].
MeasurableMap induced_map(const MeasurableMap& f);

/// All measurable maps X -> Y, enumerated in graph order. Throws
/// resource_error if the candidate count exceeds the cap.
std::vector<MeasurableMap> enumerate_measurable_maps(const FinMeasSpace& x,
                                                     const FinMeasSpace& y,
                                                     std::size_t cap = 1000000);

/// Canonical key for a map, used as a point id of the function space.
std::string map_key(const MeasurableMap& f);

/// The function space Y^X: all measurable maps plus the evaluation
/// sigma-algebra generated by ev_x^{-1}(atom of Y).
struct FunctionSpace {
    std::vector<MeasurableMap> maps;
    FinMeasSpace space;
};
FunctionSpace hom_and_function_space(const FinMeasSpace& x, const FinMeasSpace& y,
                                     std::size_t cap = 1000000);

} // namespace girylab

#include "girylab/report.hpp"

namespace girylab {

/// Checks g |-> g . q_X is a bijection Hom_s(X_s, Y) -> Hom(X, Y) by full
/// enumeration, and that separating twice changes nothing (idempotence).
/// Y must be separated.
SuiteReport check_S_adjunction(const FinMeasSpace& x, const FinMeasSpace& y,
                               std::size_t cap = 1000000);

} // namespace girylab
