#include "girylab/convex.hpp"

#include <algorithm>
#include <sstream>

namespace girylab {

std::string elem_str(const Elem& e) {
    struct V {
        std::string operator()(const Rat& r) const { return r.str(); }
        std::string operator()(const std::vector<Rat>& v) const {
            std::ostringstream os;
            os << "(";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",";
                os << v[i].str();
            }
            os << ")";
            return os.str();
        }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(const ExtRat& x) const { return x.inf ? "inf" : x.value.str(); }
    };
    return std::visit(V{}, e);
}

const std::string& Semilattice::meet(const std::string& a, const std::string& b) const {
    if (a == b) return a;
    auto it = meet_table.find({a, b});
    if (it == meet_table.end()) it = meet_table.find({b, a});
    if (it == meet_table.end()) throw input_error("semilattice: no meet for (" + a + "," + b + ")");
    return it->second;
}

bool operator==(const QuotientSp& a, const QuotientSp& b) {
    bool base_eq = (a.base == b.base) || (a.base && b.base && *a.base == *b.base);
    return base_eq && a.classes == b.classes;
}

ConvexSpace ConvexSpace::simplex(int n) {
    if (n <= 0) throw input_error("simplex: n must be positive");
    return ConvexSpace(Payload{Simplex{n}});
}

ConvexSpace ConvexSpace::polytope(int dim, std::vector<std::vector<Rat>> generators) {
    if (dim <= 0 || generators.empty()) throw input_error("polytope: need dim > 0 and generators");
    for (const auto& g : generators)
        if (int(g.size()) != dim) throw input_error("polytope: generator dimension mismatch");
    return ConvexSpace(Payload{Polytope{dim, std::move(generators)}});
}

ConvexSpace ConvexSpace::semilattice(
    std::vector<std::string> elems,
    std::map<std::pair<std::string, std::string>, std::string> meet) {
    std::sort(elems.begin(), elems.end());
    Semilattice s{std::move(elems), std::move(meet)};
    std::set<std::string> members(s.elems.begin(), s.elems.end());
    if (members.size() != s.elems.size()) throw input_error("semilattice: duplicate element");
    for (const auto& a : s.elems)
        for (const auto& b : s.elems) {
            const std::string& m = s.meet(a, b);
            if (!members.count(m)) throw input_error("semilattice: meet outside carrier");
            if (s.meet(a, b) != s.meet(b, a)) throw input_error("semilattice: meet not commutative");
        }
    for (const auto& a : s.elems)
        if (s.meet(a, a) != a) throw input_error("semilattice: meet not idempotent");
    for (const auto& a : s.elems)
        for (const auto& b : s.elems)
            for (const auto& c : s.elems)
                if (s.meet(s.meet(a, b), c) != s.meet(a, s.meet(b, c)))
                    throw input_error("semilattice: meet not associative");
    return ConvexSpace(Payload{std::move(s)});
}

ConvexSpace ConvexSpace::chain(std::vector<std::string> elems) {
    std::map<std::pair<std::string, std::string>, std::string> meet;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            meet[{elems[i], elems[j]}] = elems[std::min(i, j)];
    return semilattice(std::move(elems), std::move(meet));
}

ConvexSpace ConvexSpace::two() { return chain({"0", "1"}); }

ConvexSpace ConvexSpace::quotient(const ConvexSpace& base, std::vector<std::vector<Elem>> classes) {
    if (!base.finite_carrier()) throw input_error("quotient: base must have a finite carrier");
    auto carrier = base.carrier();
    std::set<std::string> seen;
    std::size_t covered = 0;
    for (auto& cls : classes) {
        if (cls.empty()) throw input_error("quotient: empty class");
        std::sort(cls.begin(), cls.end(),
                  [&](const Elem& a, const Elem& b) { return elem_str(a) < elem_str(b); });
        for (const auto& e : cls) {
            if (!base.contains(e)) throw input_error("quotient: class member outside base");
            if (!seen.insert(elem_str(e)).second) throw input_error("quotient: classes overlap");
            ++covered;
        }
    }
    if (covered != carrier.size()) throw input_error("quotient: classes do not cover base");
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return elem_str(a.front()) < elem_str(b.front());
    });

    QuotientSp q{std::make_shared<ConvexSpace>(base), std::move(classes)};
    auto class_of = [&q](const Elem& e) -> std::size_t {
        for (std::size_t i = 0; i < q.classes.size(); ++i)
            for (const auto& m : q.classes[i])
                if (m == e) return i;
        throw consistency_error("quotient: element escaped classes");
    };
    // Congruence check: the class of a combination must not depend on the
    // chosen representatives.
    for (const auto& cls_a : q.classes)
        for (const auto& cls_b : q.classes)
            for (const Rat& al : canonical_alphas()) {
                std::size_t expect = class_of(base.cc(cls_a.front(), cls_b.front(), al));
                for (const auto& a : cls_a)
                    for (const auto& b : cls_b)
                        if (class_of(base.cc(a, b, al)) != expect)
                            throw input_error("quotient: partition is not a congruence");
            }
    return ConvexSpace(Payload{std::move(q)});
}

std::string ConvexSpace::kind() const {
    struct V {
        std::string operator()(const Simplex&) const { return "simplex"; }
        std::string operator()(const Polytope&) const { return "polytope"; }
        std::string operator()(const Semilattice&) const { return "semilattice"; }
        std::string operator()(const IntervalQ&) const { return "intervalQ"; }
        std::string operator()(const RInftySp&) const { return "rinfty"; }
        std::string operator()(const QuotientSp&) const { return "quotient"; }
    };
    return std::visit(V{}, payload_);
}

bool ConvexSpace::finite_carrier() const {
    return as<Semilattice>() != nullptr || as<QuotientSp>() != nullptr;
}

std::vector<Elem> ConvexSpace::carrier() const {
    if (const auto* s = as<Semilattice>()) {
        std::vector<Elem> out;
        for (const auto& e : s->elems) out.push_back(e);
        return out;
    }
    if (const auto* q = as<QuotientSp>()) {
        std::vector<Elem> out;
        for (const auto& cls : q->classes) out.push_back(elem_str(cls.front()));
        return out;
    }
    throw input_error("carrier(): infinite carrier");
}

bool ConvexSpace::contains(const Elem& e) const {
    struct V {
        const ConvexSpace& sp;
        bool operator()(const Simplex& s) const {
            const auto* v = std::get_if<std::vector<Rat>>(&el);
            if (!v || int(v->size()) != s.n) return false;
            Rat sum;
            for (const auto& r : *v) {
                if (r < Rat(0)) return false;
                sum += r;
            }
            return sum.is_one();
        }
        bool operator()(const Polytope& p) const {
            // Elements are only ever produced by combination of generators;
            // only the ambient shape is checked here.
            const auto* v = std::get_if<std::vector<Rat>>(&el);
            return v && int(v->size()) == p.dim;
        }
        bool operator()(const Semilattice& s) const {
            const auto* id = std::get_if<std::string>(&el);
            return id && std::binary_search(s.elems.begin(), s.elems.end(), *id);
        }
        bool operator()(const IntervalQ&) const {
            const auto* r = std::get_if<Rat>(&el);
            return r && *r >= Rat(0) && *r <= Rat(1);
        }
        bool operator()(const RInftySp&) const { return std::get_if<ExtRat>(&el) != nullptr; }
        bool operator()(const QuotientSp& q) const {
            const auto* id = std::get_if<std::string>(&el);
            if (!id) return false;
            for (const auto& cls : q.classes)
                if (elem_str(cls.front()) == *id) return true;
            return false;
        }
        const Elem& el;
    };
    return std::visit(V{*this, e}, payload_);
}

namespace {

std::vector<Rat> ambient(const Elem& e) {
    if (const auto* v = std::get_if<std::vector<Rat>>(&e)) return *v;
    if (const auto* r = std::get_if<Rat>(&e)) return {*r};
    throw input_error("element has no ambient coordinates");
}

Elem from_ambient(const ConvexSpace& sp, std::vector<Rat> v) {
    if (sp.as<IntervalQ>()) {
        if (v.size() != 1) throw input_error("scalar expected");
        return v[0];
    }
    if (sp.as<RInftySp>()) {
        if (v.size() != 1) throw input_error("scalar expected");
        return ExtRat::finite(v[0]);
    }
    return v;
}

} // namespace

Elem ConvexSpace::cc(const Elem& a, const Elem& b, const Rat& alpha) const {
    if (alpha < Rat(0) || alpha > Rat(1)) throw input_error("cc: alpha not in [0,1]");
    if (!contains(a)) throw input_error("cc: first element not in carrier: " + elem_str(a));
    if (!contains(b)) throw input_error("cc: second element not in carrier: " + elem_str(b));

    if (as<Simplex>() || as<Polytope>()) {
        auto va = ambient(a), vb = ambient(b);
        std::vector<Rat> out(va.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = (Rat(1) - alpha) * va[i] + alpha * vb[i];
        return out;
    }
    if (as<IntervalQ>()) {
        const Rat& ra = std::get<Rat>(a);
        const Rat& rb = std::get<Rat>(b);
        return (Rat(1) - alpha) * ra + alpha * rb;
    }
    if (const auto* s = as<Semilattice>()) {
        if (alpha.is_zero()) return a;
        if (alpha.is_one()) return b;
        return s->meet(std::get<std::string>(a), std::get<std::string>(b));
    }
    if (as<RInftySp>()) {
        const ExtRat& xa = std::get<ExtRat>(a);
        const ExtRat& xb = std::get<ExtRat>(b);
        if (alpha.is_zero()) return a;
        if (alpha.is_one()) return b;
        if (xa.inf || xb.inf) return ExtRat::infinity();
        return ExtRat::finite((Rat(1) - alpha) * xa.value + alpha * xb.value);
    }
    if (const auto* q = as<QuotientSp>()) {
        auto rep = [&](const Elem& e) -> const Elem& {
            const std::string& key = std::get<std::string>(e);
            for (const auto& cls : q->classes)
                if (elem_str(cls.front()) == key) return cls.front();
            throw consistency_error("quotient: missing class");
        };
        Elem combined = q->base->cc(rep(a), rep(b), alpha);
        for (const auto& cls : q->classes)
            for (const auto& m : cls)
                if (m == combined) return elem_str(cls.front());
        throw consistency_error("quotient: combination escaped classes");
    }
    throw input_error("cc: unsupported space");
}

Elem ConvexSpace::combo(const std::vector<std::pair<Rat, Elem>>& pairs) const {
    if (pairs.empty()) throw input_error("combo: empty combination");
    Rat total;
    for (const auto& [w, e] : pairs) {
        if (w < Rat(0)) throw input_error("combo: negative weight");
        total += w;
    }
    if (!total.is_one()) throw input_error("combo: weights sum to " + total.str());

    Elem acc = pairs[0].second;
    Rat acc_w = pairs[0].first;
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const auto& [w, e] = pairs[i];
        Rat denom = acc_w + w;
        if (denom.is_zero()) {
            acc = e; // nothing accumulated yet; pick up the next element
            continue;
        }
        acc = cc(acc, e, w / denom);
        acc_w = denom;
    }
    return acc;
}

Elem AffineMap::operator()(const Elem& e) const {
    if (!dom.contains(e)) throw input_error("affine map: argument outside dom: " + elem_str(e));
    if (const auto* t = std::get_if<TableBody>(&body)) {
        auto it = t->graph.find(e);
        if (it == t->graph.end()) throw input_error("affine table: missing entry " + elem_str(e));
        return it->second;
    }
    if (const auto* c = std::get_if<ConstBody>(&body)) return c->value;
    if (const auto* p = std::get_if<PathBody>(&body)) {
        const Rat& r = std::get<Rat>(e);
        return cod.cc(p->a1, p->a2, r);
    }
    const auto& lin = std::get<LinearBody>(body);
    auto x = ambient(e);
    std::vector<Rat> out(lin.matrix.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (lin.matrix[i].size() != x.size()) throw input_error("linear body: dimension mismatch");
        Rat acc = lin.offset.at(i);
        for (std::size_t j = 0; j < x.size(); ++j) acc += lin.matrix[i][j] * x[j];
        out[i] = acc;
    }
    return from_ambient(cod, std::move(out));
}

AffineMap AffineMap::identity(const ConvexSpace& a) {
    if (a.finite_carrier()) {
        std::map<Elem, Elem> g;
        for (const auto& e : a.carrier()) g[e] = e;
        return table(a, a, std::move(g));
    }
    if (a.as<IntervalQ>()) return path(a, Rat(0), Rat(1));
    if (a.as<Simplex>() || a.as<Polytope>()) {
        std::size_t d = a.as<Simplex>() ? a.as<Simplex>()->n : a.as<Polytope>()->dim;
        std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
        for (std::size_t i = 0; i < d; ++i) m[i][i] = Rat(1);
        return linear(a, a, std::move(m), std::vector<Rat>(d, Rat(0)));
    }
    throw input_error("identity: unsupported space kind " + a.kind());
}

AffineMap AffineMap::constant(const ConvexSpace& dom, const ConvexSpace& cod, Elem value) {
    if (!cod.contains(value)) throw input_error("constant: value outside cod");
    return AffineMap{dom, cod, ConstBody{std::move(value)}};
}

AffineMap epsilon2() {
    // gamma_{0,1} into the 2-chain: interior alphas hit the meet 0, alpha=1
    // hits 1.
    return AffineMap::path(ConvexSpace::two(), std::string("0"), std::string("1"));
}

const std::vector<Rat>& canonical_alphas() {
    static const std::vector<Rat> alphas{Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
    return alphas;
}

std::vector<AffinityProbe> exhaustive_probes(const ConvexSpace& a) {
    auto carrier = a.carrier();
    std::vector<AffinityProbe> probes;
    for (const auto& x : carrier)
        for (const auto& y : carrier)
            for (const Rat& al : canonical_alphas()) probes.push_back({x, y, al});
    return probes;
}

bool is_affine(const AffineMap& m, const std::vector<AffinityProbe>& probes) {
    for (const auto& [a, b, al] : probes) {
        Elem lhs = m(m.dom.cc(a, b, al));
        Elem rhs = m.cod.cc(m(a), m(b), al);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool is_affine(const AffineMap& m) { return is_affine(m, exhaustive_probes(m.dom)); }

SuiteReport axiom_suite(const ConvexSpace& a,
                        const std::vector<std::tuple<Elem, Elem, Elem>>& triples) {
    SuiteReport rep;
    rep.suite = "convex-axioms";
    bool idem = true, comm = true, assoc = true;
    std::string wit_i, wit_c, wit_a;
    for (const auto& [x, y, z] : triples) {
        for (const Rat& r : canonical_alphas()) {
            if (idem && !(a.cc(x, x, r) == x)) {
                idem = false;
                wit_i = elem_str(x) + " alpha=" + r.str();
            }
            if (comm && !(a.cc(x, y, r) == a.cc(y, x, Rat(1) - r))) {
                comm = false;
                wit_c = elem_str(x) + "," + elem_str(y) + " alpha=" + r.str();
            }
            for (const Rat& s : canonical_alphas()) {
                // ((x +_r y) +_s z) = x +_u (y +_{s/u} z), u = r+s-rs.
                Rat u = r + s - r * s;
                Elem lhs = a.cc(a.cc(x, y, r), z, s);
                Elem rhs = u.is_zero() ? x : a.cc(x, a.cc(y, z, s / u), u);
                if (assoc && !(lhs == rhs)) {
                    assoc = false;
                    wit_a = elem_str(x) + "," + elem_str(y) + "," + elem_str(z) + " r=" +
                            r.str() + " s=" + s.str();
                }
            }
        }
    }
    rep.add("idempotence", idem, wit_i);
    rep.add("parametric commutativity", comm, wit_c);
    rep.add("parametric associativity", assoc, wit_a);
    return rep;
}

SuiteReport axiom_suite(const ConvexSpace& a) {
    auto carrier = a.carrier();
    std::vector<std::tuple<Elem, Elem, Elem>> triples;
    for (const auto& x : carrier)
        for (const auto& y : carrier)
            for (const auto& z : carrier) triples.push_back({x, y, z});
    return axiom_suite(a, triples);
}

std::vector<AffineMap> hom_enum(const ConvexSpace& a, const ConvexSpace& b, std::size_t cap) {
    auto ca = a.carrier();
    auto cb = b.carrier();
    double candidates = 1;
    for (std::size_t i = 0; i < ca.size(); ++i) candidates *= double(cb.size());
    if (candidates > double(cap)) throw resource_error("hom_enum: cap exceeded");

    std::vector<AffineMap> out;
    std::vector<std::size_t> choice(ca.size(), 0);
    auto probes = exhaustive_probes(a);
    while (true) {
        std::map<Elem, Elem> graph;
        for (std::size_t i = 0; i < ca.size(); ++i) graph[ca[i]] = cb[choice[i]];
        AffineMap m = AffineMap::table(a, b, std::move(graph));
        if (is_affine(m, probes)) out.push_back(std::move(m));
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < cb.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

} // namespace girylab
