#include "perm_groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asrep {

Perm Perm::identity(unsigned degree) {
    if (degree < 1 || degree > 5) throw std::invalid_argument("permutation degree must be in 1..5");
    Perm p;
    p.degree_ = degree;
    return p;
}

Perm Perm::from_cycles(unsigned degree,
                       std::initializer_list<std::initializer_list<unsigned>> cycles) {
    Perm p = identity(degree);
    for (const auto& cyc : cycles) {
        std::vector<unsigned> pts(cyc);
        if (pts.size() < 2) throw std::invalid_argument("cycles need at least two points");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const unsigned from = pts[i], to = pts[(i + 1) % pts.size()];
            if (from < 1 || from > degree) throw std::invalid_argument("cycle point out of range");
            if (p.img_[from - 1] != from - 1) throw std::invalid_argument("cycles must be disjoint");
            p.img_[from - 1] = to - 1;
        }
    }
    return p;
}

Perm Perm::compose(const Perm& other) const {
    Perm p = identity(degree_);
    for (unsigned i = 0; i < degree_; ++i) p.img_[i] = img_[other.img_[i]];
    return p;
}

Perm Perm::inverse() const {
    Perm p = identity(degree_);
    for (unsigned i = 0; i < degree_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return p;
}

unsigned Perm::order() const {
    unsigned n = 1;
    Perm cur = *this;
    const Perm id = identity(degree_);
    while (!(cur == id)) {
        cur = cur.compose(*this);
        ++n;
    }
    return n;
}

bool Perm::commutes(const Perm& other) const {
    return compose(other) == other.compose(*this);
}

std::string Perm::cycle_text() const {
    std::ostringstream os;
    std::array<bool, 5> seen{};
    bool any = false;
    for (unsigned start = 1; start <= degree_; ++start) {
        if (seen[start - 1] || apply(start) == start) continue;
        any = true;
        os << '(';
        unsigned p = start;
        bool first = true;
        do {
            seen[p - 1] = true;
            os << (first ? "" : " ") << p;
            first = false;
            p = apply(p);
        } while (p != start);
        os << ')';
    }
    return any ? os.str() : "()";
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const Perm& g : generators_)
        if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    std::set<Perm> closure;
    std::vector<Perm> frontier{Perm::identity(degree_)};
    closure.insert(frontier.front());
    while (!frontier.empty()) {
        const Perm cur = frontier.back();
        frontier.pop_back();
        for (const Perm& g : generators_) {
            Perm next = cur.compose(g);
            if (closure.insert(next).second) frontier.push_back(std::move(next));
        }
    }
    elements_.assign(closure.begin(), closure.end());
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::contains_group(const PermGroup& h) const {
    return std::all_of(h.elements().begin(), h.elements().end(),
                       [this](const Perm& p) { return contains(p); });
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            if (!elements_[i].commutes(elements_[j])) return false;
    return true;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
    if (!g.contains_group(h)) throw std::invalid_argument("not a subgroup");
    for (const Perm& x : g.elements()) {
        const Perm xi = x.inverse();
        for (const Perm& y : h.elements())
            if (!h.contains(x.compose(y).compose(xi))) return false;
    }
    return true;
}

QuotientGroup quotient(const PermGroup& g, const PermGroup& h) {
    if (!g.contains_group(h)) throw std::invalid_argument("not a subgroup");
    for (const Perm& x : g.elements()) {
        const Perm xi = x.inverse();
        for (const Perm& y : h.elements()) {
            const Perm conj = x.compose(y).compose(xi);
            if (!h.contains(conj))
                throw std::domain_error("subgroup not normal: " + x.cycle_text() + " conjugates " +
                                        y.cycle_text() + " to " + conj.cycle_text() +
                                        " outside the subgroup");
        }
    }

    // Elements are sorted, so the first unassigned element is the minimum of
    // its coset; coset 0 is the identity coset.
    std::map<Perm, std::uint16_t> coset_of;
    std::vector<Perm> reps;
    for (const Perm& x : g.elements()) {
        if (coset_of.count(x)) continue;
        const auto id = static_cast<std::uint16_t>(reps.size());
        reps.push_back(x);
        for (const Perm& k : h.elements()) coset_of[x.compose(k)] = id;
    }

    QuotientGroup q;
    q.order = reps.size();
    q.mul.assign(q.order, std::vector<std::uint16_t>(q.order));
    for (std::size_t i = 0; i < q.order; ++i)
        for (std::size_t j = 0; j < q.order; ++j)
            q.mul[i][j] = coset_of.at(reps[i].compose(reps[j]));

    q.element_orders.resize(q.order);
    for (std::size_t i = 0; i < q.order; ++i) {
        unsigned n = 1;
        std::uint16_t c = static_cast<std::uint16_t>(i);
        while (c != 0) {
            c = q.mul[c][i];
            ++n;
        }
        q.element_orders[i] = n;
    }
    std::sort(q.element_orders.begin(), q.element_orders.end());

    q.abelian = true;
    for (std::size_t i = 0; i < q.order && q.abelian; ++i)
        for (std::size_t j = i + 1; j < q.order; ++j)
            if (q.mul[i][j] != q.mul[j][i]) {
                q.abelian = false;
                break;
            }
    return q;
}

Fingerprint fingerprint(const PermGroup& g) {
    Fingerprint fp;
    fp.order = g.order();
    fp.element_orders.clear();
    for (const Perm& p : g.elements()) fp.element_orders.push_back(p.order());
    std::sort(fp.element_orders.begin(), fp.element_orders.end());
    fp.abelian = g.is_abelian();
    return fp;
}

Fingerprint fingerprint(const QuotientGroup& q) {
    return Fingerprint{q.order, q.element_orders, q.abelian};
}

std::string GroupKind::label() const {
    switch (kind) {
        case Kind::Trivial: return "1";
        case Kind::S2: return "S2";
        case Kind::S3: return "S3";
        case Kind::S4: return "S4";
        case Kind::S5: return "S5";
        case Kind::K4: return "S2S2";
        case Kind::D8: return "D8";
        case Kind::S3xS2: return "S3S2";
        case Kind::S2Cube: return "S2S2S2";
        case Kind::Unknown: break;
    }
    return "unknown(order=" + std::to_string(fp.order) + ")";
}

const std::vector<std::pair<Kind, Fingerprint>>& reference_fingerprints() {
    static const std::vector<std::pair<Kind, Fingerprint>> refs = [] {
        auto fp = [](std::initializer_list<std::initializer_list<unsigned>> gens) {
            std::vector<Perm> v;
            for (const auto& g : gens) v.push_back(Perm::from_cycles(5, {g}));
            return fingerprint(PermGroup(5, std::move(v)));
        };
        std::vector<std::pair<Kind, Fingerprint>> r;
        r.emplace_back(Kind::Trivial, fingerprint(PermGroup(5, {})));
        r.emplace_back(Kind::S2, fp({{1, 2}}));
        r.emplace_back(Kind::S3, fp({{1, 2, 3}, {1, 2}}));
        r.emplace_back(Kind::K4, fp({{1, 2}, {3, 4}}));
        r.emplace_back(Kind::S4, fp({{1, 2, 3, 4}, {1, 2}}));
        r.emplace_back(Kind::D8, fp({{1, 2, 3, 4}, {1, 3}}));
        r.emplace_back(Kind::S3xS2, fp({{1, 2, 3}, {1, 2}, {4, 5}}));
        r.emplace_back(Kind::S5, fp({{1, 2, 3, 4, 5}, {1, 2}}));
        return r;
    }();
    return refs;
}

GroupKind identify(const Fingerprint& fp) {
    for (const auto& [kind, ref] : reference_fingerprints())
        if (fp == ref) return GroupKind{kind, fp};
    return GroupKind{Kind::Unknown, fp};
}

GroupKind identify(const QuotientGroup& q) {
    return identify(fingerprint(q));
}

GroupKind identify(const PermGroup& g) {
    return identify(fingerprint(g));
}

unsigned ambient_degree(Ambient a) {
    switch (a) {
        case Ambient::S3: return 3;
        case Ambient::S4: return 4;
        case Ambient::S5: return 5;
    }
    throw std::invalid_argument("bad ambient");
}

std::string_view ambient_name(Ambient a) {
    switch (a) {
        case Ambient::S3: return "S3";
        case Ambient::S4: return "S4";
        case Ambient::S5: return "S5";
    }
    throw std::invalid_argument("bad ambient");
}

Ambient parse_ambient(std::string_view name) {
    if (name == "S3") return Ambient::S3;
    if (name == "S4") return Ambient::S4;
    if (name == "S5") return Ambient::S5;
    throw std::invalid_argument("unknown ambient group '" + std::string(name) + "' (expected S3, S4 or S5)");
}

namespace {

std::vector<CatalogEntry> build_catalog(Ambient a) {
    const unsigned d = ambient_degree(a);
    auto grp = [d](std::initializer_list<std::initializer_list<unsigned>> gens) {
        std::vector<Perm> v;
        for (const auto& g : gens) v.push_back(Perm::from_cycles(d, {g}));
        return PermGroup(d, std::move(v));
    };
    std::vector<CatalogEntry> out;
    out.push_back({"1", PermGroup(d, {})});
    out.push_back({"S2", grp({{1, 2}})});
    out.push_back({"S3", grp({{1, 2, 3}, {1, 2}})});
    if (d >= 4) {
        out.push_back({"S4", grp({{1, 2, 3, 4}, {1, 2}})});
        out.push_back({"S2S2", grp({{1, 2}, {3, 4}})});
        out.push_back({"D8", grp({{1, 2, 3, 4}, {1, 3}})});
    }
    if (d >= 5) {
        out.push_back({"S5", grp({{1, 2, 3, 4, 5}, {1, 2}})});
        out.push_back({"S3S2", grp({{1, 2, 3}, {1, 2}, {4, 5}})});
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog(Ambient a) {
    static const std::vector<CatalogEntry> s3 = build_catalog(Ambient::S3);
    static const std::vector<CatalogEntry> s4 = build_catalog(Ambient::S4);
    static const std::vector<CatalogEntry> s5 = build_catalog(Ambient::S5);
    switch (a) {
        case Ambient::S3: return s3;
        case Ambient::S4: return s4;
        case Ambient::S5: return s5;
    }
    throw std::invalid_argument("bad ambient");
}

const PermGroup& named_subgroup(Ambient a, std::string_view name) {
    for (const auto& entry : catalog(a))
        if (entry.name == name) return entry.group;
    static const char* known[] = {"1", "S2", "S3", "S4", "S5", "S2S2", "S3S2", "D8"};
    for (const char* k : known)
        if (name == k)
            throw std::invalid_argument("subgroup '" + std::string(name) + "' is not a subgroup of " +
                                        std::string(ambient_name(a)));
    throw std::invalid_argument("unknown subgroup name '" + std::string(name) + "'");
}

PermGroup resolve_lower(Ambient a, std::string_view upper_name, std::string_view lower_name) {
    const PermGroup& upper = named_subgroup(a, upper_name);
    if (lower_name == upper_name) return upper;
    const unsigned d = ambient_degree(a);
    if (upper_name == "S3S2" && lower_name == "S2")
        return PermGroup(d, {Perm::from_cycles(d, {{4, 5}})});
    if (upper_name == "D8" && lower_name == "S2S2")
        return PermGroup(d, {Perm::from_cycles(d, {{1, 3}, {2, 4}}), Perm::from_cycles(d, {{1, 2}, {3, 4}})});
    const PermGroup& low = named_subgroup(a, lower_name);
    if (!upper.contains_group(low))
        throw std::domain_error("subgroup " + std::string(lower_name) + " is not contained in " +
                                std::string(upper_name));
    return low;
}

GroupKind quotient_kind(Ambient a, std::string_view upper_name, std::string_view lower_name) {
    const PermGroup& upper = named_subgroup(a, upper_name);
    const PermGroup lower = resolve_lower(a, upper_name, lower_name);
    return identify(quotient(upper, lower));
}

}  // namespace asrep
