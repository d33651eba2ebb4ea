#pragma once

#include "zc/bitword.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zc {

struct Color {
    BitWord bits;
    long depth = 0;

    friend bool operator==(const Color&, const Color&) = default;
    friend auto operator<=>(const Color&, const Color&) = default;

    std::string str() const {
        return "(" + bits.str() + ", " + std::to_string(depth) + ")";
    }
};

// A graph node: color, optional horizontal position (a label, not part of
// the color), and a bookkeeping tag that records where the node came from.
// Isomorphism tests ignore the tag.
struct DagNode {
    Color color;
    std::optional<long> h;
    std::string tag;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Finite colored DAG, immutable after construction.  Construction validates
// acyclicity and that edges never join nodes with different horizontal
// positions.
class ColoredDag {
public:
    ColoredDag() = default;

    ColoredDag(std::vector<DagNode> nodes, std::vector<Edge> edges)
        : nodes_(std::move(nodes)) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        out_.assign(nodes_.size(), {});
        in_.assign(nodes_.size(), {});
        for (const Edge& e : edges_) {
            if (e.first >= nodes_.size() || e.second >= nodes_.size())
                throw std::invalid_argument("edge endpoint out of range");
            const auto& a = nodes_[e.first];
            const auto& b = nodes_[e.second];
            if (a.h && b.h && *a.h != *b.h)
                throw std::invalid_argument(
                    "edge joins different horizontal positions");
            out_[e.first].push_back(e.second);
            in_[e.second].push_back(e.first);
        }
        check_acyclic();
    }

    std::size_t size() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const DagNode& node(std::size_t i) const { return nodes_[i]; }
    const std::vector<DagNode>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& out(std::size_t i) const { return out_[i]; }
    const std::vector<std::size_t>& in(std::size_t i) const { return in_[i]; }

    bool has_edge(std::size_t a, std::size_t b) const {
        return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
    }

    std::map<Color, long> color_census() const {
        std::map<Color, long> census;
        for (const DagNode& n : nodes_) ++census[n.color];
        return census;
    }

    // Index of the unique node carrying the tag; throws if absent/ambiguous.
    std::size_t by_tag(const std::string& tag) const {
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].tag == tag) {
                if (found) throw std::invalid_argument("duplicate tag " + tag);
                found = i;
            }
        if (!found) throw std::invalid_argument("no node tagged " + tag);
        return *found;
    }

private:
    void check_acyclic() const {
        std::vector<std::size_t> indeg(nodes_.size());
        for (const Edge& e : edges_) ++indeg[e.second];
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (indeg[i] == 0) queue.push_back(i);
        std::size_t seen = 0;
        while (!queue.empty()) {
            std::size_t v = queue.back();
            queue.pop_back();
            ++seen;
            for (std::size_t w : out_[v])
                if (--indeg[w] == 0) queue.push_back(w);
        }
        if (seen != nodes_.size())
            throw std::invalid_argument("graph has a directed cycle");
    }

    std::vector<DagNode> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

// Box product: nodes are pairs; an edge moves exactly one coordinate along
// an edge of its factor.  Colors concatenate bits and add depths; horizontal
// positions add when both factors carry them.
inline ColoredDag box_product(const ColoredDag& a, const ColoredDag& b) {
    std::vector<DagNode> nodes;
    nodes.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const DagNode& u = a.node(i);
            const DagNode& v = b.node(j);
            DagNode n;
            n.color = Color{concat(u.color.bits, v.color.bits),
                            u.color.depth + v.color.depth};
            if (u.h && v.h)
                n.h = *u.h + *v.h;
            else if (u.h)
                n.h = u.h;
            else if (v.h)
                n.h = v.h;
            n.tag = u.tag + ";" + v.tag;
            nodes.push_back(std::move(n));
        }
    auto id = [&](std::size_t i, std::size_t j) { return i * b.size() + j; };
    std::vector<Edge> edges;
    for (const Edge& e : a.edges())
        for (std::size_t j = 0; j < b.size(); ++j)
            edges.push_back({id(e.first, j), id(e.second, j)});
    for (const Edge& e : b.edges())
        for (std::size_t i = 0; i < a.size(); ++i)
            edges.push_back({id(i, e.first), id(i, e.second)});
    return ColoredDag(std::move(nodes), std::move(edges));
}

inline ColoredDag shift_h(const ColoredDag& q, long dh) {
    std::vector<DagNode> nodes = q.nodes();
    for (DagNode& n : nodes)
        if (n.h) n.h = *n.h + dh;
    return ColoredDag(std::move(nodes), q.edges());
}

inline ColoredDag shift_d(const ColoredDag& q, long dd) {
    std::vector<DagNode> nodes = q.nodes();
    for (DagNode& n : nodes) n.color.depth += dd;
    return ColoredDag(std::move(nodes), q.edges());
}

// nu-twist: (b, d) -> (b * nu, d + |nu|-).
inline ColoredDag shift_word(const ColoredDag& q, const BitWord& nu) {
    long dd = long(minus_count(nu));
    std::vector<DagNode> nodes = q.nodes();
    for (DagNode& n : nodes) {
        n.color.bits = star(n.color.bits, nu);
        n.color.depth += dd;
    }
    return ColoredDag(std::move(nodes), q.edges());
}

inline ColoredDag reverse(const ColoredDag& q) {
    std::vector<Edge> edges;
    edges.reserve(q.edge_count());
    for (const Edge& e : q.edges()) edges.push_back({e.second, e.first});
    return ColoredDag(q.nodes(), std::move(edges));
}

inline ColoredDag induced(const ColoredDag& q,
                          const std::function<bool(const DagNode&)>& keep) {
    std::vector<std::size_t> remap(q.size(), SIZE_MAX);
    std::vector<DagNode> nodes;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (keep(q.node(i))) {
            remap[i] = nodes.size();
            nodes.push_back(q.node(i));
        }
    std::vector<Edge> edges;
    for (const Edge& e : q.edges())
        if (remap[e.first] != SIZE_MAX && remap[e.second] != SIZE_MAX)
            edges.push_back({remap[e.first], remap[e.second]});
    return ColoredDag(std::move(nodes), std::move(edges));
}

inline ColoredDag strip_h(const ColoredDag& q) {
    std::vector<DagNode> nodes = q.nodes();
    for (DagNode& n : nodes) n.h.reset();
    return ColoredDag(std::move(nodes), q.edges());
}

inline ColoredDag restrict_depth(const ColoredDag& q, long max_depth) {
    return induced(q, [max_depth](const DagNode& n) {
        return n.color.depth <= max_depth;
    });
}

enum class IsoMode {
    Exact,          // colors carried over identically
    ClassPreserving // equal colors map to equal colors (one direction)
};

namespace detail {

// One round of Weisfeiler-Leman refinement over both graphs at once.
// Returns false if the label multisets ever disagree.
inline bool wl_refine(const ColoredDag& a, const ColoredDag& b,
                      std::vector<int>& la, std::vector<int>& lb) {
    for (std::size_t round = 0; round < a.size() + 1; ++round) {
        using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
        auto signature = [](const ColoredDag& g, const std::vector<int>& l,
                            std::size_t i) {
            std::vector<int> so, si;
            for (std::size_t j : g.out(i)) so.push_back(l[j]);
            for (std::size_t j : g.in(i)) si.push_back(l[j]);
            std::sort(so.begin(), so.end());
            std::sort(si.begin(), si.end());
            return Sig{l[i], std::move(so), std::move(si)};
        };
        std::map<Sig, int> dict;
        std::vector<Sig> sa, sb;
        sa.reserve(a.size());
        sb.reserve(b.size());
        for (std::size_t i = 0; i < a.size(); ++i) sa.push_back(signature(a, la, i));
        for (std::size_t i = 0; i < b.size(); ++i) sb.push_back(signature(b, lb, i));
        for (const Sig& s : sa) dict.emplace(s, 0);
        for (const Sig& s : sb) dict.emplace(s, 0);
        int next = 0;
        for (auto& kv : dict) kv.second = next++;
        std::vector<int> na(a.size()), nb(b.size());
        for (std::size_t i = 0; i < a.size(); ++i) na[i] = dict.at(sa[i]);
        for (std::size_t i = 0; i < b.size(); ++i) nb[i] = dict.at(sb[i]);
        {
            std::vector<int> ma = na, mb = nb;
            std::sort(ma.begin(), ma.end());
            std::sort(mb.begin(), mb.end());
            if (ma != mb) return false;
        }
        bool stable = (na == la) && (nb == lb);
        la = std::move(na);
        lb = std::move(nb);
        if (stable) break;
    }
    return true;
}

struct IsoSearch {
    const ColoredDag& a;
    const ColoredDag& b;
    IsoMode mode;
    const std::vector<int>& la;
    const std::vector<int>& lb;
    std::vector<std::size_t> order;       // nodes of a, most constrained first
    std::vector<long> map_ab;             // node of a -> node of b or -1
    std::vector<char> used_b;
    std::map<Color, Color> class_ab;      // color correspondence built so far
    long budget = 80'000'000;

    // equal colors on the left must land on equal colors on the right; the
    // induced class map need not be injective
    bool color_ok(const Color& ca, const Color& cb) {
        if (mode == IsoMode::Exact) return ca == cb;
        auto it = class_ab.find(ca);
        return it == class_ab.end() || it->second == cb;
    }

    bool assign(std::size_t depth) {
        if (depth == order.size()) return true;
        std::size_t u = order[depth];
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (used_b[v] || la[u] != lb[v]) continue;
            if (--budget < 0)
                throw std::runtime_error("isomorphism search budget exceeded");
            if (!color_ok(a.node(u).color, b.node(v).color)) continue;
            if (a.node(u).h != b.node(v).h) continue;
            bool consistent = true;
            for (std::size_t w = 0; w < depth && consistent; ++w) {
                std::size_t x = order[w];
                std::size_t y = std::size_t(map_ab[x]);
                if (a.has_edge(u, x) != b.has_edge(v, y)) consistent = false;
                if (a.has_edge(x, u) != b.has_edge(y, v)) consistent = false;
            }
            if (!consistent) continue;
            bool class_added = false;
            if (mode == IsoMode::ClassPreserving &&
                !class_ab.count(a.node(u).color)) {
                class_ab.emplace(a.node(u).color, b.node(v).color);
                class_added = true;
            }
            map_ab[u] = long(v);
            used_b[v] = 1;
            if (assign(depth + 1)) return true;
            map_ab[u] = -1;
            used_b[v] = 0;
            if (class_added) class_ab.erase(a.node(u).color);
        }
        return false;
    }
};

} // namespace detail

inline bool iso(const ColoredDag& a, const ColoredDag& b, IsoMode mode) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    if (mode == IsoMode::Exact && a.color_census() != b.color_census())
        return false;

    // initial labels: colors for Exact, pure structure otherwise; horizontal
    // positions always count since they must carry over on the nose
    std::vector<int> la(a.size()), lb(b.size());
    {
        using Key = std::tuple<std::optional<Color>, std::optional<long>,
                               std::size_t, std::size_t>;
        std::map<Key, int> dict;
        auto key = [mode](const ColoredDag& g, std::size_t i) {
            return Key{mode == IsoMode::Exact
                           ? std::optional<Color>(g.node(i).color)
                           : std::nullopt,
                       g.node(i).h, g.out(i).size(), g.in(i).size()};
        };
        for (std::size_t i = 0; i < a.size(); ++i) dict.emplace(key(a, i), 0);
        for (std::size_t i = 0; i < b.size(); ++i) dict.emplace(key(b, i), 0);
        int next = 0;
        for (auto& kv : dict) kv.second = next++;
        for (std::size_t i = 0; i < a.size(); ++i) la[i] = dict.at(key(a, i));
        for (std::size_t i = 0; i < b.size(); ++i) lb[i] = dict.at(key(b, i));
    }
    if (!detail::wl_refine(a, b, la, lb)) return false;

    detail::IsoSearch search{a, b, mode, la, lb, {}, {}, {}, {}};
    search.map_ab.assign(a.size(), -1);
    search.used_b.assign(b.size(), 0);
    search.order.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) search.order[i] = i;
    std::map<int, long> label_freq;
    for (int l : la) ++label_freq[l];
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](std::size_t x, std::size_t y) {
                         return label_freq[la[x]] < label_freq[la[y]];
                     });
    return search.assign(0);
}

// Deterministic serialization order: horizontal position, then color, then
// bookkeeping tag, then original index.
inline std::vector<std::size_t> canonical_order(const ColoredDag& q) {
    std::vector<std::size_t> order(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) {
                         const DagNode& nx = q.node(x);
                         const DagNode& ny = q.node(y);
                         return std::tie(nx.h, nx.color, nx.tag) <
                                std::tie(ny.h, ny.color, ny.tag);
                     });
    return order;
}

inline std::string to_dot(const ColoredDag& q, const std::string& name = "Q") {
    auto order = canonical_order(q);
    std::vector<std::size_t> pos(q.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        const DagNode& n = q.node(order[i]);
        os << "  n" << i << " [label=\"b=" << n.color.bits.str()
           << ", d=" << n.color.depth;
        if (n.h) os << ", h=" << *n.h;
        os << "\"];\n";
    }
    std::vector<Edge> edges;
    for (const Edge& e : q.edges()) edges.push_back({pos[e.first], pos[e.second]});
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges)
        os << "  n" << e.first << " -> n" << e.second << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace zc
