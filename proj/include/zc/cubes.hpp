#pragma once

#include "zc/bitword.hpp"
#include "zc/dag.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zc {

inline BitWord with_bit(const BitWord& w, std::size_t i, Bit b) {
    std::vector<Bit> e = w.entries();
    e[i] = b;
    return BitWord(std::move(e));
}

// (D|E)_[nu] with an extra vertical offset.  D and E are read as subsets.
struct CubeSpec {
    ExtBitWord D, E;
    BitWord nu;
    long offset = 0;

    std::size_t m() const { return D.size(); }

    static CubeSpec make(const ExtBitWord& D, const ExtBitWord& E,
                         const BitWord& nu, long offset = 0) {
        if (D.size() != E.size() || D.size() != nu.size())
            throw std::invalid_argument("cube spec slot counts disagree");
        return CubeSpec{D, E, nu, offset};
    }
    static CubeSpec make(const ExtBitWord& D, const ExtBitWord& E) {
        return make(D, E, BitWord::all_plus(D.size()));
    }
};

inline std::string pair_tag(const BitWord& first, const BitWord& second) {
    return "(" + first.str() + "|" + second.str() + ")";
}

// Node (lambda|mu): color b = lambda*mu*nu, d = |lambda|- + |mu|- + |nu|- +
// offset.  Edges raise lambda by one slot (- to +) or lower mu by one slot
// (+ to -) inside the node set.
inline ColoredDag cube(const CubeSpec& spec) {
    auto ls = spec.D.expand();
    auto ms = spec.E.expand();
    long base = long(minus_count(spec.nu)) + spec.offset;
    std::vector<DagNode> nodes;
    nodes.reserve(ls.size() * ms.size());
    std::map<std::pair<BitWord, BitWord>, std::size_t> index;
    for (const BitWord& l : ls)
        for (const BitWord& mu : ms) {
            index[{l, mu}] = nodes.size();
            nodes.push_back({Color{star(star(l, mu), spec.nu),
                                   base + long(minus_count(l)) +
                                       long(minus_count(mu))},
                             {},
                             pair_tag(l, mu)});
        }
    std::vector<Edge> edges;
    for (const BitWord& l : ls)
        for (const BitWord& mu : ms) {
            std::size_t from = index.at({l, mu});
            for (std::size_t i = 0; i < spec.m(); ++i) {
                if (l[i] == Bit::Minus) {
                    auto it = index.find({with_bit(l, i, Bit::Plus), mu});
                    if (it != index.end()) edges.push_back({from, it->second});
                }
                if (mu[i] == Bit::Plus) {
                    auto it = index.find({l, with_bit(mu, i, Bit::Minus)});
                    if (it != index.end()) edges.push_back({from, it->second});
                }
            }
        }
    return ColoredDag(std::move(nodes), std::move(edges));
}

// (D1|E1)_[nu1] box (D2|E2)_[nu2] is (D1D2|E1E2)_[nu1nu2] on the nose.
inline CubeSpec concat_specs(const CubeSpec& a, const CubeSpec& b) {
    return CubeSpec{concat(a.D, b.D), concat(a.E, b.E), concat(a.nu, b.nu),
                    a.offset + b.offset};
}

// Same-length merge: the two spans must share an anchor node (lambda|mu),
// agree with it on definite slots, and free disjoint slot sets.  The merged
// cube picks up the anchor's depth d(lambda|mu) as a vertical shift.
inline CubeSpec union_specs(const CubeSpec& a, const CubeSpec& b) {
    if (a.m() != b.m())
        throw std::invalid_argument("union of cube specs needs equal lengths");
    if (a.nu != BitWord::all_plus(a.m()) || b.nu != BitWord::all_plus(b.m()))
        throw std::invalid_argument("union of cube specs must be untwisted");
    std::vector<Ext> D(a.m()), E(a.m());
    long anchor_depth = 0;
    for (std::size_t i = 0; i < a.m(); ++i) {
        Ext x = a.D[i], y = b.D[i];
        if (x == Ext::Plus && y == Ext::Plus) {
            D[i] = Ext::Plus;
        } else if (x == Ext::Minus && y == Ext::Minus) {
            D[i] = Ext::Minus;
            ++anchor_depth;
        } else if ((x == Ext::Both && y == Ext::Minus) ||
                   (x == Ext::Minus && y == Ext::Both)) {
            D[i] = Ext::Both;
            ++anchor_depth;
        } else {
            throw std::invalid_argument("incompatible first-slot patterns");
        }
        x = a.E[i];
        y = b.E[i];
        if (x == Ext::Minus && y == Ext::Minus) {
            E[i] = Ext::Minus;
            ++anchor_depth;
        } else if (x == Ext::Plus && y == Ext::Plus) {
            E[i] = Ext::Plus;
        } else if ((x == Ext::Both && y == Ext::Plus) ||
                   (x == Ext::Plus && y == Ext::Both)) {
            E[i] = Ext::Both;
        } else {
            throw std::invalid_argument("incompatible second-slot patterns");
        }
    }
    return CubeSpec{ExtBitWord(std::move(D)), ExtBitWord(std::move(E)),
                    BitWord::all_plus(a.m()),
                    a.offset + b.offset + anchor_depth};
}

// The edgeless base tower: nodes (empty bits, 2k) for 0 <= 2k <= cutoff.
inline ColoredDag tower(long cutoff) {
    if (cutoff < 0 || cutoff % 2 != 0)
        throw std::invalid_argument("tower cutoff must be even and >= 0");
    std::vector<DagNode> nodes;
    for (long d = 0; d <= cutoff; d += 2)
        nodes.push_back({Color{BitWord{}, d}, {}, std::to_string(d)});
    return ColoredDag(std::move(nodes), {});
}

// Slim: injectively colored and every color class is closed under d -> d+2
// up to the deepest member of its bits class (the truncation boundary).
inline void validate_slim(const ColoredDag& q) {
    std::map<Color, std::size_t> seen;
    std::map<BitWord, long> class_max;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const Color& c = q.node(i).color;
        if (!seen.emplace(c, i).second)
            throw std::invalid_argument("not slim: color " + c.str() +
                                        " is repeated");
        auto [it, fresh] = class_max.emplace(c.bits, c.depth);
        if (!fresh) it->second = std::max(it->second, c.depth);
    }
    for (const auto& [c, i] : seen) {
        if (c.depth + 2 > class_max.at(c.bits)) continue;
        if (!seen.count(Color{c.bits, c.depth + 2}))
            throw std::invalid_argument("not slim: " + c.str() +
                                        " has no node two levels below");
    }
}

inline bool is_slim(const ColoredDag& q) {
    try {
        validate_slim(q);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

namespace detail {

struct CubizationBase {
    const ColoredDag& q;
    std::map<Color, std::size_t> by_color;

    explicit CubizationBase(const ColoredDag& base) : q(base) {
        validate_slim(base);
        for (std::size_t i = 0; i < base.size(); ++i)
            by_color.emplace(base.node(i).color, i);
    }

    // index of the base node with the same bits at depth d + shift, if any
    std::optional<std::size_t> shifted(std::size_t i, long shift) const {
        const Color& c = q.node(i).color;
        auto it = by_color.find(Color{c.bits, c.depth + shift});
        if (it == by_color.end()) return std::nullopt;
        return it->second;
    }
};

} // namespace detail

// Q box (lambda|pm^m)_[nu]: plain Cartesian product with the segment, no
// pulled-back edges.
inline ColoredDag left_segment(const ColoredDag& base, const BitWord& lambda,
                               const BitWord& nu, long offset = 0) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("segment slot counts disagree");
    std::size_t m = lambda.size();
    auto words = all_words(m);
    long extra = long(minus_count(lambda)) + long(minus_count(nu)) + offset;
    std::vector<DagNode> nodes;
    nodes.reserve(base.size() * words.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const BitWord& mu : words) {
            const DagNode& b = base.node(i);
            nodes.push_back({Color{concat(b.color.bits, star(star(lambda, mu), nu)),
                                   b.color.depth + extra + long(minus_count(mu))},
                             b.h,
                             b.tag + pair_tag(lambda, mu)});
        }
    auto id = [&](std::size_t i, std::size_t w) { return i * words.size() + w; };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t w = 0; w < words.size(); ++w)
            for (std::size_t s = 0; s < m; ++s)
                if (words[w][s] == Bit::Plus) {
                    BitWord lowered = with_bit(words[w], s, Bit::Minus);
                    std::size_t w2 = std::size_t(
                        std::lower_bound(words.begin(), words.end(), lowered) -
                        words.begin());
                    edges.push_back({id(i, w), id(i, w2)});
                }
    for (const Edge& e : base.edges())
        for (std::size_t w = 0; w < words.size(); ++w)
            edges.push_back({id(e.first, w), id(e.second, w)});
    return ColoredDag(std::move(nodes), std::move(edges));
}

// Q box (pm^m|rho)_[nu]: first coordinate free, second fixed to rho.
inline ColoredDag right_segment(const ColoredDag& base, const BitWord& rho,
                                const BitWord& nu, long offset = 0) {
    if (rho.size() != nu.size())
        throw std::invalid_argument("segment slot counts disagree");
    std::size_t m = rho.size();
    auto words = all_words(m);
    long extra = long(minus_count(rho)) + long(minus_count(nu)) + offset;
    std::vector<DagNode> nodes;
    nodes.reserve(base.size() * words.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const BitWord& kappa : words) {
            const DagNode& b = base.node(i);
            nodes.push_back({Color{concat(b.color.bits, star(star(kappa, rho), nu)),
                                   b.color.depth + extra + long(minus_count(kappa))},
                             b.h,
                             b.tag + pair_tag(kappa, rho)});
        }
    auto id = [&](std::size_t i, std::size_t w) { return i * words.size() + w; };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t w = 0; w < words.size(); ++w)
            for (std::size_t s = 0; s < m; ++s)
                if (words[w][s] == Bit::Minus) {
                    BitWord raised = with_bit(words[w], s, Bit::Plus);
                    std::size_t w2 = std::size_t(
                        std::lower_bound(words.begin(), words.end(), raised) -
                        words.begin());
                    edges.push_back({id(i, w), id(i, w2)});
                }
    for (const Edge& e : base.edges())
        for (std::size_t w = 0; w < words.size(); ++w)
            edges.push_back({id(e.first, w), id(e.second, w)});
    return ColoredDag(std::move(nodes), std::move(edges));
}

// Left fragment Q[lambda|pm^m)_[nu]: the nodes of the left segment, its own
// edges, and the edges of the right segment Q(pm^m|bar lambda)_[nu-2m]
// pulled back through the depth-2(|lambda|- + |mu|-) re-identification of
// nodes.  Pulled edges whose base node fell past the truncation are dropped.
inline ColoredDag left_fragment(const ColoredDag& base, const BitWord& lambda,
                                const BitWord& nu, long offset = 0) {
    detail::CubizationBase ctx(base);
    std::size_t m = lambda.size();
    ColoredDag graph = left_segment(base, lambda, nu, offset);
    auto words = all_words(m);
    auto id = [&](std::size_t i, std::size_t w) { return i * words.size() + w; };
    auto word_index = [&](const BitWord& w) {
        return std::size_t(std::lower_bound(words.begin(), words.end(), w) -
                           words.begin());
    };
    std::vector<Edge> edges(graph.edges());
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto below = ctx.shifted(i, -2);
        if (!below) continue;
        for (std::size_t w = 0; w < words.size(); ++w)
            for (std::size_t s = 0; s < m; ++s)
                if (words[w][s] == Bit::Plus)
                    edges.push_back(
                        {id(i, w),
                         id(*below, word_index(with_bit(words[w], s, Bit::Minus)))});
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
        long shift = 2 * (long(minus_count(lambda)) + long(minus_count(words[w])));
        for (const Edge& e : base.edges()) {
            auto from = ctx.shifted(e.first, -shift);
            auto to = ctx.shifted(e.second, -shift);
            if (from && to) edges.push_back({id(*from, w), id(*to, w)});
        }
    }
    return ColoredDag(graph.nodes(), std::move(edges));
}

// Right fragment Q(pm^m|rho]_[nu]: the right segment plus the pulled-back
// edges of the left segment Q(bar rho|pm^m)_[nu-2m].
inline ColoredDag right_fragment(const ColoredDag& base, const BitWord& rho,
                                 const BitWord& nu, long offset = 0) {
    detail::CubizationBase ctx(base);
    std::size_t m = rho.size();
    ColoredDag graph = right_segment(base, rho, nu, offset);
    auto words = all_words(m);
    auto id = [&](std::size_t i, std::size_t w) { return i * words.size() + w; };
    auto word_index = [&](const BitWord& w) {
        return std::size_t(std::lower_bound(words.begin(), words.end(), w) -
                           words.begin());
    };
    std::vector<Edge> edges(graph.edges());
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto above = ctx.shifted(i, 2);
        if (!above) continue;
        for (std::size_t w = 0; w < words.size(); ++w)
            for (std::size_t s = 0; s < m; ++s)
                if (words[w][s] == Bit::Minus)
                    edges.push_back(
                        {id(i, w),
                         id(*above, word_index(with_bit(words[w], s, Bit::Plus)))});
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
        long shift = 2 * (long(minus_count(words[w])) + long(minus_count(rho)));
        for (const Edge& e : base.edges()) {
            auto from = ctx.shifted(e.first, shift);
            auto to = ctx.shifted(e.second, shift);
            if (from && to) edges.push_back({id(*from, w), id(*to, w)});
        }
    }
    return ColoredDag(graph.nodes(), std::move(edges));
}

enum class Side { Left, Right };

// The fragmented fat cubization: one fragment per lambda, disjoint.  The
// node multiset across the family equals that of the unfragmented cube.
inline std::vector<std::pair<BitWord, ColoredDag>>
fragmented_cubization(const ColoredDag& base, std::size_t m, const BitWord& nu,
                      Side side, long offset = 0) {
    std::vector<std::pair<BitWord, ColoredDag>> family;
    for (const BitWord& w : all_words(m))
        family.push_back({w, side == Side::Left
                                 ? left_fragment(base, w, nu, offset)
                                 : right_fragment(base, w, nu, offset)});
    return family;
}

inline ColoredDag disjoint_union(const std::vector<ColoredDag>& parts,
                                 const std::vector<std::string>& prefixes = {}) {
    if (!prefixes.empty() && prefixes.size() != parts.size())
        throw std::invalid_argument("one tag prefix per part, or none");
    std::vector<DagNode> nodes;
    std::vector<Edge> edges;
    std::size_t shift = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const DagNode& n : parts[p].nodes()) {
            DagNode copy = n;
            if (!prefixes.empty()) copy.tag = prefixes[p] + copy.tag;
            nodes.push_back(std::move(copy));
        }
        for (const Edge& e : parts[p].edges())
            edges.push_back({e.first + shift, e.second + shift});
        shift += parts[p].size();
    }
    return ColoredDag(std::move(nodes), std::move(edges));
}

// Bookkeeping tags have the shape <base>(w1|w2)(w1|w2)... where <base> is
// the tag of the originating base node.
inline std::string tag_base(const std::string& tag) {
    return tag.substr(0, tag.find('('));
}

struct LayerCoord {
    BitWord first, second;
};

inline std::vector<LayerCoord> tag_layers(const std::string& tag) {
    std::vector<LayerCoord> layers;
    std::size_t pos = tag.find('(');
    while (pos != std::string::npos) {
        std::size_t bar = tag.find('|', pos);
        std::size_t close = tag.find(')', pos);
        if (bar == std::string::npos || close == std::string::npos || bar > close)
            throw std::invalid_argument("malformed bookkeeping tag " + tag);
        layers.push_back({BitWord::parse(tag.substr(pos + 1, bar - pos - 1)),
                          BitWord::parse(tag.substr(bar + 1, close - bar - 1))});
        pos = tag.find('(', close);
    }
    return layers;
}

} // namespace zc
