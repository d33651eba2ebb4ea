#pragma once

// Bilateral DAGs: ordered pairs of slim halves with bracket cubization,
// gap bookkeeping, horizontal extension into h-labeled columns, and the
// reduction pipeline (gamma, quotient by ~) over fragment families.

#include "zc/cubes.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zc {

struct BilateralDag {
    ColoredDag left;
    ColoredDag right;
};

inline long min_depth(const ColoredDag& q) {
    if (q.size() == 0) throw std::invalid_argument("min_depth: empty graph");
    long best = q.node(0).color.depth;
    for (const DagNode& n : q.nodes()) best = std::min(best, n.color.depth);
    return best;
}

inline long leftop(const BilateralDag& q) { return min_depth(q.left); }
inline long rightop(const BilateralDag& q) { return min_depth(q.right); }
inline long gap(const BilateralDag& q) { return rightop(q) - leftop(q); }

// [ | ] = [ | ) disjoint ( | ]: the same tower on both sides
inline BilateralDag bilateral_tower(long cutoff) {
    return {tower(cutoff), tower(cutoff)};
}

// swaps the halves; distinct from edge reversal
inline BilateralDag swap_halves(const BilateralDag& q) {
    return {q.right, q.left};
}

inline BilateralDag edge_reverse(const BilateralDag& q) {
    return {reverse(q.left), reverse(q.right)};
}

// [D|E)_[nu]: union over lambda in D of the lambda-fragment, cut down to
// second coordinates in E
inline ColoredDag left_bracket(const ColoredDag& base, const ExtBitWord& D,
                               const ExtBitWord& E, const BitWord& nu,
                               long offset = 0) {
    if (D.size() != E.size())
        throw std::invalid_argument("left_bracket: |D| != |E|");
    std::vector<ColoredDag> parts;
    for (const BitWord& lambda : D.expand()) {
        ColoredDag frag = left_fragment(base, lambda, nu, offset);
        parts.push_back(induced(frag, [&](const DagNode& n) {
            return E.contains(tag_layers(n.tag).back().second);
        }));
    }
    return disjoint_union(parts);
}

// (E|D]_[nu]: union over rho in D of the rho-fragment, cut down to first
// coordinates in E
inline ColoredDag right_bracket(const ColoredDag& base, const ExtBitWord& E,
                                const ExtBitWord& D, const BitWord& nu,
                                long offset = 0) {
    if (D.size() != E.size())
        throw std::invalid_argument("right_bracket: |E| != |D|");
    std::vector<ColoredDag> parts;
    for (const BitWord& rho : D.expand()) {
        ColoredDag frag = right_fragment(base, rho, nu, offset);
        parts.push_back(induced(frag, [&](const DagNode& n) {
            return E.contains(tag_layers(n.tag).back().first);
        }));
    }
    return disjoint_union(parts);
}

// Q[D|E] = Q[D|E) on the left, Q(bar E|bar D] on the right
inline BilateralDag bracket(const BilateralDag& q, const ExtBitWord& D,
                            const ExtBitWord& E, const BitWord& nu,
                            long offset = 0) {
    return {left_bracket(q.left, D, E, nu, offset),
            right_bracket(q.right, bar(E), bar(D), nu, offset)};
}

// gap contribution of one bracket layer: |bar D| + |bar E| - |D| - |E|,
// counting definite minus slots only
inline long gap_step(const ExtBitWord& D, const ExtBitWord& E) {
    return long(bar(D).minus_count()) + long(bar(E).minus_count()) -
           long(D.minus_count()) - long(E.minus_count());
}

struct XDagKind {
    enum class Group { BPlus, BMinus, SL2 };
    Group x;
    std::size_t m;
    int h0;
};

inline const char* group_name(XDagKind::Group g) {
    switch (g) {
        case XDagKind::Group::BPlus: return "B+";
        case XDagKind::Group::BMinus: return "B-";
        case XDagKind::Group::SL2: return "SL2";
    }
    return "?";
}

// A fragment family along the reduction pipeline.  The baked prefix covers
// every consumed slot including the active one; the trailing m slots stay
// free and index the members.
struct BilateralFamily {
    std::vector<std::pair<BitWord, BilateralDag>> members;
    ExtBitWord baked_d;
    ExtBitWord baked_e;
    std::size_t m = 0;
    bool sl2 = false;   // active slot second coordinate pinned to +
    bool reversed = false;
    int h0 = 0;
    long cutoff = 0;
};

// _B[lambda1|pm][pm^m|pm^m] over the bilateral tower, built one slot layer
// at a time so the pipeline can address layers uniformly
inline BilateralFamily b_family(Bit lambda1, std::size_t m, long cutoff,
                                bool reversed = false) {
    BitWord l1({lambda1});
    BilateralDag core = bracket(bilateral_tower(cutoff),
                                ExtBitWord::from_word(l1),
                                ExtBitWord::all_both(1), BitWord::all_plus(1));
    BilateralFamily f;
    f.baked_d = ExtBitWord::from_word(l1);
    f.baked_e = ExtBitWord::all_both(1);
    f.m = m;
    f.reversed = reversed;
    f.h0 = int(minus_count(l1));
    f.cutoff = cutoff;
    for (const BitWord& idx : all_words(m)) {
        BilateralDag g = core;
        for (std::size_t i = 0; i < m; ++i)
            g = bracket(g, ExtBitWord::from_word(BitWord({idx[i]})),
                        ExtBitWord::all_both(1), BitWord::all_plus(1));
        if (reversed) g = edge_reverse(g);
        f.members.push_back({idx, std::move(g)});
    }
    return f;
}

namespace detail {

// position of the active layer in the tag stack: every baked slot is one
// single-slot layer
inline std::size_t active_layer(const BilateralFamily& f) {
    return f.baked_d.size() - 1;
}

} // namespace detail

// restrict to the [.|+] part of the active slot: second coordinate + on the
// left half, first coordinate - on the right half
inline BilateralFamily gamma(const BilateralFamily& f) {
    if (f.sl2) throw std::invalid_argument("gamma: not a B-type family");
    std::size_t layer = detail::active_layer(f);
    BilateralFamily out = f;
    out.sl2 = true;
    std::vector<Ext> e(f.baked_e.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.baked_e[i];
    e[layer] = Ext::Plus;
    out.baked_e = ExtBitWord(std::move(e));
    for (auto& [idx, g] : out.members) {
        g.left = induced(g.left, [&](const DagNode& n) {
            return tag_layers(n.tag)[layer].second[0] == Bit::Plus;
        });
        g.right = induced(g.right, [&](const DagNode& n) {
            return tag_layers(n.tag)[layer].first[0] == Bit::Minus;
        });
    }
    return out;
}

// keep the members whose first free slot is -, promoting that slot to the
// new active layer; the surviving graphs are untouched
inline BilateralFamily quotient_sim(const BilateralFamily& f) {
    if (!f.sl2) throw std::invalid_argument("quotient_sim: not SL2-type");
    if (f.m == 0) throw std::invalid_argument("quotient_sim: no free slot");
    BilateralFamily out;
    out.baked_d = concat(f.baked_d, ExtBitWord::parse("-"));
    out.baked_e = concat(f.baked_e, ExtBitWord::all_both(1));
    out.m = f.m - 1;
    out.sl2 = false;
    out.reversed = false; // the promoted slot carries the + orientation
    out.h0 = f.h0;
    out.cutoff = f.cutoff;
    for (const auto& [idx, g] : f.members) {
        if (idx[0] != Bit::Minus) continue;
        out.members.push_back({slice(idx, 1, idx.size()), g});
    }
    return out;
}

inline BilateralFamily gamma_tilde(const BilateralFamily& f) {
    return quotient_sim(gamma(f));
}

// recognize the family shape and verify the gap bookkeeping on every member
inline XDagKind classify(const BilateralFamily& f) {
    long gap0 = gap_step(f.baked_d, f.baked_e);
    int h0;
    if (f.sl2) {
        // relax the pinned active slot to recover the underlying B shape
        std::vector<Ext> e(f.baked_e.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.baked_e[i];
        e[detail::active_layer(f)] = Ext::Both;
        long gb = gap_step(f.baked_d, ExtBitWord(std::move(e)));
        if (gb != 1 && gb != -1)
            throw std::invalid_argument("classify: unrecognized SL2 shape");
        h0 = gb == 1 ? 0 : 1;
    } else {
        if (gap0 != 1 && gap0 != -1)
            throw std::invalid_argument("classify: unrecognized B shape");
        h0 = gap0 == 1 ? 0 : 1;
    }
    if (h0 != f.h0)
        throw std::invalid_argument("classify: minuscule weight drifted");
    for (const auto& [idx, g] : f.members) {
        long pred = gap_step(concat(f.baked_d, ExtBitWord::from_word(idx)),
                             concat(f.baked_e, ExtBitWord::all_both(f.m)));
        if (gap(g) != pred)
            throw std::invalid_argument(
                "classify: gap formula failed at fragment " + idx.str());
    }
    XDagKind kind;
    kind.x = f.sl2 ? XDagKind::Group::SL2
                   : (f.reversed ? XDagKind::Group::BMinus
                                 : XDagKind::Group::BPlus);
    kind.m = f.m;
    kind.h0 = h0;
    return kind;
}

inline ColoredDag with_h(const ColoredDag& q, long h) {
    std::vector<DagNode> nodes;
    nodes.reserve(q.size());
    for (const DagNode& n : q.nodes()) nodes.push_back({n.color, h, n.tag});
    return ColoredDag(std::move(nodes), q.edges());
}

inline ColoredDag prefix_tags(const ColoredDag& q, const std::string& prefix) {
    std::vector<ColoredDag> one{q};
    return disjoint_union(one, {prefix});
}

// horizontal extension: copy k of the left half lands at h = h0 + 2k, copy
// k of the right half at h = h0 - 2 - 2k, each vertically shifted by 2k
inline BilateralDag horizontal_extend(const BilateralDag& q, int h0,
                                      long ext) {
    if (ext < 0 || ext % 2 != 0)
        throw std::invalid_argument("horizontal_extend: need even ext >= 0");
    std::vector<ColoredDag> lparts, rparts;
    std::vector<std::string> lpre, rpre;
    for (long k = 0; 2 * k <= ext; ++k) {
        long hl = h0 + 2 * k;
        long hr = h0 - 2 - 2 * k;
        lparts.push_back(with_h(shift_d(q.left, 2 * k), hl));
        lpre.push_back("h" + std::to_string(hl) + ":");
        rparts.push_back(with_h(shift_d(q.right, 2 * k), hr));
        rpre.push_back("h" + std::to_string(hr) + ":");
    }
    return {disjoint_union(lparts, lpre), disjoint_union(rparts, rpre)};
}

// the column of an extended bilateral DAG at horizontal position h
inline ColoredDag column(const BilateralDag& ext, long h) {
    auto pick = [&](const ColoredDag& half) {
        return induced(half, [&](const DagNode& n) {
            return n.h && *n.h == h;
        });
    };
    ColoredDag l = pick(ext.left);
    return l.size() > 0 ? l : pick(ext.right);
}

// both halves as one plain DAG, tags kept apart
inline ColoredDag flatten(const BilateralDag& q) {
    return disjoint_union({q.left, q.right}, {"L:", "R:"});
}

} // namespace zc
