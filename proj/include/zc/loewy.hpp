#pragma once

#include "zc/bilateral.hpp"
#include "zc/characters.hpp"
#include "zc/cubes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zc {

// Identity of a node across independently built graphs: originating base
// node plus the accumulated first/second coordinate words.  Tags written by
// the cubization layer and by box_product differ only in ';' separators.
struct NodeKey {
    std::string base;
    BitWord lam, mu;

    friend bool operator==(const NodeKey&, const NodeKey&) = default;
    friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

inline NodeKey node_key(const DagNode& n) {
    NodeKey k;
    k.base = tag_base(n.tag);
    k.base.erase(std::remove(k.base.begin(), k.base.end(), ';'), k.base.end());
    std::vector<Bit> l, m;
    for (const LayerCoord& c : tag_layers(n.tag)) {
        for (std::size_t i = 0; i < c.first.size(); ++i) l.push_back(c.first[i]);
        for (std::size_t i = 0; i < c.second.size(); ++i) m.push_back(c.second[i]);
    }
    k.lam = BitWord(std::move(l));
    k.mu = BitWord(std::move(m));
    return k;
}

using EdgeKey = std::pair<NodeKey, NodeKey>;

// Order-free view of a graph: node keys with multiplicity, edges as key
// pairs.  Multi-edges cannot arise from the cubization layer.
struct CensusGraph {
    std::map<NodeKey, long> nodes;
    std::set<EdgeKey> edges;

    friend bool operator==(const CensusGraph&, const CensusGraph&) = default;
};

inline CensusGraph census_of(const ColoredDag& g) {
    CensusGraph c;
    for (const DagNode& n : g.nodes()) ++c.nodes[node_key(n)];
    for (const Edge& e : g.edges())
        c.edges.insert({node_key(g.node(e.first)), node_key(g.node(e.second))});
    return c;
}

// Q box (pm^m|pm^m)_[nu]: both coordinates free, plain product.  Raising
// edges cross the (lambda|.) segments; no pulled edges anywhere.
inline ColoredDag full_cubization(const ColoredDag& base, std::size_t m,
                                  const BitWord& nu, long offset = 0) {
    if (nu.size() != m)
        throw std::invalid_argument("full cubization: twist length mismatch");
    auto words = all_words(m);
    std::size_t w = words.size();
    long extra = long(minus_count(nu)) + offset;
    std::vector<DagNode> nodes;
    nodes.reserve(base.size() * w * w);
    for (std::size_t i = 0; i < base.size(); ++i)
        for (const BitWord& l : words)
            for (const BitWord& mu : words) {
                const DagNode& b = base.node(i);
                nodes.push_back(
                    {Color{concat(b.color.bits, star(star(l, mu), nu)),
                           b.color.depth + extra + long(minus_count(l)) +
                               long(minus_count(mu))},
                     b.h,
                     b.tag + pair_tag(l, mu)});
            }
    auto wid = [&](const BitWord& x) {
        return std::size_t(std::lower_bound(words.begin(), words.end(), x) -
                           words.begin());
    };
    auto id = [&](std::size_t i, std::size_t l, std::size_t u) {
        return (i * w + l) * w + u;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t l = 0; l < w; ++l)
            for (std::size_t u = 0; u < w; ++u)
                for (std::size_t s = 0; s < m; ++s) {
                    if (words[l][s] == Bit::Minus)
                        edges.push_back(
                            {id(i, l, u),
                             id(i, wid(with_bit(words[l], s, Bit::Plus)), u)});
                    if (words[u][s] == Bit::Plus)
                        edges.push_back(
                            {id(i, l, u),
                             id(i, l, wid(with_bit(words[u], s, Bit::Minus)))});
                }
    for (const Edge& e : base.edges())
        for (std::size_t l = 0; l < w; ++l)
            for (std::size_t u = 0; u < w; ++u)
                edges.push_back({id(e.first, l, u), id(e.second, l, u)});
    return ColoredDag(std::move(nodes), std::move(edges));
}

// One fragment per index word over the same base, plus optional trailing
// fully cubized slots shared by every member.
struct FragmentFamily {
    ColoredDag base;
    std::size_t slots = 0;
    std::size_t trailing = 0;
    BitWord nu;
    long offset = 0;
    Side side = Side::Left;
    std::vector<std::pair<BitWord, ColoredDag>> fragments;
};

inline FragmentFamily make_fragment_family(const ColoredDag& base,
                                           std::size_t n, const BitWord& nu,
                                           Side side, long offset = 0,
                                           std::size_t trailing = 0) {
    if (nu.size() != n)
        throw std::invalid_argument("fragment family: twist length mismatch");
    FragmentFamily f;
    f.base = base;
    f.slots = n;
    f.trailing = trailing;
    f.nu = nu;
    f.offset = offset;
    f.side = side;
    f.fragments = fragmented_cubization(base, n, nu, side, offset);
    if (trailing > 0) {
        ColoredDag tail = cube(CubeSpec::make(ExtBitWord::all_both(trailing),
                                              ExtBitWord::all_both(trailing)));
        for (auto& [idx, g] : f.fragments) g = box_product(g, tail);
    }
    return f;
}

// What the family is missing relative to the unfragmented cubization, and
// what it carries beyond it.  The deficit is exactly the cross-fragment
// edges of the pinned coordinate; the extra edges are the pulled ones.
struct DefragReport {
    bool nodes_match = false;
    std::size_t family_nodes = 0;
    std::size_t full_nodes = 0;
    std::set<EdgeKey> deficit;
    std::set<EdgeKey> extra;
};

inline DefragReport defragment_census(const FragmentFamily& f, long cutoff) {
    auto words = all_words(f.slots);
    std::set<BitWord> have;
    for (const auto& [idx, g] : f.fragments) have.insert(idx);
    if (have != std::set<BitWord>(words.begin(), words.end()))
        throw std::invalid_argument(
            "defragment census: family must cover every index word");

    std::size_t total = f.slots + f.trailing;
    BitWord nu_full = concat(f.nu, BitWord::all_plus(f.trailing));
    ColoredDag full =
        restrict_depth(full_cubization(f.base, total, nu_full, f.offset), cutoff);
    CensusGraph fullc = census_of(full);
    std::map<Color, long> full_colors = full.color_census();

    CensusGraph famc;
    std::map<Color, long> fam_colors;
    for (const auto& [idx, g] : f.fragments) {
        ColoredDag part = restrict_depth(g, cutoff);
        CensusGraph c = census_of(part);
        for (const auto& [k, n] : c.nodes) famc.nodes[k] += n;
        famc.edges.insert(c.edges.begin(), c.edges.end());
        for (const auto& [col, n] : part.color_census()) fam_colors[col] += n;
    }

    DefragReport r;
    r.nodes_match = famc.nodes == fullc.nodes && fam_colors == full_colors;
    for (const auto& [k, n] : famc.nodes) r.family_nodes += std::size_t(n);
    for (const auto& [k, n] : fullc.nodes) r.full_nodes += std::size_t(n);
    std::set_difference(fullc.edges.begin(), fullc.edges.end(),
                        famc.edges.begin(), famc.edges.end(),
                        std::inserter(r.deficit, r.deficit.end()));
    std::set_difference(famc.edges.begin(), famc.edges.end(),
                        fullc.edges.begin(), fullc.edges.end(),
                        std::inserter(r.extra, r.extra.end()));
    return r;
}

// A family midway through slotwise merging.  Groups are keyed by the
// assignment of the still fragmented slots, listed in ascending position.
struct PartialState {
    std::vector<std::size_t> remaining;
    std::map<BitWord, CensusGraph> groups;

    friend bool operator==(const PartialState&, const PartialState&) = default;
};

namespace detail {

// raising edges of the ambient full cubization, keyed by 1-based slot
inline std::map<std::size_t, std::set<EdgeKey>>
raising_by_slot(const ColoredDag& full, std::size_t n) {
    std::map<std::size_t, std::set<EdgeKey>> out;
    for (const Edge& e : full.edges()) {
        NodeKey a = node_key(full.node(e.first));
        NodeKey b = node_key(full.node(e.second));
        if (a.lam == b.lam) continue;
        for (std::size_t s = 0; s < n; ++s)
            if (a.lam[s] != b.lam[s]) {
                out[s + 1].insert({std::move(a), std::move(b)});
                break;
            }
    }
    return out;
}

} // namespace detail

inline PartialState
defragment_slots(const PartialState& st, const std::set<std::size_t>& slots,
                 const std::map<std::size_t, std::set<EdgeKey>>& raising) {
    for (std::size_t j : slots)
        if (std::find(st.remaining.begin(), st.remaining.end(), j) ==
            st.remaining.end())
            throw std::invalid_argument("defragment slots: slot is not free");
    PartialState out;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < st.remaining.size(); ++k)
        if (!slots.count(st.remaining[k])) {
            out.remaining.push_back(st.remaining[k]);
            keep.push_back(k);
        }
    for (const auto& [w, g] : st.groups) {
        std::vector<Bit> proj;
        for (std::size_t k : keep) proj.push_back(w[k]);
        CensusGraph& tgt = out.groups[BitWord(std::move(proj))];
        for (const auto& [k, n] : g.nodes) tgt.nodes[k] += n;
        tgt.edges.insert(g.edges.begin(), g.edges.end());
    }
    for (std::size_t j : slots) {
        auto it = raising.find(j);
        if (it == raising.end()) continue;
        for (auto& [w, g] : out.groups)
            for (const EdgeKey& e : it->second)
                if (g.nodes.count(e.first) && g.nodes.count(e.second))
                    g.edges.insert(e);
    }
    return out;
}

// Iterated slotwise merging is order independent and agrees with merging
// both slot sets at once; the group at a pinned assignment of the first set
// equals the merge of the complementary set alone.
inline bool fubini_check(std::size_t n, const std::set<std::size_t>& i1,
                         const std::set<std::size_t>& i2, long cutoff) {
    for (std::size_t s : i1)
        if (i2.count(s))
            throw std::invalid_argument("fubini check: slot sets overlap");
    for (std::size_t s : i1)
        if (s < 2 || s > n)
            throw std::invalid_argument("fubini check: slot out of range");
    for (std::size_t s : i2)
        if (s < 2 || s > n)
            throw std::invalid_argument("fubini check: slot out of range");

    ColoredDag base = tower(cutoff);
    ColoredDag full = full_cubization(base, n, BitWord::all_plus(n));
    auto raising = detail::raising_by_slot(full, n);

    PartialState start;
    for (std::size_t s = 1; s <= n; ++s) start.remaining.push_back(s);
    for (const BitWord& w : all_words(n))
        start.groups.emplace(
            w, census_of(left_fragment(base, w, BitWord::all_plus(n))));

    std::set<std::size_t> joint = i1;
    joint.insert(i2.begin(), i2.end());
    PartialState ab =
        defragment_slots(defragment_slots(start, i1, raising), i2, raising);
    PartialState ba =
        defragment_slots(defragment_slots(start, i2, raising), i1, raising);
    PartialState both = defragment_slots(start, joint, raising);
    if (!(ab == ba) || !(ab == both)) return false;

    // subquotient at a pinned assignment of i1 vs merging i2 alone
    std::vector<std::size_t> i1pos(i1.begin(), i1.end());
    PartialState only2 = defragment_slots(start, i2, raising);
    for (const auto& [rest, g] : both.groups)
        for (const BitWord& pin : all_words(i1.size())) {
            CensusGraph sub;
            auto pinned = [&](const NodeKey& k) {
                for (std::size_t t = 0; t < i1pos.size(); ++t)
                    if (k.lam[i1pos[t] - 1] != pin[t]) return false;
                return true;
            };
            for (const auto& [k, c] : g.nodes)
                if (pinned(k)) sub.nodes.emplace(k, c);
            for (const EdgeKey& e : g.edges)
                if (pinned(e.first) && pinned(e.second)) sub.edges.insert(e);

            std::vector<Bit> key;
            std::size_t at = 0;
            for (std::size_t s : only2.remaining) {
                auto t = std::find(i1pos.begin(), i1pos.end(), s);
                if (t != i1pos.end())
                    key.push_back(pin[std::size_t(t - i1pos.begin())]);
                else
                    key.push_back(rest[at++]);
            }
            if (!(sub == only2.groups.at(BitWord(std::move(key)))))
                return false;
        }
    return true;
}

// SL2-isotypic pieces: weight n carries an (n+1)-dimensional multiplicity
// space whose diagram is the stored hypercube.
struct GradedFamily {
    int h0 = 0;
    std::map<long, std::pair<long long, ColoredDag>> pieces;
};

inline GradedFamily build_P(Bit sign, std::size_t n_slots, long cutoff) {
    if (n_slots < 1)
        throw std::invalid_argument("build_P: need at least one slot");
    GradedFamily out;
    if (sign == Bit::Minus) {
        out.h0 = 1;
        for (long d = 1; 2 * d - 1 <= cutoff; ++d)
            out.pieces[2 * d - 1] = {
                2 * d, cube(CubeSpec::make(ExtBitWord::all_both(n_slots),
                                           ExtBitWord::all_both(n_slots),
                                           BitWord::all_plus(n_slots),
                                           2 * (d - 1)))};
    } else {
        out.h0 = 0;
        BitWord twist =
            concat(BitWord::all_minus(1), BitWord::all_plus(n_slots - 1));
        for (long d = 0; 2 * d <= cutoff; ++d) {
            ColoredDag shape = cube(CubeSpec::make(
                ExtBitWord::all_both(n_slots), ExtBitWord::all_both(n_slots),
                twist, 2 * (d - 1)));
            if (d == 0)
                shape = induced(shape, [](const DagNode& nd) {
                    LayerCoord c = tag_layers(nd.tag)[0];
                    return c.first[0] != Bit::Plus || c.second[0] != Bit::Plus;
                });
            out.pieces[2 * d] = {2 * d + 1, shape};
        }
    }
    for (const auto& [n, piece] : out.pieces)
        if (piece.first != n + 1)
            throw std::logic_error("build_P: multiplicity drifted from n+1");
    return out;
}

// Column characters of a fragment family, summed across members, columns
// placed by the family's minuscule weight.
inline BilateralChar family_column_chars(const BilateralFamily& f, long ext) {
    XDagKind kind = classify(f);
    BilateralChar total;
    for (const auto& [idx, g] : f.members) {
        BilateralChar one = char_by_column(horizontal_extend(g, kind.h0, ext));
        for (const auto& [h, poly] : one)
            for (const auto& [col, k] : poly) total[h][col] += k;
    }
    return total;
}

namespace detail {

inline Bit flipped(Bit b) { return b == Bit::Plus ? Bit::Minus : Bit::Plus; }

// summed column characters of the first-slot reversed model family
inline BilateralChar v_model_columns(Bit lambda1, std::size_t n_slots,
                                     long cutoff, long ext) {
    return family_column_chars(b_family(lambda1, n_slots - 1, cutoff, true),
                               ext);
}

} // namespace detail

// In the Grothendieck group the weight-h multiplicity space of the model is
// the single hypercube (lambda1|+)(pm^{n-1}|pm^{n-1})_[h - |lambda1|-] when
// the parity of h matches, and zero otherwise.  The vertical tower
// telescopes out of the two-column difference.
inline bool grothendieck_check(std::size_t n_slots, Bit lambda1, long h,
                               long cutoff) {
    if (n_slots < 1)
        throw std::invalid_argument("grothendieck check: need a slot");
    if (h < 0 || h + 2 * long(n_slots) > cutoff)
        throw std::invalid_argument("grothendieck check: h outside the window");
    long ext = cutoff;
    BilateralChar va = detail::v_model_columns(lambda1, n_slots, cutoff, ext);
    BilateralChar vb = detail::v_model_columns(detail::flipped(lambda1),
                                               n_slots, cutoff, ext);
    CharPoly cls = char_sub(column_char(va, h), column_char(vb, h + 1));

    long l1m = lambda1 == Bit::Minus ? 1 : 0;
    CharPoly want;
    if ((h - l1m) % 2 == 0) {
        CubeSpec first = CubeSpec::make(
            ExtBitWord::from_word(BitWord({lambda1})),
            ExtBitWord::from_word(BitWord::all_plus(1)), BitWord::all_plus(1));
        CubeSpec rest = CubeSpec::make(ExtBitWord::all_both(n_slots - 1),
                                       ExtBitWord::all_both(n_slots - 1),
                                       BitWord::all_plus(n_slots - 1), h - l1m);
        want = char_of(cube(concat_specs(first, rest)));
    }
    long interior = cutoff - 2;
    return char_restrict(cls, interior) == char_restrict(want, interior);
}

// Per column, the character of the gamma output equals the telescoping sum
// over the input pair's columns.
inline bool felder_telescope_check(std::size_t n_slots, Bit lambda1,
                                   long cutoff) {
    if (n_slots < 1)
        throw std::invalid_argument("felder check: need a slot");
    if (cutoff < 8)
        throw std::invalid_argument("felder check: cutoff too small");
    long ext = cutoff - 2;
    long interior = cutoff - 6;
    BilateralFamily fa = b_family(lambda1, n_slots - 1, cutoff, true);
    BilateralFamily fb =
        b_family(detail::flipped(lambda1), n_slots - 1, cutoff, true);
    BilateralChar va = family_column_chars(fa, ext);
    BilateralChar vb = family_column_chars(fb, ext);
    BilateralFamily top = gamma(fa);
    BilateralChar cols = family_column_chars(top, ext);
    int h0 = classify(top).h0;
    for (long h = h0; h <= h0 + 4; h += 2)
        if (char_restrict(column_char(cols, h), interior) !=
            char_restrict(sl2_column_formula(va, vb, h), interior))
            return false;
    return sl2_column_formula(va, vb, ext + cutoff + 4).empty();
}

// Named checks behind `verify --suite loewy`.
struct LoewyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline std::vector<LoewyCheck> loewy_suite(long cutoff) {
    if (cutoff < 10 || cutoff % 2 != 0)
        throw std::invalid_argument("loewy suite: need an even cutoff >= 10");
    std::vector<LoewyCheck> out;
    ColoredDag base = tower(cutoff);

    for (std::size_t n = 0; n <= 3; ++n) {
        FragmentFamily fam = make_fragment_family(
            base, n, BitWord::all_plus(n), Side::Left);
        DefragReport r = defragment_census(fam, cutoff);
        bool pass = r.nodes_match && (n == 0 ? r.deficit.empty()
                                             : !r.deficit.empty());
        std::ostringstream os;
        os << r.family_nodes << " nodes vs " << r.full_nodes << ", deficit "
           << r.deficit.size() << " edges, pulled " << r.extra.size();
        out.push_back({"defragment-census-n" + std::to_string(n), pass,
                       os.str()});
    }

    {
        bool pass = fubini_check(3, {2}, {3}, cutoff) &&
                    fubini_check(3, {3}, {2}, cutoff) &&
                    fubini_check(3, {}, {2, 3}, cutoff);
        out.push_back({"fubini-order-independence", pass, "n=3 slot pairs"});
    }

    for (Bit sign : {Bit::Plus, Bit::Minus}) {
        std::size_t n_slots = 2;
        GradedFamily p = build_P(sign, n_slots, cutoff);
        bool pass = p.h0 == (sign == Bit::Plus ? 0 : 1);
        std::size_t total = 0;
        for (const auto& [n, piece] : p.pieces) {
            pass = pass && piece.first == n + 1 &&
                   n % 2 == (sign == Bit::Plus ? 0 : 1);
            total += piece.second.size();
        }
        if (sign == Bit::Plus) {
            std::size_t shape = std::size_t(1) << (2 * n_slots);
            std::size_t block = std::size_t(1) << (2 * (n_slots - 1));
            pass = pass && p.pieces.at(0).second.size() == shape - block;
        }
        std::ostringstream os;
        os << p.pieces.size() << " pieces, " << total << " nodes";
        out.push_back({std::string("graded-family-P") +
                           (sign == Bit::Plus ? "plus" : "minus"),
                       pass, os.str()});
    }

    for (std::size_t n = 1; n <= 3; ++n)
        for (Bit l1 : {Bit::Plus, Bit::Minus}) {
            long h0 = l1 == Bit::Minus ? 1 : 0;
            bool pass = grothendieck_check(n, l1, h0, cutoff) &&
                        grothendieck_check(n, l1, h0 + 2, cutoff) &&
                        grothendieck_check(n, l1, h0 + 1, cutoff);
            out.push_back({"grothendieck-n" + std::to_string(n) +
                               (l1 == Bit::Plus ? "-plus" : "-minus"),
                           pass, "classes at h0, h0+2, parity mismatch"});
        }

    for (std::size_t n = 1; n <= 3; ++n)
        for (Bit l1 : {Bit::Plus, Bit::Minus})
            out.push_back({"felder-telescope-n" + std::to_string(n) +
                               (l1 == Bit::Plus ? "-plus" : "-minus"),
                           felder_telescope_check(n, l1, cutoff),
                           "gamma columns vs telescoping sum"});
    return out;
}

} // namespace zc
