#include <catch2/catch_amalgamated.hpp>

#include "zc/cubes.hpp"

#include <map>
#include <set>
#include <string>

using namespace zc;

namespace {

// edge list as (source tag, target tag) pairs, order-independent
std::set<std::pair<std::string, std::string>> tagged_edges(const ColoredDag& q) {
    std::set<std::pair<std::string, std::string>> out;
    for (const Edge& e : q.edges())
        out.insert({q.node(e.first).tag, q.node(e.second).tag});
    return out;
}

// for injectively colored graphs this pins the graph exactly
std::multiset<std::pair<Color, Color>> color_edges(const ColoredDag& q) {
    std::multiset<std::pair<Color, Color>> out;
    for (const Edge& e : q.edges())
        out.insert({q.node(e.first).color, q.node(e.second).color});
    return out;
}

CubeSpec full_cube(std::size_t m) {
    return CubeSpec::make(ExtBitWord::all_both(m), ExtBitWord::all_both(m));
}

} // namespace

TEST_CASE("the 2-cube of one slot") {
    ColoredDag q = cube(full_cube(1));
    REQUIRE(q.size() == 4);
    REQUIRE(q.edge_count() == 4);
    std::map<Color, long> census = q.color_census();
    CHECK(census[Color{BitWord::parse("+"), 0}] == 1);
    CHECK(census[Color{BitWord::parse("-"), 1}] == 2);
    CHECK(census[Color{BitWord::parse("+"), 2}] == 1);
    std::set<std::pair<std::string, std::string>> expect = {
        {"(-|+)", "(+|+)"},
        {"(-|+)", "(-|-)"},
        {"(+|+)", "(+|-)"},
        {"(-|-)", "(+|-)"},
    };
    CHECK(tagged_edges(q) == expect);
}

TEST_CASE("cube node and edge counts") {
    for (std::size_t m = 0; m <= 3; ++m) {
        ColoredDag q = cube(full_cube(m));
        CHECK(q.size() == (std::size_t(1) << (2 * m)));
        CHECK(q.edge_count() == m * (std::size_t(1) << (2 * m)));
    }
    CubeSpec partial = CubeSpec::make(ExtBitWord::parse("+*"),
                                      ExtBitWord::parse("-*"));
    CHECK(cube(partial).size() == 4);
}

TEST_CASE("segments are labeled") {
    for (const BitWord& lambda : all_words(2)) {
        CubeSpec s = CubeSpec::make(ExtBitWord::from_word(lambda),
                                    ExtBitWord::all_both(2));
        ColoredDag q = cube(s);
        CHECK(q.size() == 4);
        for (auto& [c, n] : q.color_census()) CHECK(n == 1);
    }
}

TEST_CASE("cube twist relation") {
    // (lambda|pm^m)_[nu] = (lambda*nu|pm^m) shifted by |l|+|n|-|l*n|
    for (const BitWord& lambda : all_words(2))
        for (const BitWord& nu : all_words(2)) {
            CubeSpec a = CubeSpec::make(ExtBitWord::from_word(lambda),
                                        ExtBitWord::all_both(2), nu);
            BitWord ln = star(lambda, nu);
            long shift = long(minus_count(lambda)) + long(minus_count(nu)) -
                         long(minus_count(ln));
            CubeSpec b = CubeSpec::make(ExtBitWord::from_word(ln),
                                        ExtBitWord::all_both(2),
                                        BitWord::all_plus(2), shift);
            CHECK(iso(cube(a), cube(b), IsoMode::Exact));
        }
}

TEST_CASE("concatenation of cube specs is exact") {
    for (const BitWord& l1 : all_words(1))
        for (const BitWord& l2 : all_words(2))
            for (const BitWord& n1 : all_words(1))
                for (const BitWord& n2 : all_words(2)) {
                    CubeSpec a = CubeSpec::make(ExtBitWord::from_word(l1),
                                                ExtBitWord::all_both(1), n1);
                    CubeSpec b = CubeSpec::make(ExtBitWord::from_word(l2),
                                                ExtBitWord::all_both(2), n2);
                    ColoredDag boxed = box_product(cube(a), cube(b));
                    ColoredDag merged = cube(concat_specs(a, b));
                    CHECK(boxed.color_census() == merged.color_census());
                    CHECK(iso(boxed, merged, IsoMode::Exact));
                }
}

TEST_CASE("same-length span merge") {
    // anchor (lambda|mu) = (-|+), first factor frees the lambda slot, the
    // second frees the mu slot
    CubeSpec a = CubeSpec::make(ExtBitWord::parse("*"), ExtBitWord::parse("+"));
    CubeSpec b = CubeSpec::make(ExtBitWord::parse("-"), ExtBitWord::parse("*"));
    CubeSpec merged = union_specs(a, b);
    CHECK(merged.D == ExtBitWord::parse("*"));
    CHECK(merged.E == ExtBitWord::parse("*"));
    CHECK(merged.offset == 1);
    CHECK(iso(box_product(cube(a), cube(b)), cube(merged),
              IsoMode::ClassPreserving));

    // two-slot example: anchor (-+|+-), lambda slots split between factors
    CubeSpec c = CubeSpec::make(ExtBitWord::parse("*+"), ExtBitWord::parse("+-"));
    CubeSpec d = CubeSpec::make(ExtBitWord::parse("-+"), ExtBitWord::parse("*-"));
    CubeSpec md = union_specs(c, d);
    CHECK(md.D == ExtBitWord::parse("*+"));
    CHECK(md.E == ExtBitWord::parse("*-"));
    CHECK(md.offset == 1 + 1);
    CHECK(iso(box_product(cube(c), cube(d)), cube(md), IsoMode::ClassPreserving));

    // both factors freeing the same slot is out
    CHECK_THROWS_AS(union_specs(CubeSpec::make(ExtBitWord::parse("*"),
                                               ExtBitWord::parse("+")),
                                CubeSpec::make(ExtBitWord::parse("*"),
                                               ExtBitWord::parse("+"))),
                    std::invalid_argument);
    // disagreeing on a definite slot is out
    CHECK_THROWS_AS(union_specs(CubeSpec::make(ExtBitWord::parse("+"),
                                               ExtBitWord::parse("+")),
                                CubeSpec::make(ExtBitWord::parse("-"),
                                               ExtBitWord::parse("+"))),
                    std::invalid_argument);
}

TEST_CASE("tower") {
    ColoredDag t = tower(8);
    CHECK(t.size() == 5);
    CHECK(t.edge_count() == 0);
    CHECK(is_slim(t));
    CHECK(t.node(0).color == Color{BitWord{}, 0});
    CHECK_THROWS_AS(tower(7), std::invalid_argument);
    CHECK_THROWS_AS(tower(-2), std::invalid_argument);
}

TEST_CASE("slimness validation") {
    CHECK(is_slim(tower(12)));
    CHECK_FALSE(is_slim(cube(full_cube(1)))); // color (-,1) repeats
    // a hole in a class is fat
    ColoredDag holed({{Color{BitWord{}, 0}, {}, "a"},
                      {Color{BitWord{}, 4}, {}, "b"}},
                     {});
    CHECK_FALSE(is_slim(holed));
    CHECK_THROWS_AS(left_fragment(holed, BitWord::parse("+"),
                                  BitWord::parse("+")),
                    std::invalid_argument);
    // classes may stop at different heights
    ColoredDag ragged({{Color{BitWord::parse("+"), 0}, {}, "a"},
                       {Color{BitWord::parse("+"), 2}, {}, "b"},
                       {Color{BitWord::parse("-"), 1}, {}, "c"}},
                      {});
    CHECK(is_slim(ragged));
}

TEST_CASE("the one-slot fragment over the tower is the zigzag chain") {
    ColoredDag f = left_fragment(tower(12), BitWord::parse("+"),
                                 BitWord::parse("+"));
    REQUIRE(f.size() == 14);
    std::set<std::pair<std::string, std::string>> expect;
    for (int k = 0; k <= 6; ++k) {
        expect.insert({std::to_string(2 * k) + "(+|+)",
                       std::to_string(2 * k) + "(+|-)"});
        if (k >= 1)
            expect.insert({std::to_string(2 * k) + "(+|+)",
                           std::to_string(2 * k - 2) + "(+|-)"});
    }
    CHECK(tagged_edges(f) == expect);

    // colors: (+,2k) and (-,2k+1)
    std::map<Color, long> census = f.color_census();
    for (int k = 0; k <= 6; ++k) {
        CHECK(census[Color{BitWord::parse("+"), 2 * k}] == 1);
        CHECK(census[Color{BitWord::parse("-"), 2 * k + 1}] == 1);
    }
    CHECK(is_slim(f));
}

TEST_CASE("fragment nodes match segment nodes") {
    for (const BitWord& lambda : all_words(2))
        for (const BitWord& nu : all_words(2)) {
            ColoredDag frag = left_fragment(tower(8), lambda, nu);
            ColoredDag seg = left_segment(tower(8), lambda, nu);
            CHECK(frag.color_census() == seg.color_census());
            CHECK(frag.edge_count() > seg.edge_count());
            CHECK(is_slim(frag));
        }
}

TEST_CASE("fragment twist coherence") {
    // over tower-rooted bases the twisted fragment equals the untwisted one
    // at lambda*nu, shifted by the defect |l|+|n|-|l*n|
    ColoredDag zig = left_fragment(tower(12), BitWord::parse("+"),
                                   BitWord::parse("+"));
    for (const ColoredDag& base : {tower(12), zig})
        for (const BitWord& lambda : all_words(1))
            for (const BitWord& nu : all_words(1)) {
                BitWord ln = star(lambda, nu);
                long c = long(minus_count(lambda)) + long(minus_count(nu)) -
                         long(minus_count(ln));
                ColoredDag a = left_fragment(base, lambda, nu);
                ColoredDag b = shift_d(left_fragment(base, ln,
                                                     BitWord::all_plus(1)),
                                       c);
                CHECK(iso(a, b, IsoMode::Exact));
            }
}

TEST_CASE("fragment composition merges") {
    ColoredDag t = tower(12);
    for (const BitWord& l1 : all_words(1))
        for (const BitWord& l2 : all_words(1))
            for (const BitWord& n1 : all_words(1))
                for (const BitWord& n2 : all_words(1)) {
                    ColoredDag nested = left_fragment(
                        left_fragment(t, l1, n1), l2, n2);
                    ColoredDag merged = left_fragment(t, concat(l1, l2),
                                                      concat(n1, n2));
                    CHECK(nested.color_census() == merged.color_census());
                    CHECK(color_edges(nested) == color_edges(merged));
                }
}

TEST_CASE("right fragments mirror left fragments") {
    ColoredDag zig = left_fragment(tower(12), BitWord::parse("+"),
                                   BitWord::parse("+"));
    for (const ColoredDag& base : {tower(12), zig})
        for (const BitWord& w : all_words(1))
            for (const BitWord& nu : all_words(1)) {
                ColoredDag lf = left_fragment(base, w, nu);
                ColoredDag rf = right_fragment(reverse(base), w, nu);
                CHECK(iso(reverse(lf), rf, IsoMode::Exact));
            }
}

TEST_CASE("right fragment over the tower") {
    // (pm|-]: chain mirroring the zigzag
    ColoredDag f = right_fragment(tower(8), BitWord::parse("-"),
                                  BitWord::parse("+"));
    std::map<Color, long> census = f.color_census();
    for (int k = 0; k <= 4; ++k) {
        CHECK(census[Color{BitWord::parse("-"), 2 * k + 1}] == 1);
        CHECK(census[Color{BitWord::parse("+"), 2 * k + 2}] == 1);
    }
    // own edges raise the first coordinate, pulled edges climb two levels
    std::set<std::pair<std::string, std::string>> edges = tagged_edges(f);
    CHECK(edges.count({"0(-|-)", "0(+|-)"}) == 1);
    CHECK(edges.count({"0(-|-)", "2(+|-)"}) == 1);
    CHECK(f.edge_count() == 5 + 4);
}

TEST_CASE("fragmented fat cubization") {
    ColoredDag t = tower(8);
    auto family = fragmented_cubization(t, 0, BitWord{}, Side::Left);
    REQUIRE(family.size() == 1);
    CHECK(family[0].second.color_census() !=
          std::map<Color, long>{}); // non-empty
    // m = 0 keeps the base (bits stay empty, depths unchanged)
    CHECK(iso(family[0].second, t, IsoMode::Exact));

    for (std::size_t m = 1; m <= 2; ++m)
        for (Side side : {Side::Left, Side::Right}) {
            auto fam = fragmented_cubization(t, m, BitWord::all_plus(m), side);
            std::map<Color, long> total;
            for (auto& [w, g] : fam) {
                CHECK(is_slim(g));
                for (auto& [c, n] : g.color_census()) total[c] += n;
            }
            CubeSpec fat = full_cube(m);
            ColoredDag plain = side == Side::Left
                                   ? left_segment(t, BitWord::all_plus(m),
                                                  BitWord::all_plus(m))
                                   : right_segment(t, BitWord::all_plus(m),
                                                   BitWord::all_plus(m));
            // unfragmented node multiset: box the tower with the full cube
            std::map<Color, long> cube_census;
            for (auto& [c, n] : box_product(t, cube(fat)).color_census())
                cube_census[c] += n;
            CHECK(total == cube_census);
            (void)plain;
        }
}

TEST_CASE("cutoff stability on the interior") {
    for (const BitWord& lambda : all_words(2)) {
        BitWord nu = BitWord::parse("-+");
        ColoredDag big = left_fragment(tower(16), lambda, nu);
        ColoredDag small = left_fragment(tower(12), lambda, nu);
        long interior = 12 - 2 * 2;
        ColoredDag a = restrict_depth(big, interior);
        ColoredDag b = restrict_depth(small, interior);
        CHECK(a.color_census() == b.color_census());
        CHECK(color_edges(a) == color_edges(b));
    }
}

TEST_CASE("bookkeeping tags") {
    ColoredDag f = left_fragment(left_fragment(tower(4), BitWord::parse("+"),
                                               BitWord::parse("-")),
                                 BitWord::parse("-"), BitWord::parse("+"));
    const std::string& tag = f.node(0).tag;
    CHECK(tag_base(tag) == "0");
    auto layers = tag_layers(tag);
    REQUIRE(layers.size() == 2);
    CHECK(layers[0].first == BitWord::parse("+"));
    CHECK(layers[1].first == BitWord::parse("-"));
    CHECK(tag_layers("12").empty());
    CHECK(tag_base("12(+|-)") == "12");
}

TEST_CASE("disjoint unions") {
    ColoredDag t = tower(4);
    ColoredDag u = disjoint_union({t, t}, {"a:", "b:"});
    CHECK(u.size() == 2 * t.size());
    CHECK(u.node(0).tag == "a:0");
    CHECK(u.node(t.size()).tag == "b:0");
    CHECK_THROWS_AS(disjoint_union({t, t}, {"a:"}), std::invalid_argument);
}
