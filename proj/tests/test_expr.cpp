#include "zc/expr.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

using namespace zc;

namespace {

GraphExpr ast(const std::string& text) { return parse_expr(text); }

std::size_t error_offset(const std::string& text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.offset;
    }
    FAIL("expected a parse error for: " << text);
    return 0;
}

ExtBitWord rand_word(std::mt19937& rng, bool definite) {
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<int> pick(0, definite ? 1 : 2);
    std::string s;
    for (int i = len(rng); i > 0; --i) s.push_back("+-*"[pick(rng)]);
    return ExtBitWord::parse(s);
}

// Printable shapes only: a suffix never wraps a reversal (suffixes bind
// tighter than '~'), juxtaposition children are terms, and juxtaposition
// never nests.
GraphExpr rand_ast(std::mt19937& rng, int budget, bool allow_juxt = true,
                   bool allow_reverse = true) {
    std::uniform_int_distribution<int> roll(0, 99);
    int r = roll(rng);
    if (budget <= 0) r %= 40;
    if (r < 20) {
        GraphExpr t;
        t.kind = GraphExpr::Kind::Tower;
        const char* shapes[] = {"[]", "[)", "(]"};
        const char* s = shapes[r % 3];
        t.open = s[0];
        t.close = s[1];
        return t;
    }
    if (r < 40) {
        GraphExpr b;
        b.kind = GraphExpr::Kind::Bracket;
        const char* shapes[] = {"[)", "(]", "()", "[]"};
        const char* s = shapes[r % 4];
        b.open = s[0];
        b.close = s[1];
        b.first = rand_word(rng, false);
        std::uniform_int_distribution<int> kind(0, 2);
        std::string other;
        for (std::size_t i = 0; i < b.first.size(); ++i)
            other.push_back("+-*"[kind(rng)]);
        b.second = ExtBitWord::parse(other);
        return b;
    }
    if (r < 60 && allow_reverse) {
        GraphExpr rev;
        rev.kind = GraphExpr::Kind::Reverse;
        rev.children.push_back(rand_ast(rng, budget - 1, false, true));
        return rev;
    }
    if (r < 85 || !allow_juxt) {
        GraphExpr s;
        std::uniform_int_distribution<long> amt(-9, 9);
        std::uniform_int_distribution<long> ext(0, 4);
        switch (r % 4) {
        case 0: s.kind = GraphExpr::Kind::ShiftH; s.amount = amt(rng); break;
        case 1: s.kind = GraphExpr::Kind::ShiftD; s.amount = amt(rng); break;
        case 2: {
            s.kind = GraphExpr::Kind::Twist;
            s.twist = rand_word(rng, true).expand().front();
            break;
        }
        default: s.kind = GraphExpr::Kind::Extend; s.amount = 2 * ext(rng);
        }
        s.children.push_back(rand_ast(rng, budget - 1, false, false));
        return s;
    }
    GraphExpr j;
    j.kind = GraphExpr::Kind::Juxt;
    std::uniform_int_distribution<int> count(2, 3);
    for (int i = count(rng); i > 0; --i)
        j.children.push_back(rand_ast(rng, budget - 1, false, true));
    return j;
}

} // namespace

TEST_CASE("the grammar accepts the published forms") {
    GraphExpr a = ast("[+-|**)");
    CHECK(a.kind == GraphExpr::Kind::Bracket);
    CHECK(a.open == '[');
    CHECK(a.close == ')');
    CHECK(a.first == ExtBitWord::parse("+-"));
    CHECK(a.second == ExtBitWord::parse("**"));

    GraphExpr b = ast("[+|*)_[d=2]");
    CHECK(b.kind == GraphExpr::Kind::ShiftD);
    CHECK(b.amount == 2);
    REQUIRE(b.children.size() == 1);
    CHECK(b.children[0].kind == GraphExpr::Kind::Bracket);

    GraphExpr c = ast("[+|*)(**|--]");
    CHECK(c.kind == GraphExpr::Kind::Juxt);
    REQUIRE(c.children.size() == 2);
    CHECK(c.children[0].first.size() == 1);
    CHECK(c.children[1].first.size() == 2);
    CHECK(c.children[1].open == '(');
    CHECK(c.children[1].close == ']');

    SECTION("tower literals") {
        for (const char* s : {"[|]", "[|)", "(|]"}) {
            GraphExpr t = ast(s);
            CHECK(t.kind == GraphExpr::Kind::Tower);
            CHECK(t.open == s[0]);
            CHECK(t.close == s[2]);
        }
    }
    SECTION("suffix chains and reversal") {
        GraphExpr t = ast("~[+|*)_[h=-3]_[v=-+]^ext(4)");
        REQUIRE(t.kind == GraphExpr::Kind::Reverse);
        const GraphExpr& e = t.children[0];
        REQUIRE(e.kind == GraphExpr::Kind::Extend);
        CHECK(e.amount == 4);
        const GraphExpr& v = e.children[0];
        REQUIRE(v.kind == GraphExpr::Kind::Twist);
        CHECK(v.twist == BitWord::parse("-+"));
        const GraphExpr& h = v.children[0];
        REQUIRE(h.kind == GraphExpr::Kind::ShiftH);
        CHECK(h.amount == -3);
    }
    SECTION("whitespace between tokens is ignored") {
        CHECK(ast(" [ +- | ** ) ") == ast("[+-|**)"));
        CHECK(ast("[+|*) _[d= 2 ]") == ast("[+|*)_[d=2]"));
        CHECK(ast("~ [|]") == ast("~[|]"));
    }
}

TEST_CASE("parse errors carry the byte offset") {
    CHECK(error_offset("") == 0);
    CHECK(error_offset("(|)") == 0);
    CHECK_THROWS_WITH(parse_expr("(|)"),
                      Catch::Matchers::ContainsSubstring("no tower"));

    CHECK_THROWS_WITH(parse_expr("[+|++)"),
                      Catch::Matchers::ContainsSubstring("1 vs 2"));
    CHECK(error_offset("[+|++)") == 5);

    CHECK(error_offset("[+|*)_[x=2]") == 7);
    CHECK_THROWS_WITH(parse_expr("[+|*)_[x=2]"),
                      Catch::Matchers::ContainsSubstring("'h', 'd' or 'v'"));

    CHECK_THROWS_WITH(parse_expr("[+|*)^ext(3)"),
                      Catch::Matchers::ContainsSubstring("even amount"));
    CHECK_THROWS_WITH(parse_expr("[+|*)^ext(-2)"),
                      Catch::Matchers::ContainsSubstring("even amount"));

    CHECK_THROWS_WITH(parse_expr("[+|*"),
                      Catch::Matchers::ContainsSubstring("']' or ')'"));
    CHECK_THROWS_WITH(parse_expr("[|"),
                      Catch::Matchers::ContainsSubstring("']' or ')'"));
    CHECK_THROWS_WITH(parse_expr("[]"),
                      Catch::Matchers::ContainsSubstring("bit word"));
    CHECK_THROWS_WITH(parse_expr("[+|*) ]"),
                      Catch::Matchers::ContainsSubstring("'[', '(' or '~'"));
    CHECK(error_offset("[+|*) ]") == 6);
    CHECK_THROWS_WITH(parse_expr("[+|*)_[h=]"),
                      Catch::Matchers::ContainsSubstring("integer"));
    CHECK_THROWS_WITH(parse_expr("[+|*)_[v=*]"),
                      Catch::Matchers::ContainsSubstring("sign word"));
    CHECK_THROWS_AS(parse_expr("~"), ParseError);
    CHECK_THROWS_AS(parse_expr("[+|*)^exp(2)"), ParseError);
}

TEST_CASE("printing is canonical and parsing round-trips") {
    SECTION("fixed samples") {
        CHECK(print_expr(ast("[+-|**)")) == "[+-|**)");
        CHECK(print_expr(ast(" [ + | * ) _[d= 2 ]")) == "[+|*)_[d=2]");
        CHECK(print_expr(ast("[+|*)_[h=+3]")) == "[+|*)_[h=3]");
        CHECK(print_expr(ast("~ [|] [+|*] ^ ext ( 4 )")) == "~[|][+|*]^ext(4)");
        CHECK(print_expr(ast("(+|-)(|]")) == "(+|-)(|]");
    }
    SECTION("parse after print is the identity on random ASTs") {
        std::mt19937 rng(20260813);
        for (int trial = 0; trial < 200; ++trial) {
            GraphExpr e = rand_ast(rng, 3);
            std::string text = print_expr(e);
            INFO(text);
            CHECK(parse_expr(text) == e);
        }
    }
    SECTION("printing a parse is idempotent") {
        for (const char* s :
             {"[+|*)(**|--]", "~~[|]", "[-|*]_[d=-4]^ext(0)", "(*|*)(+|-)"}) {
            std::string canon = print_expr(ast(s));
            CHECK(print_expr(ast(canon)) == canon);
        }
    }
}

TEST_CASE("evaluation produces the documented graphs") {
    SECTION("tower literals") {
        EvalValue v = eval_expr(ast("[|)"), 8);
        REQUIRE(v.one.has_value());
        CHECK(v.side == Side::Left);
        CHECK(v.one->size() == 5);
        CHECK(v.one->edge_count() == 0);
        CHECK(iso(*v.one, tower(8), IsoMode::Exact));

        EvalValue w = eval_expr(ast("[|]"), 8);
        REQUIRE(w.two.has_value());
        CHECK(gap(*w.two) == 0);
        CHECK(iso(w.two->left, tower(8), IsoMode::Exact));
        CHECK(iso(w.two->right, tower(8), IsoMode::Exact));

        CHECK(eval_expr(ast("(|]"), 8).side == Side::Right);
    }
    SECTION("left bracket over the default tower") {
        ColoredDag got = *eval_expr(ast("[+|*)"), 12).one;
        ColoredDag want = left_bracket(tower(12), ExtBitWord::parse("+"),
                                       ExtBitWord::all_both(1),
                                       BitWord::all_plus(1));
        CHECK(iso(got, want, IsoMode::Exact));
        CHECK(iso(got,
                  left_fragment(tower(12), BitWord::parse("+"),
                                BitWord::all_plus(1)),
                  IsoMode::Exact));
    }
    SECTION("double reversal is the identity") {
        ColoredDag once = *eval_expr(ast("~[+|*)"), 12).one;
        ColoredDag twice = *eval_expr(ast("~~[+|*)"), 12).one;
        ColoredDag plain = *eval_expr(ast("[+|*)"), 12).one;
        CHECK(iso(twice, plain, IsoMode::Exact));
        CHECK(once.color_census() == plain.color_census());
        CHECK(iso(reverse(once), plain, IsoMode::Exact));
    }
    SECTION("plain cubes and box products") {
        ColoredDag q = *eval_expr(ast("(*|*)"), 12).one;
        CHECK(q.size() == 4);
        CHECK(q.edge_count() == 4);
        CHECK(!eval_expr(ast("(*|*)"), 12).side.has_value());

        ColoredDag single = *eval_expr(ast("(+|+)_[d=4]"), 12).one;
        std::map<Color, long> want{{Color{BitWord::parse("+"), 4}, 1}};
        CHECK(single.color_census() == want);

        ColoredDag boxed = *eval_expr(ast("[|)(+|*)"), 8).one;
        ColoredDag direct = box_product(
            tower(8), cube(CubeSpec::make(ExtBitWord::parse("+"),
                                          ExtBitWord::all_both(1))));
        CHECK(iso(boxed, direct, IsoMode::Exact));
    }
    SECTION("iterated one-sided brackets compose") {
        ColoredDag nested = *eval_expr(ast("[+|*)[+|-)"), 12).one;
        ColoredDag direct = left_bracket(
            left_bracket(tower(12), ExtBitWord::parse("+"),
                         ExtBitWord::all_both(1), BitWord::all_plus(1)),
            ExtBitWord::parse("+"), ExtBitWord::parse("-"),
            BitWord::all_plus(1));
        CHECK(iso(nested, direct, IsoMode::Exact));

        ColoredDag right = *eval_expr(ast("(-|*]"), 12).one;
        CHECK(iso(right,
                  right_bracket(tower(12), ExtBitWord::parse("-"),
                                ExtBitWord::all_both(1), BitWord::all_plus(1)),
                  IsoMode::Exact));
    }
    SECTION("bilateral brackets and restriction to a half") {
        BilateralDag both = *eval_expr(ast("[+|*]"), 12).two;
        BilateralDag direct =
            bracket(bilateral_tower(12), ExtBitWord::parse("+"),
                    ExtBitWord::all_both(1), BitWord::all_plus(1));
        CHECK(iso(both.left, direct.left, IsoMode::Exact));
        CHECK(iso(both.right, direct.right, IsoMode::Exact));
        CHECK(gap(both) == 1);

        ColoredDag left_half = *eval_expr(ast("[|)[+|*]"), 12).one;
        CHECK(iso(left_half, *eval_expr(ast("[+|*)"), 12).one,
                  IsoMode::Exact));
        ColoredDag right_half = *eval_expr(ast("(|][+|*]"), 12).one;
        CHECK(iso(right_half, direct.right, IsoMode::Exact));
    }
    SECTION("horizontal extension") {
        BilateralDag ext = *eval_expr(ast("[+|*]^ext(4)"), 12).two;
        BilateralDag core = *eval_expr(ast("[+|*]"), 12).two;
        CHECK(iso(ext.left, horizontal_extend(core, 0, 4).left,
                  IsoMode::Exact));
        BilateralDag neg = *eval_expr(ast("[-|*]^ext(2)"), 12).two;
        CHECK(iso(neg.left, horizontal_extend(*eval_expr(ast("[-|*]"), 12).two,
                                              1, 2)
                                .left,
                  IsoMode::Exact));
    }
    SECTION("twist suffix") {
        ColoredDag twisted = *eval_expr(ast("(+|*)_[v=-]"), 12).one;
        ColoredDag direct = shift_word(
            cube(CubeSpec::make(ExtBitWord::parse("+"),
                                ExtBitWord::all_both(1))),
            BitWord::parse("-"));
        CHECK(iso(twisted, direct, IsoMode::Exact));
    }
    SECTION("unsupported combinations are rejected") {
        CHECK_THROWS_AS(eval_expr(ast("[+|*)[|)"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("[|)(+|*]"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("(|][+|*)"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("[|][+|*)"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("(+|+)^ext(2)"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("[*|*]^ext(2)"), 12), EvalError);
        CHECK_THROWS_AS(eval_expr(ast("(+|+)[+|*]"), 12), EvalError);
    }
    SECTION("slimness violations surface from the cubization layer") {
        CHECK_THROWS_WITH(eval_expr(ast("(*|*)[+|*)"), 12),
                          Catch::Matchers::ContainsSubstring("not slim"));
    }
    SECTION("flattening") {
        ColoredDag flat = eval_flat(ast("[+|*]"), 12);
        BilateralDag both = *eval_expr(ast("[+|*]"), 12).two;
        CHECK(flat.size() == both.left.size() + both.right.size());
        ColoredDag one = eval_flat(ast("[+|*)"), 12);
        CHECK(one.size() == eval_expr(ast("[+|*)"), 12).one->size());
    }
}
