#pragma once

// The graph-expression mini-language: ASCII notation for towers, brackets,
// cubes, shifts, reversal and horizontal extension, with a recursive-descent
// parser (one token of lookahead), a canonical printer, and an evaluator
// delegating to the cubization layers.

#include "zc/bilateral.hpp"
#include "zc/cubes.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zc {

struct ParseError : std::runtime_error {
    std::size_t offset;

    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error("offset " + std::to_string(off) + ": " + msg),
          offset(off) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphExpr {
    enum class Kind { Tower, Bracket, Reverse, ShiftH, ShiftD, Twist, Extend,
                      Juxt };

    Kind kind = Kind::Tower;
    char open = '[';            // Tower, Bracket
    char close = ']';
    ExtBitWord first, second;   // Bracket
    long amount = 0;            // ShiftH, ShiftD, Extend
    BitWord twist;              // Twist
    std::vector<GraphExpr> children;

    friend bool operator==(const GraphExpr&, const GraphExpr&) = default;
};

namespace detail {

class ExprParser {
  public:
    explicit ExprParser(std::string_view s) : src(s) {}

    GraphExpr run() {
        GraphExpr e = expr();
        skip();
        if (i < src.size())
            throw ParseError(i, "expected '[', '(' or '~'");
        return e;
    }

  private:
    std::string_view src;
    std::size_t i = 0;

    void skip() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i])))
            ++i;
    }

    char peek() {
        skip();
        return i < src.size() ? src[i] : '\0';
    }

    void expect(char c, const char* what) {
        if (peek() != c) throw ParseError(i, std::string("expected ") + what);
        ++i;
    }

    GraphExpr expr() {
        std::vector<GraphExpr> terms;
        terms.push_back(term());
        for (char c = peek(); c == '[' || c == '(' || c == '~'; c = peek())
            terms.push_back(term());
        if (terms.size() == 1) return std::move(terms[0]);
        GraphExpr j;
        j.kind = GraphExpr::Kind::Juxt;
        j.children = std::move(terms);
        return j;
    }

    GraphExpr term() {
        if (peek() == '~') {
            ++i;
            GraphExpr r;
            r.kind = GraphExpr::Kind::Reverse;
            r.children.push_back(term());
            return r;
        }
        GraphExpr e = primary();
        for (char c = peek(); c == '_' || c == '^'; c = peek())
            e = (c == '_') ? shift_suffix(std::move(e))
                           : extend_suffix(std::move(e));
        return e;
    }

    GraphExpr primary() {
        char open = peek();
        if (open != '[' && open != '(')
            throw ParseError(i, "expected '[', '(' or '~'");
        std::size_t start = i;
        ++i;
        if (peek() == '|') {
            ++i;
            char close = close_char();
            if (open == '(' && close == ')')
                throw ParseError(start,
                                 "no tower of shape (|); use [|], [|) or (|]");
            GraphExpr t;
            t.kind = GraphExpr::Kind::Tower;
            t.open = open;
            t.close = close;
            return t;
        }
        ExtBitWord w1 = word();
        expect('|', "'|'");
        ExtBitWord w2 = word();
        std::size_t at = i;
        char close = close_char();
        if (w1.size() != w2.size())
            throw ParseError(at, "bracket words disagree in length (" +
                                     std::to_string(w1.size()) + " vs " +
                                     std::to_string(w2.size()) + ")");
        GraphExpr b;
        b.kind = GraphExpr::Kind::Bracket;
        b.open = open;
        b.close = close;
        b.first = std::move(w1);
        b.second = std::move(w2);
        return b;
    }

    char close_char() {
        char c = peek();
        if (c != ']' && c != ')')
            throw ParseError(i, "expected ']' or ')'");
        ++i;
        return c;
    }

    ExtBitWord word() {
        skip();
        std::size_t start = i;
        while (i < src.size() &&
               (src[i] == '+' || src[i] == '-' || src[i] == '*'))
            ++i;
        if (i == start)
            throw ParseError(start, "expected a bit word over '+', '-', '*'");
        return ExtBitWord::parse(src.substr(start, i - start));
    }

    long integer() {
        skip();
        std::size_t start = i;
        if (i < src.size() && (src[i] == '-' || src[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
            ++i;
        if (i == digits) throw ParseError(start, "expected an integer");
        return std::stol(std::string(src.substr(start, i - start)));
    }

    GraphExpr shift_suffix(GraphExpr e) {
        ++i;  // '_'
        expect('[', "'['");
        char key = peek();
        if (key != 'h' && key != 'd' && key != 'v')
            throw ParseError(i, "expected 'h', 'd' or 'v'");
        ++i;
        expect('=', "'='");
        GraphExpr s;
        if (key == 'v') {
            s.kind = GraphExpr::Kind::Twist;
            skip();
            std::size_t start = i;
            while (i < src.size() && (src[i] == '+' || src[i] == '-')) ++i;
            if (i == start)
                throw ParseError(start, "expected a sign word over '+', '-'");
            s.twist = BitWord::parse(src.substr(start, i - start));
        } else {
            s.kind = key == 'h' ? GraphExpr::Kind::ShiftH
                                : GraphExpr::Kind::ShiftD;
            s.amount = integer();
        }
        expect(']', "']'");
        s.children.push_back(std::move(e));
        return s;
    }

    GraphExpr extend_suffix(GraphExpr e) {
        ++i;  // '^'
        skip();
        if (src.compare(i, 3, "ext") != 0)
            throw ParseError(i, "expected 'ext'");
        i += 3;
        expect('(', "'('");
        std::size_t at = i;
        long n = integer();
        if (n < 0 || n % 2 != 0)
            throw ParseError(at, "extension takes an even amount >= 0");
        expect(')', "')'");
        GraphExpr s;
        s.kind = GraphExpr::Kind::Extend;
        s.amount = n;
        s.children.push_back(std::move(e));
        return s;
    }
};

} // namespace detail

inline GraphExpr parse_expr(std::string_view text) {
    return detail::ExprParser(text).run();
}

inline std::string print_expr(const GraphExpr& e) {
    switch (e.kind) {
        case GraphExpr::Kind::Tower:
            return std::string(1, e.open) + "|" + std::string(1, e.close);
        case GraphExpr::Kind::Bracket:
            return std::string(1, e.open) + e.first.str() + "|" +
                   e.second.str() + std::string(1, e.close);
        case GraphExpr::Kind::Reverse:
            return "~" + print_expr(e.children[0]);
        case GraphExpr::Kind::ShiftH:
            return print_expr(e.children[0]) + "_[h=" +
                   std::to_string(e.amount) + "]";
        case GraphExpr::Kind::ShiftD:
            return print_expr(e.children[0]) + "_[d=" +
                   std::to_string(e.amount) + "]";
        case GraphExpr::Kind::Twist:
            return print_expr(e.children[0]) + "_[v=" + e.twist.str() + "]";
        case GraphExpr::Kind::Extend:
            return print_expr(e.children[0]) + "^ext(" +
                   std::to_string(e.amount) + ")";
        case GraphExpr::Kind::Juxt: {
            std::string out;
            for (const GraphExpr& c : e.children) out += print_expr(c);
            return out;
        }
    }
    throw std::logic_error("print_expr: unhandled node");
}

// A value mid-evaluation: either a bilateral object or a single graph.  The
// side records which bracket family a one-sided value belongs to; plain
// cubes carry no side.
struct EvalValue {
    std::optional<BilateralDag> two;
    std::optional<ColoredDag> one;
    std::optional<Side> side;
};

namespace detail {

inline EvalValue eval_term(std::optional<EvalValue> base, const GraphExpr& e,
                           long cutoff) {
    using K = GraphExpr::Kind;
    switch (e.kind) {
        case K::Reverse: {
            EvalValue v = eval_term(std::move(base), e.children[0], cutoff);
            if (v.two) v.two = edge_reverse(*v.two);
            else v.one = reverse(*v.one);
            return v;
        }
        case K::ShiftH: {
            EvalValue v = eval_term(std::move(base), e.children[0], cutoff);
            if (v.two)
                v.two = BilateralDag{shift_h(v.two->left, e.amount),
                                     shift_h(v.two->right, e.amount)};
            else v.one = shift_h(*v.one, e.amount);
            return v;
        }
        case K::ShiftD: {
            EvalValue v = eval_term(std::move(base), e.children[0], cutoff);
            if (v.two)
                v.two = BilateralDag{shift_d(v.two->left, e.amount),
                                     shift_d(v.two->right, e.amount)};
            else v.one = shift_d(*v.one, e.amount);
            return v;
        }
        case K::Twist: {
            EvalValue v = eval_term(std::move(base), e.children[0], cutoff);
            if (v.two)
                v.two = BilateralDag{shift_word(v.two->left, e.twist),
                                     shift_word(v.two->right, e.twist)};
            else v.one = shift_word(*v.one, e.twist);
            return v;
        }
        case K::Extend: {
            EvalValue v = eval_term(std::move(base), e.children[0], cutoff);
            if (!v.two)
                throw EvalError("extension needs a bilateral object");
            long g = gap(*v.two);
            if (g != 1 && g != -1)
                throw EvalError("extension needs gap 1 or -1, have " +
                                std::to_string(g));
            v.two = horizontal_extend(*v.two, g == 1 ? 0 : 1, e.amount);
            return v;
        }
        case K::Tower: {
            if (base)
                throw EvalError("a tower literal must be leftmost");
            EvalValue v;
            if (e.open == '[' && e.close == ']') {
                v.two = bilateral_tower(cutoff);
            } else {
                v.one = tower(cutoff);
                v.side = (e.open == '[') ? Side::Left : Side::Right;
            }
            return v;
        }
        case K::Bracket: {
            std::size_t m = e.first.size();
            BitWord nu = BitWord::all_plus(m);
            bool left_form = e.open == '[' && e.close == ')';
            bool right_form = e.open == '(' && e.close == ']';
            bool both_form = e.open == '[' && e.close == ']';
            EvalValue v;
            if (both_form) {
                // [w1|w2] brackets a bilateral object on both halves; on a
                // one-sided object it restricts to that half's convention
                if (base && base->one) {
                    if (!base->side)
                        throw EvalError("cannot bracket a plain cube");
                    if (*base->side == Side::Left)
                        v.one = left_bracket(*base->one, e.first, e.second, nu);
                    else
                        v.one = right_bracket(*base->one, bar(e.second),
                                              bar(e.first), nu);
                    v.side = base->side;
                    return v;
                }
                BilateralDag q = base ? *base->two : bilateral_tower(cutoff);
                v.two = bracket(q, e.first, e.second, nu);
                return v;
            }
            if (left_form || right_form) {
                if (base && base->two)
                    throw EvalError(
                        "a one-sided bracket cannot follow a bilateral object");
                Side want = left_form ? Side::Left : Side::Right;
                if (base && base->side && *base->side != want)
                    throw EvalError("bracket side disagrees with the object");
                ColoredDag q = base ? *base->one : tower(cutoff);
                v.one = left_form
                            ? left_bracket(q, e.first, e.second, nu)
                            : right_bracket(q, e.first, e.second, nu);
                v.side = want;
                return v;
            }
            // (w1|w2): plain cubization, boxed onto whatever precedes it
            CubeSpec spec = CubeSpec::make(e.first, e.second);
            if (!base) {
                v.one = cube(spec);
                return v;
            }
            if (base->two) {
                CubeSpec mirror =
                    CubeSpec::make(bar(e.second), bar(e.first), nu);
                v.two = BilateralDag{box_product(base->two->left, cube(spec)),
                                     box_product(base->two->right,
                                                 cube(mirror))};
                return v;
            }
            v.one = box_product(*base->one, cube(spec));
            v.side = base->side;
            return v;
        }
        case K::Juxt:
            throw std::logic_error("eval_term: nested juxtaposition");
    }
    throw std::logic_error("eval_term: unhandled node");
}

} // namespace detail

inline EvalValue eval_expr(const GraphExpr& e, long cutoff) {
    if (e.kind == GraphExpr::Kind::Juxt) {
        std::optional<EvalValue> v;
        for (const GraphExpr& t : e.children)
            v = detail::eval_term(std::move(v), t, cutoff);
        return std::move(*v);
    }
    return detail::eval_term(std::nullopt, e, cutoff);
}

// the evaluated graph as a single DAG, halves kept apart by tag prefix
inline ColoredDag eval_flat(const GraphExpr& e, long cutoff) {
    EvalValue v = eval_expr(e, cutoff);
    return v.two ? flatten(*v.two) : std::move(*v.one);
}

} // namespace zc
