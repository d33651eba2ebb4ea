#pragma once

// Named invariant checks behind `verify --suite <name>`: a catalog of
// self-contained pass/fail checks per module plus a deterministic worker
// pool.  Every check is seeded, so two runs print identical output.

#include "zc/expr.hpp"
#include "zc/loewy.hpp"
#include "zc/qseries.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace zc {

struct SuiteCheck {
    std::string suite;
    std::string name;
    std::function<bool(std::string& detail)> run;
};

struct SuiteOutcome {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Run every check on a pool of `jobs` workers (0 = logical cores); results
// come back in catalog order regardless of scheduling.
inline std::vector<SuiteOutcome> run_checks(
    const std::vector<SuiteCheck>& checks, unsigned jobs) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, checks.size() ? checks.size() : 1);

    std::vector<SuiteOutcome> out(checks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < checks.size();
             i = next.fetch_add(1)) {
            out[i].suite = checks[i].suite;
            out[i].name = checks[i].name;
            try {
                out[i].pass = checks[i].run(out[i].detail);
            } catch (const std::exception& e) {
                out[i].pass = false;
                out[i].detail = std::string("exception: ") + e.what();
            }
        }
    };
    if (jobs <= 1) {
        work();
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    return out;
}

namespace detail {

inline ExtBitWord verify_rand_ext(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Ext> e(m);
    for (auto& x : e)
        x = std::array<Ext, 3>{Ext::Plus, Ext::Minus, Ext::Both}[pick(rng)];
    return ExtBitWord(std::move(e));
}

inline BitWord verify_rand_word(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<int> pick(0, 1);
    std::vector<Bit> e(m);
    for (auto& x : e) x = pick(rng) ? Bit::Minus : Bit::Plus;
    return BitWord(std::move(e));
}

inline std::multiset<std::pair<Color, Color>> color_edges(
    const ColoredDag& q) {
    std::multiset<std::pair<Color, Color>> out;
    for (const Edge& e : q.edges())
        out.insert({q.node(e.first).color, q.node(e.second).color});
    return out;
}

// Random printable AST: suffixes never wrap a reversal, juxtaposition never
// nests, so print followed by parse is the identity.
inline GraphExpr verify_rand_ast(std::mt19937& rng, int budget,
                                 bool allow_juxt = true,
                                 bool allow_reverse = true) {
    std::uniform_int_distribution<int> roll(0, 99);
    int r = roll(rng);
    if (budget <= 0) r %= 40;
    if (r < 20) {
        GraphExpr t;
        t.kind = GraphExpr::Kind::Tower;
        const char* shapes[] = {"[]", "[)", "(]"};
        t.open = shapes[r % 3][0];
        t.close = shapes[r % 3][1];
        return t;
    }
    if (r < 40) {
        GraphExpr b;
        b.kind = GraphExpr::Kind::Bracket;
        const char* shapes[] = {"[)", "(]", "()", "[]"};
        b.open = shapes[r % 4][0];
        b.close = shapes[r % 4][1];
        std::uniform_int_distribution<std::size_t> len(1, 3);
        std::size_t m = len(rng);
        b.first = verify_rand_ext(rng, m);
        b.second = verify_rand_ext(rng, m);
        return b;
    }
    if (r < 60 && allow_reverse) {
        GraphExpr rev;
        rev.kind = GraphExpr::Kind::Reverse;
        rev.children.push_back(verify_rand_ast(rng, budget - 1, false, true));
        return rev;
    }
    if (r < 85 || !allow_juxt) {
        GraphExpr s;
        std::uniform_int_distribution<long> amt(-9, 9);
        std::uniform_int_distribution<long> ext(0, 4);
        switch (r % 4) {
        case 0: s.kind = GraphExpr::Kind::ShiftH; s.amount = amt(rng); break;
        case 1: s.kind = GraphExpr::Kind::ShiftD; s.amount = amt(rng); break;
        case 2:
            s.kind = GraphExpr::Kind::Twist;
            s.twist = verify_rand_word(rng, 1 + std::size_t(ext(rng) % 3));
            break;
        default: s.kind = GraphExpr::Kind::Extend; s.amount = 2 * ext(rng);
        }
        s.children.push_back(verify_rand_ast(rng, budget - 1, false, false));
        return s;
    }
    GraphExpr j;
    j.kind = GraphExpr::Kind::Juxt;
    std::uniform_int_distribution<int> count(2, 3);
    for (int i = count(rng); i > 0; --i)
        j.children.push_back(verify_rand_ast(rng, budget - 1, false, true));
    return j;
}

// Independent double-loop oracle for the triplet column at vertical shift v;
// deliberately no early exits, matching the closed display term by term.
inline QSeries brute_singlet_column(const SeifertParams& params, Bit lambda1,
                                    long v, const Rational& order,
                                    long n_big) {
    std::size_t n_slots = params.p.size();
    long long p_all = big_p(params);
    long bar_l1 = (lambda1 == Bit::Plus) ? 1 : 0;
    QSeries out;
    out.order = order;
    for (long n = 0; n <= n_big; ++n)
        for (const BitWord& nu : all_words(n_slots)) {
            Rational arg(-2 * n - long(n_slots) - long(minus_count(nu)) +
                         bar_l1 - v);
            for (std::size_t i = 0; i < n_slots; ++i) {
                Bit sgn = (i == 0)
                              ? star(BitWord({lambda1}), BitWord({nu[0]}))[0]
                              : (nu[i] == Bit::Plus ? Bit::Minus : Bit::Plus);
                Rational part(params.r[i], params.p[i]);
                arg += (sgn == Bit::Plus) ? part : -part;
            }
            long long sgn = (minus_count(nu) % 2 == 0) ? 1 : -1;
            qs_add(out, Rational(p_all, 2) * arg * arg,
                   sgn * binomial(n + long(n_slots) - 1, long(n_slots) - 1));
        }
    return out;
}

struct LoewySuiteCache {
    std::once_flag flag;
    std::vector<LoewyCheck> results;
};

} // namespace detail

inline std::vector<SuiteCheck> expr_suite_checks(long depth) {
    std::vector<SuiteCheck> out;
    out.push_back({"expr", "round-trip", [](std::string& detail) {
        std::mt19937 rng(6021023);
        int trials = 200;
        for (int i = 0; i < trials; ++i) {
            GraphExpr e = detail::verify_rand_ast(rng, 3);
            if (parse_expr(print_expr(e)) != e) {
                detail = "mismatch on: " + print_expr(e);
                return false;
            }
        }
        for (const char* s : {"[+-|**)", "[+|*)_[d=2]", "[+|*)(**|--]",
                              "~[|][-|*]^ext(4)"}) {
            std::string canon = print_expr(parse_expr(s));
            if (print_expr(parse_expr(canon)) != canon) {
                detail = std::string("not canonical: ") + s;
                return false;
            }
        }
        detail = std::to_string(trials) + " random ASTs + fixed samples";
        return true;
    }});
    out.push_back({"expr", "eval-examples", [depth](std::string& detail) {
        EvalValue t = eval_expr(parse_expr("[|)"), 8);
        if (!t.one || t.one->size() != 5 || t.one->edge_count() != 0) {
            detail = "tower literal at cutoff 8";
            return false;
        }
        ColoredDag frag = *eval_expr(parse_expr("[+|*)"), depth).one;
        ColoredDag direct = left_fragment(tower(depth), BitWord::parse("+"),
                                          BitWord::all_plus(1));
        if (!iso(frag, direct, IsoMode::Exact)) {
            detail = "left fragment over the default tower";
            return false;
        }
        ColoredDag twice = *eval_expr(parse_expr("~~[+|*)"), depth).one;
        if (!iso(twice, frag, IsoMode::Exact)) {
            detail = "double reversal";
            return false;
        }
        std::ostringstream os;
        os << "fragment " << frag.size() << " nodes, "
           << frag.edge_count() << " edges";
        detail = os.str();
        return true;
    }});
    return out;
}

inline std::vector<SuiteCheck> cubes_suite_checks(long depth, int max_m) {
    std::vector<SuiteCheck> out;
    std::size_t m_cap = std::min(2, max_m);
    out.push_back({"cubes", "fragment-composition",
                   [depth, m_cap](std::string& detail) {
        ColoredDag base = tower(depth);
        long combos = 0;
        for (std::size_t m1 = 1; m1 <= m_cap; ++m1)
            for (std::size_t m2 = 1; m2 <= m_cap; ++m2)
                for (const BitWord& l1 : all_words(m1))
                    for (const BitWord& n1 : all_words(m1))
                        for (const BitWord& l2 : all_words(m2))
                            for (const BitWord& n2 : all_words(m2)) {
                                ColoredDag nested = left_fragment(
                                    left_fragment(base, l1, n1), l2, n2);
                                ColoredDag merged = left_fragment(
                                    base, concat(l1, l2), concat(n1, n2));
                                if (nested.color_census() !=
                                        merged.color_census() ||
                                    detail::color_edges(nested) !=
                                        detail::color_edges(merged)) {
                                    detail = "failed at " + l1.str() + "," +
                                             n1.str() + " then " + l2.str() +
                                             "," + n2.str();
                                    return false;
                                }
                                ++combos;
                            }
        detail = std::to_string(combos) + " slot assignments";
        return true;
    }});
    out.push_back({"cubes", "box-composition", [max_m](std::string& detail) {
        long combos = 0;
        std::size_t total = std::min(4, max_m + 1);
        for (std::size_t m1 = 1; m1 + 1 <= total; ++m1)
            for (std::size_t m2 = 1; m1 + m2 <= total; ++m2) {
                std::vector<std::pair<BitWord, BitWord>> twists;
                if (m1 + m2 <= 3) {
                    for (const BitWord& a : all_words(m1))
                        for (const BitWord& b : all_words(m2))
                            twists.push_back({a, b});
                } else {
                    twists.push_back({BitWord::all_plus(m1),
                                      BitWord::all_minus(m2)});
                    twists.push_back({BitWord::all_minus(m1),
                                      BitWord::all_plus(m2)});
                }
                for (const auto& [a, b] : twists) {
                    CubeSpec sa = CubeSpec::make(ExtBitWord::all_both(m1),
                                                 ExtBitWord::all_both(m1), a);
                    CubeSpec sb = CubeSpec::make(ExtBitWord::all_both(m2),
                                                 ExtBitWord::all_both(m2), b);
                    if (!iso(box_product(cube(sa), cube(sb)),
                             cube(concat_specs(sa, sb)), IsoMode::Exact)) {
                        detail = "failed at m=" + std::to_string(m1) + "+" +
                                 std::to_string(m2);
                        return false;
                    }
                    ++combos;
                }
            }
        detail = std::to_string(combos) + " cube pairs";
        return true;
    }});
    return out;
}

inline std::vector<SuiteCheck> bilateral_suite_checks(long depth, int max_m) {
    std::vector<SuiteCheck> out;
    out.push_back({"bilateral", "gap-random",
                   [depth, max_m](std::string& detail) {
        std::mt19937 rng(20240812);
        BilateralDag t = bilateral_tower(depth);
        std::size_t m_cap = std::min(3, max_m);
        int done = 0;
        while (done < 200) {
            std::uniform_int_distribution<std::size_t> md(1, m_cap);
            std::size_t m = md(rng);
            ExtBitWord d = detail::verify_rand_ext(rng, m);
            ExtBitWord e = detail::verify_rand_ext(rng, m);
            BitWord nu = detail::verify_rand_word(rng, m);
            BilateralDag q = bracket(t, d, e, nu);
            if (q.left.size() == 0 || q.right.size() == 0) continue;
            if (gap(q) != gap_step(d, e)) {
                detail = "failed at [" + d.str() + "|" + e.str() + ")_[" +
                         nu.str() + "]";
                return false;
            }
            ++done;
        }
        detail = "200 random brackets, m <= " + std::to_string(m_cap);
        return true;
    }});
    out.push_back({"bilateral", "pipeline-classification",
                   [depth, max_m](std::string& detail) {
        long cutoff = depth + 2 * max_m;
        if (cutoff % 2 != 0) ++cutoff;
        for (Bit l1 : {Bit::Plus, Bit::Minus})
            for (std::size_t m = 0; m <= std::size_t(max_m); ++m) {
                BilateralFamily f = b_family(l1, m, cutoff);
                int h0 = classify(f).h0;
                for (std::size_t k = 0; k < m; ++k) {
                    f = gamma_tilde(f);
                    XDagKind kind = classify(f);
                    if (kind.x != XDagKind::Group::BPlus ||
                        kind.m != m - 1 - k || kind.h0 != h0) {
                        detail = "drift at m=" + std::to_string(m) +
                                 " stage " + std::to_string(k + 1);
                        return false;
                    }
                }
                f = gamma(f);
                XDagKind fin = classify(f);
                if (fin.x != XDagKind::Group::SL2 || fin.m != 0 ||
                    fin.h0 != h0 || f.members.size() != 1) {
                    detail = "terminal shape at m=" + std::to_string(m);
                    return false;
                }
            }
        detail = "m <= " + std::to_string(max_m) + ", both weights, cutoff " +
                 std::to_string(cutoff);
        return true;
    }});
    out.push_back({"bilateral", "terminal-identity",
                   [depth, max_m](std::string& detail) {
        long cutoff = std::max<long>(16, depth + 4);
        if (cutoff % 2 != 0) ++cutoff;
        ColoredDag t = tower(cutoff);
        std::size_t m_cap = std::min(3, max_m);
        for (Bit l1 : {Bit::Plus, Bit::Minus})
            for (std::size_t m = 1; m <= m_cap; ++m) {
                BilateralFamily f = b_family(l1, m, cutoff);
                for (std::size_t k = 0; k < m; ++k) f = gamma_tilde(f);
                f = gamma(f);
                const BilateralDag& fin = f.members[0].second;
                ExtBitWord d = ExtBitWord::from_word(
                    concat(BitWord({l1}), BitWord::all_minus(m)));
                ExtBitWord e = ExtBitWord::from_word(
                    BitWord::all_plus(m + 1));
                if (!iso(fin.left,
                         left_bracket(t, d, e, BitWord::all_plus(m + 1)),
                         IsoMode::Exact) ||
                    !iso(fin.right,
                         right_bracket(t, bar(e), bar(d),
                                       BitWord::all_plus(m + 1)),
                         IsoMode::Exact)) {
                    detail = "terminal differs at m=" + std::to_string(m);
                    return false;
                }
            }
        detail = "m <= " + std::to_string(m_cap) + " at cutoff " +
                 std::to_string(cutoff);
        return true;
    }});
    return out;
}

inline std::vector<SuiteCheck> characters_suite_checks(long depth, int max_m) {
    std::vector<SuiteCheck> out;
    (void)depth;
    out.push_back({"characters", "bosonic", [max_m](std::string& detail) {
        std::size_t n_cap = std::min(3, max_m);
        for (std::size_t n = 1; n <= n_cap; ++n)
            for (Bit l1 : {Bit::Plus, Bit::Minus})
                if (!verify_bosonic(n, l1, 2 * long(n) + 12)) {
                    detail = "N=" + std::to_string(n);
                    return false;
                }
        detail = "N <= " + std::to_string(n_cap) + ", both weights";
        return true;
    }});
    out.push_back({"characters", "binomial-vanishing", [](std::string& detail) {
        for (std::size_t m = 1; m <= 8; ++m)
            for (long k = 0; k <= 30; ++k)
                if (alternating_increment(m, k) != 0) {
                    detail = "m=" + std::to_string(m) +
                             " k=" + std::to_string(k);
                    return false;
                }
        detail = "m <= 8, k <= 30";
        return true;
    }});
    out.push_back({"characters", "poly-identity", [](std::string& detail) {
        std::mt19937 rng(77003);
        std::uniform_int_distribution<long long> coeff(-9, 9);
        std::uniform_int_distribution<long long> at(-50, 50);
        for (std::size_t m = 0; m <= 6; ++m) {
            long long fact = 1;
            for (std::size_t i = 2; i <= m; ++i) fact *= (long long)i;
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<long long> coeffs(m + 1);
                for (auto& c : coeffs) c = coeff(rng);
                if (alternating_poly_identity(coeffs, at(rng)) !=
                    fact * coeffs.back()) {
                    detail = "degree " + std::to_string(m);
                    return false;
                }
            }
        }
        detail = "100 random polynomials per degree <= 6";
        return true;
    }});
    out.push_back({"characters", "coefficient-one",
                   [max_m](std::string& detail) {
        std::size_t m_cap = std::min<std::size_t>(5, std::size_t(max_m) + 2);
        for (std::size_t m = 1; m <= m_cap; ++m) {
            for (long k = 0; k <= 10; ++k)
                if (alternating_coefficient(m, k) != 1) {
                    detail = "m=" + std::to_string(m) +
                             " k=" + std::to_string(k);
                    return false;
                }
            if (!verify_alternating_equality(m, 10, long(m) + 22)) {
                detail = "graph cross-check at m=" + std::to_string(m);
                return false;
            }
        }
        detail = "m <= " + std::to_string(m_cap) + ", k <= 10";
        return true;
    }});
    out.push_back({"characters", "telescoping", [max_m](std::string& detail) {
        long cutoff = 14, ext = 12, interior = 8;
        std::size_t m_cap = std::min(3, max_m);
        for (Bit l1 : {Bit::Plus, Bit::Minus})
            for (std::size_t m = 0; m <= m_cap; ++m) {
                BilateralFamily f = b_family(l1, m, cutoff);
                BilateralFamily g = b_family(
                    l1 == Bit::Plus ? Bit::Minus : Bit::Plus, m, cutoff);
                BilateralChar va = family_column_chars(f, ext);
                BilateralChar vb = family_column_chars(g, ext);
                BilateralFamily top = gamma(f);
                BilateralChar cols = family_column_chars(top, ext);
                int h0 = classify(top).h0;
                for (long h = h0; h <= h0 + 4; h += 2)
                    if (char_restrict(column_char(cols, h), interior) !=
                        char_restrict(sl2_column_formula(va, vb, h),
                                      interior)) {
                        detail = "column " + std::to_string(h) + " at m=" +
                                 std::to_string(m);
                        return false;
                    }
                if (!sl2_column_formula(va, vb, ext + cutoff + 4).empty()) {
                    detail = "support overrun at m=" + std::to_string(m);
                    return false;
                }
                for (long h = h0; h <= 6; h += 2) {
                    if (h == 0) continue;
                    if (char_restrict(column_char(cols, h), interior) !=
                        char_restrict(column_char(cols, -h), interior)) {
                        detail = "column symmetry at h=" + std::to_string(h);
                        return false;
                    }
                }
            }
        detail = "m <= " + std::to_string(m_cap) +
                 ", columns and h <-> -h symmetry";
        return true;
    }});
    return out;
}

inline std::vector<SuiteCheck> qseries_suite_checks() {
    std::vector<SuiteCheck> out;
    out.push_back({"qseries", "pipeline-consistency", [](std::string& detail) {
        std::vector<SeifertParams> samples{
            {{2}, {1}},          {{3}, {2}},          {{5}, {3}},
            {{2, 3}, {1, 1}},    {{2, 3}, {1, 2}},    {{3, 5}, {2, 4}},
            {{2, 3, 5}, {1, 1, 1}}, {{2, 3, 5}, {1, 2, 4}}};
        Rational order(50);
        long count = 0;
        for (const SeifertParams& p : samples)
            for (Bit l1 : {Bit::Plus, Bit::Minus}) {
                if (!qs_equal(singlet_via_pipeline(p, l1, order),
                              singlet_series(p, l1, order))) {
                    detail = "mismatch at p[0]=" + std::to_string(p.p[0]);
                    return false;
                }
                ++count;
            }
        detail = std::to_string(count) + " parameter sets at order 50";
        return true;
    }});
    out.push_back({"qseries", "triplet-oracle", [](std::string& detail) {
        Rational order(50);
        long count = 0;
        for (long long p : {2, 3, 5})
            for (long long r = 1; r < p; ++r)
                for (Bit l1 : {Bit::Plus, Bit::Minus})
                    for (long window : {0L, 2L, 4L}) {
                        SeifertParams params{{p}, {r}};
                        long h0 = (l1 == Bit::Minus) ? 1 : 0;
                        QSeries want;
                        want.order = order;
                        for (long h = h0 - window; h <= h0 + window; ++h) {
                            if ((h - h0) % 2 != 0) continue;
                            QSeries col = detail::brute_singlet_column(
                                params, l1, std::labs(h) - h0, order, 60);
                            for (const auto& [e, c] : col.coeffs)
                                qs_add(want, e, c);
                        }
                        if (!qs_equal(triplet_series(params, l1, order,
                                                     window),
                                      want)) {
                            detail = "p=" + std::to_string(p) +
                                     " r=" + std::to_string(r) +
                                     " window=" + std::to_string(window);
                            return false;
                        }
                        ++count;
                    }
        detail = std::to_string(count) + " windows against the double loop";
        return true;
    }});
    return out;
}

inline std::vector<SuiteCheck> loewy_suite_checks(long depth) {
    std::vector<SuiteCheck> out;
    auto cache = std::make_shared<detail::LoewySuiteCache>();
    auto lookup = [cache, depth](const std::string& name,
                                 std::string& detail) {
        std::call_once(cache->flag,
                       [&] { cache->results = loewy_suite(depth); });
        for (const LoewyCheck& c : cache->results)
            if (c.name == name) {
                detail = c.detail;
                return c.pass;
            }
        detail = "check not present in the suite";
        return false;
    };
    std::vector<std::string> names;
    for (int n = 0; n <= 3; ++n)
        names.push_back("defragment-census-n" + std::to_string(n));
    names.push_back("fubini-order-independence");
    names.push_back("graded-family-Pplus");
    names.push_back("graded-family-Pminus");
    for (int n = 1; n <= 3; ++n)
        for (const char* s : {"-plus", "-minus"})
            names.push_back("grothendieck-n" + std::to_string(n) + s);
    for (int n = 1; n <= 3; ++n)
        for (const char* s : {"-plus", "-minus"})
            names.push_back("felder-telescope-n" + std::to_string(n) + s);
    for (const std::string& name : names)
        out.push_back({"loewy", name, [lookup, name](std::string& detail) {
                           return lookup(name, detail);
                       }});

    for (Side side : {Side::Left, Side::Right})
        out.push_back({"loewy",
                       side == Side::Left ? "deficit-characterization-left"
                                          : "deficit-characterization-right",
                       [depth, side](std::string& detail) {
            ColoredDag base = tower(depth);
            for (std::size_t n = 1; n <= 2; ++n) {
                FragmentFamily f = make_fragment_family(
                    base, n, BitWord::all_plus(n), side);
                DefragReport r = defragment_census(f, depth);
                if (!r.nodes_match) {
                    detail = "census mismatch at n=" + std::to_string(n);
                    return false;
                }
                ColoredDag full = restrict_depth(
                    full_cubization(base, n, BitWord::all_plus(n)), depth);
                std::set<EdgeKey> cross;
                for (const Edge& e : full.edges()) {
                    NodeKey a = node_key(full.node(e.first));
                    NodeKey b = node_key(full.node(e.second));
                    bool moves = side == Side::Left ? a.lam != b.lam
                                                    : a.mu != b.mu;
                    if (moves) cross.insert({a, b});
                }
                if (r.deficit != cross) {
                    detail = "deficit differs at n=" + std::to_string(n);
                    return false;
                }
            }
            detail = "pinned-coordinate movers, n <= 2";
            return true;
        }});
    return out;
}

inline std::vector<SuiteCheck> suite_checks(const std::string& suite,
                                            long depth, int max_m) {
    auto append = [](std::vector<SuiteCheck>& all,
                     std::vector<SuiteCheck> part) {
        for (SuiteCheck& c : part) all.push_back(std::move(c));
    };
    std::vector<SuiteCheck> all;
    if (suite == "expr" || suite == "all") append(all, expr_suite_checks(depth));
    if (suite == "cubes" || suite == "all")
        append(all, cubes_suite_checks(depth, max_m));
    if (suite == "bilateral" || suite == "all")
        append(all, bilateral_suite_checks(depth, max_m));
    if (suite == "characters" || suite == "all")
        append(all, characters_suite_checks(depth, max_m));
    if (suite == "qseries" || suite == "all")
        append(all, qseries_suite_checks());
    if (suite == "loewy" || suite == "all")
        append(all, loewy_suite_checks(depth));
    if (all.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    return all;
}

} // namespace zc
