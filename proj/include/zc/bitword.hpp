#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zc {

enum class Bit : std::uint8_t { Plus = 0, Minus = 1 };
enum class Ext : std::uint8_t { Plus = 0, Minus = 1, Both = 2 };

inline char bit_char(Bit b) { return b == Bit::Plus ? '+' : '-'; }
inline char ext_char(Ext e) {
    switch (e) {
    case Ext::Plus: return '+';
    case Ext::Minus: return '-';
    default: return '*';
    }
}

// Word over {+,-} with componentwise product; + is the identity and every
// element is its own inverse.
class BitWord {
public:
    BitWord() = default;
    explicit BitWord(std::vector<Bit> entries) : entries_(std::move(entries)) {}

    static BitWord repeated(Bit b, std::size_t m) {
        return BitWord(std::vector<Bit>(m, b));
    }
    static BitWord all_plus(std::size_t m) { return repeated(Bit::Plus, m); }
    static BitWord all_minus(std::size_t m) { return repeated(Bit::Minus, m); }

    // Accepts strings over "+-"; anything else is an error.
    static BitWord parse(std::string_view text) {
        std::vector<Bit> entries;
        entries.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '+')
                entries.push_back(Bit::Plus);
            else if (text[i] == '-')
                entries.push_back(Bit::Minus);
            else
                throw std::invalid_argument("bad bit character '" +
                                            std::string(1, text[i]) +
                                            "' at position " + std::to_string(i));
        }
        return BitWord(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    Bit operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Bit>& entries() const { return entries_; }

    friend bool operator==(const BitWord&, const BitWord&) = default;
    friend auto operator<=>(const BitWord&, const BitWord&) = default;

    std::string str() const {
        std::string s;
        s.reserve(entries_.size());
        for (Bit b : entries_) s.push_back(bit_char(b));
        return s;
    }

private:
    std::vector<Bit> entries_;
};

inline void require_same_length(const BitWord& a, const BitWord& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("bit word length mismatch: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

// Componentwise S2 product.
inline BitWord star(const BitWord& a, const BitWord& b) {
    require_same_length(a, b);
    std::vector<Bit> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] == b[i]) ? Bit::Plus : Bit::Minus;
    return BitWord(std::move(out));
}

inline std::size_t minus_count(const BitWord& a) {
    std::size_t n = 0;
    for (Bit b : a.entries())
        if (b == Bit::Minus) ++n;
    return n;
}

// bar(a) = -^m * a, i.e. flip every entry.
inline BitWord bar(const BitWord& a) {
    std::vector<Bit> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] == Bit::Plus) ? Bit::Minus : Bit::Plus;
    return BitWord(std::move(out));
}

inline BitWord concat(const BitWord& a, const BitWord& b) {
    std::vector<Bit> out = a.entries();
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return BitWord(std::move(out));
}

inline BitWord slice(const BitWord& a, std::size_t begin, std::size_t end) {
    return BitWord(std::vector<Bit>(a.entries().begin() + begin,
                                    a.entries().begin() + end));
}

// mu <= mu' in the partial order attached to lambda: wherever lambda*mu is +,
// lambda*mu' must be + as well.
inline bool le(const BitWord& lambda, const BitWord& mu, const BitWord& mu2) {
    require_same_length(lambda, mu);
    require_same_length(lambda, mu2);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        bool p = (lambda[i] == mu[i]);
        bool p2 = (lambda[i] == mu2[i]);
        if (p && !p2) return false;
    }
    return true;
}

// Number of slots that move from - to + along mu -> mu' (both read through
// lambda).  Requires le(lambda, mu, mu').
inline std::size_t gap_count(const BitWord& lambda, const BitWord& mu,
                             const BitWord& mu2) {
    if (!le(lambda, mu, mu2))
        throw std::invalid_argument("gap_count: words are not comparable");
    std::size_t n = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        bool p = (lambda[i] == mu[i]);
        bool p2 = (lambda[i] == mu2[i]);
        if (!p && p2) ++n;
    }
    return n;
}

// All 2^m words of length m, lexicographic with + before -.
inline std::vector<BitWord> all_words(std::size_t m) {
    std::vector<BitWord> out;
    out.reserve(std::size_t(1) << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<Bit> entries(m);
        for (std::size_t i = 0; i < m; ++i)
            entries[i] =
                (mask >> (m - 1 - i)) & 1 ? Bit::Minus : Bit::Plus;
        out.emplace_back(std::move(entries));
    }
    return out;
}

// Word over {+,-,*}; '*' slots are free and the word denotes the set of
// bit words obtained by resolving them, a sub-hypercube of size 2^{#both}.
class ExtBitWord {
public:
    ExtBitWord() = default;
    explicit ExtBitWord(std::vector<Ext> entries) : entries_(std::move(entries)) {}

    static ExtBitWord from_word(const BitWord& w) {
        std::vector<Ext> entries(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            entries[i] = (w[i] == Bit::Plus) ? Ext::Plus : Ext::Minus;
        return ExtBitWord(std::move(entries));
    }
    static ExtBitWord all_both(std::size_t m) {
        return ExtBitWord(std::vector<Ext>(m, Ext::Both));
    }

    // Accepts strings over "+-*".
    static ExtBitWord parse(std::string_view text) {
        std::vector<Ext> entries;
        entries.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
            case '+': entries.push_back(Ext::Plus); break;
            case '-': entries.push_back(Ext::Minus); break;
            case '*': entries.push_back(Ext::Both); break;
            default:
                throw std::invalid_argument("bad extended bit character '" +
                                            std::string(1, text[i]) +
                                            "' at position " + std::to_string(i));
            }
        }
        return ExtBitWord(std::move(entries));
    }

    std::size_t size() const { return entries_.size(); }
    Ext operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<Ext>& entries() const { return entries_; }

    friend bool operator==(const ExtBitWord&, const ExtBitWord&) = default;
    friend auto operator<=>(const ExtBitWord&, const ExtBitWord&) = default;

    std::size_t both_count() const {
        std::size_t n = 0;
        for (Ext e : entries_)
            if (e == Ext::Both) ++n;
        return n;
    }
    // Definite '-' slots only; '*' does not count.
    std::size_t minus_count() const {
        std::size_t n = 0;
        for (Ext e : entries_)
            if (e == Ext::Minus) ++n;
        return n;
    }

    bool contains(const BitWord& w) const {
        if (w.size() != entries_.size()) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] == Ext::Both) continue;
            if ((entries_[i] == Ext::Plus) != (w[i] == Bit::Plus)) return false;
        }
        return true;
    }

    // The subset reading, enumerated with + before - in each free slot.
    std::vector<BitWord> expand() const {
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] == Ext::Both) free.push_back(i);
        std::vector<BitWord> out;
        out.reserve(std::size_t(1) << free.size());
        std::vector<Bit> base(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i)
            base[i] = (entries_[i] == Ext::Minus) ? Bit::Minus : Bit::Plus;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free.size());
             ++mask) {
            std::vector<Bit> entries = base;
            for (std::size_t j = 0; j < free.size(); ++j)
                entries[free[j]] =
                    (mask >> (free.size() - 1 - j)) & 1 ? Bit::Minus : Bit::Plus;
            out.emplace_back(std::move(entries));
        }
        return out;
    }

    std::string str() const {
        std::string s;
        s.reserve(entries_.size());
        for (Ext e : entries_) s.push_back(ext_char(e));
        return s;
    }

private:
    std::vector<Ext> entries_;
};

// Flip definite slots, keep free slots free; matches elementwise bar of the
// subset reading.
inline ExtBitWord bar(const ExtBitWord& a) {
    std::vector<Ext> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        switch (a[i]) {
        case Ext::Plus: out[i] = Ext::Minus; break;
        case Ext::Minus: out[i] = Ext::Plus; break;
        default: out[i] = Ext::Both; break;
        }
    }
    return ExtBitWord(std::move(out));
}

inline ExtBitWord concat(const ExtBitWord& a, const ExtBitWord& b) {
    std::vector<Ext> out = a.entries();
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return ExtBitWord(std::move(out));
}

} // namespace zc
