#ifndef CBFS_WORD_HPP
#define CBFS_WORD_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbfs {

using symbol_t = std::uint16_t;

inline constexpr std::uint32_t min_alphabet = 2;
inline constexpr std::uint32_t max_alphabet = 1u << 16;

// Symbols with a fixed lattice step: 0 falls, 1 rises, 2..q-1 are colored levels.
inline constexpr symbol_t fall_symbol = 0;
inline constexpr symbol_t rise_symbol = 1;
inline constexpr symbol_t first_level_symbol = 2;

inline void check_alphabet(std::uint32_t q) {
    if (q < min_alphabet || q > max_alphabet) {
        throw std::domain_error("alphabet size must be in [2, 65536], got " + std::to_string(q));
    }
}

// An immutable finite word over Z_q. Ordering is lexicographic on the symbols.
class Word {
public:
    Word() = default;

    Word(std::uint32_t q, std::vector<symbol_t> symbols) : symbols_(std::move(symbols)), q_(q) {
        check_alphabet(q);
        for (symbol_t s : symbols_) {
            if (s >= q) {
                throw std::domain_error("symbol " + std::to_string(s) + " outside Z_" + std::to_string(q));
            }
        }
    }

    Word(std::uint32_t q, std::initializer_list<symbol_t> symbols)
        : Word(q, std::vector<symbol_t>(symbols)) {}

    // a^m
    static Word run(std::uint32_t q, symbol_t a, std::size_t m) {
        return Word(q, std::vector<symbol_t>(m, a));
    }

    std::uint32_t alphabet() const noexcept { return q_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    symbol_t operator[](std::size_t i) const noexcept { return symbols_[i]; }
    symbol_t front() const { return symbols_.front(); }
    symbol_t back() const { return symbols_.back(); }
    std::span<const symbol_t> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    Word prefix(std::size_t len) const {
        return Word(q_, std::vector<symbol_t>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(std::min(len, size()))));
    }
    Word suffix(std::size_t len) const {
        return Word(q_, std::vector<symbol_t>(symbols_.end() - static_cast<std::ptrdiff_t>(std::min(len, size())), symbols_.end()));
    }
    Word factor(std::size_t pos, std::size_t len) const {
        auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(pos);
        return Word(q_, std::vector<symbol_t>(first, first + static_cast<std::ptrdiff_t>(len)));
    }

    // |w|_a
    std::size_t occurrences(symbol_t a) const {
        return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), a));
    }

    friend Word operator+(const Word& lhs, const Word& rhs) {
        if (lhs.q_ != rhs.q_) throw std::domain_error("concatenation of words over different alphabets");
        std::vector<symbol_t> out;
        out.reserve(lhs.size() + rhs.size());
        out.insert(out.end(), lhs.symbols_.begin(), lhs.symbols_.end());
        out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
        Word w;
        w.symbols_ = std::move(out);
        w.q_ = lhs.q_;
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

    // Digits for q <= 10, comma-separated integers otherwise.
    std::string str() const {
        std::string out;
        if (q_ <= 10) {
            out.reserve(size());
            for (symbol_t s : symbols_) out.push_back(static_cast<char>('0' + s));
        } else {
            for (std::size_t i = 0; i < size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(symbols_[i]);
            }
        }
        return out;
    }

    static Word parse(std::string_view text, std::uint32_t q) {
        check_alphabet(q);
        std::vector<symbol_t> symbols;
        if (q <= 10) {
            symbols.reserve(text.size());
            for (char ch : text) {
                if (ch < '0' || ch > '9') {
                    throw std::invalid_argument("bad symbol '" + std::string(1, ch) + "' in word '" + std::string(text) + "'");
                }
                symbols.push_back(static_cast<symbol_t>(ch - '0'));
            }
        } else if (!text.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t comma = text.find(',', pos);
                std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
                std::uint32_t value = 0;
                auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
                if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value >= max_alphabet) {
                    throw std::invalid_argument("bad symbol '" + std::string(field) + "' in word '" + std::string(text) + "'");
                }
                symbols.push_back(static_cast<symbol_t>(value));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
        return Word(q, std::move(symbols));
    }

private:
    std::vector<symbol_t> symbols_;
    std::uint32_t q_ = min_alphabet;
};

// heights[j] = |w_1..w_j|_1 - |w_1..w_j|_0
struct HeightProfile {
    std::vector<std::int64_t> heights;

    std::int64_t final_height() const { return heights.back(); }
    std::int64_t min_height() const { return *std::min_element(heights.begin(), heights.end()); }
};

inline std::int64_t step_of(symbol_t s) noexcept {
    return s == rise_symbol ? 1 : (s == fall_symbol ? -1 : 0);
}

inline HeightProfile height_profile(const Word& w) {
    HeightProfile p;
    p.heights.reserve(w.size() + 1);
    std::int64_t h = 0;
    p.heights.push_back(h);
    for (symbol_t s : w) {
        h += step_of(s);
        p.heights.push_back(h);
    }
    return p;
}

inline bool is_motzkin_word(const Word& w) {
    std::int64_t h = 0;
    for (symbol_t s : w) {
        h += step_of(s);
        if (h < 0) return false;
    }
    return h == 0;
}

// 1 alpha 0 with alpha Motzkin: the path touches the axis only at its endpoints.
inline bool is_elevated(const Word& w) {
    if (w.size() < 2) return false;
    std::int64_t h = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        h += step_of(w[j]);
        if (j + 1 < w.size() && h <= 0) return false;
    }
    return h == 0;
}

// Length of the longest non-empty strict prefix that is also a suffix (0 if none).
inline std::size_t longest_border(std::span<const symbol_t> w) {
    if (w.empty()) return 0;
    std::vector<std::size_t> fail(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t k = fail[i - 1];
        while (k > 0 && w[i] != w[k]) k = fail[k - 1];
        if (w[i] == w[k]) ++k;
        fail[i] = k;
    }
    return fail.back();
}

inline bool is_bifix_free(const Word& w) {
    if (w.empty()) throw std::domain_error("bifix-freeness is undefined for the empty word");
    return longest_border(w.symbols()) == 0;
}

enum class bifix_direction {
    prefix_of_first,  // prefix of w, suffix of w'
    prefix_of_second, // prefix of w', suffix of w
};

struct CrossBifix {
    Word factor;
    bifix_direction direction = bifix_direction::prefix_of_first;

    friend bool operator==(const CrossBifix&, const CrossBifix&) = default;
};

inline bool prefix_matches_suffix(std::span<const symbol_t> head_of, std::span<const symbol_t> tail_of, std::size_t len) {
    return std::equal(head_of.begin(), head_of.begin() + static_cast<std::ptrdiff_t>(len),
                      tail_of.end() - static_cast<std::ptrdiff_t>(len));
}

// Shortest non-empty strict prefix of one word that is a suffix of the other;
// on equal length the (prefix of w, suffix of w') direction wins.
inline std::optional<CrossBifix> cross_bifix(const Word& w, const Word& w2) {
    if (w.size() != w2.size()) throw std::domain_error("cross-bifix of words with different lengths");
    if (w.alphabet() != w2.alphabet()) throw std::domain_error("cross-bifix of words over different alphabets");
    auto a = w.symbols();
    auto b = w2.symbols();
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (prefix_matches_suffix(a, b, len)) return CrossBifix{w.prefix(len), bifix_direction::prefix_of_first};
        if (prefix_matches_suffix(b, a, len)) return CrossBifix{w2.prefix(len), bifix_direction::prefix_of_second};
    }
    return std::nullopt;
}

inline bool are_cross_bifix_free(const Word& w, const Word& w2) {
    return !cross_bifix(w, w2).has_value();
}

} // namespace cbfs

#endif // CBFS_WORD_HPP
