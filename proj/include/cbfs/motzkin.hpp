#ifndef CBFS_MOTZKIN_HPP
#define CBFS_MOTZKIN_HPP

#include "count.hpp"
#include "word.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace cbfs {

// A visitor receives each generated word. Returning false stops the stream.
template <class F>
concept word_visitor = std::invocable<F&, const Word&>;

namespace detail {

template <word_visitor F>
bool emit(F& visit, const Word& w) {
    if constexpr (std::is_convertible_v<std::invoke_result_t<F&, const Word&>, bool>) {
        return static_cast<bool>(std::invoke(visit, w));
    } else {
        std::invoke(visit, w);
        return true;
    }
}

} // namespace detail

// M_k(0..max_length) for k-colored Motzkin paths, exact.
class MotzkinCountTable {
public:
    MotzkinCountTable(std::uint32_t colors, std::size_t max_length) : colors_(colors) {
        values_.reserve(max_length + 1);
        values_.push_back(count_t(1));
        if (max_length >= 1) values_.push_back(count_t(colors));
        // M(m+1) = k M(m) + sum_{i<m} M(i) M(m-1-i)
        for (std::size_t m = 1; m < max_length; ++m) {
            count_t next = count_t(colors) * values_[m];
            for (std::size_t i = 0; i < m; ++i) next += values_[i] * values_[m - 1 - i];
            values_.push_back(next);
        }
    }

    std::uint32_t colors() const noexcept { return colors_; }
    std::size_t max_length() const noexcept { return values_.size() - 1; }

    // Zero for negative lengths.
    count_t operator()(std::int64_t n) const {
        if (n < 0) return count_t(0);
        if (static_cast<std::size_t>(n) >= values_.size()) {
            throw std::out_of_range("Motzkin table holds lengths up to " + std::to_string(max_length()));
        }
        return values_[static_cast<std::size_t>(n)];
    }

private:
    std::uint32_t colors_;
    std::vector<count_t> values_;
};

inline count_t motzkin_count(std::uint32_t colors, std::size_t n) {
    return MotzkinCountTable(colors, n)(static_cast<std::int64_t>(n));
}

inline std::uint32_t alphabet_for_colors(std::uint32_t colors) {
    std::uint32_t q = colors + 2;
    check_alphabet(q);
    return q;
}

namespace detail {

class MotzkinWalker {
public:
    MotzkinWalker(std::uint32_t colors, std::size_t n) : colors_(colors), q_(alphabet_for_colors(colors)), buf_(n) {}

    template <class F>
    bool run(F& visit) { return step(0, 0, visit); }

private:
    // Can a path at height h still return to the axis in r steps?
    bool feasible(std::int64_t h, std::size_t r) const {
        if (h < 0 || static_cast<std::size_t>(h) > r) return false;
        return colors_ > 0 || (r - static_cast<std::size_t>(h)) % 2 == 0;
    }

    // Symbols are tried in increasing order, so output is lexicographic.
    template <class F>
    bool step(std::size_t pos, std::int64_t h, F& visit) {
        if (pos == buf_.size()) return emit(visit, Word(q_, buf_));
        const std::size_t rest = buf_.size() - pos - 1;
        if (feasible(h - 1, rest)) {
            buf_[pos] = fall_symbol;
            if (!step(pos + 1, h - 1, visit)) return false;
        }
        if (feasible(h + 1, rest)) {
            buf_[pos] = rise_symbol;
            if (!step(pos + 1, h + 1, visit)) return false;
        }
        if (colors_ > 0 && feasible(h, rest)) {
            for (std::uint32_t c = 0; c < colors_; ++c) {
                buf_[pos] = static_cast<symbol_t>(first_level_symbol + c);
                if (!step(pos + 1, h, visit)) return false;
            }
        }
        return true;
    }

    std::uint32_t colors_;
    std::uint32_t q_;
    std::vector<symbol_t> buf_;
};

} // namespace detail

// Streams every k-colored Motzkin word of length n over Z_{k+2} once, in
// lexicographic order. Returns false if the visitor stopped the stream.
template <word_visitor F>
bool generate_motzkin(std::uint32_t colors, std::size_t n, F&& visit) {
    detail::MotzkinWalker walker(colors, n);
    return walker.run(visit);
}

// Streams 1 alpha 0 for each Motzkin alpha of length n-2. Empty for n < 2.
template <word_visitor F>
bool generate_elevated(std::uint32_t colors, std::size_t n, F&& visit) {
    if (n < 2) return true;
    const std::uint32_t q = alphabet_for_colors(colors);
    const Word rise = Word::run(q, rise_symbol, 1);
    const Word fall = Word::run(q, fall_symbol, 1);
    return generate_motzkin(colors, n - 2, [&](const Word& alpha) {
        return detail::emit(visit, rise + alpha + fall);
    });
}

inline std::vector<Word> motzkin_words(std::uint32_t colors, std::size_t n) {
    std::vector<Word> out;
    generate_motzkin(colors, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

inline std::vector<Word> elevated_words(std::uint32_t colors, std::size_t n) {
    std::vector<Word> out;
    generate_elevated(colors, n, [&](const Word& w) { out.push_back(w); });
    return out;
}

// True iff gamma = u beta v with u, v Motzkin and beta elevated, |beta| >= min_len.
// Such a beta is exactly an arch between two consecutive returns to the axis.
inline bool has_ground_elevated_factor(const Word& gamma, std::size_t min_len) {
    if (!is_motzkin_word(gamma)) {
        throw std::domain_error("ground elevated factors are defined for Motzkin words only, got " + gamma.str());
    }
    std::int64_t h = 0;
    std::size_t arch_start = 0;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (h == 0) arch_start = j;
        h += step_of(gamma[j]);
        if (h == 0 && gamma[j] == fall_symbol && j + 1 - arch_start >= min_len) return true;
    }
    return false;
}

} // namespace cbfs

#endif // CBFS_MOTZKIN_HPP
