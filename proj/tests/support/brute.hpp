#ifndef CBFS_TESTS_BRUTE_HPP
#define CBFS_TESTS_BRUTE_HPP

// Test-only reference predicates. These deliberately use the most literal
// definitions (substring comparisons, all factors) and share no code path
// with the library beyond the Word container.

#include <cbfs/word.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cbfs::testing {

inline std::vector<Word> all_words(std::uint32_t q, std::size_t n) {
    std::vector<Word> out;
    std::vector<symbol_t> buf(n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t v = idx;
        for (std::size_t p = n; p-- > 0;) {
            buf[p] = static_cast<symbol_t>(v % q);
            v /= q;
        }
        out.emplace_back(q, buf);
    }
    return out;
}

inline bool naive_is_bifix_free(const Word& w) {
    for (std::size_t len = 1; len < w.size(); ++len) {
        if (w.prefix(len) == w.suffix(len)) return false;
    }
    return true;
}

inline bool naive_cross_bifix_free(const Word& a, const Word& b) {
    for (std::size_t len = 1; len < a.size(); ++len) {
        if (a.prefix(len) == b.suffix(len) || b.prefix(len) == a.suffix(len)) return false;
    }
    return true;
}

inline bool naive_is_motzkin(const Word& w) {
    long h = 0;
    for (symbol_t s : w) {
        if (s == 1) ++h;
        else if (s == 0) --h;
        if (h < 0) return false;
    }
    return h == 0;
}

inline bool naive_is_elevated(const Word& w) {
    return w.size() >= 2 && w.front() == 1 && w.back() == 0 && naive_is_motzkin(w.factor(1, w.size() - 2));
}

// Some split w = u beta v with u, v Motzkin, beta elevated and |beta| >= min_len.
inline bool naive_ground_elevated_factor(const Word& w, std::size_t min_len) {
    for (std::size_t a = 0; a < w.size(); ++a) {
        for (std::size_t b = a + 2; b <= w.size(); ++b) {
            if (b - a < min_len) continue;
            if (naive_is_motzkin(w.prefix(a)) && naive_is_elevated(w.factor(a, b - a)) &&
                naive_is_motzkin(w.suffix(w.size() - b))) {
                return true;
            }
        }
    }
    return false;
}

inline std::vector<std::string> strs(const auto& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.str());
    return out;
}

} // namespace cbfs::testing

#endif // CBFS_TESTS_BRUTE_HPP
