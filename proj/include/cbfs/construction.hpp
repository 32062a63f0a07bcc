#ifndef CBFS_CONSTRUCTION_HPP
#define CBFS_CONSTRUCTION_HPP

// The non-expandable cross-bifix-free set CBFS_q(n) = A u B u C, built from
// (q-2)-colored Motzkin words. Members of A, B and C end at heights 0, +1
// and -1 respectively, so the union is disjoint.

#include "code_set.hpp"
#include "count.hpp"
#include "motzkin.hpp"
#include "word.hpp"

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbfs {

inline void check_construction_domain(std::uint32_t q, std::size_t n) {
    if (q < 3) throw std::domain_error("CBFS needs q >= 3, got q = " + std::to_string(q));
    check_alphabet(q);
    if (n < 3) throw std::domain_error("CBFS needs n >= 3, got n = " + std::to_string(n));
}

inline std::uint32_t colors_for(std::uint32_t q) { return q - 2; }

inline std::size_t ceil_half(std::size_t n) { return (n + 1) / 2; }

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

// sum_{i=0}^{n/2} M(i) M(n-i-2) - [M(n/2 - 2)]^2, the square only for even n.
inline count_t count_A(std::uint32_t q, std::size_t n) {
    check_construction_domain(q, n);
    const MotzkinCountTable m(colors_for(q), n - 1);
    const auto len = static_cast<std::int64_t>(n);
    count_t total = 0;
    for (std::int64_t i = 0; i <= len / 2; ++i) total += m(i) * m(len - i - 2);
    if (n % 2 == 0) {
        const count_t half = m(len / 2 - 2);
        total -= half * half;
    }
    return total;
}

// sum_{i=0}^{n/2 - 1} M(i) M(n-i-3)
inline count_t count_B(std::uint32_t q, std::size_t n) {
    check_construction_domain(q, n);
    const MotzkinCountTable m(colors_for(q), n - 1);
    const auto len = static_cast<std::int64_t>(n);
    count_t total = 0;
    for (std::int64_t i = 0; i <= len / 2 - 1; ++i) total += m(i) * m(len - i - 3);
    return total;
}

// M(n-1) minus the words u beta v with a ground arch beta of length >= ceil(n/2).
// At most one such arch fits in n-1 steps, so the subtraction is exact.
inline count_t count_C(std::uint32_t q, std::size_t n) {
    check_construction_domain(q, n);
    const MotzkinCountTable m(colors_for(q), n - 1);
    const auto len = static_cast<std::int64_t>(n);
    count_t blocked = 0;
    for (auto arch = static_cast<std::int64_t>(ceil_half(n)); arch <= len - 1; ++arch) {
        for (std::int64_t i = 0; i <= len - 1 - arch; ++i) {
            blocked += m(i) * m(arch - 2) * m(len - 1 - i - arch);
        }
    }
    return m(len - 1) - blocked;
}

inline count_t count_cbfs(std::uint32_t q, std::size_t n) {
    return count_A(q, n) + count_B(q, n) + count_C(q, n);
}

// ---------------------------------------------------------------------------
// Generation. The generate_* functions stream in block order (by the length
// of the leading Motzkin part); construct_* return canonically ordered sets.
// ---------------------------------------------------------------------------

// alpha beta, alpha Motzkin of length i <= n/2, beta elevated of length n-i.
// For even n the pairs with both halves elevated of length n/2 are skipped.
template <word_visitor F>
bool generate_A(std::uint32_t q, std::size_t n, F&& visit) {
    check_construction_domain(q, n);
    const std::uint32_t k = colors_for(q);
    for (std::size_t i = 0; i <= n / 2; ++i) {
        assert(n - i >= 2);
        const auto tails = elevated_words(k, n - i);
        const bool both_elevated_possible = 2 * i == n;
        bool go = generate_motzkin(k, i, [&](const Word& alpha) {
            if (both_elevated_possible && is_elevated(alpha)) return true;
            for (const auto& beta : tails) {
                if (!detail::emit(visit, alpha + beta)) return false;
            }
            return true;
        });
        if (!go) return false;
    }
    return true;
}

// 1 alpha beta, alpha Motzkin of length i <= n/2 - 1, beta elevated of length n-i-1.
template <word_visitor F>
bool generate_B(std::uint32_t q, std::size_t n, F&& visit) {
    check_construction_domain(q, n);
    const std::uint32_t k = colors_for(q);
    const Word rise = Word::run(q, rise_symbol, 1);
    for (std::size_t i = 0; i + 1 <= n / 2; ++i) {
        assert(n - i - 1 >= 2);
        const auto tails = elevated_words(k, n - i - 1);
        bool go = generate_motzkin(k, i, [&](const Word& alpha) {
            const Word head = rise + alpha;
            for (const auto& beta : tails) {
                if (!detail::emit(visit, head + beta)) return false;
            }
            return true;
        });
        if (!go) return false;
    }
    return true;
}

// gamma 0, gamma Motzkin of length n-1 without a ground arch of length >= ceil(n/2).
template <word_visitor F>
bool generate_C(std::uint32_t q, std::size_t n, F&& visit) {
    check_construction_domain(q, n);
    const Word fall = Word::run(q, fall_symbol, 1);
    const std::size_t min_arch = ceil_half(n);
    return generate_motzkin(colors_for(q), n - 1, [&](const Word& gamma) {
        if (has_ground_elevated_factor(gamma, min_arch)) return true;
        return detail::emit(visit, gamma + fall);
    });
}

namespace detail {

template <class Generator>
CodeSet collect(std::uint32_t q, std::size_t n, origin tag, Generator&& gen) {
    std::vector<CodeSet::Entry> entries;
    gen([&](const Word& w) { entries.push_back({w, tag}); });
    return CodeSet(q, n, std::move(entries));
}

} // namespace detail

inline CodeSet construct_A(std::uint32_t q, std::size_t n) {
    return detail::collect(q, n, origin::A, [&](auto&& visit) { generate_A(q, n, visit); });
}

inline CodeSet construct_B(std::uint32_t q, std::size_t n) {
    return detail::collect(q, n, origin::B, [&](auto&& visit) { generate_B(q, n, visit); });
}

inline CodeSet construct_C(std::uint32_t q, std::size_t n) {
    return detail::collect(q, n, origin::C, [&](auto&& visit) { generate_C(q, n, visit); });
}

inline CodeSet construct_cbfs(std::uint32_t q, std::size_t n) {
    check_construction_domain(q, n);
    std::vector<CodeSet::Entry> entries;
    generate_A(q, n, [&](const Word& w) { entries.push_back({w, origin::A}); });
    generate_B(q, n, [&](const Word& w) { entries.push_back({w, origin::B}); });
    generate_C(q, n, [&](const Word& w) { entries.push_back({w, origin::C}); });
    const std::size_t generated = entries.size();
    CodeSet out(q, n, std::move(entries));
    if (out.size() != generated) {
        throw std::logic_error("A, B and C overlap at q = " + std::to_string(q) + ", n = " + std::to_string(n));
    }
    return out;
}

} // namespace cbfs

#endif // CBFS_CONSTRUCTION_HPP
