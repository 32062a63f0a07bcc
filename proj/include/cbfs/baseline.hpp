#ifndef CBFS_BASELINE_HPP
#define CBFS_BASELINE_HPP

// Comparison construction S_{k,q}(n): words 0^k x m y with x, y non-zero and
// a middle part m that avoids 0^k. Here k is a zero-run length, unrelated to
// the Motzkin color count.

#include "code_set.hpp"
#include "count.hpp"
#include "word.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbfs {

// F_{k,q}(0..max_length): words of Z_q^n with no factor 0^k.
class ZeroRunAvoidanceTable {
public:
    ZeroRunAvoidanceTable(std::size_t run, std::uint32_t q, std::size_t max_length) : run_(run), q_(q) {
        if (run < 1) throw std::domain_error("zero-run length must be >= 1");
        check_alphabet(q);
        values_.reserve(max_length + 1);
        for (std::size_t n = 0; n <= max_length; ++n) {
            if (n < run) {
                values_.push_back(n == 0 ? count_t(1) : values_.back() * q);
            } else {
                count_t sum = 0;
                for (std::size_t l = 1; l <= run; ++l) sum += values_[n - l];
                values_.push_back(count_t(q - 1) * sum);
            }
        }
    }

    std::size_t run() const noexcept { return run_; }
    std::uint32_t alphabet() const noexcept { return q_; }
    std::size_t max_length() const noexcept { return values_.size() - 1; }

    count_t operator()(std::size_t n) const {
        if (n >= values_.size()) {
            throw std::out_of_range("zero-run table holds lengths up to " + std::to_string(max_length()));
        }
        return values_[n];
    }

private:
    std::size_t run_;
    std::uint32_t q_;
    std::vector<count_t> values_;
};

inline count_t f_count(std::size_t run, std::uint32_t q, std::size_t n) {
    return ZeroRunAvoidanceTable(run, q, n)(n);
}

inline void check_baseline_domain(std::size_t run, std::uint32_t q, std::size_t n) {
    check_alphabet(q);
    if (run < 1 || n < 3 || run > n - 2) {
        throw std::domain_error("baseline needs 1 <= k <= n-2, got k = " + std::to_string(run) +
                                ", n = " + std::to_string(n));
    }
}

// (q-1)^2 F_{k,q}(n-k-2)
inline count_t baseline_size(std::size_t run, std::uint32_t q, std::size_t n) {
    check_baseline_domain(run, q, n);
    const count_t nonzero = q - 1;
    return nonzero * nonzero * f_count(run, q, n - run - 2);
}

// Filtered enumeration in lexicographic order.
inline CodeSet construct_baseline_set(std::size_t run, std::uint32_t q, std::size_t n) {
    check_baseline_domain(run, q, n);
    std::vector<CodeSet::Entry> entries;
    std::vector<symbol_t> buf(n, fall_symbol);

    // pos in [run, n); zeros = length of the current trailing zero run.
    auto fill = [&](auto& self, std::size_t pos, std::size_t zeros) -> void {
        if (pos == n) {
            entries.push_back({Word(q, buf), origin::baseline});
            return;
        }
        const bool edge = pos == run || pos == n - 1;
        for (std::uint32_t s = edge ? 1 : 0; s < q; ++s) {
            const std::size_t next_zeros = s == 0 ? zeros + 1 : 0;
            if (next_zeros >= run) continue;
            buf[pos] = static_cast<symbol_t>(s);
            self(self, pos + 1, next_zeros);
        }
    };
    fill(fill, run, 0);
    return CodeSet(q, n, std::move(entries));
}

struct BaselineOptimum {
    count_t size;
    std::size_t run = 0; // smallest maximizing k
};

inline BaselineOptimum baseline_optimum(std::size_t n, std::uint32_t q, std::size_t min_run) {
    check_alphabet(q);
    if (n < 3 || min_run > n - 2) {
        throw std::domain_error("empty k-range " + std::to_string(min_run) + " <= k <= n-2 for n = " +
                                std::to_string(n));
    }
    BaselineOptimum best{baseline_size(min_run, q, n), min_run};
    for (std::size_t k = min_run + 1; k <= n - 2; ++k) {
        count_t v = baseline_size(k, q, n);
        if (v > best.size) best = {v, k};
    }
    return best;
}

// S(n,q): maximum over 2 <= k <= n-2.
inline BaselineOptimum s_max(std::size_t n, std::uint32_t q) { return baseline_optimum(n, q, 2); }

// S*(n,q): maximum over 1 <= k <= n-2.
inline BaselineOptimum s_star(std::size_t n, std::uint32_t q) { return baseline_optimum(n, q, 1); }

} // namespace cbfs

#endif // CBFS_BASELINE_HPP
