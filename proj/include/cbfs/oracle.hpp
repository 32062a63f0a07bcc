#ifndef CBFS_ORACLE_HPP
#define CBFS_ORACLE_HPP

// Exhaustive checks over Z_q^n. Everything here goes through the plain word
// predicates, never through the Motzkin recurrences or set constructions, so
// it can serve as an independent reference for them.

#include "code_set.hpp"
#include "construction.hpp"
#include "count.hpp"
#include "motzkin.hpp"
#include "word.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbfs {

class instance_too_large : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleLimits {
    // Upper bound on q^n for any exhaustive pass.
    count_t max_word_space = 10'000'000;
};

inline count_t word_space(std::uint32_t q, std::size_t n, const count_t& cap) {
    count_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        space *= q;
        if (space > cap) return space;
    }
    return space;
}

inline void check_word_space(std::uint32_t q, std::size_t n, const OracleLimits& limits) {
    check_alphabet(q);
    if (word_space(q, n, limits.max_word_space) > limits.max_word_space) {
        throw instance_too_large("exhaustive pass over Z_" + std::to_string(q) + "^" + std::to_string(n) +
                                 " exceeds the cap of " + to_string(limits.max_word_space) + " words");
    }
}

// All of Z_q^n in lexicographic order.
template <word_visitor F>
bool for_each_word(std::uint32_t q, std::size_t n, F&& visit, const OracleLimits& limits = {}) {
    check_word_space(q, n, limits);
    std::vector<symbol_t> buf(n, 0);
    while (true) {
        if (!detail::emit(visit, Word(q, buf))) return false;
        std::size_t pos = n;
        while (pos > 0 && buf[pos - 1] == q - 1) buf[--pos] = 0;
        if (pos == 0) return true;
        ++buf[pos - 1];
    }
}

// BF_q(n) in lexicographic order.
template <word_visitor F>
bool enumerate_bifix_free(std::uint32_t q, std::size_t n, F&& visit, const OracleLimits& limits = {}) {
    if (n < 1) throw std::domain_error("bifix-free words need n >= 1");
    return for_each_word(q, n, [&](const Word& w) {
        if (!is_bifix_free(w)) return true;
        return detail::emit(visit, w);
    }, limits);
}

inline std::vector<Word> bifix_free_words(std::uint32_t q, std::size_t n, const OracleLimits& limits = {}) {
    std::vector<Word> out;
    enumerate_bifix_free(q, n, [&](const Word& w) { out.push_back(w); }, limits);
    return out;
}

inline count_t brute_motzkin_count(std::uint32_t colors, std::size_t n, const OracleLimits& limits = {}) {
    count_t total = 0;
    for_each_word(alphabet_for_colors(colors), n, [&](const Word& w) {
        if (is_motzkin_word(w)) ++total;
    }, limits);
    return total;
}

inline bool contains_zero_run(const Word& w, std::size_t run) {
    std::size_t zeros = 0;
    for (symbol_t s : w) {
        zeros = s == 0 ? zeros + 1 : 0;
        if (zeros >= run) return true;
    }
    return false;
}

inline count_t brute_count_words_avoiding_zero_run(std::size_t run, std::uint32_t q, std::size_t n,
                                                   const OracleLimits& limits = {}) {
    if (run < 1) throw std::domain_error("zero-run length must be >= 1");
    count_t total = 0;
    for_each_word(q, n, [&](const Word& w) {
        if (!contains_zero_run(w, run)) ++total;
    }, limits);
    return total;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

enum class check_kind { cross_bifix_set, non_expandable, count_agreement };

inline std::string_view to_string(check_kind k) {
    switch (k) {
    case check_kind::cross_bifix_set: return "cross-bifix-set";
    case check_kind::non_expandable: return "non-expandable";
    case check_kind::count_agreement: return "count-agreement";
    }
    return "unknown";
}

// A pair (word, other) related by a common factor: a prefix of one of them is
// a suffix of the other. For non-expandability, word is the outside candidate
// and other the member that blocks it.
struct Witness {
    Word word;
    Word other;
    Word factor;
    bool prefix_of_word = true;

    nlohmann::json to_json() const {
        return {{"word", word.str()},
                {"other", other.str()},
                {"cross_bifix", factor.str()},
                {"direction", prefix_of_word ? "prefix_of_word" : "prefix_of_other"}};
    }
};

struct CountMismatch {
    std::string set;
    count_t formula;
    count_t generated;
};

struct VerificationStats {
    std::size_t pairs_checked = 0;
    std::size_t candidates_checked = 0;
    double wall_time_ms = 0.0;
};

struct VerificationReport {
    check_kind kind = check_kind::cross_bifix_set;
    bool ok = true;
    std::vector<Witness> witnesses;
    // non-expandable only: outside words no member blocks
    std::vector<Word> unblocked;
    // count-agreement only
    std::vector<CountMismatch> mismatches;
    VerificationStats stats;

    nlohmann::json to_json() const {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& x : witnesses) w.push_back(x.to_json());
        nlohmann::json j = {
            {"kind", std::string(to_string(kind))},
            {"ok", ok},
            {"witnesses", std::move(w)},
            {"stats",
             {{"pairs_checked", stats.pairs_checked},
              {"candidates_checked", stats.candidates_checked},
              {"wall_time_ms", stats.wall_time_ms}}},
        };
        if (kind == check_kind::non_expandable) {
            nlohmann::json u = nlohmann::json::array();
            for (const auto& x : unblocked) u.push_back(x.str());
            j["unblocked"] = std::move(u);
        }
        if (kind == check_kind::count_agreement) {
            nlohmann::json m = nlohmann::json::array();
            for (const auto& x : mismatches) {
                m.push_back({{"set", x.set}, {"formula", to_string(x.formula)}, {"generated", to_string(x.generated)}});
            }
            j["mismatches"] = std::move(m);
        }
        return j;
    }
};

// Thrown when a non-expandability check is asked of a set that is not a
// cross-bifix-free subset of BF_q(n); carries the failing set report.
class precondition_error : public std::invalid_argument {
public:
    precondition_error(const std::string& what, VerificationReport report)
        : std::invalid_argument(what), report_(std::move(report)) {}
    const VerificationReport& report() const noexcept { return report_; }

private:
    VerificationReport report_;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Witness make_witness(const Word& w, const Word& other, const CrossBifix& cb) {
    return {w, other, cb.factor, cb.direction == bifix_direction::prefix_of_first};
}

} // namespace detail

// Every member must be bifix-free (a border is reported as a witness pairing
// the word with itself) and every unordered pair of distinct members must be
// cross-bifix-free. All violations are recorded.
inline VerificationReport verify_cross_bifix_free_set(const CodeSet& set) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.kind = check_kind::cross_bifix_set;
    const auto words = set.words();
    for (const auto& w : words) {
        if (w.empty()) continue;
        if (std::size_t border = longest_border(w.symbols()); border > 0) {
            // the shortest border is what a pair check would report
            auto self = cross_bifix(w, w);
            report.witnesses.push_back(detail::make_witness(w, w, *self));
        }
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            ++report.stats.pairs_checked;
            if (auto cb = cross_bifix(words[i], words[j])) {
                report.witnesses.push_back(detail::make_witness(words[i], words[j], *cb));
            }
        }
    }
    report.ok = report.witnesses.empty();
    report.stats.wall_time_ms = clock.elapsed_ms();
    return report;
}

// For every w in BF_q(n) outside the set, find the first member (in canonical
// order) sharing a cross-bifix with w. ok iff every candidate is blocked.
inline VerificationReport verify_non_expandable(const CodeSet& set, const OracleLimits& limits = {}) {
    detail::Stopwatch clock;
    if (set.length() < 1) throw std::domain_error("non-expandability needs n >= 1");
    check_word_space(set.alphabet(), set.length(), limits);
    auto precheck = verify_cross_bifix_free_set(set);
    if (!precheck.ok) {
        throw precondition_error("set is not a cross-bifix-free subset of BF_q(n)", std::move(precheck));
    }
    VerificationReport report;
    report.kind = check_kind::non_expandable;
    enumerate_bifix_free(set.alphabet(), set.length(), [&](const Word& candidate) {
        if (set.contains(candidate)) return;
        ++report.stats.candidates_checked;
        for (const auto& member : set) {
            ++report.stats.pairs_checked;
            if (auto cb = cross_bifix(candidate, member)) {
                report.witnesses.push_back(detail::make_witness(candidate, member, *cb));
                return;
            }
        }
        report.unblocked.push_back(candidate);
    }, limits);
    report.ok = report.unblocked.empty();
    report.stats.wall_time_ms = clock.elapsed_ms();
    return report;
}

// Closed-form counts of A, B, C against the sizes of the generated sets.
inline VerificationReport verify_count_agreement(std::uint32_t q, std::size_t n) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.kind = check_kind::count_agreement;
    auto check = [&](std::string name, count_t formula, const CodeSet& built) {
        count_t generated = built.size();
        if (formula != generated) report.mismatches.push_back({std::move(name), formula, generated});
    };
    check("A", count_A(q, n), construct_A(q, n));
    check("B", count_B(q, n), construct_B(q, n));
    check("C", count_C(q, n), construct_C(q, n));
    report.ok = report.mismatches.empty();
    report.stats.wall_time_ms = clock.elapsed_ms();
    return report;
}

} // namespace cbfs

#endif // CBFS_ORACLE_HPP
