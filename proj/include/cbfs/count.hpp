#ifndef CBFS_COUNT_HPP
#define CBFS_COUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cbfs {

// Exact cardinality. Arithmetic that leaves [0, 2^128) throws
// std::overflow_error (subtraction below zero included); it never wraps.
using count_t = boost::multiprecision::checked_uint128_t;

inline std::string to_string(const count_t& c) { return c.str(); }

inline count_t parse_count(std::string_view text) {
    if (text.empty() || text.size() > 39) {
        throw std::invalid_argument("not an exact count: '" + std::string(text) + "'");
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("not an exact count: '" + std::string(text) + "'");
        }
    }
    return count_t(std::string(text));
}

inline std::optional<std::uint64_t> to_u64(const count_t& c) {
    if (c > count_t(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
    return static_cast<std::uint64_t>(c);
}

} // namespace cbfs

#endif // CBFS_COUNT_HPP
