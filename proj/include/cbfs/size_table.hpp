#ifndef CBFS_SIZE_TABLE_HPP
#define CBFS_SIZE_TABLE_HPP

#include "baseline.hpp"
#include "construction.hpp"
#include "count.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cbfs {

enum class comparator { S, Sstar };

inline std::string_view to_string(comparator c) { return c == comparator::S ? "S" : "Sstar"; }

inline comparator parse_comparator(std::string_view name) {
    if (name == "S") return comparator::S;
    if (name == "Sstar" || name == "S*") return comparator::Sstar;
    throw std::invalid_argument("unknown comparator '" + std::string(name) + "' (expected S or Sstar)");
}

// The comparator value, or nullopt where its k-range is empty (S at n = 3).
inline std::optional<count_t> comparator_value(comparator c, std::size_t n, std::uint32_t q) {
    const std::size_t min_run = c == comparator::S ? 2 : 1;
    if (n < 3 || min_run > n - 2) return std::nullopt;
    return baseline_optimum(n, q, min_run).size;
}

struct SizeEntry {
    std::uint32_t q = 0;
    count_t cbfs;
    std::optional<count_t> cmp;

    bool cbfs_larger() const { return cmp && cbfs > *cmp; }
    friend bool operator==(const SizeEntry&, const SizeEntry&) = default;
};

struct SizeRow {
    std::size_t n = 0;
    std::vector<SizeEntry> entries; // one per q, increasing q
    friend bool operator==(const SizeRow&, const SizeRow&) = default;
};

// |CBFS_q(n)| against S or S* over a rectangle of (q, n).
class SizeTable {
public:
    SizeTable(comparator cmp, std::vector<std::uint32_t> qs, std::vector<SizeRow> rows)
        : cmp_(cmp), qs_(std::move(qs)), rows_(std::move(rows)) {
        for (const auto& row : rows_) {
            if (row.entries.size() != qs_.size()) throw std::invalid_argument("ragged size table row");
            for (std::size_t i = 0; i < qs_.size(); ++i) {
                if (row.entries[i].q != qs_[i]) throw std::invalid_argument("size table entry q mismatch");
            }
        }
    }

    static SizeTable build(std::uint32_t q_lo, std::uint32_t q_hi, std::size_t n_lo, std::size_t n_hi, comparator cmp) {
        if (q_lo > q_hi || n_lo > n_hi) throw std::domain_error("empty table range");
        std::vector<std::uint32_t> qs;
        for (std::uint32_t q = q_lo; q <= q_hi; ++q) qs.push_back(q);
        std::vector<SizeRow> rows;
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
            SizeRow row{n, {}};
            for (std::uint32_t q : qs) row.entries.push_back({q, count_cbfs(q, n), comparator_value(cmp, n, q)});
            rows.push_back(std::move(row));
        }
        return SizeTable(cmp, std::move(qs), std::move(rows));
    }

    comparator compare() const noexcept { return cmp_; }
    const std::vector<std::uint32_t>& alphabets() const noexcept { return qs_; }
    const std::vector<SizeRow>& rows() const noexcept { return rows_; }

    const SizeEntry& at(std::size_t n, std::uint32_t q) const {
        for (const auto& row : rows_) {
            if (row.n != n) continue;
            for (const auto& e : row.entries) {
                if (e.q == q) return e;
            }
        }
        throw std::out_of_range("no table entry for q = " + std::to_string(q) + ", n = " + std::to_string(n));
    }

    friend bool operator==(const SizeTable&, const SizeTable&) = default;

    // Header n,cbfs_q{Q},cmp_q{Q}[,bold_q{Q}],... with LF line endings. An
    // undefined comparator is an empty cell; bold is 1 where CBFS is larger.
    std::string to_csv(bool bold = false) const {
        std::string out = "n";
        for (std::uint32_t q : qs_) {
            const std::string tag = std::to_string(q);
            out += ",cbfs_q" + tag + ",cmp_q" + tag;
            if (bold) out += ",bold_q" + tag;
        }
        out += '\n';
        for (const auto& row : rows_) {
            out += std::to_string(row.n);
            for (const auto& e : row.entries) {
                out += ',' + to_string(e.cbfs) + ',';
                if (e.cmp) out += to_string(*e.cmp);
                if (bold) out += e.cbfs_larger() ? ",1" : ",0";
            }
            out += '\n';
        }
        return out;
    }

    static SizeTable from_csv(std::string_view text, comparator cmp) {
        std::istringstream in{std::string(text)};
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
        const auto header = split(line);
        if (header.empty() || header[0] != "n") throw std::invalid_argument("CSV header must start with 'n'");
        const bool bold = header.size() >= 4 && header[3].rfind("bold_q", 0) == 0;
        const std::size_t stride = bold ? 3 : 2;
        if ((header.size() - 1) % stride != 0) throw std::invalid_argument("malformed CSV header");
        std::vector<std::uint32_t> qs;
        for (std::size_t c = 1; c < header.size(); c += stride) {
            if (header[c].rfind("cbfs_q", 0) != 0) throw std::invalid_argument("malformed CSV header: " + header[c]);
            qs.push_back(static_cast<std::uint32_t>(std::stoul(header[c].substr(6))));
        }
        std::vector<SizeRow> rows;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto cells = split(line);
            if (cells.size() != header.size()) throw std::invalid_argument("CSV row width mismatch: " + line);
            SizeRow row{static_cast<std::size_t>(std::stoull(cells[0])), {}};
            for (std::size_t i = 0; i < qs.size(); ++i) {
                const std::size_t c = 1 + i * stride;
                SizeEntry e{qs[i], parse_count(cells[c]), std::nullopt};
                if (!cells[c + 1].empty()) e.cmp = parse_count(cells[c + 1]);
                row.entries.push_back(std::move(e));
            }
            rows.push_back(std::move(row));
        }
        return SizeTable(cmp, std::move(qs), std::move(rows));
    }

    // Counts are JSON integers when they fit 64 bits, decimal strings otherwise.
    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : rows_) {
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& e : row.entries) {
                entries.push_back({{"q", e.q},
                                   {"cbfs", count_json(e.cbfs)},
                                   {"cmp", e.cmp ? count_json(*e.cmp) : nlohmann::json(nullptr)},
                                   {"cbfs_larger", e.cbfs_larger()}});
            }
            rows.push_back({{"n", row.n}, {"entries", std::move(entries)}});
        }
        return {{"compare", std::string(to_string(cmp_))}, {"q", qs_}, {"rows", std::move(rows)}};
    }

    static SizeTable from_json(const nlohmann::json& j) {
        const comparator cmp = parse_comparator(j.at("compare").get<std::string>());
        auto qs = j.at("q").get<std::vector<std::uint32_t>>();
        std::vector<SizeRow> rows;
        for (const auto& r : j.at("rows")) {
            SizeRow row{r.at("n").get<std::size_t>(), {}};
            for (const auto& e : r.at("entries")) {
                SizeEntry entry{e.at("q").get<std::uint32_t>(), json_count(e.at("cbfs")), std::nullopt};
                if (!e.at("cmp").is_null()) entry.cmp = json_count(e.at("cmp"));
                row.entries.push_back(std::move(entry));
            }
            rows.push_back(std::move(row));
        }
        return SizeTable(cmp, std::move(qs), std::move(rows));
    }

private:
    static std::vector<std::string> split(const std::string& line) {
        std::vector<std::string> cells;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (!cells.empty() && !cells.back().empty() && cells.back().back() == '\r') cells.back().pop_back();
        return cells;
    }

    static nlohmann::json count_json(const count_t& c) {
        if (auto v = to_u64(c)) return *v;
        return to_string(c);
    }

    static count_t json_count(const nlohmann::json& j) {
        if (j.is_number_unsigned()) return count_t(j.get<std::uint64_t>());
        if (j.is_string()) return parse_count(j.get<std::string>());
        throw std::invalid_argument("size table count must be an unsigned integer or digit string");
    }

    comparator cmp_;
    std::vector<std::uint32_t> qs_;
    std::vector<SizeRow> rows_;
};

} // namespace cbfs

#endif // CBFS_SIZE_TABLE_HPP
