#ifndef CBFS_CODE_SET_HPP
#define CBFS_CODE_SET_HPP

#include "word.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cbfs {

// Which construction a member came from.
enum class origin { A, B, C, baseline, external };

inline constexpr std::array<std::pair<origin, std::string_view>, 5> origin_names{{
    {origin::A, "A"},
    {origin::B, "B"},
    {origin::C, "C"},
    {origin::baseline, "baseline"},
    {origin::external, "external"},
}};

inline std::string_view to_string(origin o) {
    for (const auto& [value, name] : origin_names) {
        if (value == o) return name;
    }
    return "external";
}

inline origin parse_origin(std::string_view name) {
    for (const auto& [value, label] : origin_names) {
        if (label == name) return value;
    }
    throw std::invalid_argument("unknown provenance tag '" + std::string(name) + "'");
}

// Equal-length words over one alphabet, strictly increasing and duplicate-free.
class CodeSet {
public:
    struct Entry {
        Word word;
        origin tag = origin::external;
    };

    CodeSet(std::uint32_t q, std::size_t n) : q_(q), n_(n) { check_alphabet(q); }

    // Sorts the entries; a repeated word keeps its first tag.
    CodeSet(std::uint32_t q, std::size_t n, std::vector<Entry> entries) : CodeSet(q, n) {
        for (const auto& e : entries) check_member(e.word);
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& a, const Entry& b) { return a.word < b.word; });
        auto last = std::unique(entries.begin(), entries.end(),
                                [](const Entry& a, const Entry& b) { return a.word == b.word; });
        entries.erase(last, entries.end());
        words_.reserve(entries.size());
        tags_.reserve(entries.size());
        for (auto& e : entries) {
            words_.push_back(std::move(e.word));
            tags_.push_back(e.tag);
        }
    }

    static CodeSet from_words(std::uint32_t q, std::size_t n, std::vector<Word> words, origin tag = origin::external) {
        std::vector<Entry> entries;
        entries.reserve(words.size());
        for (auto& w : words) entries.push_back({std::move(w), tag});
        return CodeSet(q, n, std::move(entries));
    }

    std::uint32_t alphabet() const noexcept { return q_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    std::span<const Word> words() const noexcept { return words_; }
    std::span<const origin> provenance() const noexcept { return tags_; }
    const Word& operator[](std::size_t i) const { return words_[i]; }
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    bool contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

    std::size_t count(origin tag) const {
        return static_cast<std::size_t>(std::count(tags_.begin(), tags_.end(), tag));
    }

    CodeSet without(const Word& w) const {
        CodeSet out(q_, n_);
        for (std::size_t i = 0; i < size(); ++i) {
            if (words_[i] == w) continue;
            out.words_.push_back(words_[i]);
            out.tags_.push_back(tags_[i]);
        }
        return out;
    }

    friend bool operator==(const CodeSet&, const CodeSet&) = default;

    // One word per line, LF-terminated.
    std::string to_text() const {
        std::string out;
        for (const auto& w : words_) {
            out += w.str();
            out.push_back('\n');
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json tags = nlohmann::json::array();
        nlohmann::json words = nlohmann::json::array();
        for (std::size_t i = 0; i < size(); ++i) {
            tags.push_back(std::string(to_string(tags_[i])));
            words.push_back(words_[i].str());
        }
        return {{"q", q_}, {"n", n_}, {"provenance", std::move(tags)}, {"words", std::move(words)}};
    }

    // Blank lines and lines starting with '#' are skipped.
    static CodeSet from_text(std::string_view text, std::uint32_t q, std::size_t n, origin tag = origin::external) {
        std::vector<Word> words;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            auto last = line.find_last_not_of(" \t");
            words.push_back(Word::parse(std::string_view(line).substr(first, last - first + 1), q));
        }
        return from_words(q, n, std::move(words), tag);
    }

    static CodeSet from_json(const nlohmann::json& j) {
        const auto q = j.at("q").get<std::uint32_t>();
        const auto n = j.at("n").get<std::size_t>();
        const auto& words = j.at("words");
        std::vector<Entry> entries;
        entries.reserve(words.size());
        const bool tagged = j.contains("provenance");
        if (tagged && j.at("provenance").size() != words.size()) {
            throw std::invalid_argument("provenance and words arrays differ in length");
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
            entries.push_back({Word::parse(words[i].get<std::string>(), q),
                               tagged ? parse_origin(j.at("provenance")[i].get<std::string>()) : origin::external});
        }
        return CodeSet(q, n, std::move(entries));
    }

private:
    void check_member(const Word& w) const {
        if (w.alphabet() != q_) {
            throw std::domain_error("word " + w.str() + " is not over Z_" + std::to_string(q_));
        }
        if (w.size() != n_) {
            throw std::domain_error("word " + w.str() + " does not have length " + std::to_string(n_));
        }
    }

    std::uint32_t q_;
    std::size_t n_;
    std::vector<Word> words_;
    std::vector<origin> tags_;
};

} // namespace cbfs

#endif // CBFS_CODE_SET_HPP
