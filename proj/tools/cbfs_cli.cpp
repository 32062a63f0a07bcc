// cbfs: count, generate and verify cross-bifix-free sets built from colored
// Motzkin paths, and compare them against the zero-run baseline.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or domain error.

#include <cbfs/cbfs.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

constexpr std::uint64_t default_limit = 10'000'000;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const char* what) {
    auto number = [&](const std::string& s) -> std::uint64_t {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw usage_error(std::string("bad ") + what + " range '" + text + "'");
        }
        return std::stoull(s);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = number(text);
        return {v, v};
    }
    return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void enforce_limit(const cbfs::count_t& size, std::uint64_t limit, bool force, const std::string& what) {
    if (!force && size > cbfs::count_t(limit)) {
        throw usage_error(what + " has " + cbfs::to_string(size) + " words, above --limit " + std::to_string(limit) +
                          " (pass --force to override)");
    }
}

std::string render(const cbfs::CodeSet& set, const std::string& format) {
    if (format == "json") return set.to_json().dump(2) + "\n";
    return set.to_text();
}

// ---------------------------------------------------------------------------

struct CountOptions {
    std::optional<std::uint32_t> q;
    std::size_t n = 0;
    std::string set = "cbfs";
    std::optional<std::uint32_t> colors;
};

int run_count(const CountOptions& o) {
    using namespace cbfs;
    const auto need_q = [&]() -> std::uint32_t {
        if (!o.q) throw usage_error("--q is required for --set " + o.set);
        return *o.q;
    };
    std::string out;
    if (o.set == "cbfs") {
        out = to_string(count_cbfs(need_q(), o.n));
    } else if (o.set == "A") {
        out = to_string(count_A(need_q(), o.n));
    } else if (o.set == "B") {
        out = to_string(count_B(need_q(), o.n));
    } else if (o.set == "C") {
        out = to_string(count_C(need_q(), o.n));
    } else if (o.set == "S" || o.set == "Sstar") {
        const auto best = o.set == "S" ? s_max(o.n, need_q()) : s_star(o.n, need_q());
        out = to_string(best.size) + " k=" + std::to_string(best.run);
    } else if (o.set == "motzkin") {
        std::uint32_t colors = 0;
        if (o.colors) {
            colors = *o.colors;
        } else {
            const std::uint32_t q = need_q();
            if (q < 2) throw std::domain_error("q must be >= 2");
            colors = q - 2;
        }
        out = to_string(motzkin_count(colors, o.n));
    } else {
        throw usage_error("unknown set '" + o.set + "'");
    }
    std::cout << out << '\n';
    return exit_ok;
}

struct GenOptions {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::string set = "cbfs";
    std::string out = "-";
    std::string format = "text";
    std::uint64_t limit = default_limit;
    bool force = false;
};

int run_gen(const GenOptions& o) {
    using namespace cbfs;
    std::optional<CodeSet> set;
    if (o.set == "cbfs") {
        enforce_limit(count_cbfs(o.q, o.n), o.limit, o.force, "CBFS");
        set = construct_cbfs(o.q, o.n);
    } else if (o.set == "A") {
        enforce_limit(count_A(o.q, o.n), o.limit, o.force, "A");
        set = construct_A(o.q, o.n);
    } else if (o.set == "B") {
        enforce_limit(count_B(o.q, o.n), o.limit, o.force, "B");
        set = construct_B(o.q, o.n);
    } else if (o.set == "C") {
        enforce_limit(count_C(o.q, o.n), o.limit, o.force, "C");
        set = construct_C(o.q, o.n);
    } else {
        throw usage_error("unknown set '" + o.set + "'");
    }
    write_output(o.out, render(*set, o.format));
    return exit_ok;
}

struct BaselineGenOptions {
    std::size_t k = 2;
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::string out = "-";
    std::string format = "text";
    std::uint64_t limit = default_limit;
    bool force = false;
};

int run_baseline_gen(const BaselineGenOptions& o) {
    enforce_limit(cbfs::baseline_size(o.k, o.q, o.n), o.limit, o.force, "baseline set");
    write_output(o.out, render(cbfs::construct_baseline_set(o.k, o.q, o.n), o.format));
    return exit_ok;
}

struct VerifyOptions {
    std::string in;
    std::optional<std::uint32_t> q;
    std::optional<std::size_t> n;
    std::string mode = "set";
    std::uint64_t limit = default_limit;
    bool force = false;
};

cbfs::CodeSet load_set(const VerifyOptions& o) {
    const std::string text = read_input(o.in);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto set = cbfs::CodeSet::from_json(nlohmann::json::parse(text));
        if ((o.q && *o.q != set.alphabet()) || (o.n && *o.n != set.length())) {
            throw usage_error("--q/--n disagree with the q/n recorded in the JSON input");
        }
        return set;
    }
    if (!o.q) throw usage_error("--q is required for word-list input");
    std::size_t n = 0;
    if (o.n) {
        n = *o.n;
    } else {
        // first word decides the length
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            auto e = line.find_last_not_of(" \t\r");
            n = cbfs::Word::parse(std::string_view(line).substr(b, e - b + 1), *o.q).size();
            break;
        }
    }
    return cbfs::CodeSet::from_text(text, *o.q, n);
}

int run_verify(const VerifyOptions& o) {
    const cbfs::CodeSet set = load_set(o);
    cbfs::VerificationReport report;
    if (o.mode == "set") {
        report = cbfs::verify_cross_bifix_free_set(set);
    } else if (o.mode == "nonexpandable") {
        cbfs::OracleLimits limits;
        limits.max_word_space = o.force ? std::numeric_limits<cbfs::count_t>::max() : cbfs::count_t(o.limit);
        try {
            report = cbfs::verify_non_expandable(set, limits);
        } catch (const cbfs::precondition_error& e) {
            std::cout << e.report().to_json().dump(2) << '\n';
            std::cerr << "error: " << e.what() << '\n';
            return exit_usage;
        }
    } else {
        throw usage_error("unknown mode '" + o.mode + "'");
    }
    std::cout << report.to_json().dump(2) << '\n';
    return report.ok ? exit_ok : exit_failed;
}

struct TableOptions {
    std::string q = "3..6";
    std::string n = "3..16";
    std::string compare = "S";
    std::string format = "csv";
    std::string out = "-";
    bool bold = false;
};

int run_table(const TableOptions& o) {
    const auto [q_lo, q_hi] = parse_range(o.q, "q");
    const auto [n_lo, n_hi] = parse_range(o.n, "n");
    if (q_hi > cbfs::max_alphabet) throw usage_error("q above 65536");
    const auto table = cbfs::SizeTable::build(static_cast<std::uint32_t>(q_lo), static_cast<std::uint32_t>(q_hi),
                                              n_lo, n_hi, cbfs::parse_comparator(o.compare));
    if (o.format == "csv") {
        write_output(o.out, table.to_csv(o.bold));
    } else if (o.format == "json") {
        write_output(o.out, table.to_json().dump(2) + "\n");
    } else {
        throw usage_error("unknown format '" + o.format + "'");
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-bifix-free sets from colored Motzkin paths"};
    app.require_subcommand(1);

    CountOptions count;
    auto* count_cmd = app.add_subcommand("count", "Print an exact set size");
    count_cmd->add_option("--q", count.q, "Alphabet size");
    count_cmd->add_option("--n", count.n, "Word length")->required();
    count_cmd->add_option("--set", count.set, "cbfs, A, B, C, S, Sstar or motzkin")
        ->check(CLI::IsMember({"cbfs", "A", "B", "C", "S", "Sstar", "motzkin"}));
    count_cmd->add_option("--colors", count.colors, "Level-step colors for --set motzkin (default q-2)");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a set, one word per line or as JSON");
    gen_cmd->add_option("--q", gen.q, "Alphabet size")->required();
    gen_cmd->add_option("--n", gen.n, "Word length")->required();
    gen_cmd->add_option("--set", gen.set, "cbfs, A, B or C")->check(CLI::IsMember({"cbfs", "A", "B", "C"}));
    gen_cmd->add_option("--out", gen.out, "Output path, - for stdout");
    gen_cmd->add_option("--format", gen.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    gen_cmd->add_option("--limit", gen.limit, "Refuse sets larger than this");
    gen_cmd->add_flag("--force", gen.force, "Ignore --limit");

    BaselineGenOptions bgen;
    auto* bgen_cmd = app.add_subcommand("baseline-gen", "Write the zero-run baseline set S_{k,q}(n)");
    bgen_cmd->add_option("--k", bgen.k, "Leading zero-run length")->required();
    bgen_cmd->add_option("--q", bgen.q, "Alphabet size")->required();
    bgen_cmd->add_option("--n", bgen.n, "Word length")->required();
    bgen_cmd->add_option("--out", bgen.out, "Output path, - for stdout");
    bgen_cmd->add_option("--format", bgen.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    bgen_cmd->add_option("--limit", bgen.limit, "Refuse sets larger than this");
    bgen_cmd->add_flag("--force", bgen.force, "Ignore --limit");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a word list; prints a JSON report");
    verify_cmd->add_option("--in", verify.in, "Word list (text or JSON), - for stdin")->required();
    verify_cmd->add_option("--q", verify.q, "Alphabet size (required for text input)");
    verify_cmd->add_option("--n", verify.n, "Word length (default: length of the first word)");
    verify_cmd->add_option("--mode", verify.mode, "set or nonexpandable")
        ->check(CLI::IsMember({"set", "nonexpandable"}));
    verify_cmd->add_option("--limit", verify.limit, "Refuse nonexpandable checks with q^n above this");
    verify_cmd->add_flag("--force", verify.force, "Ignore --limit");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Print |CBFS_q(n)| against S or S*");
    table_cmd->add_option("--q", table.q, "Alphabet range, e.g. 3..6");
    table_cmd->add_option("--n", table.n, "Length range, e.g. 3..16");
    table_cmd->add_option("--compare", table.compare, "S or Sstar")->check(CLI::IsMember({"S", "Sstar"}));
    table_cmd->add_option("--format", table.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_option("--out", table.out, "Output path, - for stdout");
    table_cmd->add_flag("--bold", table.bold, "Add bold_q{Q} columns marking where CBFS is larger");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*count_cmd) return run_count(count);
        if (*gen_cmd) return run_gen(gen);
        if (*bgen_cmd) return run_baseline_gen(bgen);
        if (*verify_cmd) return run_verify(verify);
        if (*table_cmd) return run_table(table);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
