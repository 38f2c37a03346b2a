// tm: repetitiveness measures for strings, with Thue-Morse closed forms.
//
// Exit codes: 0 success / verification true; 1 verification false or
// search exhausted; 2 usage or input errors.
#include "tmm/attractors.hpp"
#include "tmm/complexity.hpp"
#include "tmm/factorizations.hpp"
#include "tmm/report.hpp"
#include "tmm/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

unsigned generation_cap() {
    const char* env = std::getenv("TM_CAP");
    if (env == nullptr || *env == '\0')
        return tmm::kDefaultGenerationCap;
    try {
        const long value = std::stol(env);
        if (value < 0 || value > 62)
            throw std::out_of_range("TM_CAP");
        return static_cast<unsigned>(value);
    } catch (const std::exception&) {
        throw std::domain_error("TM_CAP must be an integer in 0..62, got '" + std::string(env) + "'");
    }
}

// Reads the word from a file or stdin ("-"). Stripping removes one trailing
// newline; unless forced it defaults to on for stdin (heredocs append one)
// and off for files (files are authoritative).
tmm::Word read_word(const std::string& input, std::optional<bool> strip) {
    std::string bytes;
    if (input == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        bytes = buffer.str();
    } else {
        std::ifstream file(input, std::ios::binary);
        if (!file)
            throw std::domain_error("cannot open input file: " + input);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        bytes = buffer.str();
    }
    const bool do_strip = strip.value_or(input == "-");
    if (do_strip && !bytes.empty() && bytes.back() == '\n')
        bytes.pop_back();
    if (bytes.empty())
        throw std::domain_error("empty input");
    return tmm::Word(std::move(bytes));
}

std::vector<std::uint64_t> parse_positions(const std::string& text) {
    std::vector<std::uint64_t> positions;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty())
            throw std::domain_error("malformed position list: '" + text + "'");
        std::size_t used = 0;
        const unsigned long long value = std::stoull(item, &used);
        if (used != item.size())
            throw std::domain_error("malformed position '" + item + "'");
        positions.push_back(value);
    }
    if (positions.empty())
        throw std::domain_error("empty position list");
    return positions;
}

json search_outcome_json(const tmm::SearchOutcome& outcome) {
    json j;
    j["found"] = outcome.found;
    if (outcome.found) {
        j["minimum_size"] = outcome.minimum_size;
        j["witness"] = outcome.witness->positions();
    } else {
        j["largest_size_exhausted"] = outcome.largest_size_exhausted;
    }
    j["sets_examined"] = outcome.sets_examined;
    j["lower_bound"] = outcome.lower_bound_used.str();
    json per_size = json::array();
    for (const auto& [size, examined] : outcome.examined_per_size)
        per_size.push_back(json{{"size", size}, {"examined", examined}});
    j["examined_per_size"] = std::move(per_size);
    return j;
}

struct TableCell {
    std::string computed;
    std::string closed_form;
    // "match", "MISMATCH", or "-" when one side is absent
    std::string flag;
};

TableCell int_cell(std::optional<std::uint64_t> computed, std::optional<std::uint64_t> closed) {
    TableCell cell;
    cell.computed = computed ? std::to_string(*computed) : "-";
    cell.closed_form = closed ? std::to_string(*closed) : "-";
    if (computed && closed)
        cell.flag = *computed == *closed ? "match" : "MISMATCH";
    else
        cell.flag = "-";
    return cell;
}

std::string render_cell(const TableCell& cell, bool closed_only, bool rational = false) {
    if (closed_only)
        return cell.closed_form;
    if (cell.flag == "-")
        return cell.computed != "-" ? cell.computed : cell.closed_form;
    if (cell.flag == "MISMATCH")
        return cell.computed + " vs " + cell.closed_form + " MISMATCH";
    if (rational)
        return cell.computed + " match"; // value printed once, it already has a slash
    return cell.computed + "/" + cell.closed_form + " " + cell.flag;
}

int cmd_generate(unsigned n, bool newline) {
    const tmm::Word w = tmm::thue_morse(n, generation_cap());
    std::cout << w.view();
    if (newline)
        std::cout << '\n';
    return kExitTrue;
}

int cmd_measure(const std::string& input, std::optional<bool> strip, const std::string& measures,
                const std::string& format, const std::string& attractor_csv,
                std::optional<std::size_t> search_gamma) {
    const tmm::Word w = read_word(input, strip);
    tmm::MeasureSelection sel;
    if (!measures.empty()) {
        sel.delta = sel.z = sel.r = sel.lyndon = sel.profile = false;
        std::stringstream stream(measures);
        std::string item;
        while (std::getline(stream, item, ',')) {
            if (item == "delta")
                sel.delta = true;
            else if (item == "z")
                sel.z = true;
            else if (item == "r")
                sel.r = true;
            else if (item == "lyndon")
                sel.lyndon = true;
            else if (item == "profile")
                sel.profile = true;
            else
                throw std::domain_error("unknown measure '" + item +
                                        "' (expected delta,z,r,lyndon,profile)");
        }
    }
    if (!attractor_csv.empty())
        sel.attractor_positions = parse_positions(attractor_csv);
    sel.search_cap = search_gamma;

    const tmm::MeasureReport report = tmm::build_measure_report(w, sel);
    if (format == "tsv") {
        std::cout << tmm::report_tsv_header() << '\n'
                  << tmm::report_to_tsv(report) << '\n';
    } else {
        std::cout << tmm::report_to_json(report).dump(2) << '\n';
    }
    return kExitTrue;
}

int cmd_attractor_verify(const std::string& input, std::optional<bool> strip,
                         const std::string& positions_csv) {
    const tmm::Word w = read_word(input, strip);
    const tmm::AttractorSet gamma(parse_positions(positions_csv), w.size());
    const tmm::AttractorCheck check = tmm::is_attractor(w, gamma);
    json j;
    j["word_length"] = w.size();
    j["positions"] = gamma.positions();
    j["is_attractor"] = check.is_attractor;
    if (!check.is_attractor)
        j["certificate"] = check.certificate;
    std::cout << j.dump(2) << '\n';
    return check.is_attractor ? kExitTrue : kExitFalse;
}

int cmd_attractor_search(const std::string& input, std::optional<bool> strip,
                         std::size_t max_size) {
    const tmm::Word w = read_word(input, strip);
    const tmm::SearchOutcome outcome = tmm::min_attractor(w, max_size);
    json j = search_outcome_json(outcome);
    j["word_length"] = w.size();
    std::cout << j.dump(2) << '\n';
    return outcome.found ? kExitTrue : kExitFalse;
}

int cmd_attractor_family(const std::string& family, unsigned n) {
    const tmm::AttractorSet set =
        family == "kn" ? tmm::k_attractor(n) : tmm::mantaci_attractor(n);
    json j;
    j["family"] = family;
    j["n"] = n;
    j["word_length"] = set.word_length();
    j["positions"] = set.positions();
    std::cout << j.dump(2) << '\n';
    return kExitTrue;
}

int cmd_complexity(const std::string& input, std::optional<bool> strip,
                   std::optional<std::size_t> k, bool all) {
    const tmm::Word w = read_word(input, strip);
    json j;
    j["word_length"] = w.size();
    if (k) {
        j["k"] = *k;
        j["count"] = tmm::subword_complexity(w, *k);
    } else {
        const tmm::ComplexityProfile prof = tmm::profile(w);
        j["delta"] = prof.delta.str();
        j["delta_decimal"] = prof.delta.decimal(6);
        j["argmax_k"] = prof.argmax_k;
        if (all) {
            json counts = json::array();
            for (std::size_t i = 1; i < prof.counts.size(); ++i)
                counts.push_back(prof.counts[i]);
            j["counts"] = std::move(counts);
        }
    }
    std::cout << j.dump(2) << '\n';
    return kExitTrue;
}

int cmd_table(unsigned max_n, bool closed_only, const std::string& format) {
    const unsigned cap = generation_cap();
    if (max_n < 1 || max_n > 62 || (!closed_only && max_n > cap))
        throw std::domain_error("table: max-n must be in 1.." +
                                std::to_string(closed_only ? 62u : cap));

    json rows = json::array();
    std::vector<std::string> footnotes;
    std::vector<std::array<std::string, 7>> text_rows;

    for (unsigned n = 1; n <= max_n; ++n) {
        const tmm::ClosedFormEntry closed = tmm::closed_form_table_entry(n);
        TableCell z_cell, r_cell, lyndon_cell, delta_cell, gamma_cell;

        std::optional<std::uint64_t> gamma_closed;
        if (closed.gamma)
            gamma_closed = static_cast<std::uint64_t>(*closed.gamma);

        if (closed_only) {
            z_cell = int_cell(std::nullopt, closed.z);
            r_cell = int_cell(std::nullopt, closed.r);
            lyndon_cell = int_cell(std::nullopt, closed.lyndon);
            gamma_cell = int_cell(std::nullopt, gamma_closed);
            delta_cell = TableCell{"-", closed.delta.pretty(), "-"};
        } else {
            const tmm::Word t = tmm::thue_morse(n, cap);
            const tmm::ComplexityProfile prof = tmm::profile(t);
            const std::uint64_t z = tmm::lz_size(t);
            const std::uint64_t r = tmm::bwt(t).run_count;
            const std::uint64_t lyndon = tmm::lyndon_factorize(t).factors.size();

            // exact gamma: exhaustive search while feasible, otherwise the
            // ceil(delta) lower bound meeting the verified K_n upper bound
            std::optional<std::uint64_t> gamma_computed;
            if (n <= 5) {
                const tmm::SearchOutcome outcome = tmm::min_attractor(t, 4);
                if (outcome.found)
                    gamma_computed = outcome.minimum_size;
            } else {
                const std::uint64_t lower = prof.delta.ceil().convert_to<std::uint64_t>();
                if (lower == 4 && tmm::is_attractor(t, tmm::k_attractor(n)))
                    gamma_computed = 4;
            }

            z_cell = int_cell(z, closed.z);
            r_cell = int_cell(r, closed.r);
            lyndon_cell = int_cell(lyndon, closed.lyndon);
            gamma_cell = int_cell(gamma_computed, gamma_closed);
            delta_cell.computed = prof.delta.pretty();
            delta_cell.closed_form = closed.delta.pretty();
            delta_cell.flag = prof.delta == closed.delta ? "match" : "MISMATCH";

            if (n == 1 && lyndon_cell.flag == "MISMATCH")
                footnotes.push_back(
                    "n=1: the floor((3n-2)/2) formula gives 0, but the Lyndon "
                    "factorization of \"ab\" has 1 factor; the formula's validity "
                    "range starts at n=2.");
        }

        json row;
        row["n"] = n;
        row["length"] = std::uint64_t{1} << n;
        auto cell_json = [](const TableCell& cell) {
            return json{{"computed", cell.computed},
                        {"closed_form", cell.closed_form},
                        {"flag", cell.flag}};
        };
        row["z"] = cell_json(z_cell);
        row["r"] = cell_json(r_cell);
        row["lyndon"] = cell_json(lyndon_cell);
        row["delta"] = cell_json(delta_cell);
        row["gamma"] = cell_json(gamma_cell);
        rows.push_back(row);

        text_rows.push_back({std::to_string(n), std::to_string(std::uint64_t{1} << n),
                             "delta=" + render_cell(delta_cell, closed_only, true),
                             "z=" + render_cell(z_cell, closed_only),
                             "r=" + render_cell(r_cell, closed_only),
                             "lyndon=" + render_cell(lyndon_cell, closed_only),
                             "gamma=" + render_cell(gamma_cell, closed_only)});
    }

    if (format == "json") {
        json j;
        j["rows"] = std::move(rows);
        j["footnotes"] = footnotes;
        std::cout << j.dump(2) << '\n';
    } else {
        std::array<std::size_t, 7> widths{};
        for (const auto& row : text_rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                widths[c] = std::max(widths[c], row[c].size());
        for (const auto& row : text_rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                std::cout << row[c];
                if (c + 1 < row.size())
                    std::cout << std::string(widths[c] - row[c].size() + 2, ' ');
            }
            std::cout << '\n';
        }
        for (const auto& note : footnotes)
            std::cout << "note: " << note << '\n';
    }
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"repetitiveness measures for strings, with Thue-Morse closed forms"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "print the n-th Thue-Morse word");
    unsigned gen_n = 0;
    bool gen_newline = false;
    generate->add_option("n", gen_n, "index of the Thue-Morse word")->required();
    generate->add_flag("--newline", gen_newline, "append a trailing newline");

    // shared input options
    const std::string input_help = "input file path, or - for stdin";
    auto add_strip_flags = [](CLI::App* cmd, std::optional<bool>& strip) {
        cmd->add_flag_callback("--strip-newline", [&strip] { strip = true; },
                               "strip one trailing newline (default for stdin)");
        cmd->add_flag_callback("--keep-newline", [&strip] { strip = false; },
                               "keep a trailing newline (default for files)");
    };

    // measure
    auto* measure = app.add_subcommand("measure", "compute a measure report for a word");
    std::string measure_input, measure_list, measure_format = "json", measure_attractor;
    std::optional<bool> measure_strip;
    std::optional<std::size_t> measure_search;
    measure->add_option("input", measure_input, input_help)->required();
    measure->add_option("--measures", measure_list, "comma list among delta,z,r,lyndon,profile");
    measure->add_option("--format", measure_format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    measure->add_option("--attractor", measure_attractor,
                        "positions p1,p2,...; when they verify, gamma_upper is their size");
    measure->add_option("--search-gamma", measure_search,
                        "exhaustive minimum-attractor search up to this size");
    add_strip_flags(measure, measure_strip);

    // attractor verify|search|family
    auto* attractor = app.add_subcommand("attractor", "string attractor operations");
    attractor->require_subcommand(1);

    auto* verify = attractor->add_subcommand("verify", "check whether positions form an attractor");
    std::string verify_input, verify_positions;
    std::optional<bool> verify_strip;
    verify->add_option("input", verify_input, input_help)->required();
    verify->add_option("--positions", verify_positions, "1-based positions p1,p2,...")->required();
    add_strip_flags(verify, verify_strip);

    auto* search = attractor->add_subcommand("search", "exhaustive minimum-attractor search");
    std::string search_input;
    std::optional<bool> search_strip;
    std::size_t search_max = 0;
    search->add_option("input", search_input, input_help)->required();
    search->add_option("--max-size", search_max, "largest attractor size to try")->required();
    add_strip_flags(search, search_strip);

    auto* family = attractor->add_subcommand("family", "explicit Thue-Morse attractor families");
    std::string family_name;
    unsigned family_n = 0;
    family->add_option("name", family_name, "kn (size 4, n >= 4) or mantaci (size n, n >= 3)")
        ->required()
        ->check(CLI::IsMember({"kn", "mantaci"}));
    family->add_option("--n", family_n, "Thue-Morse index")->required();

    // complexity
    auto* complexity = app.add_subcommand("complexity", "distinct-substring counts and delta");
    std::string complexity_input;
    std::optional<bool> complexity_strip;
    std::optional<std::size_t> complexity_k;
    bool complexity_all = false;
    complexity->add_option("input", complexity_input, input_help)->required();
    auto* k_opt = complexity->add_option("--k", complexity_k, "count substrings of this length only");
    complexity->add_flag("--all", complexity_all, "include the full per-length profile")
        ->excludes(k_opt);
    add_strip_flags(complexity, complexity_strip);

    // table
    auto* table = app.add_subcommand(
        "table", "computed vs closed-form Thue-Morse measures, one row per n. "
                 "BWT convention: sort all cyclic rotations, no sentinel; r counts "
                 "maximal equal-symbol runs of the last column.");
    unsigned table_max_n = 0;
    bool table_closed_only = false;
    std::string table_format = "text";
    table->add_option("--max-n", table_max_n, "rows n = 1..max-n")->required();
    table->add_flag("--closed-form-only", table_closed_only,
                    "closed forms only, no word materialization");
    table->add_option("--format", table_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return kExitUsage;
    }

    try {
        if (*generate)
            return cmd_generate(gen_n, gen_newline);
        if (*measure)
            return cmd_measure(measure_input, measure_strip, measure_list, measure_format,
                               measure_attractor, measure_search);
        if (*verify)
            return cmd_attractor_verify(verify_input, verify_strip, verify_positions);
        if (*search)
            return cmd_attractor_search(search_input, search_strip, search_max);
        if (*family)
            return cmd_attractor_family(family_name, family_n);
        if (*complexity)
            return cmd_complexity(complexity_input, complexity_strip, complexity_k,
                                  complexity_all);
        if (*table)
            return cmd_table(table_max_n, table_closed_only, table_format);
    } catch (const std::exception& e) {
        std::cerr << "tm: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
