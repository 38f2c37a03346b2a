#include "tmm/report.hpp"

#include "tmm/attractors.hpp"
#include "tmm/complexity.hpp"
#include "tmm/factorizations.hpp"

#include <sstream>
#include <stdexcept>

namespace tmm {

namespace {

std::optional<unsigned> detect_tm_index(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0 || (n & (n - 1)) != 0)
        return std::nullopt;
    unsigned idx = 0;
    while ((std::size_t{1} << idx) < n)
        ++idx;
    if (idx > kDefaultGenerationCap)
        return std::nullopt;
    if (thue_morse(idx) == w)
        return idx;
    return std::nullopt;
}

} // namespace

void validate_report(const MeasureReport& report) {
    if (report.delta) {
        const BigInt lower = report.delta->ceil();
        if (report.z && lower > BigInt(*report.z))
            throw std::logic_error("measure report violates ceil(delta) <= z");
        if (report.r && lower > BigInt(*report.r))
            throw std::logic_error("measure report violates ceil(delta) <= r");
    }
    if (report.gamma_lower && report.gamma_upper && *report.gamma_lower > *report.gamma_upper)
        throw std::logic_error("measure report violates gamma_lower <= gamma_upper");
}

MeasureReport build_measure_report(const Word& w, const MeasureSelection& sel) {
    if (w.empty())
        throw std::domain_error("build_measure_report: word must be nonempty");
    MeasureReport report;
    report.word_length = w.size();
    report.tm_index = detect_tm_index(w);

    if (sel.delta || sel.profile) {
        const ComplexityProfile prof = profile(w);
        report.delta = prof.delta;
        report.gamma_lower = prof.delta.ceil().convert_to<std::uint64_t>();
        if (sel.profile)
            report.profile_counts = prof.counts;
    }
    if (sel.z)
        report.z = lz_size(w);
    if (sel.r)
        report.r = bwt(w).run_count;
    if (sel.lyndon)
        report.lyndon = lyndon_factorize(w).factors.size();

    if (sel.attractor_positions) {
        const AttractorSet candidate(*sel.attractor_positions, w.size());
        if (is_attractor(w, candidate))
            report.gamma_upper = candidate.size();
    }
    if (!report.gamma_upper && sel.search_cap) {
        const SearchOutcome outcome = min_attractor(w, *sel.search_cap);
        if (outcome.found)
            report.gamma_upper = outcome.minimum_size;
    }

    validate_report(report);
    return report;
}

nlohmann::json report_to_json(const MeasureReport& report) {
    nlohmann::json j;
    j["word_length"] = report.word_length;
    if (report.tm_index)
        j["n"] = *report.tm_index;
    if (report.delta) {
        j["delta"] = report.delta->str();
        j["delta_decimal"] = report.delta->decimal(6); // rounded, approximate
    }
    if (report.z)
        j["z"] = *report.z;
    if (report.r)
        j["r"] = *report.r;
    if (report.lyndon)
        j["lyndon"] = *report.lyndon;
    if (report.gamma_lower)
        j["gamma_lower"] = *report.gamma_lower;
    if (report.gamma_upper)
        j["gamma_upper"] = *report.gamma_upper;
    if (report.profile_counts) {
        nlohmann::json counts = nlohmann::json::array();
        for (std::size_t k = 1; k < report.profile_counts->size(); ++k)
            counts.push_back((*report.profile_counts)[k]);
        j["profile"] = std::move(counts);
    }
    return j;
}

MeasureReport report_from_json(const nlohmann::json& j) {
    MeasureReport report;
    report.word_length = j.at("word_length").get<std::uint64_t>();
    if (j.contains("n"))
        report.tm_index = j.at("n").get<unsigned>();
    if (j.contains("delta"))
        report.delta = Rational::parse(j.at("delta").get<std::string>());
    if (j.contains("z"))
        report.z = j.at("z").get<std::uint64_t>();
    if (j.contains("r"))
        report.r = j.at("r").get<std::uint64_t>();
    if (j.contains("lyndon"))
        report.lyndon = j.at("lyndon").get<std::uint64_t>();
    if (j.contains("gamma_lower"))
        report.gamma_lower = j.at("gamma_lower").get<std::uint64_t>();
    if (j.contains("gamma_upper"))
        report.gamma_upper = j.at("gamma_upper").get<std::uint64_t>();
    if (j.contains("profile")) {
        std::vector<std::uint64_t> counts{0}; // restore the unused 0 slot
        for (const auto& c : j.at("profile"))
            counts.push_back(c.get<std::uint64_t>());
        report.profile_counts = std::move(counts);
    }
    return report;
}

std::string report_tsv_header() {
    return "n\tlength\tdelta\tz\tr\tlyndon\tgamma_lower\tgamma_upper";
}

std::string report_to_tsv(const MeasureReport& report) {
    std::ostringstream out;
    auto cell = [&](const std::string& value) { out << '\t' << value; };
    if (report.tm_index)
        out << *report.tm_index;
    else
        out << '-';
    cell(std::to_string(report.word_length));
    cell(report.delta ? report.delta->str() : "-");
    cell(report.z ? std::to_string(*report.z) : "-");
    cell(report.r ? std::to_string(*report.r) : "-");
    cell(report.lyndon ? std::to_string(*report.lyndon) : "-");
    cell(report.gamma_lower ? std::to_string(*report.gamma_lower) : "-");
    cell(report.gamma_upper ? std::to_string(*report.gamma_upper) : "-");
    return out.str();
}

} // namespace tmm
