#ifndef TMM_REPORT_HPP
#define TMM_REPORT_HPP

#include "tmm/rational.hpp"
#include "tmm/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tmm {

/// Bundle of measures computed for one word. Fields are optional so callers
/// can request a subset; the consistency chain ceil(delta) <= z and
/// ceil(delta) <= r is asserted whenever the fields are present together.
struct MeasureReport {
    std::uint64_t word_length = 0;
    std::optional<unsigned> tm_index; // n when the word is exactly t_n
    std::optional<Rational> delta;
    std::optional<std::uint64_t> z;
    std::optional<std::uint64_t> r;
    std::optional<std::uint64_t> lyndon;
    std::optional<std::uint64_t> gamma_lower;
    std::optional<std::uint64_t> gamma_upper;
    std::optional<std::vector<std::uint64_t>> profile_counts; // index 0 unused

    bool operator==(const MeasureReport&) const = default;
};

struct MeasureSelection {
    bool delta = true;
    bool z = true;
    bool r = true;
    bool lyndon = true;
    bool profile = false;
    /// When set and the positions verify as an attractor, gamma_upper = size.
    std::optional<std::vector<std::uint64_t>> attractor_positions;
    /// When set, run min_attractor with this cap; found => gamma_upper.
    std::optional<std::size_t> search_cap;
};

/// Computes the selected measures; requires |w| >= 1.
/// Throws std::logic_error if the delta/z/r consistency chain breaks.
MeasureReport build_measure_report(const Word& w, const MeasureSelection& sel = {});

/// Re-checks the internal consistency chain of an existing report.
void validate_report(const MeasureReport& report);

/// Rationals serialize as "num/den" plus a sibling decimal rendering.
nlohmann::json report_to_json(const MeasureReport& report);
MeasureReport report_from_json(const nlohmann::json& j);

/// Fixed column order: n, length, delta, z, r, lyndon, gamma_lower,
/// gamma_upper. Missing values render as "-".
std::string report_tsv_header();
std::string report_to_tsv(const MeasureReport& report);

} // namespace tmm

#endif
