#ifndef TMM_ATTRACTORS_HPP
#define TMM_ATTRACTORS_HPP

#include "tmm/rational.hpp"
#include "tmm/suffix_automaton.hpp"
#include "tmm/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tmm {

/// Strictly increasing 1-based positions in a word of the given length.
class AttractorSet {
public:
    AttractorSet(std::vector<std::uint64_t> positions, std::uint64_t word_length);

    const std::vector<std::uint64_t>& positions() const noexcept { return positions_; }
    std::uint64_t word_length() const noexcept { return word_length_; }
    std::size_t size() const noexcept { return positions_.size(); }

    bool operator==(const AttractorSet&) const = default;

private:
    std::vector<std::uint64_t> positions_;
    std::uint64_t word_length_;
};

struct AttractorCheck {
    bool is_attractor = false;
    /// A shortest substring no occurrence of which crosses the set; empty when is_attractor.
    std::string certificate;

    explicit operator bool() const noexcept { return is_attractor; }
};

/// Verifies candidate attractors against one word.
///
/// The suffix automaton is built once; each verify() costs O(|w| + states).
/// A substring of length L with an occurrence ending at e crosses a position
/// p <= e iff e - p < L, so a state is fully covered once the minimum of
/// (end - nearest position at or before end) over its endpos set is at most
/// its link length. The endpos minima come from one sweep over the link tree,
/// which makes the check exact per distinct substring; no hashing involved.
class AttractorVerifier {
public:
    explicit AttractorVerifier(const Word& w);

    AttractorCheck verify(const AttractorSet& gamma) const;

    const Word& word() const noexcept { return word_; }

private:
    Word word_;
    SuffixAutomaton sam_;
};

/// One-shot convenience around AttractorVerifier.
AttractorCheck is_attractor(const Word& w, const AttractorSet& gamma);

/// {2^{n-2}, 3*2^{n-3}, 2^{n-1}, 3*2^{n-2}} for t_n, n >= 4 (n <= 62).
AttractorSet k_attractor(unsigned n);

/// {2^{n-1}+1} union {3*2^{i-2} : i = 2..n} for t_n, n >= 3 (n <= 62).
AttractorSet mantaci_attractor(unsigned n);

struct SearchOutcome {
    bool found = false;
    std::size_t minimum_size = 0;           // size of witness when found
    std::optional<AttractorSet> witness;    // lexicographically smallest at that size
    std::uint64_t sets_examined = 0;
    Rational lower_bound_used;              // the exact delta behind the ceil bound
    /// (size, subsets examined at that size), in search order.
    std::vector<std::pair<std::size_t, std::uint64_t>> examined_per_size;
    std::size_t largest_size_exhausted = 0; // meaningful when !found
};

/// Exhaustive minimum-attractor search.
///
/// Sizes run from max(1, ceil(delta(w))) upward (delta <= gamma, so smaller
/// sizes cannot work); position subsets are enumerated in lexicographic
/// order, and the first verifying subset is returned, which makes the witness
/// canonical. Practical envelope: |w| <= 64 for size-4 searches, |w| <= 256
/// for size-3. Not finding an attractor within size_cap is reported in the
/// outcome, not thrown. Requires |w| >= 1.
SearchOutcome min_attractor(const Word& w, std::size_t size_cap);

/// ceil(delta(w)), the size floor for any attractor of w. Requires |w| >= 1.
std::uint64_t gamma_lower_bound(const Word& w);

/// The center-cover family for t_n:
/// {t_{n-1} ~t_{n-1}} union {t_k ~t_k, ~t_k t_k : k = 0..n-2},
/// every member of even length with center |s|/2.
struct CenterCoverSet {
    std::vector<Word> members;
};

CenterCoverSet center_cover_set(unsigned n, unsigned cap = kDefaultGenerationCap);

/// True iff every distinct substring of t_n occurs in some member of the
/// center-cover family crossing that member's center position |s|/2.
/// Exact: coverage is marked per suffix-automaton state and length.
/// Practical up to n = 10 or so; requires 2 <= n <= cap.
bool verify_center_lemma(unsigned n, unsigned cap = kDefaultGenerationCap);

} // namespace tmm

#endif
