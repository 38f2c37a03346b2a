// Brute-force reference implementations used only by the test suites.
// Everything here is deliberately independent of the library's fast paths:
// plain scans, explicit substring sets, full rotation tables.
#ifndef TMM_TEST_ORACLES_HPP
#define TMM_TEST_ORACLES_HPP

#include "tmm/rational.hpp"
#include "tmm/words.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tmm::oracles {

/// Distinct substrings of length k, counted via an explicit set.
std::uint64_t subword_complexity(const Word& w, std::size_t k);

/// counts[k] for k = 1..|w| (index 0 unused), same set-based counting.
std::vector<std::uint64_t> profile_counts(const Word& w);

/// max_k counts[k]/k as an exact rational.
Rational delta(const Word& w);

struct AttractorAnswer {
    bool is_attractor = false;
    std::string certificate; // a shortest uncovered substring when false
};

/// Double loop over (length, start) in increasing length order; for each new
/// distinct substring scans its occurrences and stops early at the first one
/// crossing a position. Positions must be valid for w.
AttractorAnswer is_attractor(const Word& w, const std::vector<std::uint64_t>& positions);

/// Smallest attractor by plain subset enumeration (sizes 1..cap), no pruning.
struct MinAttractorAnswer {
    bool found = false;
    std::size_t size = 0;
    std::vector<std::uint64_t> witness;
};
MinAttractorAnswer min_attractor(const Word& w, std::size_t size_cap);

/// Word strictly smaller than all of its proper suffixes.
bool is_lyndon(const Word& w);

/// All factorizations of w into non-increasing sequences of Lyndon words,
/// found by exhaustive splitting. The classical theorem says there is exactly
/// one; the tests assert that and compare it against the fast path.
std::vector<std::vector<Word>> lyndon_factorizations(const Word& w);

/// BWT by materializing and sorting every rotation.
struct BwtAnswer {
    std::string transformed;
    std::size_t run_count = 0;
};
BwtAnswer bwt(const Word& w);

/// Direct check of the center-cover property: every distinct substring of
/// t_n occurs in some member of the family crossing that member's center.
bool center_lemma(unsigned n);

/// Deterministic random words for property suites.
Word random_word(std::mt19937& rng, std::size_t max_len, unsigned alphabet_size);

} // namespace tmm::oracles

#endif
