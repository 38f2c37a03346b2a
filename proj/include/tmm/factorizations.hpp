#ifndef TMM_FACTORIZATIONS_HPP
#define TMM_FACTORIZATIONS_HPP

#include "tmm/rational.hpp"
#include "tmm/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tmm {

struct LZFactor {
    std::size_t start = 0;  // 1-based position of the factor's first symbol
    std::size_t length = 0;
    bool fresh = false;     // symbol with no earlier occurrence; length == 1
    std::size_t source = 0; // 1-based start of the leftmost earlier occurrence, 0 when fresh
    char symbol = '\0';     // the literal symbol of a fresh factor
};

struct LZFactorization {
    std::vector<LZFactor> factors;

    std::size_t size() const noexcept { return factors.size(); }
    /// Index (0-based) of the factor containing 1-based position p.
    std::size_t factor_index_at(std::size_t p) const;
};

/// Greedy left-to-right LZ factorization with self-reference.
///
/// The factor at position i is the longest prefix of w[i..] that also occurs
/// starting at some p < i; the earlier occurrence may overlap the factor
/// itself. Equivalently, it is the longest prefix of the remainder with at
/// least two occurrences inside w[1..i+len-1]: one ends at i+len-1, and any
/// other must start before i to fit. A symbol with no earlier occurrence
/// forms a fresh length-1 factor. Copy factors record the leftmost earlier
/// occurrence as source. Requires |w| >= 1.
LZFactorization lz_factorize(const Word& w);

/// Number of LZ factors of w.
std::size_t lz_size(const Word& w);

/// Rebuilds the word by symbol-by-symbol copying (handles self-reference).
Word lz_decode(const LZFactorization& f);

struct LyndonFactorization {
    std::vector<Word> factors;
};

/// Chen-Fox-Lyndon factorization via Duval's algorithm, linear time.
/// Factors are Lyndon words in non-increasing lexicographic order.
/// Requires |w| >= 1.
LyndonFactorization lyndon_factorize(const Word& w);

struct BWTResult {
    Word transformed;
    std::size_t run_count = 0;
};

/// Burrows-Wheeler transform by sorting all cyclic rotations; no sentinel.
/// transformed = last symbols of the sorted rotations (equal rotations have
/// equal last symbols, so ties are immaterial); run_count = number of maximal
/// equal-symbol blocks. Requires |w| >= 1.
BWTResult bwt(const Word& w);

/// Closed-form measures of the n-th Thue-Morse word, no materialization:
/// z = 2n, r = 2n, lyndon = floor((3n-2)/2), gamma = 4 for n >= 4, delta per
/// closed_form_delta. The lyndon formula yields 0 at n = 1 although the
/// factorization of "ab" has one factor; callers treat that cell as a known
/// formula-range discrepancy. Requires 1 <= n <= 62.
struct ClosedFormEntry {
    std::uint64_t z = 0;
    std::uint64_t r = 0;
    std::uint64_t lyndon = 0;
    std::optional<int> gamma;
    Rational delta;
};

ClosedFormEntry closed_form_table_entry(unsigned n);

} // namespace tmm

#endif
