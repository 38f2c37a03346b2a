#ifndef TMM_COMPLEXITY_HPP
#define TMM_COMPLEXITY_HPP

#include "tmm/rational.hpp"
#include "tmm/words.hpp"

#include <cstdint>
#include <vector>

namespace tmm {

/// Full distinct-substring profile of a word.
struct ComplexityProfile {
    /// counts[k] = number of distinct length-k substrings; index 0 unused.
    std::vector<std::uint64_t> counts;
    /// Smallest k maximizing counts[k]/k.
    std::size_t argmax_k = 0;
    /// max_k counts[k]/k, exact.
    Rational delta;
};

/// Number of distinct substrings of w of length exactly k (k >= 1).
/// Returns 0 when k > |w|. Near-linear via suffix automaton.
std::uint64_t subword_complexity(const Word& w, std::size_t k);

/// Counts for every k plus the exact delta; requires |w| >= 1.
ComplexityProfile profile(const Word& w);

/// The unique (q, p) with m = 2^q + p + 1 and 0 < p <= 2^q; defined for m >= 3.
struct PQDecomposition {
    unsigned q = 0;
    std::uint64_t p = 0;
};

PQDecomposition pq_decompose(std::uint64_t m);

/// Distinct substrings of length m in the n-th Thue-Morse word, closed form:
///   2^n - m + 1          for 2^{n-2}+1 <= m <= 2^n
///   3*2^q + 4p           for 3 <= m <= 2^{n-2}, 2p <= 2^q
///   4*2^q + 2p           for 3 <= m <= 2^{n-2}, 2p >  2^q
/// with (q, p) = pq_decompose(m). The coefficients 3*2^q and 4*2^q are the
/// integer-exact forms of 6*2^{q-1} and 8*2^{q-1}, valid down to q = 0.
/// Requires 3 <= n <= 62 and 3 <= m <= 2^n.
std::uint64_t closed_form_P(unsigned n, std::uint64_t m);

/// delta of the n-th Thue-Morse word, exact:
/// 1 for n = 0; 2 for n = 1, 2; 10*2^{n-3} / (3*2^{n-3} + 2) for n >= 3.
Rational closed_form_delta(unsigned n);

} // namespace tmm

#endif
