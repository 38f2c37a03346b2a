#include "tmm/complexity.hpp"

#include "tmm/suffix_automaton.hpp"

#include <stdexcept>

namespace tmm {

std::uint64_t subword_complexity(const Word& w, std::size_t k) {
    if (k < 1)
        throw std::domain_error("subword_complexity: k must be >= 1");
    if (k > w.size())
        return 0;
    SuffixAutomaton sam(w.view());
    return sam.distinct_counts_per_length()[k];
}

ComplexityProfile profile(const Word& w) {
    if (w.empty())
        throw std::domain_error("profile: word must be nonempty");
    ComplexityProfile result;
    SuffixAutomaton sam(w.view());
    result.counts = sam.distinct_counts_per_length();

    // argmax of counts[k]/k by exact cross-multiplication; counts and k both
    // fit in 64 bits, so the products fit in 128. Strict > keeps the smallest k.
    std::size_t best_k = 1;
    for (std::size_t k = 2; k <= w.size(); ++k) {
        const auto lhs = static_cast<unsigned __int128>(result.counts[k]) * best_k;
        const auto rhs = static_cast<unsigned __int128>(result.counts[best_k]) * k;
        if (lhs > rhs)
            best_k = k;
    }
    result.argmax_k = best_k;
    result.delta = Rational(BigInt(result.counts[best_k]), BigInt(best_k));
    return result;
}

PQDecomposition pq_decompose(std::uint64_t m) {
    if (m < 3)
        throw std::domain_error("pq_decompose: m must be >= 3");
    // q is fixed by 2^q + 2 <= m <= 2^{q+1} + 1, i.e. q = floor(log2(m - 2)).
    unsigned q = 0;
    while ((std::uint64_t{1} << (q + 1)) <= m - 2)
        ++q;
    return PQDecomposition{q, m - (std::uint64_t{1} << q) - 1};
}

std::uint64_t closed_form_P(unsigned n, std::uint64_t m) {
    if (n < 3 || n > 62)
        throw std::domain_error("closed_form_P: n must be in 3..62");
    const std::uint64_t len = std::uint64_t{1} << n;
    if (m < 3 || m > len)
        throw std::domain_error("closed_form_P: m must be in 3..2^n");
    const std::uint64_t quarter = std::uint64_t{1} << (n - 2);
    if (m >= quarter + 1)
        return len - m + 1;
    const auto [q, p] = pq_decompose(m);
    const std::uint64_t pow_q = std::uint64_t{1} << q;
    if (2 * p <= pow_q)
        return 3 * pow_q + 4 * p;
    return 4 * pow_q + 2 * p;
}

Rational closed_form_delta(unsigned n) {
    if (n == 0)
        return Rational(1);
    if (n <= 2)
        return Rational(2);
    // 10 / (3 + 2^{4-n}) with both sides scaled by 2^{n-3} to stay integral.
    const BigInt scale = BigInt(1) << (n - 3);
    return Rational(10 * scale, 3 * scale + 2);
}

} // namespace tmm
