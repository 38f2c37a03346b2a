#include "tmm/attractors.hpp"

#include "tmm/complexity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tmm {

namespace {
constexpr std::uint32_t kNoCover = std::numeric_limits<std::uint32_t>::max();
}

AttractorSet::AttractorSet(std::vector<std::uint64_t> positions, std::uint64_t word_length)
    : positions_(std::move(positions)), word_length_(word_length) {
    if (word_length_ == 0)
        throw std::domain_error("AttractorSet: word length must be positive");
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (positions_[i] < 1 || positions_[i] > word_length_)
            throw std::domain_error("AttractorSet: position " + std::to_string(positions_[i]) +
                                    " outside 1.." + std::to_string(word_length_));
        if (i > 0 && positions_[i] <= positions_[i - 1])
            throw std::domain_error("AttractorSet: positions must be strictly increasing");
    }
}

AttractorVerifier::AttractorVerifier(const Word& w) : word_(w), sam_(w.view()) {
    if (w.empty())
        throw std::domain_error("AttractorVerifier: word must be nonempty");
}

AttractorCheck AttractorVerifier::verify(const AttractorSet& gamma) const {
    const std::size_t n = word_.size();
    if (gamma.word_length() != n)
        throw std::domain_error("verify: attractor set is for a word of length " +
                                std::to_string(gamma.word_length()) + ", not " +
                                std::to_string(n));

    // dist[e] = e - (largest attractor position <= e); kNoCover when none.
    std::vector<std::uint32_t> dist(n + 1, kNoCover);
    {
        auto it = gamma.positions().begin();
        std::uint64_t latest = 0;
        for (std::size_t e = 1; e <= n; ++e) {
            while (it != gamma.positions().end() && *it <= e)
                latest = *it++;
            if (latest != 0)
                dist[e] = static_cast<std::uint32_t>(e - latest);
        }
    }

    // min over each state's endpos set, aggregated up the link tree
    std::vector<std::uint32_t> min_dist(sam_.state_count(), kNoCover);
    for (std::size_t e = 1; e <= n; ++e) {
        const int s = sam_.prefix_state(e);
        min_dist[s] = std::min(min_dist[s], dist[e]);
    }
    for (int id : sam_.by_len_desc()) {
        const int link = sam_.state(id).link;
        if (link >= 0)
            min_dist[link] = std::min(min_dist[link], min_dist[id]);
    }

    // State fully covered iff every L in (link_len, len] admits an occurrence
    // crossing a position, i.e. min_dist + 1 <= link_len + 1. Otherwise the
    // shortest uncovered length in the state is link_len + 1.
    int worst_state = -1;
    std::size_t shortest = n + 1;
    for (int id = 1; id < sam_.state_count(); ++id) {
        const auto link_len = static_cast<std::uint32_t>(sam_.link_len(id));
        if (min_dist[id] > link_len) {
            const std::size_t uncovered_len = link_len + 1;
            if (uncovered_len < shortest) {
                shortest = uncovered_len;
                worst_state = id;
            }
        }
    }
    if (worst_state < 0)
        return AttractorCheck{true, {}};
    const std::size_t end = sam_.state(worst_state).first_end;
    return AttractorCheck{false,
                          std::string(word_.view().substr(end - shortest, shortest))};
}

AttractorCheck is_attractor(const Word& w, const AttractorSet& gamma) {
    return AttractorVerifier(w).verify(gamma);
}

AttractorSet k_attractor(unsigned n) {
    if (n < 4 || n > 62)
        throw std::domain_error("k_attractor: n must be in 4..62");
    const std::uint64_t one = 1;
    std::vector<std::uint64_t> positions{one << (n - 2), 3 * (one << (n - 3)),
                                         one << (n - 1), 3 * (one << (n - 2))};
    return AttractorSet(std::move(positions), one << n);
}

AttractorSet mantaci_attractor(unsigned n) {
    if (n < 3 || n > 62)
        throw std::domain_error("mantaci_attractor: n must be in 3..62");
    const std::uint64_t one = 1;
    std::vector<std::uint64_t> positions{(one << (n - 1)) + 1};
    for (unsigned i = 2; i <= n; ++i)
        positions.push_back(3 * (one << (i - 2)));
    std::sort(positions.begin(), positions.end());
    return AttractorSet(std::move(positions), one << n);
}

SearchOutcome min_attractor(const Word& w, std::size_t size_cap) {
    if (w.empty())
        throw std::domain_error("min_attractor: word must be nonempty");
    const std::size_t n = w.size();
    const Rational delta = profile(w).delta;
    const BigInt bound_big = delta.ceil();
    const auto bound = static_cast<std::size_t>(bound_big.convert_to<std::uint64_t>());

    SearchOutcome outcome;
    outcome.lower_bound_used = delta;

    const AttractorVerifier verifier(w);
    const std::size_t first_size = std::max<std::size_t>(1, bound);
    for (std::size_t s = first_size; s <= size_cap && s <= n; ++s) {
        std::uint64_t examined_here = 0;
        // lexicographic subset enumeration: {1..s}, then next-combination steps
        std::vector<std::uint64_t> subset(s);
        for (std::size_t i = 0; i < s; ++i)
            subset[i] = i + 1;
        while (true) {
            ++examined_here;
            const AttractorSet candidate(subset, n);
            if (verifier.verify(candidate)) {
                outcome.found = true;
                outcome.minimum_size = s;
                outcome.witness = candidate;
                outcome.examined_per_size.emplace_back(s, examined_here);
                outcome.sets_examined += examined_here;
                return outcome;
            }
            // advance to the next combination
            std::size_t i = s;
            while (i > 0 && subset[i - 1] == n - s + i)
                --i;
            if (i == 0)
                break;
            ++subset[i - 1];
            for (std::size_t j = i; j < s; ++j)
                subset[j] = subset[j - 1] + 1;
        }
        outcome.examined_per_size.emplace_back(s, examined_here);
        outcome.sets_examined += examined_here;
        outcome.largest_size_exhausted = s;
    }
    if (!outcome.found && outcome.largest_size_exhausted == 0)
        outcome.largest_size_exhausted = std::min(size_cap, n);
    return outcome;
}

std::uint64_t gamma_lower_bound(const Word& w) {
    if (w.empty())
        throw std::domain_error("gamma_lower_bound: word must be nonempty");
    return profile(w).delta.ceil().convert_to<std::uint64_t>();
}

CenterCoverSet center_cover_set(unsigned n, unsigned cap) {
    if (n < 2 || n > cap)
        throw std::domain_error("center_cover_set: n must be in 2..cap");
    CenterCoverSet set;
    {
        const Word t = thue_morse(n - 1, cap);
        set.members.push_back(t + complement(t));
    }
    for (unsigned k = 0; k + 2 <= n; ++k) {
        const Word t = thue_morse(k, cap);
        const Word c = complement(t);
        set.members.push_back(t + c);
        set.members.push_back(c + t);
    }
    return set;
}

namespace {

/// Per-state, per-length coverage bitmap over a suffix automaton.
class CoverageMarks {
public:
    explicit CoverageMarks(const SuffixAutomaton& sam) : sam_(sam), marks_(sam.state_count()) {
        for (int id = 1; id < sam.state_count(); ++id)
            marks_[id].assign(sam.state(id).len - sam.link_len(id), false);
    }

    /// Marks lengths [lo, hi] of the substrings ending where `state` ends.
    /// Walks the suffix-link path; every touched (state, length) is exact.
    void mark_suffixes(int state, std::size_t lo, std::size_t hi) {
        int v = state;
        while (v != SuffixAutomaton::kInit) {
            const auto link_len = static_cast<std::size_t>(sam_.link_len(v));
            const auto len = static_cast<std::size_t>(sam_.state(v).len);
            if (len < lo)
                break;
            const std::size_t seg_lo = std::max(lo, link_len + 1);
            const std::size_t seg_hi = std::min(hi, len);
            for (std::size_t L = seg_lo; L <= seg_hi; ++L)
                marks_[v][L - link_len - 1] = true;
            v = sam_.state(v).link;
        }
    }

    bool all_marked() const {
        for (int id = 1; id < sam_.state_count(); ++id)
            for (bool m : marks_[id])
                if (!m)
                    return false;
        return true;
    }

private:
    const SuffixAutomaton& sam_;
    std::vector<std::vector<bool>> marks_;
};

} // namespace

bool verify_center_lemma(unsigned n, unsigned cap) {
    if (n < 2 || n > cap)
        throw std::domain_error("verify_center_lemma: n must be in 2..cap");
    const Word t = thue_morse(n, cap);
    const SuffixAutomaton sam(t.view());
    CoverageMarks marks(sam);

    for (const Word& member : center_cover_set(n, cap).members) {
        const std::size_t center = member.size() / 2;
        // Every member is a substring of t_n, so this walk never leaves the
        // automaton and after e symbols sits at the state of member[1..e].
        int state = SuffixAutomaton::kInit;
        for (std::size_t e = 1; e <= member.size(); ++e) {
            state = sam.transition(state, static_cast<unsigned char>(member.symbol(e)));
            if (state < 0)
                throw std::logic_error("verify_center_lemma: member is not a substring of t_n");
            if (e < center)
                continue;
            // substrings member[i..e] with i <= center: lengths e-center+1 .. e
            marks.mark_suffixes(state, e - center + 1, e);
        }
    }
    return marks.all_marked();
}

} // namespace tmm
