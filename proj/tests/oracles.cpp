#include "oracles.hpp"

#include "tmm/attractors.hpp"

#include <algorithm>
#include <set>
#include <string_view>

namespace tmm::oracles {

std::uint64_t subword_complexity(const Word& w, std::size_t k) {
    if (k == 0 || k > w.size())
        return 0;
    std::set<std::string_view> seen;
    const std::string_view s = w.view();
    for (std::size_t i = 0; i + k <= s.size(); ++i)
        seen.insert(s.substr(i, k));
    return seen.size();
}

std::vector<std::uint64_t> profile_counts(const Word& w) {
    std::vector<std::uint64_t> counts(w.size() + 1, 0);
    for (std::size_t k = 1; k <= w.size(); ++k)
        counts[k] = subword_complexity(w, k);
    return counts;
}

Rational delta(const Word& w) {
    const auto counts = profile_counts(w);
    Rational best(0);
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const Rational candidate(BigInt(counts[k]), BigInt(k));
        if (candidate > best)
            best = candidate;
    }
    return best;
}

AttractorAnswer is_attractor(const Word& w, const std::vector<std::uint64_t>& positions) {
    const std::string_view s = w.view();
    const std::size_t n = s.size();
    for (std::size_t len = 1; len <= n; ++len) {
        std::set<std::string_view> seen;
        for (std::size_t start = 0; start + len <= n; ++start) {
            const std::string_view x = s.substr(start, len);
            if (!seen.insert(x).second)
                continue;
            bool covered = false;
            for (std::size_t occ = s.find(x); occ != std::string_view::npos && !covered;
                 occ = s.find(x, occ + 1)) {
                for (std::uint64_t p : positions) {
                    if (p >= occ + 1 && p <= occ + len) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered)
                return AttractorAnswer{false, std::string(x)};
        }
    }
    return AttractorAnswer{true, {}};
}

MinAttractorAnswer min_attractor(const Word& w, std::size_t size_cap) {
    const std::size_t n = w.size();
    for (std::size_t size = 1; size <= size_cap && size <= n; ++size) {
        std::vector<std::uint64_t> subset(size);
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = i + 1;
        while (true) {
            if (is_attractor(w, subset).is_attractor)
                return MinAttractorAnswer{true, size, subset};
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == n - size + i)
                --i;
            if (i == 0)
                break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
    return MinAttractorAnswer{};
}

bool is_lyndon(const Word& w) {
    if (w.empty())
        return false;
    const std::string_view s = w.view();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s.substr(i) <= s)
            return false;
    return true;
}

namespace {

void extend_factorization(const std::string_view rest, const std::string_view prev,
                          std::vector<Word>& current, std::vector<std::vector<Word>>& out) {
    if (rest.empty()) {
        out.push_back(current);
        return;
    }
    for (std::size_t len = 1; len <= rest.size(); ++len) {
        const std::string_view head = rest.substr(0, len);
        if (!prev.empty() && head > prev)
            continue; // factors must be non-increasing
        if (!is_lyndon(Word(std::string(head))))
            continue;
        current.push_back(Word(std::string(head)));
        extend_factorization(rest.substr(len), head, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<Word>> lyndon_factorizations(const Word& w) {
    std::vector<std::vector<Word>> out;
    std::vector<Word> current;
    extend_factorization(w.view(), {}, current, out);
    return out;
}

BwtAnswer bwt(const Word& w) {
    const std::string& s = w.bytes();
    const std::size_t n = s.size();
    std::vector<std::string> rotations;
    rotations.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rotations.push_back(s.substr(i) + s.substr(0, i));
    std::sort(rotations.begin(), rotations.end());
    BwtAnswer answer;
    answer.transformed.reserve(n);
    for (const auto& rot : rotations)
        answer.transformed.push_back(rot.back());
    answer.run_count = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (answer.transformed[i] != answer.transformed[i - 1])
            ++answer.run_count;
    return answer;
}

bool center_lemma(unsigned n) {
    const Word t = thue_morse(n);
    const auto members = center_cover_set(n).members;

    std::set<std::string_view> substrings;
    const std::string_view s = t.view();
    for (std::size_t len = 1; len <= s.size(); ++len)
        for (std::size_t start = 0; start + len <= s.size(); ++start)
            substrings.insert(s.substr(start, len));

    for (const std::string_view x : substrings) {
        bool covered = false;
        for (const Word& member : members) {
            const std::string_view ms = member.view();
            const std::size_t center = ms.size() / 2; // 1-based center position
            for (std::size_t occ = ms.find(x); occ != std::string_view::npos;
                 occ = ms.find(x, occ + 1)) {
                const std::size_t begin = occ + 1;
                const std::size_t end = occ + x.size();
                if (begin <= center && center <= end) {
                    covered = true;
                    break;
                }
            }
            if (covered)
                break;
        }
        if (!covered)
            return false;
    }
    return true;
}

Word random_word(std::mt19937& rng, std::size_t max_len, unsigned alphabet_size) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int> sym_dist(0, static_cast<int>(alphabet_size) - 1);
    std::string s(len_dist(rng), 'a');
    for (char& c : s)
        c = static_cast<char>('a' + sym_dist(rng));
    return Word(std::move(s));
}

} // namespace tmm::oracles
