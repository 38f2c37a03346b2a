#include "tmm/factorizations.hpp"

#include "tmm/complexity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tmm {

std::size_t LZFactorization::factor_index_at(std::size_t p) const {
    std::size_t covered = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        covered += factors[i].length;
        if (p <= covered)
            return i;
    }
    throw std::domain_error("factor_index_at: position beyond factorized word");
}

LZFactorization lz_factorize(const Word& w) {
    if (w.empty())
        throw std::domain_error("lz_factorize: word must be nonempty");
    const std::string_view s = w.view();
    const std::size_t n = s.size();
    LZFactorization out;

    std::size_t i = 0; // 0-based start of the current factor
    while (i < n) {
        std::size_t best_len = 0;
        std::size_t best_src = 0;
        const std::size_t remaining = n - i;
        for (std::size_t p = 0; p < i; ++p) {
            // A candidate can only beat best_len if it matches one symbol
            // past it, so probe that symbol before paying for a full extend.
            if (best_len > 0 && (best_len >= remaining || s[p + best_len] != s[i + best_len]))
                continue;
            std::size_t len = 0;
            while (len < remaining && s[p + len] == s[i + len])
                ++len;
            if (len > best_len) {
                best_len = len;
                best_src = p;
            }
        }
        if (best_len == 0) {
            out.factors.push_back(LZFactor{i + 1, 1, true, 0, s[i]});
            i += 1;
        } else {
            out.factors.push_back(LZFactor{i + 1, best_len, false, best_src + 1, '\0'});
            i += best_len;
        }
    }
    return out;
}

std::size_t lz_size(const Word& w) {
    return lz_factorize(w).size();
}

Word lz_decode(const LZFactorization& f) {
    std::size_t total = 0;
    for (const auto& factor : f.factors)
        total += factor.length;
    std::string out;
    out.reserve(total);
    for (const auto& factor : f.factors) {
        if (factor.fresh) {
            out.push_back(factor.symbol);
            continue;
        }
        if (factor.source == 0 || factor.source >= factor.start)
            throw std::domain_error("lz_decode: copy factor needs a source before its start");
        // Symbol-by-symbol so a source range overlapping the factor itself
        // reads positions written moments earlier.
        for (std::size_t k = 0; k < factor.length; ++k)
            out.push_back(out[factor.source - 1 + k]);
    }
    return Word(std::move(out));
}

LyndonFactorization lyndon_factorize(const Word& w) {
    if (w.empty())
        throw std::domain_error("lyndon_factorize: word must be nonempty");
    const std::string_view s = w.view();
    const std::size_t n = s.size();
    LyndonFactorization out;

    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        std::size_t k = i;
        while (j < n && s[k] <= s[j]) {
            if (s[k] < s[j])
                k = i;
            else
                ++k;
            ++j;
        }
        const std::size_t len = j - k;
        while (i <= k) {
            out.factors.push_back(Word(std::string(s.substr(i, len))));
            i += len;
        }
    }
    return out;
}

namespace {

// Cyclic rotation order via rank doubling: rotation i sorts by the infinite
// periodic word starting at i. Ties that survive len >= n are genuinely equal
// rotations and may stay in any order.
std::vector<std::size_t> sorted_rotations(std::string_view s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> order(n), rank(n), tmp_order(n), tmp_rank(n), count;
    std::iota(order.begin(), order.end(), 0);

    count.assign(257, 0);
    for (unsigned char c : s)
        ++count[c + 1];
    for (std::size_t i = 1; i < count.size(); ++i)
        count[i] += count[i - 1];
    for (std::size_t i = 0; i < n; ++i)
        tmp_order[count[static_cast<unsigned char>(s[i])]++] = i;
    order = tmp_order;
    std::size_t distinct = 0;
    rank[order[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (s[order[i]] != s[order[i - 1]])
            ++distinct;
        rank[order[i]] = distinct;
    }

    for (std::size_t len = 1; len < n && distinct + 1 < n; len *= 2) {
        auto key2 = [&](std::size_t i) { return rank[(i + len) % n]; };
        // radix: sort by second key, then stably by first
        count.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++count[key2(i) + 1];
        for (std::size_t i = 1; i <= n; ++i)
            count[i] += count[i - 1];
        for (std::size_t i = 0; i < n; ++i)
            tmp_order[count[key2(i)]++] = i;

        count.assign(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++count[rank[i] + 1];
        for (std::size_t i = 1; i <= n; ++i)
            count[i] += count[i - 1];
        for (std::size_t idx = 0; idx < n; ++idx) {
            const std::size_t i = tmp_order[idx];
            order[count[rank[i]]++] = i;
        }

        distinct = 0;
        tmp_rank[order[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (rank[order[i]] != rank[order[i - 1]] || key2(order[i]) != key2(order[i - 1]))
                ++distinct;
            tmp_rank[order[i]] = distinct;
        }
        rank = tmp_rank;
    }
    return order;
}

} // namespace

BWTResult bwt(const Word& w) {
    if (w.empty())
        throw std::domain_error("bwt: word must be nonempty");
    const std::string_view s = w.view();
    const std::size_t n = s.size();
    const std::vector<std::size_t> order = sorted_rotations(s);

    std::string last;
    last.reserve(n);
    for (std::size_t i : order)
        last.push_back(s[(i + n - 1) % n]);

    std::size_t runs = 1;
    for (std::size_t i = 1; i < n; ++i)
        if (last[i] != last[i - 1])
            ++runs;
    return BWTResult{Word(std::move(last)), runs};
}

ClosedFormEntry closed_form_table_entry(unsigned n) {
    if (n < 1 || n > 62)
        throw std::domain_error("closed_form_table_entry: n must be in 1..62");
    ClosedFormEntry entry;
    entry.z = 2 * std::uint64_t{n};
    entry.r = 2 * std::uint64_t{n};
    entry.lyndon = (3 * std::uint64_t{n} - 2) / 2;
    if (n >= 4)
        entry.gamma = 4;
    entry.delta = closed_form_delta(n);
    return entry;
}

} // namespace tmm
