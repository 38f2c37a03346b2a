#include "tmm/suffix_automaton.hpp"

namespace tmm {

SuffixAutomaton::SuffixAutomaton(std::string_view text) : text_len_(text.size()) {
    states_.reserve(2 * text.size() + 2);
    states_.emplace_back(); // initial state
    prefix_state_.assign(text.size() + 1, kInit);

    int last = kInit;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        const int cur = static_cast<int>(states_.size());
        states_.emplace_back();
        states_[cur].len = states_[last].len + 1;
        states_[cur].first_end = static_cast<std::uint32_t>(i + 1);

        int p = last;
        while (p >= 0 && !states_[p].next.count(c)) {
            states_[p].next[c] = cur;
            p = states_[p].link;
        }
        if (p < 0) {
            states_[cur].link = kInit;
        } else {
            const int q = states_[p].next[c];
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                const int dup = static_cast<int>(states_.size());
                states_.push_back(states_[q]);
                states_[dup].len = states_[p].len + 1;
                states_[dup].clone = true;
                while (p >= 0 && states_[p].next[c] == q) {
                    states_[p].next[c] = dup;
                    p = states_[p].link;
                }
                states_[q].link = dup;
                states_[cur].link = dup;
            }
        }
        last = cur;
        prefix_state_[i + 1] = cur;
    }

    // counting sort by len, then reverse for the descending sweep
    std::vector<int> bucket(text.size() + 2, 0);
    for (const auto& s : states_)
        ++bucket[s.len];
    for (std::size_t i = 1; i < bucket.size(); ++i)
        bucket[i] += bucket[i - 1];
    order_desc_.assign(states_.size(), 0);
    for (int id = static_cast<int>(states_.size()) - 1; id >= 0; --id)
        order_desc_[--bucket[states_[id].len]] = id;
    std::vector<int> rev(order_desc_.rbegin(), order_desc_.rend());
    order_desc_ = std::move(rev);
}

std::vector<std::uint64_t> SuffixAutomaton::distinct_counts_per_length() const {
    // Each state contributes one distinct substring per length in
    // (link_len, len]; accumulate via a difference array.
    std::vector<std::int64_t> diff(text_len_ + 2, 0);
    for (int id = 1; id < state_count(); ++id) {
        diff[link_len(id) + 1] += 1;
        diff[states_[id].len + 1] -= 1;
    }
    std::vector<std::uint64_t> counts(text_len_ + 1, 0);
    std::int64_t running = 0;
    for (std::size_t k = 1; k <= text_len_; ++k) {
        running += diff[k];
        counts[k] = static_cast<std::uint64_t>(running);
    }
    return counts;
}

} // namespace tmm
