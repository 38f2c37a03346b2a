#ifndef TMM_SUFFIX_AUTOMATON_HPP
#define TMM_SUFFIX_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

namespace tmm {

/// Online suffix automaton over bytes.
///
/// Each state (except the initial one) stands for one endpos equivalence
/// class; its strings have lengths in (link_len, len]. That interval view is
/// what the distinct-substring counting and the coverage checks build on.
class SuffixAutomaton {
public:
    static constexpr int kInit = 0;

    struct State {
        int len = 0;
        int link = -1;
        std::uint32_t first_end = 0; // 1-based end of the first occurrence, 0 for init
        bool clone = false;
        std::map<unsigned char, int> next;
    };

    explicit SuffixAutomaton(std::string_view text);

    int state_count() const noexcept { return static_cast<int>(states_.size()); }
    const State& state(int id) const { return states_[id]; }
    int link_len(int id) const { return states_[id].link < 0 ? 0 : states_[states_[id].link].len; }

    /// State of the length-e prefix, e in 1..text length.
    int prefix_state(std::size_t e) const { return prefix_state_[e]; }

    std::size_t text_length() const noexcept { return text_len_; }

    /// -1 when there is no transition.
    int transition(int id, unsigned char c) const {
        const auto& next = states_[id].next;
        auto it = next.find(c);
        return it == next.end() ? -1 : it->second;
    }

    /// States ordered by decreasing len; processing in this order visits every
    /// state before its suffix link, so link-tree aggregations are one sweep.
    const std::vector<int>& by_len_desc() const noexcept { return order_desc_; }

    /// counts[k] = number of distinct substrings of length k, k = 1..n.
    std::vector<std::uint64_t> distinct_counts_per_length() const;

private:
    std::vector<State> states_;
    std::vector<int> prefix_state_;
    std::vector<int> order_desc_;
    std::size_t text_len_ = 0;
};

} // namespace tmm

#endif
