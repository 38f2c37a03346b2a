#include "tmm/words.hpp"

#include <stdexcept>

namespace tmm {

char Word::symbol(std::size_t i) const {
    if (i < 1 || i > data_.size())
        throw std::domain_error("Word::symbol: position " + std::to_string(i) +
                                " outside 1.." + std::to_string(data_.size()));
    return data_[i - 1];
}

Word Word::slice(std::size_t i, std::size_t j) const {
    if (i < 1 || i > j || j > data_.size())
        throw std::domain_error("Word::slice: invalid range [" + std::to_string(i) +
                                ", " + std::to_string(j) + "] for length " +
                                std::to_string(data_.size()));
    return Word(data_.substr(i - 1, j - i + 1));
}

std::size_t Word::distinct_symbols() const {
    bool seen[256] = {};
    std::size_t count = 0;
    for (unsigned char c : data_)
        if (!seen[c]) {
            seen[c] = true;
            ++count;
        }
    return count;
}

Word thue_morse(unsigned n, unsigned cap) {
    if (n > cap)
        throw std::length_error("thue_morse: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    std::string s;
    s.reserve(std::size_t{1} << n);
    s.push_back('a');
    for (unsigned step = 0; step < n; ++step) {
        const std::size_t half = s.size();
        for (std::size_t i = 0; i < half; ++i)
            s.push_back(s[i] == 'a' ? 'b' : 'a');
    }
    return Word(std::move(s));
}

Word complement(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w.bytes()) {
        if (c == 'a')
            out.push_back('b');
        else if (c == 'b')
            out.push_back('a');
        else
            throw std::invalid_argument(std::string("complement: symbol '") + c +
                                        "' outside the alphabet {a,b}");
    }
    return Word(std::move(out));
}

std::vector<Interval> occurrences(const Word& w, const Word& x) {
    if (x.empty())
        throw std::domain_error("occurrences: pattern must be nonempty");
    std::vector<Interval> result;
    if (x.size() > w.size())
        return result;
    const std::string_view text = w.view();
    const std::string_view pat = x.view();
    for (std::size_t pos = text.find(pat); pos != std::string_view::npos;
         pos = text.find(pat, pos + 1)) {
        result.push_back(Interval{pos + 1, pos + pat.size()});
    }
    return result;
}

} // namespace tmm
