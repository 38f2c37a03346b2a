#ifndef TMM_WORDS_HPP
#define TMM_WORDS_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tmm {

/// Largest n for which thue_morse(n) will materialize a word (2^n bytes)
/// unless the caller passes an explicit cap.
inline constexpr unsigned kDefaultGenerationCap = 30;

/// Immutable finite byte string with 1-based public indexing.
///
/// Positions run 1..size(); slice(i, j) is inclusive on both ends.
/// Algorithms that want raw 0-based access use bytes()/view().
class Word {
public:
    Word() = default;
    explicit Word(std::string bytes) : data_(std::move(bytes)) {}
    explicit Word(std::string_view bytes) : data_(bytes) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    /// 1-based symbol access; throws std::domain_error outside 1..size().
    char symbol(std::size_t i) const;

    /// w[i..j], 1-based inclusive; requires 1 <= i <= j <= size().
    Word slice(std::size_t i, std::size_t j) const;

    std::string_view view() const noexcept { return data_; }
    const std::string& bytes() const noexcept { return data_; }

    std::size_t distinct_symbols() const;

    Word operator+(const Word& other) const { return Word(data_ + other.data_); }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::string data_;
};

/// Occurrence interval [begin, end], 1-based inclusive.
struct Interval {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Interval&) const = default;
};

/// n-th Thue-Morse word over {a,b}: t_0 = "a", t_n = t_{n-1} followed by
/// its complement. |t_n| = 2^n. Throws std::length_error when n > cap.
Word thue_morse(unsigned n, unsigned cap = kDefaultGenerationCap);

/// Symbol-wise a<->b swap; requires w over {a,b}, else std::invalid_argument.
Word complement(const Word& w);

/// All occurrence intervals of x in w, increasing by start, overlaps included.
/// Requires |x| >= 1.
std::vector<Interval> occurrences(const Word& w, const Word& x);

} // namespace tmm

#endif
