#ifndef FMZV_WORD_HPP
#define FMZV_WORD_HPP

#include "fmzv/bigint.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fmzv {

// Monomial of the noncommutative word algebra on the letters {x, y}.
// The empty word is the unit. Canonical order is by length, then
// lexicographic with x < y (plain byte order, since 'x' < 'y').
class Word {
public:
    Word() = default;
    explicit Word(std::string_view letters);  // throws Error("BadWord") on other letters

    static Word xs(int n);  // x^n
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }
    char front() const { return letters_.front(); }
    char back() const { return letters_.back(); }
    const std::string& str() const noexcept { return letters_; }

    Word operator+(const Word& o) const;  // concatenation
    Word append(char letter) const;
    Word drop_last() const;

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) noexcept { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) noexcept {
        if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    std::string letters_;
};

// Tuple of positive integers (k_1, ..., k_r); the empty tuple is allowed.
using ZTuple = std::vector<int>;

// z_k = y x^(k-1); z_word maps (k_1,...,k_r) to the concatenation z_{k_1}...z_{k_r}.
Word z_word(const ZTuple& t);

// Inverse of z_word on words that are empty or start with y.
// Throws Error("NotInYH") otherwise.
ZTuple word_to_ztuple(const Word& w);

// Finitely supported integer combination of words. Zero coefficients are
// never stored; iteration follows the canonical word order.
class LinComb {
public:
    using Map = std::map<Word, BigInt>;
    using const_iterator = Map::const_iterator;

    LinComb() = default;
    static LinComb unit() { return single(Word{}, 1); }
    static LinComb single(const Word& w, BigInt c = BigInt(1));

    void add(const Word& w, const BigInt& c);
    LinComb& operator+=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const BigInt* coeff(const Word& w) const;

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

private:
    Map terms_;
};

// Shuffle product by the recursion
//   (w1 u1) sh (w2 u2) = (w1 sh w2 u2) u1 + (w1 u1 sh w2) u2,
// with the empty word as unit; memoized on the (unordered) word pair.
LinComb shuffle(const Word& a, const Word& b);

// Bilinear extension of the shuffle to integer combinations.
LinComb shuffle_lincomb(const LinComb& a, const LinComb& b);

// Right-concatenate w to every monomial, coefficients unchanged.
LinComb concat_right(const LinComb& a, const Word& w);

// True iff every monomial is empty or starts with y, i.e. word_to_ztuple
// succeeds on all of them.
bool in_unit_plus_yh(const LinComb& a);

// "2·yxyx + 4·yyxx"; the empty combination renders "0", the empty word "1",
// and unit coefficients are omitted.
std::string pretty_words(const LinComb& a);

// "2·z2z2 + 4·z1z3"; requires in_unit_plus_yh.
std::string pretty_zform(const LinComb& a);

} // namespace fmzv

#endif // FMZV_WORD_HPP
