#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmzv/error.hpp"
#include "fmzv/word.hpp"

#include <random>
#include <vector>

using namespace fmzv;

namespace {

Word W(const char* s) { return Word(s); }

// Independent oracle: every way of choosing which positions of the merged
// word come from a, as a bitmask enumeration.
LinComb interleavings(const Word& a, const Word& b) {
    LinComb out;
    const std::size_t n = a.size() + b.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size()) continue;
        std::string merged;
        std::size_t ia = 0, ib = 0;
        for (std::size_t pos = 0; pos < n; ++pos)
            merged += (mask >> pos) & 1u ? a.str()[ia++] : b.str()[ib++];
        out.add(Word(merged), 1);
    }
    return out;
}

std::vector<Word> words_up_to(std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t l = 1; l <= len; ++l)
        for (unsigned bits = 0; bits < (1u << l); ++bits) {
            std::string s;
            for (std::size_t i = 0; i < l; ++i) s += (bits >> i) & 1u ? 'y' : 'x';
            out.push_back(Word(s));
        }
    return out;
}

BigInt coeff_sum(const LinComb& a) {
    BigInt s;
    for (const auto& [w, c] : a) s += c;
    return s;
}

} // namespace

TEST_CASE("word construction") {
    CHECK(Word("yxy").size() == 3);
    CHECK(Word("").empty());
    CHECK(Word::xs(3) == Word("xxx"));
    CHECK(Word::xs(0) == Word{});
    CHECK_THROWS_AS(Word("yz"), Error);
    // Canonical order: length first, then byte order with x < y.
    CHECK(Word("yy") < Word("xxx"));
    CHECK(Word("xy") < Word("yx"));
}

TEST_CASE("z_word") {
    CHECK(z_word({2, 1}) == W("yxy"));
    CHECK(z_word({1}) == W("y"));
    CHECK(z_word({}) == Word{});
    CHECK(z_word({1, 3}) == W("yyxx"));
}

TEST_CASE("word_to_ztuple") {
    CHECK(word_to_ztuple(W("yxy")) == ZTuple{2, 1});
    CHECK(word_to_ztuple(W("yyxx")) == ZTuple{1, 3});
    CHECK(word_to_ztuple(Word{}) == ZTuple{});
    CHECK_THROWS_AS(word_to_ztuple(W("xy")), Error);
    try {
        word_to_ztuple(W("xy"));
    } catch (const Error& e) {
        CHECK(e.code() == "NotInYH");
    }
}

TEST_CASE("z_word and word_to_ztuple invert each other") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        ZTuple t;
        int r = static_cast<int>(rng() % 5);
        for (int j = 0; j < r; ++j) t.push_back(1 + static_cast<int>(rng() % 4));
        CHECK(word_to_ztuple(z_word(t)) == t);
    }
}

TEST_CASE("shuffle examples") {
    LinComb z2z2 = shuffle(W("yx"), W("yx"));
    LinComb expected;
    expected.add(W("yxyx"), 2);
    expected.add(W("yyxx"), 4);
    CHECK(z2z2 == expected);

    CHECK(shuffle(Word{}, W("xyx")) == LinComb::single(W("xyx")));
    CHECK(shuffle(W("xyx"), Word{}) == LinComb::single(W("xyx")));

    LinComb y_yx = shuffle(W("y"), W("yx"));
    LinComb expected2;
    expected2.add(W("yxy"), 1);
    expected2.add(W("yyx"), 2);
    CHECK(y_yx == expected2);
}

TEST_CASE("shuffle matches the interleaving enumeration up to length 4") {
    auto words = words_up_to(4);
    for (const Word& a : words)
        for (const Word& b : words)
            if (a.size() + b.size() <= 4 + 4) CHECK(shuffle(a, b) == interleavings(a, b));
}

TEST_CASE("shuffle is commutative and associative on short words") {
    auto words = words_up_to(3);
    for (const Word& a : words)
        for (const Word& b : words) {
            CHECK(shuffle(a, b) == shuffle(b, a));
            for (const Word& c : words) {
                if (a.size() + b.size() + c.size() > 6) continue;
                LinComb left = shuffle_lincomb(shuffle(a, b), LinComb::single(c));
                LinComb right = shuffle_lincomb(LinComb::single(a), shuffle(b, c));
                CHECK(left == right);
            }
        }
}

TEST_CASE("shuffle grading: lengths and letter counts add") {
    auto words = words_up_to(4);
    for (const Word& a : words)
        for (const Word& b : words) {
            auto ys = [](const Word& w) {
                return std::count(w.str().begin(), w.str().end(), 'y');
            };
            for (const auto& [m, c] : shuffle(a, b)) {
                CHECK(m.size() == a.size() + b.size());
                CHECK(ys(m) == ys(a) + ys(b));
                CHECK(c.sign() > 0);
            }
        }
}

TEST_CASE("shuffle coefficient sum is a binomial") {
    auto words = words_up_to(5);
    for (const Word& a : words)
        for (const Word& b : words) {
            // C(|a|+|b|, |a|) computed additively via Pascal's rule.
            std::size_t n = a.size() + b.size();
            std::vector<BigInt> row{BigInt(1)};
            for (std::size_t i = 1; i <= n; ++i) {
                std::vector<BigInt> next(i + 1, BigInt(1));
                for (std::size_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
                row = std::move(next);
            }
            CHECK(coeff_sum(shuffle(a, b)) == row[a.size()]);
        }
}

TEST_CASE("shuffle_lincomb is bilinear") {
    LinComb a = LinComb::single(W("y"), 2);
    LinComb b = LinComb::single(W("y"), 3);
    CHECK(shuffle_lincomb(a, b) == LinComb::single(W("yy"), 12));

    CHECK(shuffle_lincomb(a, LinComb{}) == LinComb{});
    CHECK(shuffle_lincomb(LinComb::unit(), b) == b);
}

TEST_CASE("concat_right") {
    CHECK(concat_right(LinComb::single(W("yy"), 2), W("x")) == LinComb::single(W("yyx"), 2));

    LinComb a;
    a.add(W("yxy"), 1);
    a.add(W("yyx"), 2);
    CHECK(concat_right(a, Word{}) == a);

    LinComb expected;
    expected.add(W("yxyyx"), 1);
    expected.add(W("yyxyx"), 2);
    CHECK(concat_right(a, W("yx")) == expected);
}

TEST_CASE("lincomb drops zero coefficients") {
    LinComb a;
    a.add(W("yx"), 5);
    a.add(W("yx"), -5);
    CHECK(a.empty());
    CHECK(a == LinComb{});
}

TEST_CASE("rendering") {
    LinComb sh = shuffle(W("yx"), W("yx"));
    CHECK(pretty_words(sh) == "2·yxyx + 4·yyxx");
    CHECK(pretty_zform(sh) == "2·z2z2 + 4·z1z3");
    CHECK(pretty_words(LinComb::unit()) == "1");
    CHECK(pretty_words(LinComb{}) == "0");
    CHECK(pretty_words(LinComb::single(W("yxy"))) == "yxy");
    CHECK(in_unit_plus_yh(sh));
    LinComb bad = LinComb::single(W("xy"));
    CHECK(!in_unit_plus_yh(bad));
}
