#include "fmzv/word.hpp"

#include "fmzv/error.hpp"

#include <cassert>
#include <utility>

namespace fmzv {

Word::Word(std::string_view letters) : letters_(letters) {
    for (char c : letters_)
        if (c != 'x' && c != 'y') throw Error("BadWord", "letter '" + std::string(1, c) + "'");
}

Word Word::xs(int n) {
    assert(n >= 0);
    Word w;
    w.letters_.assign(static_cast<std::size_t>(n), 'x');
    return w;
}

Word Word::operator+(const Word& o) const {
    Word w;
    w.letters_ = letters_ + o.letters_;
    return w;
}

Word Word::append(char letter) const {
    assert(letter == 'x' || letter == 'y');
    Word w = *this;
    w.letters_.push_back(letter);
    return w;
}

Word Word::drop_last() const {
    assert(!letters_.empty());
    Word w = *this;
    w.letters_.pop_back();
    return w;
}

Word z_word(const ZTuple& t) {
    Word w;
    for (int k : t) {
        assert(k >= 1);
        w = w.append('y');
        for (int i = 1; i < k; ++i) w = w.append('x');
    }
    return w;
}

ZTuple word_to_ztuple(const Word& w) {
    if (!w.empty() && w.front() != 'y')
        throw Error("NotInYH", "word '" + w.str() + "' starts with x");
    ZTuple t;
    for (char c : w.str()) {
        if (c == 'y')
            t.push_back(1);
        else
            ++t.back();
    }
    return t;
}

LinComb LinComb::single(const Word& w, BigInt c) {
    LinComb r;
    r.add(w, c);
    return r;
}

void LinComb::add(const Word& w, const BigInt& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

const BigInt* LinComb::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
}

LinComb concat_right(const LinComb& a, const Word& w) {
    if (w.empty()) return a;
    LinComb r;
    for (const auto& [m, c] : a) r.add(m + w, c);
    return r;
}

namespace {

LinComb shuffle_rec(const Word& a, const Word& b,
                    std::map<std::pair<std::string, std::string>, LinComb>& memo) {
    if (a.empty()) return LinComb::single(b);
    if (b.empty()) return LinComb::single(a);

    std::pair<std::string, std::string> key = std::minmax(a.str(), b.str());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    LinComb r = concat_right(shuffle_rec(a.drop_last(), b, memo), Word{}.append(a.back()));
    r += concat_right(shuffle_rec(a, b.drop_last(), memo), Word{}.append(b.back()));
    memo.emplace(std::move(key), r);
    return r;
}

} // namespace

LinComb shuffle(const Word& a, const Word& b) {
    // Per-thread memo; shuffles happen inside parallel sweeps.
    thread_local std::map<std::pair<std::string, std::string>, LinComb> memo;
    return shuffle_rec(a, b, memo);
}

LinComb shuffle_lincomb(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            BigInt c = ca * cb;
            for (const auto& [w, n] : shuffle(wa, wb)) r.add(w, c * n);
        }
    return r;
}

bool in_unit_plus_yh(const LinComb& a) {
    for (const auto& [w, c] : a)
        if (!w.empty() && w.front() != 'y') return false;
    return true;
}

namespace {

std::string pretty_term(const BigInt& c, const std::string& body) {
    if (body == "1") return c.to_string();
    if (c == BigInt(1)) return body;
    return c.to_string() + "·" + body;
}

} // namespace

std::string pretty_words(const LinComb& a) {
    if (a.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : a) {
        if (!s.empty()) s += " + ";
        s += pretty_term(c, w.empty() ? "1" : w.str());
    }
    return s;
}

std::string pretty_zform(const LinComb& a) {
    if (a.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : a) {
        std::string body;
        for (int k : word_to_ztuple(w)) body += "z" + std::to_string(k);
        if (body.empty()) body = "1";
        if (!s.empty()) s += " + ";
        s += pretty_term(c, body);
    }
    return s;
}

} // namespace fmzv
