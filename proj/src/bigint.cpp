#include "fmzv/bigint.hpp"

#include "fmzv/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace fmzv {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // llabs(LLONG_MIN) would overflow; peel one limb first in unsigned space.
    unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    while (u > 0) {
        mag_.push_back(static_cast<std::uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt BigInt::from_string(const std::string& s) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw Error("BadInteger", "'" + s + "'");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw Error("BadInteger", "'" + s + "'");

    BigInt r;
    // Consume 9-digit chunks from the right.
    std::size_t end = s.size();
    while (end > pos) {
        std::size_t begin = end >= pos + 9 ? end - 9 : pos;
        r.mag_.push_back(static_cast<std::uint32_t>(std::stoul(s.substr(begin, end - begin))));
        end = begin;
    }
    r.sign_ = neg ? -1 : 1;
    r.trim();
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size() || i < b.size(); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s % kBase));
        carry = static_cast<std::uint32_t>(s / kBase);
    }
    if (carry) r.push_back(carry);
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) return *this = o;
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, o.mag_);
    } else {
        mag_ = sub_mag(o.mag_, mag_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < b.mag_.size() || carry; ++j) {
            unsigned __int128 cur = r.mag_[i + j] + carry;
            if (j < b.mag_.size())
                cur += static_cast<unsigned __int128>(a.mag_[i]) * b.mag_[j];
            r.mag_[i + j] = static_cast<std::uint32_t>(cur % BigInt::kBase);
            carry = cur / BigInt::kBase;
        }
    }
    r.trim();
    return r;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
    // Horner over limbs, most significant first; acc*1e9 + limb < 2^62 for m < 2^32.
    std::uint64_t acc = 0;
    for (std::size_t i = mag_.size(); i-- > 0;)
        acc = (acc * kBase + mag_[i]) % m;
    if (sign_ < 0 && acc != 0) acc = m - acc;
    return acc;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(mag_.back());
    char buf[16];
    for (std::size_t i = mag_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
        s += buf;
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

} // namespace fmzv
