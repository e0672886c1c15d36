#ifndef FMZV_BIGINT_HPP
#define FMZV_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fmzv {

// Signed arbitrary-precision integer, little-endian base-1e9 limbs.
// Word-combination coefficients grow binomially with weight, so machine
// words are not enough at higher weights; everything here stays exact.
// Only the operations the algebra needs: add, subtract, multiply,
// decimal I/O, and reduction modulo a small modulus.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    // Decimal string, optional leading '-'. Throws Error("BadInteger").
    static BigInt from_string(const std::string& s);

    bool is_zero() const noexcept { return sign_ == 0; }
    int sign() const noexcept { return sign_; }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b) noexcept {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) noexcept { return !(a == b); }

    // Residue in [0, m), sign respected. Requires 2 <= m < 2^32.
    std::uint64_t mod_u64(std::uint64_t m) const;

    std::string to_string() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;

    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // no leading zero limbs; empty iff sign_ == 0

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace fmzv

#endif // FMZV_BIGINT_HPP
