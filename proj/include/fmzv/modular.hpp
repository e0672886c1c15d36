#ifndef FMZV_MODULAR_HPP
#define FMZV_MODULAR_HPP

#include <cstdint>
#include <vector>

namespace fmzv {

using u64 = std::uint64_t;

// Trial division; evaluation primes stay well below 10^6.
bool is_odd_prime(u64 p);

// Throws EvenPrime for p == 2, NotPrime for anything else non-prime.
void require_odd_prime(u64 p);

u64 mod_pow(u64 base, u64 exp, u64 p);

// Fermat: a^(p-2) mod p; requires a not divisible by p.
u64 mod_inverse(u64 a, u64 p);

// Table of 1/a mod p for a in [1, p), built once per prime so the
// evaluation inner loops stay multiplication-only.
class InverseTable {
public:
    explicit InverseTable(u64 p);  // requires odd prime
    u64 prime() const noexcept { return p_; }
    u64 inv(u64 a) const { return table_[a]; }

private:
    u64 p_;
    std::vector<u64> table_;
};

// C(n, r) mod p for n < p, via factorial tables.
u64 binomial_mod_p(u64 n, u64 r, u64 p);

} // namespace fmzv

#endif // FMZV_MODULAR_HPP
