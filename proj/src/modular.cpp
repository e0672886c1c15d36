#include "fmzv/modular.hpp"

#include "fmzv/error.hpp"

#include <cassert>

namespace fmzv {

bool is_odd_prime(u64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (u64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_odd_prime(u64 p) {
    if (p == 2) throw Error("EvenPrime", "p = 2 is excluded");
    if (!is_odd_prime(p)) throw Error("NotPrime", "p = " + std::to_string(p));
    // Evaluation tables are O(p) per edge and the sums are exponential in
    // the bullet count; this is a desk-scale library.
    if (p > 1000003) throw Error("PrimeTooLarge", "p = " + std::to_string(p));
}

u64 mod_pow(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

u64 mod_inverse(u64 a, u64 p) {
    assert(a % p != 0);
    return mod_pow(a, p - 2, p);
}

InverseTable::InverseTable(u64 p) : p_(p), table_(p, 0) {
    require_odd_prime(p);
    for (u64 a = 1; a < p; ++a) table_[a] = mod_pow(a, p - 2, p);
}

u64 binomial_mod_p(u64 n, u64 r, u64 p) {
    assert(n < p);
    if (r > n) return 0;
    std::vector<u64> fact(n + 1, 1);
    for (u64 i = 2; i <= n; ++i) fact[i] = fact[i - 1] * i % p;
    return fact[n] * mod_inverse(fact[r] * fact[n - r] % p, p) % p;
}

} // namespace fmzv
