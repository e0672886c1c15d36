#ifndef FMZV_ORACLE_HPP
#define FMZV_ORACLE_HPP

#include "fmzv/modular.hpp"
#include "fmzv/tree.hpp"
#include "fmzv/word.hpp"

#include <vector>

namespace fmzv {

// Residue of an exact quantity at one sampled odd prime.
struct ModValue {
    u64 residue = 0;
    u64 p = 0;
};

struct PrimeCheck {
    u64 p = 0;
    u64 lhs = 0;
    u64 rhs = 0;
    bool pass = false;
};

// Per-prime left/right residues of an identity. Agreement at finitely
// many sampled primes is a necessary condition only; equality of the
// underlying objects means agreement at all but finitely many primes.
struct VerificationReport {
    std::vector<PrimeCheck> primes;
    bool pass = true;

    void add(u64 p, u64 lhs, u64 rhs) {
        primes.push_back({p, lhs, rhs, lhs == rhs});
        pass = pass && lhs == rhs;
    }
};

std::vector<u64> default_primes();  // {5, 7, 11, 13}

// Brute-force value of a tree pair at p:
//   sum over all (m_v) >= 1 on the bullets with sum m_v = p of
//   prod over edges of L_e^(-k(e)),
// where L_e adds m_v over the bullets beyond e as seen from the root.
// The composition enumeration is OpenMP-parallel over the first bullet;
// eval_tree_mod_p_serial is the independent reference kept for testing.
// Empty sum (p < #bullets) gives 0; a single vertex gives 1.
// Errors: NotPrime, EvenPrime.
ModValue eval_tree_mod_p(const Tree& t, const IndexMap& k, u64 p);
ModValue eval_tree_mod_p_serial(const Tree& t, const IndexMap& k, u64 p);

// sum over 0 < n_1 < ... < n_r < p of 1/(n_1^{k_1} ... n_r^{k_r}),
// computed by the O(r p) prefix-sum dynamic program. Empty tuple -> 1.
ModValue eval_fmzv_mod_p(const ZTuple& t, u64 p);

// Mordell-Tornheim type:
//   sum over m_1..m_r >= 1, m_1+...+m_r <= p-1 of
//   1/(m_1^{k_1} ... m_r^{k_r} (m_1+...+m_r)^{k_last}).
// ks entries >= 0 are accepted (index 0 slots appear in the root-exchange
// identity); k_last >= 0; r >= 1. OpenMP-parallel over m_1 with a serial
// reference.
ModValue eval_mt_mod_p(const std::vector<int>& ks, int k_last, u64 p);
ModValue eval_mt_mod_p_serial(const std::vector<int>& ks, int k_last, u64 p);

// Linear extension: each monomial z_{k_1}...z_{k_r} maps to the
// corresponding fmzv residue. Errors: NotInYH, NotPrime.
ModValue eval_word_mod_p(const LinComb& a, u64 p);

// B_n mod p via sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_0 = 1 and
// B_1 = -1/2. Supported for n in {0, 1}, odd n (0), and even n <= p-3;
// (p-1) | n with n > 0 is rejected (B_n is not p-integral there).
// Errors: NotPrime, NotPIntegral.
ModValue bernoulli_mod_p(u64 n, u64 p);

// lhs = tree value, rhs = sign * word-combination value of reduce(t, k),
// per prime.
VerificationReport verify_reduction(const Tree& t, const IndexMap& k,
                                    const std::vector<u64>& primes);

// lhs = value of z_word(t) sh z_word(u); rhs = (-1)^(weight of u) times
// the fmzv of t followed by u reversed. t, u nonempty.
VerificationReport verify_shuffle_relation(const ZTuple& t, const ZTuple& u,
                                           const std::vector<u64>& primes);

} // namespace fmzv

#endif // FMZV_ORACLE_HPP
