#include "fmzv/oracle.hpp"

#include "fmzv/error.hpp"
#include "fmzv/parallel.hpp"
#include "fmzv/reduce.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace fmzv {

std::vector<u64> default_primes() { return {5, 7, 11, 13}; }

namespace {

constexpr int kMaxBullets = 32;  // cut masks are 32-bit; far beyond desk scale

struct TreePlan {
    u64 p = 0;
    int bullets = 0;
    std::vector<std::uint32_t> masks;      // per edge: far-side bullets
    std::vector<std::vector<u64>> powers;  // per edge: inv(L)^k(e) for L in [1, p)
};

TreePlan build_tree_plan(const Tree& t, const IndexMap& k, u64 p) {
    std::vector<std::string> bullets = bullet_ids(t);
    if (bullets.size() > kMaxBullets)
        throw Error("TreeTooLarge", std::to_string(bullets.size()) + " bullet vertices");

    std::map<std::string, int> slot;
    for (std::size_t i = 0; i < bullets.size(); ++i) slot[bullets[i]] = static_cast<int>(i);

    TreePlan plan;
    plan.p = p;
    plan.bullets = static_cast<int>(bullets.size());

    InverseTable inv(p);
    for (const EdgeCut& cut : edge_cuts(t)) {
        std::uint32_t mask = 0;
        for (const std::string& v : cut.far_bullets) mask |= 1u << slot[v];
        plan.masks.push_back(mask);

        std::vector<u64> pow_table(p, 0);
        int ke = k.at(cut.edge);
        for (u64 l = 1; l < p; ++l) pow_table[l] = mod_pow(inv.inv(l), ke, p);
        plan.powers.push_back(std::move(pow_table));
    }
    return plan;
}

// Sum over the remaining coordinates m_depth .. m_b (1-based; m_b takes
// whatever is left), with the partial L_e of m_1..m_{depth-1} in L.
u64 tree_sum_rec(const TreePlan& plan, int depth, u64 remaining, std::vector<u64>& L) {
    const int b = plan.bullets;
    const std::size_t ne = plan.masks.size();
    if (depth == b) {
        u64 term = 1;
        for (std::size_t e = 0; e < ne; ++e) {
            u64 full = L[e] + ((plan.masks[e] >> (b - 1)) & 1u ? remaining : 0);
            // Cut sets are nonempty proper subsets, so 1 <= full <= p-1.
            term = term * plan.powers[e][full] % plan.p;
        }
        return term;
    }

    u64 acc = 0;
    const std::uint32_t bit = 1u << (depth - 1);
    u64 max_m = remaining - static_cast<u64>(b - depth);  // leave >= 1 per slot
    for (u64 m = 1; m <= max_m; ++m) {
        for (std::size_t e = 0; e < ne; ++e)
            if (plan.masks[e] & bit) L[e] += m;
        acc += tree_sum_rec(plan, depth + 1, remaining - m, L);
        for (std::size_t e = 0; e < ne; ++e)
            if (plan.masks[e] & bit) L[e] -= m;
    }
    return acc % plan.p;
}

} // namespace

ModValue eval_tree_mod_p(const Tree& t, const IndexMap& k, u64 p) {
    require_odd_prime(p);
    validate(t);
    validate_index(t, k);

    std::size_t b = bullet_ids(t).size();
    if (b == 1) return {1 % p, p};
    if (b > p) return {0, p};

    TreePlan plan = build_tree_plan(t, k, p);
    const long long first_max = static_cast<long long>(p - b + 1);

    u64 total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic) num_threads(thread_cap())
    for (long long m1 = 1; m1 <= first_max; ++m1) {
        std::vector<u64> L(plan.masks.size(), 0);
        for (std::size_t e = 0; e < plan.masks.size(); ++e)
            if (plan.masks[e] & 1u) L[e] = static_cast<u64>(m1);
        total += tree_sum_rec(plan, 2, p - static_cast<u64>(m1), L);
    }
    return {total % p, p};
}

namespace {

// Reference path: recompute every L_e from the cut sets and use Fermat
// powers directly, no tables, no incremental updates.
u64 tree_sum_naive(const std::vector<std::pair<std::vector<int>, int>>& cuts, u64 p,
                   std::vector<u64>& m, std::size_t depth, u64 remaining) {
    if (depth + 1 == m.size()) {
        m[depth] = remaining;
        u64 term = 1;
        for (const auto& [slots, ke] : cuts) {
            u64 l = 0;
            for (int s : slots) l += m[s];
            term = term * mod_pow(mod_inverse(l % p, p), ke, p) % p;
        }
        return term;
    }
    u64 acc = 0;
    u64 max_m = remaining - (m.size() - 1 - depth);
    for (u64 v = 1; v <= max_m; ++v) {
        m[depth] = v;
        acc = (acc + tree_sum_naive(cuts, p, m, depth + 1, remaining - v)) % p;
    }
    return acc;
}

} // namespace

ModValue eval_tree_mod_p_serial(const Tree& t, const IndexMap& k, u64 p) {
    require_odd_prime(p);
    validate(t);
    validate_index(t, k);

    std::vector<std::string> bullets = bullet_ids(t);
    if (bullets.size() == 1) return {1 % p, p};
    if (bullets.size() > p) return {0, p};

    std::map<std::string, int> slot;
    for (std::size_t i = 0; i < bullets.size(); ++i) slot[bullets[i]] = static_cast<int>(i);

    std::vector<std::pair<std::vector<int>, int>> cuts;
    for (const EdgeCut& cut : edge_cuts(t)) {
        std::vector<int> slots;
        for (const std::string& v : cut.far_bullets) slots.push_back(slot[v]);
        cuts.emplace_back(std::move(slots), k.at(cut.edge));
    }

    std::vector<u64> m(bullets.size(), 0);
    return {tree_sum_naive(cuts, p, m, 0, p), p};
}

ModValue eval_fmzv_mod_p(const ZTuple& t, u64 p) {
    require_odd_prime(p);
    if (t.empty()) return {1 % p, p};
    for (int k : t)
        if (k < 1) throw Error("BadIndex", "fmzv exponents must be positive");

    InverseTable inv(p);
    // A_1(n) = n^{-k_1}; A_j(n) = n^{-k_j} * sum_{m<n} A_{j-1}(m).
    std::vector<u64> prev(p, 0);
    for (u64 n = 1; n < p; ++n) prev[n] = mod_pow(inv.inv(n), t[0], p);
    for (std::size_t j = 1; j < t.size(); ++j) {
        std::vector<u64> cur(p, 0);
        u64 prefix = 0;
        for (u64 n = 1; n < p; ++n) {
            prefix = (prefix + prev[n - 1]) % p;
            cur[n] = mod_pow(inv.inv(n), t[j], p) * prefix % p;
        }
        prev = std::move(cur);
    }
    u64 total = 0;
    for (u64 n = 1; n < p; ++n) total = (total + prev[n]) % p;
    return {total, p};
}

namespace {

struct MtPlan {
    u64 p = 0;
    int r = 0;
    std::vector<std::vector<u64>> powers;  // [r] slot tables, then the k_last table
};

MtPlan build_mt_plan(const std::vector<int>& ks, int k_last, u64 p) {
    if (ks.empty()) throw Error("EmptyIndex", "MT evaluation needs r >= 1");
    for (int k : ks)
        if (k < 0) throw Error("BadIndex", "negative MT exponent");
    if (k_last < 0) throw Error("BadIndex", "negative MT exponent");

    MtPlan plan;
    plan.p = p;
    plan.r = static_cast<int>(ks.size());
    InverseTable inv(p);
    auto table = [&](int k) {
        std::vector<u64> tab(p, 0);
        for (u64 l = 1; l < p; ++l) tab[l] = mod_pow(inv.inv(l), k, p);
        return tab;
    };
    for (int k : ks) plan.powers.push_back(table(k));
    plan.powers.push_back(table(k_last));
    return plan;
}

u64 mt_sum_rec(const MtPlan& plan, int depth, u64 sum, u64 acc_prod) {
    if (depth == plan.r) return acc_prod * plan.powers[plan.r][sum] % plan.p;
    u64 acc = 0;
    u64 max_m = plan.p - 1 - sum - static_cast<u64>(plan.r - depth - 1);
    for (u64 m = 1; m <= max_m; ++m)
        acc += mt_sum_rec(plan, depth + 1, sum + m, acc_prod * plan.powers[depth][m] % plan.p);
    return acc % plan.p;
}

} // namespace

ModValue eval_mt_mod_p(const std::vector<int>& ks, int k_last, u64 p) {
    require_odd_prime(p);
    MtPlan plan = build_mt_plan(ks, k_last, p);
    const int r = plan.r;
    if (static_cast<u64>(r) > p - 1) return {0, p};

    const long long first_max = static_cast<long long>(p - static_cast<u64>(r));
    u64 total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic) num_threads(thread_cap())
    for (long long m1 = 1; m1 <= first_max; ++m1)
        total += mt_sum_rec(plan, 1, static_cast<u64>(m1),
                            plan.powers[0][static_cast<u64>(m1)]);
    return {total % p, p};
}

namespace {

u64 mt_sum_naive(const std::vector<int>& ks, int k_last, u64 p, std::vector<u64>& m,
                 std::size_t depth) {
    if (depth == ks.size()) {
        u64 sum = 0;
        for (u64 v : m) sum += v;
        if (sum > p - 1) return 0;
        u64 term = mod_pow(mod_inverse(sum % p, p), k_last, p);
        for (std::size_t i = 0; i < ks.size(); ++i)
            term = term * mod_pow(mod_inverse(m[i], p), ks[i], p) % p;
        return term;
    }
    u64 used = 0;
    for (std::size_t i = 0; i < depth; ++i) used += m[i];
    u64 acc = 0;
    for (u64 v = 1; used + v + (ks.size() - depth - 1) <= p - 1; ++v) {
        m[depth] = v;
        acc = (acc + mt_sum_naive(ks, k_last, p, m, depth + 1)) % p;
    }
    return acc;
}

} // namespace

ModValue eval_mt_mod_p_serial(const std::vector<int>& ks, int k_last, u64 p) {
    require_odd_prime(p);
    if (ks.empty()) throw Error("EmptyIndex", "MT evaluation needs r >= 1");
    if (ks.size() > p - 1) return {0, p};
    std::vector<u64> m(ks.size(), 0);
    return {mt_sum_naive(ks, k_last, p, m, 0), p};
}

ModValue eval_word_mod_p(const LinComb& a, u64 p) {
    require_odd_prime(p);
    u64 total = 0;
    for (const auto& [w, c] : a) {
        u64 zeta = eval_fmzv_mod_p(word_to_ztuple(w), p).residue;
        total = (total + c.mod_u64(p) * zeta) % p;
    }
    return {total, p};
}

ModValue bernoulli_mod_p(u64 n, u64 p) {
    require_odd_prime(p);
    if (n == 0) return {1, p};
    if (n == 1) return {p - mod_inverse(2, p), p};  // B_1 = -1/2
    if (n % 2 == 1) return {0, p};                  // odd Bernoulli numbers >= 3 vanish
    if (n % (p - 1) == 0)
        throw Error("NotPIntegral", "B_" + std::to_string(n) + " has p = " + std::to_string(p) +
                                        " in its denominator");
    if (n > p - 3)
        throw Error("NotPIntegral", "recurrence for B_" + std::to_string(n) +
                                        " passes through B_" + std::to_string(p - 1));

    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m; all m+1 <= p-2 < p.
    std::vector<u64> fact(n + 2, 1);
    for (u64 i = 2; i <= n + 1; ++i) fact[i] = fact[i - 1] * i % p;
    auto binom = [&](u64 a, u64 b) {
        return fact[a] * mod_inverse(fact[b] * fact[a - b] % p, p) % p;
    };

    std::vector<u64> bern(n + 1, 0);
    bern[0] = 1;
    bern[1] = p - mod_inverse(2, p);
    for (u64 m = 2; m <= n; ++m) {
        if (m % 2 == 1) continue;
        u64 acc = 0;
        for (u64 j = 0; j < m; ++j) acc = (acc + binom(m + 1, j) * bern[j]) % p;
        bern[m] = (p - acc) % p * mod_inverse(m + 1, p) % p;
    }
    return {bern[n], p};
}

VerificationReport verify_reduction(const Tree& t, const IndexMap& k,
                                    const std::vector<u64>& primes) {
    SignedReduction red = reduce(t, k);
    VerificationReport report;
    for (u64 p : primes) {
        u64 lhs = eval_tree_mod_p(t, k, p).residue;
        u64 rhs = eval_word_mod_p(red.comb, p).residue;
        if (red.sign < 0) rhs = (p - rhs) % p;
        report.add(p, lhs, rhs);
    }
    return report;
}

VerificationReport verify_shuffle_relation(const ZTuple& t, const ZTuple& u,
                                           const std::vector<u64>& primes) {
    if (t.empty() || u.empty()) throw Error("EmptyIndex", "shuffle relation needs nonempty tuples");

    LinComb sh = shuffle(z_word(t), z_word(u));
    ZTuple concat = t;
    concat.insert(concat.end(), u.rbegin(), u.rend());
    int weight_u = 0;
    for (int k : u) weight_u += k;

    VerificationReport report;
    for (u64 p : primes) {
        u64 lhs = eval_word_mod_p(sh, p).residue;
        u64 rhs = eval_fmzv_mod_p(concat, p).residue;
        if (weight_u % 2 == 1) rhs = (p - rhs) % p;
        report.add(p, lhs, rhs);
    }
    return report;
}

} // namespace fmzv
