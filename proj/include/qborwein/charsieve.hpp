#pragma once

#include <complex>
#include <utility>

#include "qborwein/borwein.hpp"

namespace qb {

/// Character of Z/gZ picked by its index t: x -> exp(2 pi i t x / g).
/// The order is g / gcd(t, g).
struct Character {
    std::int64_t group_order;
    std::int64_t index;
    std::int64_t order;
    Character(std::int64_t g, std::int64_t t);
};

/// Working precision for complex evaluation. bits >= 64; residual_tol is the
/// largest accepted distance from the nearest integer (or certified radius)
/// when rounding, at most 2^-20.
struct PrecisionPolicy {
    long bits = 128;
    double residual_tol = 0x1p-20;
};
PrecisionPolicy default_precision(const BorweinParams& params);

/// Midpoint/radius pair ready for comparisons: |exact - mid| <= radius.
struct CertifiedComplex {
    std::complex<double> mid;
    double radius = 0.0;
};
/// Upper bound for |a - b| including both radii.
double certified_gap(const CertifiedComplex& a, const CertifiedComplex& b);

/// Z_m of the cycle-index generating function exp(sum_i t_i u^i / i),
/// evaluated by the recurrence m Z_m = sum_{i<=m} t_i Z_{m-i}. Exact.
Rat cycle_index_value(const std::vector<Rat>& t);

/// [u^m] (1 - u^ell)^{-a/ell} of the generalized binomial series. Exact;
/// zero when ell does not divide m.
Rat binom_series_coeff(std::int64_t ell, std::int64_t a, std::int64_t m);

/// Cycle type (c_1, ..., c_m) with sum i c_i = m.
struct CycleType {
    std::vector<std::int64_t> counts;
};
/// Number of permutations of this type: m! / prod_i i^{c_i} c_i!.
Int cycle_type_count(const CycleType& type);
/// All cycle types of S_m in a fixed deterministic order.
std::vector<CycleType> cycle_types(std::int64_t m);

/// Explicit sieve instance: X is a set of m-tuples over {0,...,domain_size-1}
/// and f assigns a rational to each tuple (parallel arrays).
struct SieveInstance {
    std::int64_t domain_size = 0;
    std::int64_t m = 0;
    std::vector<std::vector<std::int64_t>> tuples;
    std::vector<Rat> f;
};

/// Both sides of the distinct-coordinate sieve identity, computed
/// independently: first the direct sum of f over tuples with pairwise
/// distinct coordinates, then the signed sum over permutations grouped by
/// their cycle partitions (a permutation's fixed set depends only on how its
/// cycles partition the index set, and a partition into blocks of sizes b_j
/// accounts for prod (b_j - 1)! permutations). Requires m <= 7.
std::pair<Rat, Rat> li_wan_check(const SieveInstance& instance);

/// Character sum S_m(chi) over distinct-coordinate m-tuples of D, via the
/// closed forms: (-1)^m [u^m] (1-u^o)^{|D|/o} when p does not divide o(chi),
/// and the (p-1)/2-fold product of binomials otherwise.
CertifiedComplex sieve_char_sum_closed(const BorweinParams& params, const Character& chi,
                                       std::int64_t m, const PrecisionPolicy& prec);

/// Same sum by direct enumeration of distinct tuples; requires |D| <= 12 and
/// m <= 4.
CertifiedComplex sieve_char_sum_brute(const BorweinParams& params, const Character& chi,
                                      std::int64_t m, const PrecisionPolicy& prec);

/// prod_{k=1}^{(p-1)/2} (1 - conj(chi)^{o/p}(k)); requires p | o(chi).
/// Its modulus is sqrt(p).
CertifiedComplex order_p_factor(const BorweinParams& params, const Character& chi,
                                const PrecisionPolicy& prec);

/// Number of ordered s-tuples (V_1,...,V_s) of subsets of D with |V_i| equal
/// to sizes[i] and total element sum congruent to b mod 2pn. Enumerates the
/// 2^|D| subsets directly; requires s |D| <= 22.
Int subset_tuple_count_brute(const BorweinParams& params,
                             const std::vector<std::int64_t>& sizes, std::int64_t b);

/// Alternating sum N_D(b) = sum (-1)^{m_1+...+m_s} N_D(m_1,...,m_s,b).
/// Brute route: walks all 2^{s|D|} inclusion patterns (s |D| <= 22).
Int signed_subset_count_brute(const BorweinParams& params, std::int64_t b);
/// One walk, every residue.
std::vector<Int> signed_subset_count_brute_all(const BorweinParams& params);
/// Fold route: coefficient b of prod_{x in D} (1 - q^x)^s in the cyclic ring
/// of modulus 2pn; polynomial time, all residues at once.
CyclicPoly signed_subset_fold(const BorweinParams& params);
Int signed_subset_count(const BorweinParams& params, std::int64_t b);

/// Character-sum route for N_D(b): (1/|G|) sum over characters with
/// p | o(chi) of conj(chi)(b) prod_k (1 - conj(chi)^{o/p}(k))^{s|G|/o}.
/// Evaluated with certified precision and rounded to the exact integer;
/// escalates the working precision (x2, x4) before reporting failure.
Int signed_subset_count_char(const BorweinParams& params, std::int64_t b,
                             const PrecisionPolicy& prec);
std::vector<Int> signed_subset_count_char_all(const BorweinParams& params,
                                              const PrecisionPolicy& prec);

/// Main term of N_D(b) and the exact deviation verdict. The condition
/// b + sn(p^2-1)/8 = 0 (mod p) selects the large branch
/// sign (p-1) p^{sn} / (2pn); otherwise -sign p^{sn} / (2pn).
struct MainTermRecord {
    Rat main;
    bool condition;
    bool within_bound;  // |N_D(b) - main| <= p^{sn/2}, exact squared comparison
};
MainTermRecord signed_count_main_term(const BorweinParams& params, std::int64_t b);

/// Both sides of the root-of-unity product identity
/// prod_{k=1}^{(p-1)/2} (1 - e^{2 pi i k r / p})^2 = p e^{pi i ((p^2-1)r/(4p) + (p-1)/2)}
/// for 1 <= r <= p-1.
std::pair<CertifiedComplex, CertifiedComplex> root_unity_product_check(
    std::int64_t p, std::int64_t r, const PrecisionPolicy& prec);

}  // namespace qb
