#pragma once

#include "qborwein/borwein.hpp"

namespace qb {

/// Main-term weight: p - 1 when p | b, else -1.
std::int64_t main_weight(std::int64_t b, std::int64_t p);

/// Residue-class sums S_{d,b} of the Borwein product for every b at once,
/// obtained by folding each factor (1 - q^{pj-k})^s into the cyclic ring of
/// modulus d without materializing the dense product. O(s n p d) coefficient
/// operations.
CyclicPoly progression_fold(const BorweinParams& params, std::int64_t d);

/// S_{d,b} = sum of coefficients a_i over i = b (mod d); b is normalized to
/// its residue in [0, d).
Int progression_sum(const BorweinParams& params, std::int64_t d, std::int64_t b);

struct ProgressionRecord {
    BorweinParams params;
    std::int64_t d;
    std::int64_t b;          // normalized residue
    Int sum;                 // S_{d,b}
    Rat main_term;           // v(b) p^{sn} / d
    Int bound_sq;            // p^{sn}; the deviation bound is its square root
    bool within_bound;       // (d S - v(b) p^{sn})^2 <= d^2 p^{sn}, exact
};

/// Deviation check at modulus d = 2pn. The verdict is decided entirely in
/// integer arithmetic by comparing squares, so odd sn needs no square roots.
ProgressionRecord progression_bound_check(const BorweinParams& params, std::int64_t b);

/// progression_bound_check for every residue b in [0, 2pn), one fold total.
std::vector<ProgressionRecord> progression_bound_sweep(const BorweinParams& params);

/// Same deviation check at modulus d = pn (the earlier comparator).
ProgressionRecord goswami_pantangi_check(const BorweinParams& params, std::int64_t b);
std::vector<ProgressionRecord> goswami_pantangi_sweep(const BorweinParams& params);

/// Zaharescu's bound (p-1)(q-1) p^{s[n/q]-1} 2^{s q (p-1) {n/q}} / q at
/// modulus pq. The fractional-part exponent q{n/q} is the integer n mod q,
/// so the value is an exact rational. Display-only; never used as a verdict.
/// Requires q prime with q <= n.
Rat zaharescu_bound(std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t n);

/// 2^n, the comparator bound for p = 3, s = 1 at modulus 3n.
Int li_deviation_bound(std::int64_t n);

/// p^{sn/2} as a floating approximation, for display next to exact checks.
double gp_deviation_bound(const BorweinParams& params);

/// Least n from which the deviation bound forces the sign of S_{2pn,b}:
/// smallest n with (p-1) p^{sn/2-1} > 2n (p | b) resp. p^{sn/2-1} > 2n.
/// Decided by the squared integer comparison (p-1)^2 p^{sn} > 4 n^2 p^2.
std::int64_t sign_threshold(std::int64_t p, std::int64_t s, bool divisible);

}  // namespace qb
