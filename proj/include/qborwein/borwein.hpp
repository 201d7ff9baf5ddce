#pragma once

#include <optional>

#include "qborwein/polyarith.hpp"

namespace qb {

bool is_prime(std::int64_t m);  // trial division

/// Parameter triple (p, s, n): p an odd prime, s >= 1, n >= 1.
/// Construction validates the invariants and rejects sizes whose derived
/// quantities would not fit in 64-bit indices.
class BorweinParams {
public:
    BorweinParams(std::int64_t p, std::int64_t s, std::int64_t n);

    std::int64_t p() const { return p_; }
    std::int64_t s() const { return s_; }
    std::int64_t n() const { return n_; }

    std::int64_t degree() const;       // s n^2 p (p-1) / 2
    std::int64_t group_order() const;  // 2 p n
    std::int64_t set_size() const;     // |D| = n (p-1)
    Int p_pow_sn() const;              // p^{sn}

    friend bool operator==(const BorweinParams&, const BorweinParams&) = default;

private:
    std::int64_t p_, s_, n_;
};

/// The exponent set D = { p j - k : -(n-1) <= j <= n, 1 <= k <= (p-1)/2 },
/// listed in increasing order. Its n(p-1) elements are pairwise distinct.
struct ExponentSet {
    std::vector<std::int64_t> elements;
};
ExponentSet exponent_set(const BorweinParams& params);

/// Shift between the dense product and its Laurent form:
/// e = s n (p-1) (2pn + 1 - p) / 8 (always an exact integer) and
/// sign = (-1)^{s n (p-1) / 2}.
struct ShiftData {
    std::int64_t e;
    int sign;
};
ShiftData shift_data(const BorweinParams& params);

/// prod_{k=1}^{n} (1 - q^{step k}); degree = step n (n+1) / 2.
DensePoly q_pochhammer(std::int64_t n, std::int64_t step);

/// The Borwein-type product prod_{j=1}^{n} prod_{k=1}^{p-1} (1 - q^{pj-k})^s.
DensePoly borwein_poly(const BorweinParams& params);

/// The recentred form prod_{j=-(n-1)}^{n} prod_{k=1}^{(p-1)/2} (1 - q^{pj-k})^s.
/// Its coefficients b_i satisfy a_i = sign * b_{i-e} with (e, sign) from
/// shift_data, where a_i are the coefficients of borwein_poly.
LaurentPoly borwein_laurent(const BorweinParams& params);

/// Maintains the dense product and its Laurent form across n-levels so a
/// whole n-sweep costs one build of the largest product instead of one per n.
/// Both borwein_poly and borwein_laurent are single advances of this ladder.
class BorweinLadder {
public:
    BorweinLadder(std::int64_t p, std::int64_t s);  // starts at level 0, both products = 1

    void advance();  // multiply in the factors of level n+1
    std::int64_t level() const { return n_; }
    BorweinParams params() const;  // requires level >= 1

    const DensePoly& dense() const { return dense_; }
    const LaurentPoly& laurent() const { return laurent_; }

private:
    std::int64_t p_, s_, n_ = 0;
    DensePoly dense_;
    LaurentPoly laurent_;
};

/// Residue-class components with the Borwein sign convention: component t
/// collects the coefficients of exponents congruent to t mod p, negated for
/// t >= 1, so "all components nonnegative" is the conjectured sign pattern.
/// poly = sum_t (+-) q^t component_t(q^p) with + only at t = 0.
std::vector<DensePoly> decompose_mod_p(const DensePoly& poly, std::int64_t p);

struct SignReport {
    bool all_nonnegative;
    std::optional<std::int64_t> first_violation;  // exponent in the original polynomial
};
SignReport check_sign_pattern(const BorweinParams& params);

}  // namespace qb
