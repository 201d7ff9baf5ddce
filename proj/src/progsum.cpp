#include "qborwein/progsum.hpp"

#include <cmath>
#include <stdexcept>

namespace qb {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t d) {
    std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

ProgressionRecord make_record(const BorweinParams& params, std::int64_t d, std::int64_t b,
                              Int sum) {
    const std::int64_t v = main_weight(b, params.p());
    Int pow = params.p_pow_sn();
    Rat main(v * pow, d);
    main.canonicalize();
    // (d S - v p^{sn})^2 <= d^2 p^{sn}
    Int lhs = d * sum - v * pow;
    lhs *= lhs;
    const Int rhs = Int(d) * d * pow;
    return ProgressionRecord{params, d,       mod_reduce(b, d), std::move(sum),
                             main,   std::move(pow), lhs <= rhs};
}

}  // namespace

std::int64_t main_weight(std::int64_t b, std::int64_t p) {
    if (p < 2) throw std::invalid_argument("main_weight: p must be >= 2");
    return b % p == 0 ? p - 1 : -1;
}

CyclicPoly progression_fold(const BorweinParams& params, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("progression_fold: d must be >= 1");
    CyclicPoly acc = CyclicPoly::one(d);
    for (std::int64_t j = 1; j <= params.n(); ++j)
        for (std::int64_t k = params.p() - 1; k >= 1; --k)
            for (std::int64_t rep = 0; rep < params.s(); ++rep)
                acc.fold_one_minus_q(params.p() * j - k);
    return acc;
}

Int progression_sum(const BorweinParams& params, std::int64_t d, std::int64_t b) {
    return progression_fold(params, d).coeff(b);
}

ProgressionRecord progression_bound_check(const BorweinParams& params, std::int64_t b) {
    const std::int64_t d = params.group_order();
    return make_record(params, d, b, progression_sum(params, d, b));
}

std::vector<ProgressionRecord> progression_bound_sweep(const BorweinParams& params) {
    const std::int64_t d = params.group_order();
    const CyclicPoly fold = progression_fold(params, d);
    std::vector<ProgressionRecord> out;
    out.reserve(static_cast<std::size_t>(d));
    for (std::int64_t b = 0; b < d; ++b) out.push_back(make_record(params, d, b, fold.coeff(b)));
    return out;
}

ProgressionRecord goswami_pantangi_check(const BorweinParams& params, std::int64_t b) {
    const std::int64_t d = params.p() * params.n();
    return make_record(params, d, b, progression_sum(params, d, b));
}

std::vector<ProgressionRecord> goswami_pantangi_sweep(const BorweinParams& params) {
    const std::int64_t d = params.p() * params.n();
    const CyclicPoly fold = progression_fold(params, d);
    std::vector<ProgressionRecord> out;
    out.reserve(static_cast<std::size_t>(d));
    for (std::int64_t b = 0; b < d; ++b) out.push_back(make_record(params, d, b, fold.coeff(b)));
    return out;
}

Rat zaharescu_bound(std::int64_t p, std::int64_t q, std::int64_t s, std::int64_t n) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("zaharescu_bound: p must be an odd prime");
    if (s < 1 || n < 1) throw std::invalid_argument("zaharescu_bound: s, n must be >= 1");
    if (!is_prime(q) || q > n)
        throw std::invalid_argument("zaharescu_bound: q must be a prime <= n");
    Int num = Int(p - 1) * (q - 1);
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(s * (n / q) - 1));
    num *= pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2UL, static_cast<unsigned long>(s * (p - 1) * (n % q)));
    num *= pw;
    Rat r(num, q);
    r.canonicalize();
    return r;
}

Int li_deviation_bound(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("li_deviation_bound: n must be >= 0");
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2UL, static_cast<unsigned long>(n));
    return r;
}

double gp_deviation_bound(const BorweinParams& params) {
    return std::pow(static_cast<double>(params.p()),
                    0.5 * static_cast<double>(params.s() * params.n()));
}

std::int64_t sign_threshold(std::int64_t p, std::int64_t s, bool divisible) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw std::invalid_argument("sign_threshold: p must be an odd prime");
    if (s < 1) throw std::invalid_argument("sign_threshold: s must be >= 1");
    for (std::int64_t n = 1;; ++n) {
        Int lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(s * n));
        if (divisible) lhs *= Int(p - 1) * (p - 1);
        const Int rhs = Int(4) * n * n * p * p;
        if (lhs > rhs) return n;
    }
}

}  // namespace qb
