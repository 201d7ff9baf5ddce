#include "qborwein/borwein.hpp"

#include <algorithm>
#include <stdexcept>

namespace qb {

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t f = 2; f * f <= m; ++f)
        if (m % f == 0) return false;
    return true;
}

BorweinParams::BorweinParams(std::int64_t p, std::int64_t s, std::int64_t n)
    : p_(p), s_(s), n_(n) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("BorweinParams: p must be an odd prime");
    if (s < 1) throw std::invalid_argument("BorweinParams: s must be >= 1");
    if (n < 1) throw std::invalid_argument("BorweinParams: n must be >= 1");
    // keep every derived index (degree, 2pn and its squares) in 64-bit range
    Int deg = Int(s) * n * n * p * (p - 1) / 2;
    if (deg > Int(1) << 56)
        throw std::invalid_argument("BorweinParams: degree too large for this build");
    if (Int(2) * p * n > Int(1) << 31)
        throw std::invalid_argument("BorweinParams: 2pn too large for this build");
}

std::int64_t BorweinParams::degree() const { return s_ * n_ * n_ * p_ * (p_ - 1) / 2; }
std::int64_t BorweinParams::group_order() const { return 2 * p_ * n_; }
std::int64_t BorweinParams::set_size() const { return n_ * (p_ - 1); }

Int BorweinParams::p_pow_sn() const {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_),
                  static_cast<unsigned long>(s_ * n_));
    return r;
}

ExponentSet exponent_set(const BorweinParams& params) {
    ExponentSet set;
    set.elements.reserve(static_cast<std::size_t>(params.set_size()));
    for (std::int64_t j = -(params.n() - 1); j <= params.n(); ++j)
        for (std::int64_t k = 1; k <= (params.p() - 1) / 2; ++k)
            set.elements.push_back(params.p() * j - k);
    std::sort(set.elements.begin(), set.elements.end());
    return set;
}

ShiftData shift_data(const BorweinParams& params) {
    const std::int64_t p = params.p(), s = params.s(), n = params.n();
    const std::int64_t num = s * n * (p - 1) * (2 * p * n + 1 - p);
    if (num % 8 != 0) throw std::logic_error("shift_data: shift is not an integer");
    const std::int64_t half_exp = s * n * (p - 1) / 2;
    return ShiftData{num / 8, half_exp % 2 == 0 ? 1 : -1};
}

DensePoly q_pochhammer(std::int64_t n, std::int64_t step) {
    if (n < 0) throw std::invalid_argument("q_pochhammer: n must be >= 0");
    if (step < 1) throw std::invalid_argument("q_pochhammer: step must be >= 1");
    DensePoly r = DensePoly::one();
    for (std::int64_t k = 1; k <= n; ++k) r.mul_one_minus_q(step * k);
    return r;
}

BorweinLadder::BorweinLadder(std::int64_t p, std::int64_t s)
    : p_(p), s_(s), dense_(DensePoly::one()), laurent_(LaurentPoly::one()) {
    BorweinParams(p, s, 1);  // validate p and s
}

void BorweinLadder::advance() {
    ++n_;
    // dense gains j = n; factors in increasing exponent order, s copies each
    for (std::int64_t k = p_ - 1; k >= 1; --k)
        for (std::int64_t rep = 0; rep < s_; ++rep) dense_.mul_one_minus_q(p_ * n_ - k);
    // Laurent gains j = n and j = -(n-1)
    for (std::int64_t k = 1; k <= (p_ - 1) / 2; ++k) {
        for (std::int64_t rep = 0; rep < s_; ++rep) {
            laurent_.mul_one_minus_q(p_ * n_ - k);
            laurent_.mul_one_minus_q(-p_ * (n_ - 1) - k);
        }
    }
}

BorweinParams BorweinLadder::params() const { return BorweinParams(p_, s_, n_); }

DensePoly borwein_poly(const BorweinParams& params) {
    BorweinLadder ladder(params.p(), params.s());
    for (std::int64_t i = 0; i < params.n(); ++i) ladder.advance();
    return ladder.dense();
}

LaurentPoly borwein_laurent(const BorweinParams& params) {
    BorweinLadder ladder(params.p(), params.s());
    for (std::int64_t i = 0; i < params.n(); ++i) ladder.advance();
    return ladder.laurent();
}

std::vector<DensePoly> decompose_mod_p(const DensePoly& poly, std::int64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("decompose_mod_p: p must be odd, >= 3");
    std::vector<std::vector<Int>> parts(static_cast<std::size_t>(p));
    const auto& c = poly.coeffs();
    for (auto& part : parts) part.resize(c.size() / static_cast<std::size_t>(p) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t t = i % static_cast<std::size_t>(p);
        const std::size_t j = i / static_cast<std::size_t>(p);
        if (t == 0)
            parts[t][j] = c[i];
        else
            mpz_neg(parts[t][j].get_mpz_t(), c[i].get_mpz_t());
    }
    std::vector<DensePoly> out;
    out.reserve(parts.size());
    for (auto& part : parts) out.emplace_back(std::move(part));
    return out;
}

SignReport check_sign_pattern(const BorweinParams& params) {
    const DensePoly poly = borwein_poly(params);
    const auto& c = poly.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const bool plus_class = i % static_cast<std::size_t>(params.p()) == 0;
        if ((plus_class && c[i] < 0) || (!plus_class && c[i] > 0))
            return SignReport{false, static_cast<std::int64_t>(i)};
    }
    return SignReport{true, std::nullopt};
}

}  // namespace qb
