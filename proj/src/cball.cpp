#include "cball.hpp"

#include <stdexcept>
#include <utility>

namespace qb::detail {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// scratch holding |re| + |im| of a midpoint, rounded up
void mag1(mpfr_t out, const mpfr_t re, const mpfr_t im) {
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mpfr_abs(out, re, MPFR_RNDU);
    mpfr_abs(t, im, MPFR_RNDU);
    mpfr_add(out, out, t, MPFR_RNDU);
    mpfr_clear(t);
}

}  // namespace

void CBall::init() {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
    mpfr_set_zero(rad_, 1);
}

CBall::CBall(mpfr_prec_t prec) : prec_(prec) {
    if (prec < 64) throw std::invalid_argument("CBall: precision must be >= 64 bits");
    init();
}

CBall::CBall(const CBall& o) : prec_(o.prec_) {
    init();
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

CBall::CBall(CBall&& o) noexcept : prec_(o.prec_) {
    re_[0] = o.re_[0];
    im_[0] = o.im_[0];
    rad_[0] = o.rad_[0];
    mpfr_init2(o.re_, o.prec_);
    mpfr_init2(o.im_, o.prec_);
    mpfr_init2(o.rad_, kRadPrec);
}

CBall& CBall::operator=(const CBall& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(re_, o.prec_);
        mpfr_set_prec(im_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    return *this;
}

CBall& CBall::operator=(CBall&& o) noexcept {
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
    mpfr_swap(rad_, o.rad_);
    std::swap(prec_, o.prec_);
    return *this;
}

CBall::~CBall() {
    mpfr_clear(re_);
    mpfr_clear(im_);
    mpfr_clear(rad_);
}

void CBall::bump_rounding() {
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mag1(t, re_, im_);
    mpfr_mul_2si(t, t, 1 - static_cast<long>(prec_), MPFR_RNDU);
    mpfr_add(rad_, rad_, t, MPFR_RNDU);
    mpfr_clear(t);
}

CBall CBall::exact(long v, mpfr_prec_t prec) {
    CBall b(prec);
    mpfr_set_si(b.re_, v, MPFR_RNDN);
    return b;
}

CBall CBall::root_of_unity(std::int64_t num, std::int64_t den, mpfr_prec_t prec) {
    if (den < 1) throw std::invalid_argument("root_of_unity: denominator must be >= 1");
    std::int64_t r = num % den;
    if (r < 0) r += den;
    CBall b(prec);
    mpfr_t theta;
    mpfr_init2(theta, prec);
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_2si(theta, theta, 1, MPFR_RNDN);  // exact
    mpfr_mul_si(theta, theta, static_cast<long>(r), MPFR_RNDN);
    mpfr_div_si(theta, theta, static_cast<long>(den), MPFR_RNDN);
    mpfr_sin_cos(b.im_, b.re_, theta, MPFR_RNDN);
    mpfr_clear(theta);
    // |theta| < 2 pi; three roundings on the argument plus the final sin/cos
    // rounding stay below 2^{7-prec} in absolute terms
    mpfr_set_ui_2exp(b.rad_, 1, 7 - static_cast<mpfr_exp_t>(prec), MPFR_RNDU);
    return b;
}

void CBall::add(const CBall& o) {
    mpfr_add(re_, re_, o.re_, MPFR_RNDN);
    mpfr_add(im_, im_, o.im_, MPFR_RNDN);
    mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
    bump_rounding();
}

CBall CBall::mul(const CBall& o) const {
    CBall out(prec_);
    // midpoint: correctly rounded fused forms
    mpfr_fmms(out.re_, re_, o.re_, im_, o.im_, MPFR_RNDN);  // re*re' - im*im'
    mpfr_fmma(out.im_, re_, o.im_, im_, o.re_, MPFR_RNDN);  // re*im' + im*re'
    // radius: |a| rb + |b| ra + ra rb, all rounded up
    mpfr_t am, bm, t;
    mpfr_init2(am, kRadPrec);
    mpfr_init2(bm, kRadPrec);
    mpfr_init2(t, kRadPrec);
    mag1(am, re_, im_);
    mag1(bm, o.re_, o.im_);
    mpfr_mul(t, am, o.rad_, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, t, MPFR_RNDU);
    mpfr_mul(t, bm, rad_, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, t, MPFR_RNDU);
    mpfr_mul(t, rad_, o.rad_, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, t, MPFR_RNDU);
    mpfr_clear(am);
    mpfr_clear(bm);
    mpfr_clear(t);
    out.bump_rounding();
    return out;
}

CBall CBall::pow_ui(std::uint64_t e) const {
    CBall result = CBall::exact(1, prec_);
    CBall base(*this);
    while (e > 0) {
        if (e & 1) result = result.mul(base);
        e >>= 1;
        if (e > 0) base = base.mul(base);
    }
    return result;
}

CBall CBall::one_minus() const {
    CBall out(prec_);
    mpfr_ui_sub(out.re_, 1, re_, MPFR_RNDN);
    mpfr_neg(out.im_, im_, MPFR_RNDN);  // exact
    mpfr_set(out.rad_, rad_, MPFR_RNDU);
    out.bump_rounding();
    return out;
}

void CBall::mul_si(long v) {
    mpfr_mul_si(re_, re_, v, MPFR_RNDN);
    mpfr_mul_si(im_, im_, v, MPFR_RNDN);
    mpfr_mul_si(rad_, rad_, v < 0 ? -v : v, MPFR_RNDU);
    bump_rounding();
}

void CBall::div_ui(unsigned long v) {
    mpfr_div_ui(re_, re_, v, MPFR_RNDN);
    mpfr_div_ui(im_, im_, v, MPFR_RNDN);
    mpfr_div_ui(rad_, rad_, v, MPFR_RNDU);
    bump_rounding();
}

std::complex<double> CBall::mid() const {
    return {mpfr_get_d(re_, MPFR_RNDN), mpfr_get_d(im_, MPFR_RNDN)};
}

double CBall::rad() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double CBall::abs_upper() const {
    mpfr_t t;
    mpfr_init2(t, kRadPrec);
    mpfr_hypot(t, re_, im_, MPFR_RNDU);
    mpfr_add(t, t, rad_, MPFR_RNDU);
    const double r = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

double CBall::distance_upper(const CBall& o) const {
    mpfr_t dr, di;
    mpfr_init2(dr, kRadPrec);
    mpfr_init2(di, kRadPrec);
    mpfr_sub(dr, re_, o.re_, MPFR_RNDA);  // away from zero: upper bound on |diff|
    mpfr_sub(di, im_, o.im_, MPFR_RNDA);
    mpfr_hypot(dr, dr, di, MPFR_RNDU);
    mpfr_add(dr, dr, rad_, MPFR_RNDU);
    mpfr_add(dr, dr, o.rad_, MPFR_RNDU);
    const double r = mpfr_get_d(dr, MPFR_RNDU);
    mpfr_clear(dr);
    mpfr_clear(di);
    return r;
}

void CBall::round_to_int(mpz_class& out, double& residual) const {
    mpfr_t n, t, u;
    mpfr_init2(n, prec_);
    mpfr_init2(t, kRadPrec);
    mpfr_init2(u, kRadPrec);
    mpfr_rint(n, re_, MPFR_RNDN);
    mpfr_sub(t, re_, n, MPFR_RNDA);
    mpfr_abs(t, t, MPFR_RNDU);
    mpfr_abs(u, im_, MPFR_RNDU);
    mpfr_add(t, t, u, MPFR_RNDU);
    mpfr_add(t, t, rad_, MPFR_RNDU);
    residual = mpfr_get_d(t, MPFR_RNDU);
    mpfr_get_z(out.get_mpz_t(), n, MPFR_RNDN);
    mpfr_clear(n);
    mpfr_clear(t);
    mpfr_clear(u);
}

}  // namespace qb::detail
