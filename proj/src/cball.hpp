#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <cstdint>

namespace qb::detail {

/// Complex ball: midpoint components at `prec` bits, plus an upper bound on
/// the distance to the exact value. Midpoint rounding is to nearest; every
/// radius operation rounds up, so the enclosure is preserved through
/// arithmetic. Radius precision is a fixed 64 bits.
class CBall {
public:
    explicit CBall(mpfr_prec_t prec);
    CBall(const CBall& o);
    CBall(CBall&& o) noexcept;
    CBall& operator=(const CBall& o);
    CBall& operator=(CBall&& o) noexcept;
    ~CBall();

    mpfr_prec_t prec() const { return prec_; }

    static CBall exact(long v, mpfr_prec_t prec);
    /// e^{2 pi i num / den}
    static CBall root_of_unity(std::int64_t num, std::int64_t den, mpfr_prec_t prec);

    void add(const CBall& o);
    CBall mul(const CBall& o) const;
    CBall pow_ui(std::uint64_t e) const;
    CBall one_minus() const;  // 1 - *this
    void mul_si(long v);
    void div_ui(unsigned long v);

    std::complex<double> mid() const;
    double rad() const;
    double abs_upper() const;
    double distance_upper(const CBall& o) const;

    /// Nearest integer to the real part; residual is an upper bound on the
    /// distance from the exact value to that integer.
    void round_to_int(mpz_class& out, double& residual) const;

private:
    void init();
    void bump_rounding();  // rad += 2^{1-prec} (|re| + |im|)

    mpfr_prec_t prec_;
    mpfr_t re_, im_, rad_;
};

}  // namespace qb::detail
