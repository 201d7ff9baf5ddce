#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace qb {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense polynomial over arbitrary-precision integers; coeffs()[i] is the
/// coefficient of q^i. Trailing zeros are trimmed on construction, so the
/// representation is canonical and equality is structural. The zero
/// polynomial has an empty coefficient vector and degree() == -1.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Int> coeffs);

    static DensePoly one();
    static DensePoly monomial(std::int64_t exponent, Int scale = Int(1));
    static DensePoly one_minus_q(std::int64_t exponent);  // 1 - q^e, e >= 1

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Int& coeff(std::int64_t i) const;  // zero outside [0, degree]
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Multiply in place by the binomial 1 - q^e (e >= 1). This is the
    /// schoolbook product restricted to a two-term factor, so results are
    /// bit-identical to poly_mul with the same factor.
    void mul_one_minus_q(std::int64_t exponent);

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Laurent polynomial: coeffs()[i] is the coefficient of q^(offset + i).
/// Canonical form keeps the first and last stored coefficients nonzero;
/// the zero polynomial is stored as offset 0 with no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t offset, std::vector<Int> coeffs);
    explicit LaurentPoly(const DensePoly& p);

    static LaurentPoly one();

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t offset() const { return offset_; }  // lowest exponent
    std::int64_t high_exponent() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Int& coeff_at(std::int64_t exponent) const;  // zero outside support
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Multiply in place by 1 - q^e for any e != 0 (e < 0 lowers the offset).
    void mul_one_minus_q(std::int64_t exponent);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void trim();
    std::int64_t offset_ = 0;
    std::vector<Int> coeffs_;
};

/// Element of Z[q]/(q^d - 1): exactly d coefficients, exponents reduced mod d.
class CyclicPoly {
public:
    explicit CyclicPoly(std::int64_t modulus);  // zero element
    CyclicPoly(std::int64_t modulus, std::vector<Int> coeffs);

    static CyclicPoly one(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    const Int& coeff(std::int64_t residue) const;  // residue reduced mod modulus
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Multiply in place by 1 - q^e with the exponent reduced mod modulus.
    /// Walks the index cycles of the shift so no scratch copy is needed.
    void fold_one_minus_q(std::int64_t exponent);

    friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;

private:
    std::int64_t modulus_ = 1;
    std::vector<Int> coeffs_;
};

DensePoly poly_add(const DensePoly& a, const DensePoly& b);
DensePoly poly_mul(const DensePoly& a, const DensePoly& b);
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b);

/// Fold residue classes: coefficient b of the result is the sum of input
/// coefficients over all exponents congruent to b mod d. Negative Laurent
/// exponents land on their nonnegative residues.
CyclicPoly reduce_cyclic(const DensePoly& a, std::int64_t d);
CyclicPoly reduce_cyclic(const LaurentPoly& a, std::int64_t d);

Int eval_at_one(const DensePoly& a);

std::ostream& operator<<(std::ostream&, const DensePoly&);
std::ostream& operator<<(std::ostream&, const LaurentPoly&);
std::ostream& operator<<(std::ostream&, const CyclicPoly&);

}  // namespace qb
