#include "qborwein/polyarith.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qb {

namespace {

const Int kZero = 0;

std::int64_t mod_reduce(std::int64_t x, std::int64_t d) {
    std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// DensePoly

DensePoly::DensePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::one() { return DensePoly(std::vector<Int>{Int(1)}); }

DensePoly DensePoly::monomial(std::int64_t exponent, Int scale) {
    if (exponent < 0) throw std::invalid_argument("DensePoly::monomial: negative exponent");
    if (scale == 0) return DensePoly();
    std::vector<Int> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = std::move(scale);
    return DensePoly(std::move(c));
}

DensePoly DensePoly::one_minus_q(std::int64_t exponent) {
    if (exponent < 1) throw std::invalid_argument("DensePoly::one_minus_q: exponent must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(exponent) + 1);
    c.front() = 1;
    c.back() = -1;
    return DensePoly(std::move(c));
}

const Int& DensePoly::coeff(std::int64_t i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void DensePoly::mul_one_minus_q(std::int64_t exponent) {
    if (exponent < 1) throw std::invalid_argument("mul_one_minus_q: exponent must be >= 1");
    if (is_zero()) return;
    const std::int64_t old_len = static_cast<std::int64_t>(coeffs_.size());
    coeffs_.resize(static_cast<std::size_t>(old_len + exponent));
    // new[i] = old[i] - old[i-e]; descending keeps old values intact
    for (std::int64_t i = old_len + exponent - 1; i >= exponent; --i) {
        Int& lo = coeffs_[static_cast<std::size_t>(i - exponent)];
        Int& hi = coeffs_[static_cast<std::size_t>(i)];
        if (i < old_len) {
            hi -= lo;
        } else {
            mpz_neg(hi.get_mpz_t(), lo.get_mpz_t());
        }
    }
}

Int eval_at_one(const DensePoly& a) {
    Int total = 0;
    for (const Int& c : a.coeffs()) total += c;
    return total;
}

DensePoly poly_add(const DensePoly& a, const DensePoly& b) {
    const auto& A = a.coeffs();
    const auto& B = b.coeffs();
    std::vector<Int> r(std::max(A.size(), B.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < A.size()) r[i] += A[i];
        if (i < B.size()) r[i] += B[i];
    }
    return DensePoly(std::move(r));
}

DensePoly poly_mul(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    const auto& A = a.coeffs();
    const auto& B = b.coeffs();
    std::vector<Int> r(A.size() + B.size() - 1);
    for (std::size_t j = 0; j < B.size(); ++j) {
        if (B[j] == 0) continue;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
        }
    }
    return DensePoly(std::move(r));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::int64_t offset, std::vector<Int> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPoly::LaurentPoly(const DensePoly& p) : offset_(0), coeffs_(p.coeffs()) { trim(); }

LaurentPoly LaurentPoly::one() { return LaurentPoly(0, {Int(1)}); }

void LaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    if (lo > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
    coeffs_.resize(hi - lo);
    offset_ += static_cast<std::int64_t>(lo);
}

const Int& LaurentPoly::coeff_at(std::int64_t exponent) const {
    const std::int64_t i = exponent - offset_;
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

void LaurentPoly::mul_one_minus_q(std::int64_t exponent) {
    if (is_zero()) return;
    if (exponent == 0) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    const std::int64_t old_len = static_cast<std::int64_t>(coeffs_.size());
    if (exponent > 0) {
        coeffs_.resize(static_cast<std::size_t>(old_len + exponent));
        for (std::int64_t i = old_len + exponent - 1; i >= exponent; --i) {
            Int& lo = coeffs_[static_cast<std::size_t>(i - exponent)];
            Int& hi = coeffs_[static_cast<std::size_t>(i)];
            if (i < old_len) {
                hi -= lo;
            } else {
                mpz_neg(hi.get_mpz_t(), lo.get_mpz_t());
            }
        }
        return;
    }
    // 1 - q^{-m}: result offset drops by m; new[i] = old[i - m] - old[i]
    const std::int64_t m = -exponent;
    coeffs_.resize(static_cast<std::size_t>(old_len + m));
    for (std::int64_t i = old_len + m - 1; i >= 0; --i) {
        Int& out = coeffs_[static_cast<std::size_t>(i)];
        if (i >= m && i < old_len) {
            // out currently holds old[i]
            Int tmp = coeffs_[static_cast<std::size_t>(i - m)];
            tmp -= out;
            out = std::move(tmp);
        } else if (i >= m) {  // i >= old_len: old[i] = 0
            out = coeffs_[static_cast<std::size_t>(i - m)];
        } else {  // i < m: old[i - m] is out of range
            mpz_neg(out.get_mpz_t(), out.get_mpz_t());
        }
    }
    offset_ -= m;
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    const auto& A = a.coeffs();
    const auto& B = b.coeffs();
    std::vector<Int> r(A.size() + B.size() - 1);
    for (std::size_t j = 0; j < B.size(); ++j) {
        if (B[j] == 0) continue;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
        }
    }
    return LaurentPoly(a.offset() + b.offset(), std::move(r));
}

// ---------------------------------------------------------------------------
// CyclicPoly

CyclicPoly::CyclicPoly(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw std::invalid_argument("CyclicPoly: modulus must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(modulus));
}

CyclicPoly::CyclicPoly(std::int64_t modulus, std::vector<Int> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus < 1) throw std::invalid_argument("CyclicPoly: modulus must be >= 1");
    if (static_cast<std::int64_t>(coeffs_.size()) != modulus)
        throw std::invalid_argument("CyclicPoly: coefficient count must equal modulus");
}

CyclicPoly CyclicPoly::one(std::int64_t modulus) {
    CyclicPoly r(modulus);
    r.coeffs_[0] = 1;
    return r;
}

const Int& CyclicPoly::coeff(std::int64_t residue) const {
    return coeffs_[static_cast<std::size_t>(mod_reduce(residue, modulus_))];
}

void CyclicPoly::fold_one_minus_q(std::int64_t exponent) {
    const std::int64_t d = modulus_;
    const std::int64_t x = mod_reduce(exponent, d);
    if (x == 0) {
        for (Int& c : coeffs_) c = 0;
        return;
    }
    // new[t] = old[t] - old[t - x]; walk each cycle of t -> t + x backwards,
    // saving the one value the wraparound would clobber.
    const std::int64_t cycles = std::gcd(x, d);
    const std::int64_t len = d / cycles;
    for (std::int64_t start = 0; start < cycles; ++start) {
        std::int64_t t = mod_reduce(start + (len - 1) * x, d);
        Int last_orig = coeffs_[static_cast<std::size_t>(t)];
        for (std::int64_t k = len - 1; k >= 1; --k) {
            const std::int64_t prev = mod_reduce(t - x, d);
            coeffs_[static_cast<std::size_t>(t)] -= coeffs_[static_cast<std::size_t>(prev)];
            t = prev;
        }
        coeffs_[static_cast<std::size_t>(start)] -= last_orig;
    }
}

CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("cyclic_mul: modulus mismatch");
    const std::int64_t d = a.modulus();
    const auto& A = a.coeffs();
    const auto& B = b.coeffs();
    std::vector<Int> r(static_cast<std::size_t>(d));
    for (std::int64_t j = 0; j < d; ++j) {
        if (B[static_cast<std::size_t>(j)] == 0) continue;
        for (std::int64_t i = 0; i < d; ++i) {
            if (A[static_cast<std::size_t>(i)] == 0) continue;
            Int& out = r[static_cast<std::size_t>(mod_reduce(i + j, d))];
            mpz_addmul(out.get_mpz_t(), A[static_cast<std::size_t>(i)].get_mpz_t(),
                       B[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    return CyclicPoly(d, std::move(r));
}

CyclicPoly reduce_cyclic(const DensePoly& a, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("reduce_cyclic: modulus must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(d));
    const auto& A = a.coeffs();
    for (std::size_t i = 0; i < A.size(); ++i)
        c[static_cast<std::size_t>(mod_reduce(static_cast<std::int64_t>(i), d))] += A[i];
    return CyclicPoly(d, std::move(c));
}

CyclicPoly reduce_cyclic(const LaurentPoly& a, std::int64_t d) {
    if (d < 1) throw std::invalid_argument("reduce_cyclic: modulus must be >= 1");
    std::vector<Int> c(static_cast<std::size_t>(d));
    const auto& A = a.coeffs();
    for (std::size_t i = 0; i < A.size(); ++i) {
        const std::int64_t e = a.offset() + static_cast<std::int64_t>(i);
        c[static_cast<std::size_t>(mod_reduce(e, d))] += A[i];
    }
    return CyclicPoly(d, std::move(c));
}

// ---------------------------------------------------------------------------
// printing (tests and diagnostics)

namespace {

void print_terms(std::ostream& os, const std::vector<Int>& coeffs, std::int64_t offset) {
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const std::int64_t e = offset + static_cast<std::int64_t>(i);
        Int c = coeffs[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1 || e == 0) os << c;
        if (e != 0) {
            if (c != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    if (first) os << "0";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const DensePoly& p) {
    print_terms(os, p.coeffs(), 0);
    return os;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    print_terms(os, p.coeffs(), p.offset());
    return os;
}

std::ostream& operator<<(std::ostream& os, const CyclicPoly& p) {
    os << "(mod q^" << p.modulus() << "-1) ";
    print_terms(os, p.coeffs(), 0);
    return os;
}

}  // namespace qb
