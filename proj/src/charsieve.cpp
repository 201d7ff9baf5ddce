#include "qborwein/charsieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "cball.hpp"

namespace qb {

namespace {

using detail::CBall;

std::int64_t mod_reduce(std::int64_t x, std::int64_t d) {
    std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t g) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % g);
}

void validate_policy(const PrecisionPolicy& prec) {
    if (prec.bits < 64) throw std::invalid_argument("PrecisionPolicy: bits must be >= 64");
    if (!(prec.residual_tol > 0.0) || prec.residual_tol > 0x1p-20)
        throw std::invalid_argument("PrecisionPolicy: residual_tol must be in (0, 2^-20]");
}

CertifiedComplex to_certified(const CBall& b) {
    const std::complex<double> m = b.mid();
    const double conv = std::ldexp(std::fabs(m.real()) + std::fabs(m.imag()), -51);
    return CertifiedComplex{m, b.rad() + conv};
}

CertifiedComplex certify_exact(const Rat& v) {
    const double d = mpq_get_d(v.get_mpq_t());
    return CertifiedComplex{{d, 0.0}, std::ldexp(std::fabs(d), -50) + 1e-300};
}

std::vector<CBall> unit_roots(std::int64_t g, mpfr_prec_t bits) {
    std::vector<CBall> roots;
    roots.reserve(static_cast<std::size_t>(g));
    for (std::int64_t j = 0; j < g; ++j) roots.push_back(CBall::root_of_unity(j, g, bits));
    return roots;
}

Int factorial(std::int64_t n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// characters and precision

Character::Character(std::int64_t g, std::int64_t t) : group_order(g), index(t) {
    if (g < 1) throw std::invalid_argument("Character: group order must be >= 1");
    if (t < 0 || t >= g) throw std::invalid_argument("Character: index must lie in [0, g)");
    order = g / std::gcd(t, g);
}

PrecisionPolicy default_precision(const BorweinParams& params) {
    const double magnitude_bits = static_cast<double>(params.s() * params.n()) *
                                  std::log2(static_cast<double>(params.p()));
    const long bits = static_cast<long>(std::ceil(magnitude_bits)) + 64;
    return PrecisionPolicy{std::max(128L, bits), 0x1p-20};
}

double certified_gap(const CertifiedComplex& a, const CertifiedComplex& b) {
    return std::abs(a.mid - b.mid) + a.radius + b.radius;
}

// ---------------------------------------------------------------------------
// cycle-index machinery

Rat cycle_index_value(const std::vector<Rat>& t) {
    const std::size_t m = t.size();
    std::vector<Rat> z(m + 1);
    z[0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
        Rat acc = 0;
        for (std::size_t i = 1; i <= k; ++i) acc += t[i - 1] * z[k - i];
        acc /= Rat(static_cast<long>(k));
        z[k] = acc;
    }
    return z[m];
}

Rat binom_series_coeff(std::int64_t ell, std::int64_t a, std::int64_t m) {
    if (ell < 1) throw std::invalid_argument("binom_series_coeff: ell must be >= 1");
    if (m < 0) throw std::invalid_argument("binom_series_coeff: m must be >= 0");
    if (m % ell != 0) return Rat(0);
    const std::int64_t j = m / ell;
    Rat c(-a, ell);
    c.canonicalize();
    Rat acc = 1;
    for (std::int64_t i = 0; i < j; ++i) acc *= c - i;
    acc /= Rat(factorial(j));
    if (j % 2 != 0) acc = -acc;
    return acc;
}

Int cycle_type_count(const CycleType& type) {
    const std::int64_t m = static_cast<std::int64_t>(type.counts.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < type.counts.size(); ++i) {
        if (type.counts[i] < 0) throw std::invalid_argument("cycle_type_count: negative count");
        total += static_cast<std::int64_t>(i + 1) * type.counts[i];
    }
    if (total != m) throw std::invalid_argument("cycle_type_count: counts do not describe S_m");
    Int denom = 1;
    for (std::size_t i = 0; i < type.counts.size(); ++i) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i + 1),
                      static_cast<unsigned long>(type.counts[i]));
        denom *= pw * factorial(type.counts[i]);
    }
    Int num = factorial(m);
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    return out;
}

std::vector<CycleType> cycle_types(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("cycle_types: m must be >= 0");
    std::vector<CycleType> out;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(CycleType{counts});
            return;
        }
        for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
            ++counts[static_cast<std::size_t>(part - 1)];
            self(self, remaining - part, part);
            --counts[static_cast<std::size_t>(part - 1)];
        }
    };
    rec(rec, m, m == 0 ? 1 : m);
    return out;
}

// ---------------------------------------------------------------------------
// the distinct-coordinate sieve over an explicit set

std::pair<Rat, Rat> li_wan_check(const SieveInstance& instance) {
    const std::int64_t m = instance.m;
    if (m < 0 || m > 7) throw std::invalid_argument("li_wan_check: m must lie in [0, 7]");
    if (instance.tuples.size() != instance.f.size())
        throw std::invalid_argument("li_wan_check: tuples and f must be parallel");
    for (const auto& x : instance.tuples) {
        if (static_cast<std::int64_t>(x.size()) != m)
            throw std::invalid_argument("li_wan_check: tuple arity mismatch");
        for (std::int64_t c : x)
            if (c < 0 || c >= instance.domain_size)
                throw std::invalid_argument("li_wan_check: coordinate out of domain");
    }

    Rat lhs = 0;
    for (std::size_t idx = 0; idx < instance.tuples.size(); ++idx) {
        const auto& x = instance.tuples[idx];
        bool distinct = true;
        for (std::size_t i = 0; i < x.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j)
                if (x[i] == x[j]) {
                    distinct = false;
                    break;
                }
        if (distinct) lhs += instance.f[idx];
    }

    // Signed permutation side, grouped by the set partition the cycles induce:
    // a partition with k blocks of sizes b_j stands for prod (b_j - 1)!
    // permutations of sign (-1)^{m-k}, and all of them fix the same tuples.
    Rat rhs = 0;
    std::vector<std::int64_t> label(static_cast<std::size_t>(m));
    auto process = [&]() {
        const std::int64_t k =
            m == 0 ? 0 : 1 + *std::max_element(label.begin(), label.end());
        std::vector<std::int64_t> block_size(static_cast<std::size_t>(k));
        for (std::int64_t lab : label) ++block_size[static_cast<std::size_t>(lab)];
        Int weight = 1;
        for (std::int64_t bs : block_size) weight *= factorial(bs - 1);
        if ((m - k) % 2 != 0) weight = -weight;
        Rat sub = 0;
        std::vector<std::int64_t> rep(static_cast<std::size_t>(k));
        for (std::size_t idx = 0; idx < instance.tuples.size(); ++idx) {
            const auto& x = instance.tuples[idx];
            std::fill(rep.begin(), rep.end(), -1);
            bool fixed = true;
            for (std::int64_t i = 0; i < m && fixed; ++i) {
                std::int64_t& r = rep[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
                if (r == -1)
                    r = x[static_cast<std::size_t>(i)];
                else if (r != x[static_cast<std::size_t>(i)])
                    fixed = false;
            }
            if (fixed) sub += instance.f[idx];
        }
        rhs += Rat(weight) * sub;
    };
    auto rec = [&](auto&& self, std::int64_t pos, std::int64_t next_label) -> void {
        if (pos == m) {
            process();
            return;
        }
        for (std::int64_t lab = 0; lab <= next_label; ++lab) {
            label[static_cast<std::size_t>(pos)] = lab;
            self(self, pos + 1, std::max(next_label, lab + 1));
        }
    };
    rec(rec, 0, 0);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// character sums over distinct tuples of D

CertifiedComplex sieve_char_sum_closed(const BorweinParams& params, const Character& chi,
                                       std::int64_t m, const PrecisionPolicy& prec) {
    validate_policy(prec);
    if (chi.group_order != params.group_order())
        throw std::invalid_argument("sieve_char_sum_closed: character group mismatch");
    if (m < 0) throw std::invalid_argument("sieve_char_sum_closed: m must be >= 0");
    const std::int64_t g = params.group_order();
    const std::int64_t o = chi.order;
    const std::int64_t size_d = params.set_size();
    if (o % params.p() != 0) {
        if (size_d % o != 0)
            throw std::logic_error("sieve_char_sum_closed: |D|/o(chi) not integral");
        Rat val = binom_series_coeff(o, -size_d, m);
        if (m % 2 != 0) val = -val;
        return certify_exact(val);
    }
    const std::int64_t ell = o / params.p();
    if (m % ell != 0) return CertifiedComplex{{0.0, 0.0}, 0.0};
    const std::uint64_t rep = static_cast<std::uint64_t>(g / o);
    const std::int64_t jmax = m / ell;
    for (long factor : {1L, 2L, 4L}) {
        const mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits * factor);
        std::vector<CBall> coeff;  // coeff[j] multiplies u^{j ell}
        coeff.reserve(static_cast<std::size_t>(jmax) + 1);
        coeff.push_back(CBall::exact(1, bits));
        for (std::int64_t j = 1; j <= jmax; ++j) coeff.push_back(CBall(bits));
        for (std::int64_t k = 1; k <= (params.p() - 1) / 2; ++k) {
            const CBall z = CBall::root_of_unity(mod_reduce(-chi.index * ell % g * k, g), g, bits);
            for (std::uint64_t r = 0; r < rep; ++r) {
                for (std::int64_t j = jmax; j >= 1; --j) {
                    CBall t = z.mul(coeff[static_cast<std::size_t>(j - 1)]);
                    t.mul_si(-1);
                    coeff[static_cast<std::size_t>(j)].add(t);
                }
            }
        }
        CBall result = coeff[static_cast<std::size_t>(jmax)];
        if (m % 2 != 0) result.mul_si(-1);
        if (result.rad() <= prec.residual_tol) return to_certified(result);
    }
    throw std::runtime_error("sieve_char_sum_closed: certification failed at max precision");
}

CertifiedComplex sieve_char_sum_brute(const BorweinParams& params, const Character& chi,
                                      std::int64_t m, const PrecisionPolicy& prec) {
    validate_policy(prec);
    if (chi.group_order != params.group_order())
        throw std::invalid_argument("sieve_char_sum_brute: character group mismatch");
    if (m < 0) throw std::invalid_argument("sieve_char_sum_brute: m must be >= 0");
    const std::int64_t size_d = params.set_size();
    if (size_d > 12 || m > 4)
        throw std::invalid_argument("sieve_char_sum_brute: guards are |D| <= 12 and m <= 4");
    const std::int64_t g = params.group_order();
    const ExponentSet set = exponent_set(params);

    // class counts of t * (x_1 + ... + x_m) mod g over distinct tuples
    std::vector<long> counts(static_cast<std::size_t>(g));
    auto rec = [&](auto&& self, std::int64_t depth, std::uint32_t used, std::int64_t sum) -> void {
        if (depth == m) {
            const std::int64_t cls = mulmod(chi.index, mod_reduce(sum, g), g);
            ++counts[static_cast<std::size_t>(cls)];
            return;
        }
        for (std::size_t i = 0; i < set.elements.size(); ++i) {
            if (used & (1u << i)) continue;
            self(self, depth + 1, used | (1u << i), sum + set.elements[i]);
        }
    };
    rec(rec, 0, 0u, 0);

    for (long factor : {1L, 2L, 4L}) {
        const mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits * factor);
        CBall acc(bits);
        for (std::int64_t e = 0; e < g; ++e) {
            if (counts[static_cast<std::size_t>(e)] == 0) continue;
            CBall root = CBall::root_of_unity(e, g, bits);
            root.mul_si(counts[static_cast<std::size_t>(e)]);
            acc.add(root);
        }
        Int mf = factorial(m);
        acc.div_ui(mf.get_ui());
        if (acc.rad() <= prec.residual_tol) return to_certified(acc);
    }
    throw std::runtime_error("sieve_char_sum_brute: certification failed at max precision");
}

CertifiedComplex order_p_factor(const BorweinParams& params, const Character& chi,
                                const PrecisionPolicy& prec) {
    validate_policy(prec);
    if (chi.group_order != params.group_order())
        throw std::invalid_argument("order_p_factor: character group mismatch");
    if (chi.order % params.p() != 0)
        throw std::invalid_argument("order_p_factor: requires p | o(chi)");
    const std::int64_t g = params.group_order();
    const std::int64_t ell = chi.order / params.p();
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits);
    CBall prod = CBall::exact(1, bits);
    for (std::int64_t k = 1; k <= (params.p() - 1) / 2; ++k) {
        const std::int64_t e = mod_reduce(-mulmod(mod_reduce(chi.index * ell % g, g), k, g), g);
        prod = prod.mul(CBall::root_of_unity(e, g, bits).one_minus());
    }
    return to_certified(prod);
}

// ---------------------------------------------------------------------------
// subset-sum counts over D

Int subset_tuple_count_brute(const BorweinParams& params,
                             const std::vector<std::int64_t>& sizes, std::int64_t b) {
    const std::int64_t size_d = params.set_size();
    if (params.s() * size_d > 22)
        throw std::invalid_argument("subset_tuple_count_brute: guard is s|D| <= 22");
    if (static_cast<std::int64_t>(sizes.size()) != params.s())
        throw std::invalid_argument("subset_tuple_count_brute: need one cardinality per copy");
    for (std::int64_t v : sizes) {
        if (v < 0) throw std::invalid_argument("subset_tuple_count_brute: negative cardinality");
        if (v > size_d) return Int(0);
    }
    const std::int64_t g = params.group_order();
    const ExponentSet set = exponent_set(params);
    std::vector<std::int64_t> res(set.elements.size());
    for (std::size_t i = 0; i < set.elements.size(); ++i)
        res[i] = mod_reduce(set.elements[i], g);

    // per-copy tallies: count[c][r] = #subsets of D with |V| = c, sum = r (mod g)
    std::vector<std::vector<long long>> count(
        static_cast<std::size_t>(size_d) + 1,
        std::vector<long long>(static_cast<std::size_t>(g)));
    const std::uint32_t full = static_cast<std::uint32_t>(1u << size_d);
    std::vector<std::int64_t> mask_sum(full);
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int bit = std::countr_zero(mask);
        mask_sum[mask] = mask_sum[mask & (mask - 1)] + res[static_cast<std::size_t>(bit)];
    }
    for (std::uint32_t mask = 0; mask < full; ++mask)
        ++count[static_cast<std::size_t>(std::popcount(mask))]
               [static_cast<std::size_t>(mask_sum[mask] % g)];

    std::vector<long long> cur = count[static_cast<std::size_t>(sizes[0])];
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        const auto& nxt = count[static_cast<std::size_t>(sizes[i])];
        std::vector<long long> out(static_cast<std::size_t>(g));
        for (std::int64_t r = 0; r < g; ++r) {
            if (cur[static_cast<std::size_t>(r)] == 0) continue;
            for (std::int64_t u = 0; u < g; ++u) {
                if (nxt[static_cast<std::size_t>(u)] == 0) continue;
                out[static_cast<std::size_t>(mod_reduce(r + u, g))] +=
                    cur[static_cast<std::size_t>(r)] * nxt[static_cast<std::size_t>(u)];
            }
        }
        cur = std::move(out);
    }
    return Int(static_cast<long>(cur[static_cast<std::size_t>(mod_reduce(b, g))]));
}

std::vector<Int> signed_subset_count_brute_all(const BorweinParams& params) {
    const std::int64_t slots = params.s() * params.set_size();
    if (slots > 22)
        throw std::invalid_argument("signed_subset_count_brute: guard is s|D| <= 22");
    const std::int64_t g = params.group_order();
    const ExponentSet set = exponent_set(params);
    std::vector<std::int64_t> slot_res;
    slot_res.reserve(static_cast<std::size_t>(slots));
    for (std::int64_t x : set.elements)
        for (std::int64_t rep = 0; rep < params.s(); ++rep) slot_res.push_back(mod_reduce(x, g));

    // Gray-code walk over all inclusion patterns
    std::vector<long long> totals(static_cast<std::size_t>(g));
    totals[0] = 1;  // empty pattern
    std::int64_t sum = 0;
    int parity = 1;
    std::uint32_t members = 0;
    const std::uint64_t end = 1ull << slots;
    for (std::uint64_t i = 1; i < end; ++i) {
        const int bit = std::countr_zero(i);
        const std::uint32_t flag = 1u << bit;
        if (members & flag)
            sum -= slot_res[static_cast<std::size_t>(bit)];
        else
            sum += slot_res[static_cast<std::size_t>(bit)];
        members ^= flag;
        parity = -parity;
        if (sum >= g) sum -= g;
        if (sum < 0) sum += g;
        totals[static_cast<std::size_t>(sum)] += parity;
    }
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(g));
    for (long long v : totals) out.push_back(Int(static_cast<long>(v)));
    return out;
}

Int signed_subset_count_brute(const BorweinParams& params, std::int64_t b) {
    const std::vector<Int> all = signed_subset_count_brute_all(params);
    return all[static_cast<std::size_t>(mod_reduce(b, params.group_order()))];
}

CyclicPoly signed_subset_fold(const BorweinParams& params) {
    const std::int64_t g = params.group_order();
    CyclicPoly acc = CyclicPoly::one(g);
    for (std::int64_t x : exponent_set(params).elements)
        for (std::int64_t rep = 0; rep < params.s(); ++rep) acc.fold_one_minus_q(x);
    return acc;
}

Int signed_subset_count(const BorweinParams& params, std::int64_t b) {
    return signed_subset_fold(params).coeff(b);
}

namespace {

std::vector<Int> char_route_eval(const BorweinParams& params, const PrecisionPolicy& prec,
                                 std::optional<std::int64_t> single_b) {
    validate_policy(prec);
    const std::int64_t g = params.group_order();
    const std::int64_t p = params.p();
    std::vector<std::int64_t> indices;  // characters with p | o(chi), ascending index
    for (std::int64_t t = 0; t < g; ++t)
        if ((g / std::gcd(t, g)) % p == 0) indices.push_back(t);

    const std::vector<std::int64_t> targets = single_b
        ? std::vector<std::int64_t>{mod_reduce(*single_b, g)}
        : [&] {
              std::vector<std::int64_t> all(static_cast<std::size_t>(g));
              std::iota(all.begin(), all.end(), 0);
              return all;
          }();

    for (long factor : {1L, 2L, 4L}) {
        const mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits * factor);
        const std::vector<CBall> roots = unit_roots(g, bits);
        std::vector<CBall> weights;  // per character: prod_k (1 - conj(chi)^{o/p}(k))^{s g / o}
        weights.reserve(indices.size());
        for (std::int64_t t : indices) {
            const std::int64_t o = g / std::gcd(t, g);
            const std::int64_t ell = o / p;
            CBall prod = CBall::exact(1, bits);
            for (std::int64_t k = 1; k <= (p - 1) / 2; ++k) {
                const std::int64_t e = mod_reduce(-mulmod(mod_reduce(t * ell % g, g), k, g), g);
                prod = prod.mul(roots[static_cast<std::size_t>(e)].one_minus());
            }
            weights.push_back(prod.pow_ui(static_cast<std::uint64_t>(params.s() * (g / o))));
        }
        std::vector<Int> out;
        out.reserve(targets.size());
        bool certified = true;
        for (std::int64_t b : targets) {
            CBall acc(bits);
            for (std::size_t i = 0; i < indices.size(); ++i) {
                const std::int64_t e = mod_reduce(-mulmod(indices[i], b, g), g);
                acc.add(roots[static_cast<std::size_t>(e)].mul(weights[i]));
            }
            acc.div_ui(static_cast<unsigned long>(g));
            Int value;
            double residual = 0.0;
            acc.round_to_int(value, residual);
            if (!(residual < prec.residual_tol)) {
                certified = false;
                break;
            }
            out.push_back(std::move(value));
        }
        if (certified) return out;
    }
    throw std::runtime_error("character formula: residual not certified at max precision");
}

}  // namespace

Int signed_subset_count_char(const BorweinParams& params, std::int64_t b,
                             const PrecisionPolicy& prec) {
    return char_route_eval(params, prec, b)[0];
}

std::vector<Int> signed_subset_count_char_all(const BorweinParams& params,
                                              const PrecisionPolicy& prec) {
    return char_route_eval(params, prec, std::nullopt);
}

MainTermRecord signed_count_main_term(const BorweinParams& params, std::int64_t b) {
    const std::int64_t p = params.p();
    const std::int64_t g = params.group_order();
    const int sign = shift_data(params).sign;
    const bool condition =
        mod_reduce(b + params.s() * params.n() * ((p * p - 1) / 8), p) == 0;
    const Int pow = params.p_pow_sn();
    const Int numerator = Int(sign) * (condition ? p - 1 : -1) * pow;
    Rat main(numerator, g);
    main.canonicalize();
    const Int count = signed_subset_count(params, b);
    Int lhs = g * count - numerator;
    lhs *= lhs;
    const Int rhs = Int(g) * g * pow;
    return MainTermRecord{main, condition, lhs <= rhs};
}

std::pair<CertifiedComplex, CertifiedComplex> root_unity_product_check(
    std::int64_t p, std::int64_t r, const PrecisionPolicy& prec) {
    validate_policy(prec);
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("root_unity_product_check: p must be an odd prime");
    if (r < 1 || r > p - 1)
        throw std::invalid_argument("root_unity_product_check: r must lie in [1, p-1]");
    const mpfr_prec_t bits = static_cast<mpfr_prec_t>(prec.bits);
    CBall lhs = CBall::exact(1, bits);
    for (std::int64_t k = 1; k <= (p - 1) / 2; ++k)
        lhs = lhs.mul(CBall::root_of_unity(mulmod(k, r, p), p, bits).one_minus().pow_ui(2));
    const std::int64_t den = 8 * p;
    const __int128 raw =
        (static_cast<__int128>(p) * p - 1) * r + static_cast<__int128>(2) * p * (p - 1);
    const std::int64_t num = static_cast<std::int64_t>(raw % den);
    CBall rhs = CBall::root_of_unity(num, den, bits);
    rhs.mul_si(static_cast<long>(p));
    return {to_certified(lhs), to_certified(rhs)};
}

}  // namespace qb
