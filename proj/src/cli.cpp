#include "qborwein/cli.hpp"

#include <mpfr.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>

#include "qborwein/borwein.hpp"
#include "qborwein/charsieve.hpp"
#include "qborwein/progsum.hpp"

namespace qb::cli {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t d) {
    std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

// ---------------------------------------------------------------------------
// table emission: csv (header row, RFC quoting) and json-lines (stable key
// order, big integers and rationals as strings)

enum class CellKind { number, bignum, text, boolean };

struct Cell {
    std::string key;
    std::string value;
    CellKind kind;
};

Cell cell_num(std::string key, std::int64_t v) {
    return Cell{std::move(key), std::to_string(v), CellKind::number};
}
Cell cell_big(std::string key, const Int& v) {
    return Cell{std::move(key), v.get_str(), CellKind::bignum};
}
Cell cell_rat(std::string key, const Rat& v) {
    return Cell{std::move(key), v.get_str(), CellKind::bignum};
}
Cell cell_text(std::string key, std::string v) {
    return Cell{std::move(key), std::move(v), CellKind::text};
}
Cell cell_bool(std::string key, bool v) {
    return Cell{std::move(key), v ? "true" : "false", CellKind::boolean};
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
        } else {
            out += c;
        }
    }
    return out;
}

class TableWriter {
public:
    TableWriter(std::ostream& os, Format fmt) : os_(os), fmt_(fmt) {}

    void header(const std::vector<std::string>& keys) {
        if (fmt_ != Format::csv) return;
        for (std::size_t i = 0; i < keys.size(); ++i)
            os_ << (i ? "," : "") << csv_escape(keys[i]);
        os_ << "\n";
    }

    void row(const std::vector<Cell>& cells) {
        if (fmt_ == Format::csv) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                os_ << (i ? "," : "") << csv_escape(cells[i].value);
            os_ << "\n";
            return;
        }
        os_ << "{";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            os_ << (i ? "," : "") << "\"" << json_escape(c.key) << "\":";
            switch (c.kind) {
                case CellKind::number:
                case CellKind::boolean:
                    os_ << c.value;
                    break;
                case CellKind::bignum:
                case CellKind::text:
                    os_ << "\"" << json_escape(c.value) << "\"";
                    break;
            }
        }
        os_ << "}\n";
    }

private:
    std::ostream& os_;
    Format fmt_;
};

// ---------------------------------------------------------------------------
// display helpers (never used in verdicts)

std::string mpfr_sig12(mpfr_t v) {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.12Rg", v);
    return buf;
}

std::string sqrt_display(const Int& v) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_z(t, v.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    std::string out = mpfr_sig12(t);
    mpfr_clear(t);
    return out;
}

std::string rat_display(const Rat& v) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_q(t, v.get_mpq_t(), MPFR_RNDN);
    std::string out = mpfr_sig12(t);
    mpfr_clear(t);
    return out;
}

std::string sci3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// ---------------------------------------------------------------------------
// config plumbing

std::vector<std::int64_t> sorted_unique(std::vector<std::int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

BorweinParams single_params(const RunConfig& cfg) {
    if (cfg.p_list.size() != 1 || cfg.s_list.size() != 1 || !cfg.n)
        throw std::invalid_argument("this command needs exactly one --p, one --s and --n");
    return BorweinParams(cfg.p_list[0], cfg.s_list[0], *cfg.n);
}

// [lo, hi] (possibly empty: hi < lo)
std::pair<std::int64_t, std::int64_t> n_range(const RunConfig& cfg) {
    if (cfg.n && cfg.n_max) return {*cfg.n, *cfg.n_max};
    if (cfg.n) return {*cfg.n, *cfg.n};
    if (cfg.n_max) return {1, *cfg.n_max};
    throw std::invalid_argument("grid commands need --n and/or --n-max");
}

PrecisionPolicy grid_policy(const RunConfig& cfg, const BorweinParams& params) {
    PrecisionPolicy prec = default_precision(params);
    if (cfg.precision_bits) prec.bits = *cfg.precision_bits;
    return prec;
}

}  // namespace

// ---------------------------------------------------------------------------
// commands

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BorweinParams params = single_params(cfg);
    if (params.degree() > cfg.degree_cap) {
        err << "refusing to expand: degree " << params.degree() << " exceeds cap "
            << cfg.degree_cap << " (raise --degree-cap to override)\n";
        return 2;
    }
    const DensePoly poly = borwein_poly(params);
    TableWriter w(out, cfg.format);
    w.header({"i", "a_i"});
    for (std::int64_t i = 0; i <= poly.degree(); ++i) {
        if (poly.coeff(i) == 0) continue;
        w.row({cell_num("i", i), cell_big("a_i", poly.coeff(i))});
    }
    return 0;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const BorweinParams params = single_params(cfg);
    if (params.degree() > cfg.degree_cap) {
        err << "refusing to decompose: degree " << params.degree() << " exceeds cap "
            << cfg.degree_cap << " (raise --degree-cap to override)\n";
        return 2;
    }
    const std::vector<DensePoly> comps = decompose_mod_p(borwein_poly(params), params.p());
    TableWriter w(out, cfg.format);
    w.header({"t", "j", "c"});
    for (std::size_t t = 0; t < comps.size(); ++t) {
        for (std::int64_t j = 0; j <= comps[t].degree(); ++j) {
            if (comps[t].coeff(j) == 0) continue;
            w.row({cell_num("t", static_cast<std::int64_t>(t)), cell_num("j", j),
                   cell_big("c", comps[t].coeff(j))});
        }
    }
    return 0;
}

int cmd_sum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const BorweinParams params = single_params(cfg);
    const std::int64_t d = cfg.d.value_or(params.group_order());
    if (d < 1) throw std::invalid_argument("--d must be >= 1");
    const CyclicPoly fold = progression_fold(params, d);
    TableWriter w(out, cfg.format);
    w.header({"p", "s", "n", "d", "b", "S"});
    std::vector<std::int64_t> residues;
    if (cfg.b)
        residues.push_back(mod_reduce(*cfg.b, d));
    else
        for (std::int64_t b = 0; b < d; ++b) residues.push_back(b);
    for (std::int64_t b : residues) {
        w.row({cell_num("p", params.p()), cell_num("s", params.s()), cell_num("n", params.n()),
               cell_num("d", d), cell_num("b", b), cell_big("S", fold.coeff(b))});
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.p_list.empty() || cfg.s_list.empty())
        throw std::invalid_argument("verify needs --p and --s");
    const auto [n_lo, n_hi] = n_range(cfg);
    const std::vector<std::int64_t> ps = sorted_unique(cfg.p_list);
    const std::vector<std::int64_t> ss = sorted_unique(cfg.s_list);

    // reject every invalid grid element before any computation
    std::vector<BorweinParams> grid;
    for (std::int64_t p : ps)
        for (std::int64_t s : ss)
            for (std::int64_t n = n_lo; n <= n_hi; ++n) grid.emplace_back(p, s, n);

    TableWriter w(out, cfg.format);
    w.header({"p", "s", "n", "b", "S", "main_num", "main_den", "within_bound", "char_match",
              "brute_match"});
    bool fail = false;
    for (const BorweinParams& params : grid) {
        const std::vector<ProgressionRecord> records = progression_bound_sweep(params);
        const ShiftData sd = shift_data(params);
        const std::int64_t g = params.group_order();
        const std::vector<Int> nd_char =
            signed_subset_count_char_all(params, grid_policy(cfg, params));
        const bool brute_avail = params.s() * params.set_size() <= 22;
        std::vector<Int> nd_brute;
        if (brute_avail) nd_brute = signed_subset_count_brute_all(params);

        for (std::int64_t b = 0; b < g; ++b) {
            const ProgressionRecord& rec = records[static_cast<std::size_t>(b)];
            const std::size_t shifted = static_cast<std::size_t>(mod_reduce(b - sd.e, g));
            const bool char_match = rec.sum == Int(sd.sign) * nd_char[shifted];
            std::string brute_match = "skip";
            if (brute_avail)
                brute_match = rec.sum == Int(sd.sign) * nd_brute[shifted] ? "ok" : "mismatch";
            w.row({cell_num("p", params.p()), cell_num("s", params.s()),
                   cell_num("n", params.n()), cell_num("b", b), cell_big("S", rec.sum),
                   cell_big("main_num", Int(rec.main_term.get_num())),
                   cell_big("main_den", Int(rec.main_term.get_den())),
                   cell_bool("within_bound", rec.within_bound),
                   cell_bool("char_match", char_match), cell_text("brute_match", brute_match)});
            if (!rec.within_bound || !char_match || brute_match == "mismatch") {
                fail = true;
                err << "disagreement: p=" << params.p() << " s=" << params.s()
                    << " n=" << params.n() << " b=" << b << " S=" << rec.sum.get_str()
                    << " within_bound=" << (rec.within_bound ? "true" : "false")
                    << " char_match=" << (char_match ? "true" : "false")
                    << " brute_match=" << brute_match << "\n";
            }
        }
    }
    return fail ? 1 : 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.p_list.empty() || cfg.s_list.empty())
        throw std::invalid_argument("sweep needs --p and --s");
    const auto [n_lo, n_hi] = n_range(cfg);
    if (cfg.q && !is_prime(*cfg.q))
        throw std::invalid_argument("--q must be prime");
    const std::vector<std::int64_t> ps = sorted_unique(cfg.p_list);
    const std::vector<std::int64_t> ss = sorted_unique(cfg.s_list);

    std::vector<BorweinParams> grid;
    for (std::int64_t p : ps)
        for (std::int64_t s : ss)
            for (std::int64_t n = n_lo; n <= n_hi; ++n) grid.emplace_back(p, s, n);

    TableWriter w(out, cfg.format);
    w.header({"p", "s", "n", "dev_2pn", "bound_2pn", "dev_pn", "bound_pn", "dev_3n", "bound_li",
              "dev_pq", "bound_zaharescu"});
    bool fail = false;
    for (const BorweinParams& params : grid) {
        const Int pow = params.p_pow_sn();
        const auto max_abs_deviation = [&](std::int64_t d) {
            const CyclicPoly fold = progression_fold(params, d);
            Int best = 0;
            for (std::int64_t b = 0; b < d; ++b) {
                Int t = abs(Int(d) * fold.coeff(b) - main_weight(b, params.p()) * pow);
                if (t > best) best = t;
            }
            return best;  // d * actual deviation
        };
        const auto as_rat = [](const Int& num, std::int64_t den) {
            Rat r(num, den);
            r.canonicalize();
            return r;
        };

        const std::int64_t d2 = params.group_order();
        const Int dev2 = max_abs_deviation(d2);
        if (dev2 * dev2 > Int(d2) * d2 * pow) {
            fail = true;
            err << "deviation bound violated at d=2pn for p=" << params.p()
                << " s=" << params.s() << " n=" << params.n() << "\n";
        }
        const std::int64_t d1 = params.p() * params.n();
        const Int dev1 = max_abs_deviation(d1);
        if (dev1 * dev1 > Int(d1) * d1 * pow) {
            fail = true;
            err << "deviation bound violated at d=pn for p=" << params.p() << " s=" << params.s()
                << " n=" << params.n() << "\n";
        }

        std::vector<Cell> cells{
            cell_num("p", params.p()),
            cell_num("s", params.s()),
            cell_num("n", params.n()),
            cell_rat("dev_2pn", as_rat(dev2, d2)),
            cell_text("bound_2pn", sqrt_display(pow)),
            cell_rat("dev_pn", as_rat(dev1, d1)),
            cell_text("bound_pn", sqrt_display(pow)),
        };

        if (params.p() == 3 && params.s() == 1) {
            const std::int64_t d3 = 3 * params.n();
            const Int dev3 = max_abs_deviation(d3);
            const Int li = li_deviation_bound(params.n());
            if (dev3 > Int(d3) * li) {
                fail = true;
                err << "comparator bound violated at d=3n for n=" << params.n() << "\n";
            }
            cells.push_back(cell_rat("dev_3n", as_rat(dev3, d3)));
            cells.push_back(cell_big("bound_li", li));
        } else {
            cells.push_back(cell_text("dev_3n", ""));
            cells.push_back(cell_text("bound_li", ""));
        }

        if (cfg.q && *cfg.q <= params.n() && *cfg.q != params.p()) {
            const std::int64_t dq = params.p() * *cfg.q;
            const Int devq = max_abs_deviation(dq);
            const Rat bound = zaharescu_bound(params.p(), *cfg.q, params.s(), params.n());
            if (as_rat(devq, dq) > bound) {
                fail = true;
                err << "Zaharescu bound violated at d=pq for p=" << params.p()
                    << " s=" << params.s() << " n=" << params.n() << " q=" << *cfg.q << "\n";
            }
            cells.push_back(cell_rat("dev_pq", as_rat(devq, dq)));
            cells.push_back(cell_text("bound_zaharescu", rat_display(bound)));
        } else {
            cells.push_back(cell_text("dev_pq", ""));
            cells.push_back(cell_text("bound_zaharescu", ""));
        }
        w.row(cells);
    }
    return fail ? 1 : 0;
}

namespace {

// deterministic bounded sampling; the tiny modulo bias is irrelevant here
std::uint64_t sample_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

struct SuiteResult {
    std::string name;
    bool pass;
    std::string detail;
};

SuiteResult li_wan_suite(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int trials = 128;
    int fails = 0;
    for (int trial = 0; trial < trials; ++trial) {
        SieveInstance inst;
        inst.domain_size = 1 + static_cast<std::int64_t>(sample_below(rng, 6));
        inst.m = 1 + static_cast<std::int64_t>(sample_below(rng, 5));
        const std::uint64_t want = sample_below(rng, 33);
        std::set<std::vector<std::int64_t>> seen;
        for (std::uint64_t i = 0; i < want; ++i) {
            std::vector<std::int64_t> tuple(static_cast<std::size_t>(inst.m));
            for (auto& c : tuple)
                c = static_cast<std::int64_t>(
                    sample_below(rng, static_cast<std::uint64_t>(inst.domain_size)));
            seen.insert(std::move(tuple));
        }
        for (const auto& tuple : seen) {
            inst.tuples.push_back(tuple);
            const std::int64_t num = static_cast<std::int64_t>(sample_below(rng, 19)) - 9;
            const std::int64_t den = 1 + static_cast<std::int64_t>(sample_below(rng, 9));
            Rat f(num, den);
            f.canonicalize();
            inst.f.push_back(f);
        }
        const auto [lhs, rhs] = li_wan_check(inst);
        if (lhs != rhs) ++fails;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/%d trials exactly equal", trials - fails, trials);
    return SuiteResult{"li-wan-sieve", fails == 0, detail};
}

SuiteResult cycle_index_closed_suite() {
    long cases = 0, fails = 0;
    for (std::int64_t ell = 1; ell <= 4; ++ell) {
        for (std::int64_t a = -8; a <= 8; ++a) {
            for (std::int64_t m = 0; m <= 12; ++m) {
                std::vector<Rat> t(static_cast<std::size_t>(m));
                for (std::int64_t i = 1; i <= m; ++i)
                    if (i % ell == 0) t[static_cast<std::size_t>(i - 1)] = a;
                ++cases;
                if (cycle_index_value(t) != binom_series_coeff(ell, a, m)) ++fails;
            }
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%ld/%ld cases exactly equal", cases - fails, cases);
    return SuiteResult{"cycle-index-closed-form", fails == 0, detail};
}

SuiteResult cycle_index_product_suite() {
    const std::vector<Rat> base{Rat(1), Rat(-1), Rat(1, 2)};
    long cases = 0, fails = 0;
    for (std::int64_t ell : {1, 2}) {
        for (std::int64_t a : {-4, -2, -1, 1, 2, 3}) {
            Rat e(-a, ell);
            e.canonicalize();
            for (std::int64_t m = 0; m <= 10; ++m) {
                std::vector<Rat> t(static_cast<std::size_t>(m));
                for (std::int64_t i = 1; i <= m; ++i) {
                    if (i % ell != 0) continue;
                    Rat sum = 0;
                    for (const Rat& z : base) {
                        Rat zp = 1;
                        for (std::int64_t k = 0; k < i; ++k) zp *= z;
                        sum += zp;
                    }
                    t[static_cast<std::size_t>(i - 1)] = sum * a;
                }
                // [u^m] prod_z (1 - z^ell u^ell)^{-a/ell} via exact series product
                Rat expect = 0;
                if (m % ell == 0) {
                    const std::int64_t jm = m / ell;
                    std::vector<Rat> acc(static_cast<std::size_t>(jm) + 1);
                    acc[0] = 1;
                    for (const Rat& z : base) {
                        Rat zl = 1;
                        for (std::int64_t k = 0; k < ell; ++k) zl *= z;
                        std::vector<Rat> series(static_cast<std::size_t>(jm) + 1);
                        Rat coeff = 1;  // C(e, j) (-z^ell)^j, built incrementally
                        series[0] = 1;
                        for (std::int64_t j = 1; j <= jm; ++j) {
                            coeff *= (e - (j - 1)) / Rat(j);
                            series[static_cast<std::size_t>(j)] =
                                coeff * ((j % 2 != 0) ? -1 : 1);
                            Rat zpow = 1;
                            for (std::int64_t k = 0; k < j; ++k) zpow *= zl;
                            series[static_cast<std::size_t>(j)] *= zpow;
                        }
                        std::vector<Rat> next(static_cast<std::size_t>(jm) + 1);
                        for (std::int64_t x = 0; x <= jm; ++x)
                            for (std::int64_t y = 0; x + y <= jm; ++y)
                                next[static_cast<std::size_t>(x + y)] +=
                                    acc[static_cast<std::size_t>(x)] *
                                    series[static_cast<std::size_t>(y)];
                        acc = std::move(next);
                    }
                    expect = acc[static_cast<std::size_t>(jm)];
                }
                ++cases;
                if (cycle_index_value(t) != expect) ++fails;
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%ld/%ld cases exactly equal (B = {1, -1, 1/2})",
                  cases - fails, cases);
    return SuiteResult{"cycle-index-product-form", fails == 0, detail};
}

SuiteResult char_sum_suite(const std::optional<long>& bits) {
    double max_gap = 0.0;
    long cases = 0;
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t n : {1, 2}) {
            const BorweinParams params(p, 1, n);
            PrecisionPolicy prec = default_precision(params);
            if (bits) prec.bits = *bits;
            for (std::int64_t t = 0; t < params.group_order(); ++t) {
                const Character chi(params.group_order(), t);
                for (std::int64_t m = 0; m <= 3; ++m) {
                    const CertifiedComplex closed = sieve_char_sum_closed(params, chi, m, prec);
                    const CertifiedComplex brute = sieve_char_sum_brute(params, chi, m, prec);
                    max_gap = std::max(max_gap, certified_gap(closed, brute));
                    ++cases;
                }
            }
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "max certified gap %s over %ld cases",
                  sci3(max_gap).c_str(), cases);
    return SuiteResult{"char-sum-closed-vs-brute", max_gap < 1e-10, detail};
}

SuiteResult root_product_suite(const std::optional<long>& bits) {
    double max_defect = 0.0;
    long cases = 0;
    PrecisionPolicy prec;
    if (bits) prec.bits = *bits;
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t r = 1; r <= p - 1; ++r) {
            const auto [lhs, rhs] = root_unity_product_check(p, r, prec);
            max_defect = std::max(max_defect, certified_gap(lhs, rhs));
            const double mod_defect =
                std::fabs(std::abs(lhs.mid) - static_cast<double>(p)) + lhs.radius;
            max_defect = std::max(max_defect, mod_defect);
            ++cases;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "max residual %s over %ld cases (p <= 23)",
                  sci3(max_defect).c_str(), cases);
    return SuiteResult{"root-product-identity", max_defect < 1e-10, detail};
}

}  // namespace

int cmd_sieve_test(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    TableWriter w(out, cfg.format);
    w.header({"check", "status", "detail"});
    const std::vector<SuiteResult> results{
        li_wan_suite(cfg.seed),
        cycle_index_closed_suite(),
        cycle_index_product_suite(),
        char_sum_suite(cfg.precision_bits),
        root_product_suite(cfg.precision_bits),
    };
    bool fail = false;
    for (const SuiteResult& r : results) {
        w.row({cell_text("check", r.name), cell_text("status", r.pass ? "pass" : "fail"),
               cell_text("detail", r.detail)});
        if (!r.pass) {
            fail = true;
            err << "suite failed: " << r.name << " (" << r.detail << ")\n";
        }
    }
    return fail ? 1 : 0;
}

// ---------------------------------------------------------------------------

namespace {

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("QBORWEIN_OUT_DIR"); dir != nullptr && *dir != '\0')
        return std::string(dir) + "/" + path;
    return path;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.out_path.empty()) {
            const std::string path = resolve_out_path(cfg.out_path);
            file.open(path);
            if (!file) {
                err << "cannot open output path: " << path << "\n";
                return 2;
            }
            os = &file;
        }
        if (cfg.command == "expand") return cmd_expand(cfg, *os, err);
        if (cfg.command == "decompose") return cmd_decompose(cfg, *os, err);
        if (cfg.command == "sum") return cmd_sum(cfg, *os, err);
        if (cfg.command == "verify") return cmd_verify(cfg, *os, err);
        if (cfg.command == "sieve-test") return cmd_sieve_test(cfg, *os, err);
        if (cfg.command == "sweep") return cmd_sweep(cfg, *os, err);
        err << "unknown command: " << cfg.command << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact coefficient-sum toolkit for Borwein-type polynomials"};
    RunConfig cfg;
    std::string format_name = "csv";

    app.add_option("--p", cfg.p_list, "prime p (repeat or comma-separate for grids)")
        ->delimiter(',');
    app.add_option("--s", cfg.s_list, "power s (repeat or comma-separate for grids)")
        ->delimiter(',');
    app.add_option("--n", cfg.n, "n (single value, or lower end of a grid range)");
    app.add_option("--n-max", cfg.n_max, "upper end of the n grid range");
    app.add_option("--d", cfg.d, "progression modulus (sum; default 2pn)");
    app.add_option("--b", cfg.b, "single residue class (sum; default: all)");
    app.add_option("--q", cfg.q, "comparator prime for the pq-modulus column (sweep)");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"csv", "json-lines"}));
    app.add_option("--out", cfg.out_path,
                   "output path (relative paths resolve under $QBORWEIN_OUT_DIR)");
    app.add_option("--bits", cfg.precision_bits, "working precision override for complex checks");
    app.add_option("--seed", cfg.seed, "seed for randomized sieve tests");
    app.add_option("--degree-cap", cfg.degree_cap, "refuse dense expansion above this degree");
    app.set_config("--config", "", "flat key=value configuration file (flags override)");

    for (const char* name : {"expand", "decompose", "sum", "verify", "sieve-test", "sweep"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->fallthrough();
    }
    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qborwein");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format_name == "csv" ? Format::csv : Format::jsonl;
    return run(cfg, out, err);
}

}  // namespace qb::cli
