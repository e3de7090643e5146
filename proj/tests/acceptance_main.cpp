// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion is exercised at its stated scale and
// tolerance (everything here is exact arithmetic, so tolerances are
// equalities and operation-count budgets).

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ktz/bigint.hpp"
#include "ktz/continuant.hpp"
#include "ktz/cost_model.hpp"
#include "ktz/determinant.hpp"
#include "ktz/fibonacci.hpp"
#include "ktz/inverse.hpp"
#include "ktz/oracle.hpp"
#include "ktz/poly.hpp"
#include "ktz/spectral.hpp"
#include "ktz/zmod.hpp"

namespace {

using namespace ktz;
using rng_t = std::mt19937_64;

struct checker {
    int failed = 0;
    long long total = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            if (notes.size() < 5) notes.push_back(what);
        }
    }
};

zmod_ring z60{60};

ktoeplitz_spec<zmod_ring::elem> golden_spec() {
    return {19,
            3,
            {1, 2, 3},
            {1, z60.from_int(-1), 1},
            {12, 7, 1}};
}

std::uint64_t rnd_mod(rng_t& g, std::uint64_t m) { return g() % m; }

template <typename R>
std::vector<typename R::elem> seed_zmod(rng_t& g, const R& ring, std::size_t k) {
    std::vector<typename R::elem> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(ring.from_int(static_cast<std::int64_t>(g() % 1024)));
    return v;
}

std::vector<bigint_ring::elem> seed_int(rng_t& g, const bigint_ring& z, std::size_t k, int span) {
    std::vector<bigint_ring::elem> v;
    std::uniform_int_distribution<int> d(-span, span);
    for (std::size_t i = 0; i < k; ++i) v.push_back(z.from_int(d(g)));
    return v;
}

// ---------------------------------------------------------------------------

void criterion1_golden(checker& c) {
    auto s = golden_spec();
    c.expect(det_d1(z60, s) == 49, "det d1");
    c.expect(det_d2(z60, s) == 49, "det d2");
    c.expect(det_d3(z60, s) == 49, "det d3");
    c.expect(det_d4(z60, s) == 49, "det d4");

    auto p = charpoly(z60, s);
    std::vector<zmod_ring::elem> coeff_desc{1,  23, 6,  0,  57, 39, 37, 29, 15, 53,
                                            52, 54, 22, 50, 3,  49, 41, 39, 19, 11};
    c.expect(p.size() == 20, "charpoly degree");
    for (std::size_t i = 0; i < 20 && i < p.size(); ++i)
        c.expect(p[19 - i] == coeff_desc[i], "charpoly coefficient " + std::to_string(19 - i));

    auto v = eigvec_v(z60, s, 1, 1);
    std::vector<zmod_ring::elem> vwant{1,  0, 12, 36, 48, 0,  24, 0, 48, 24,
                                       12, 0, 36, 0,  12, 36, 48, 0, 24};
    c.expect(v.has_value() && *v == vwant, "eigenvector at lambda 1");

    auto e = inv_entry(z60, s, 5, 11);
    c.expect(e.det == 49, "inverse entry determinant");
    c.expect(e.quotient.has_value() && *e.quotient == 34, "inverse entry 5,11");

    auto d = offdiag_products(z60, s);
    auto t = build_table(z60, s.a, d);
    c.expect(t.alpha[3] == 37, "alpha(3,3)");
    c.expect(t.pi == 35, "pi(3,3)");
    c.expect(t.d == 36, "transfer determinant");
    auto pair = fib_pair_dnc(z60, t.pi, t.d, 6);
    c.expect(pair.u == 35, "U(6)");
    c.expect(pair.u_prev == 1, "U(5)");

    // trailing 8x8 minor block: the adjugate route and the dense route agree
    // on 38 (= -22 mod 60), consistent with the entry value 34 above
    auto trail = det_d1_shifted_all(z60, s);
    c.expect(trail[11] == 38, "trailing block determinant at shift 11");
    ktoeplitz_spec<zmod_ring::elem> blk{8, 3, rotated_seed(s.a, 2), rotated_seed(s.b, 2),
                                        rotated_seed(s.c, 2)};
    c.expect(det_laplace(z60, dense_materialize(z60, blk)) == 38,
             "trailing block dense cross-check");
}

// ---------------------------------------------------------------------------

template <typename R>
void cross_algorithms(checker& c, const R& ring, rng_t& g,
                      const std::function<typename R::elem(rng_t&)>& entry, int rounds) {
    for (int round = 0; round < rounds; ++round) {
        std::size_t k = 1 + g() % 8;
        std::size_t n = k + 1 + g() % (60 - k);
        ktoeplitz_spec<typename R::elem> s{n, k, {}, {}, {}};
        for (std::size_t i = 0; i < k; ++i) {
            s.a.push_back(entry(g));
            s.b.push_back(entry(g));
            s.c.push_back(entry(g));
        }
        auto want = det_d1(ring, s);
        bool ok = ring.eq(det_d2(ring, s), want) && ring.eq(det_d3(ring, s), want) &&
                  ring.eq(det_d4(ring, s), want) && ring.eq(det_auto(ring, s), want);
        if (n <= 10) ok = ok && ring.eq(det_laplace(ring, dense_materialize(ring, s)), want);
        c.expect(ok, "cross-algorithm mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

void criterion2_cross_algorithms(checker& c) {
    rng_t g(20240601);
    bigint_ring z;
    std::uniform_int_distribution<int> small(-9, 9);
    cross_algorithms<bigint_ring>(c, z, g, [&](rng_t& gg) { return z.from_int(small(gg)); }, 1000);
    for (std::uint64_t m : {2ull, 12ull, 60ull, 101ull}) {
        zmod_ring r(m);
        cross_algorithms<zmod_ring>(c, r, g, [&, m](rng_t& gg) { return gg() % m; }, 1000);
    }
}

// ---------------------------------------------------------------------------

/// Summation-form evaluator maintained incrementally across ascending m: the
/// Pascal anti-diagonal entries C(m-1-i, i) are read off rows shared between
/// orders, so the whole sweep costs O(max_m^2) instead of O(max_m^3).
class running_closed_form {
public:
    running_closed_form(const zmod_ring& r, zmod_ring::elem x, zmod_ring::elem y,
                        std::uint64_t max_m)
        : r_(r), x_(x), y_(y) {
        xp_.push_back(1);
        yp_.push_back(1);
        for (std::uint64_t e = 1; e <= max_m; ++e) {
            xp_.push_back(r_.mul(xp_.back(), x_));
            yp_.push_back(r_.mul(yp_.back(), y_));
        }
        rows_.push_back({1});
        for (std::uint64_t n = 1; n <= max_m; ++n) {
            std::vector<std::uint64_t> row(n + 1, 1);
            for (std::size_t j = 1; j < n; ++j) row[j] = r_.add(rows_[n - 1][j - 1], rows_[n - 1][j]);
            rows_.push_back(std::move(row));
        }
    }

    zmod_ring::elem at(std::uint64_t m) const {
        if (m == 0) return 0;
        zmod_ring::elem acc = 0;
        for (std::uint64_t i = 0; 2 * i <= m - 1; ++i) {
            auto term = r_.mul(rows_[m - 1 - i][i], r_.mul(xp_[m - 1 - 2 * i], yp_[i]));
            acc = (i % 2 == 0) ? r_.add(acc, term) : r_.sub(acc, term);
        }
        return acc;
    }

private:
    const zmod_ring& r_;
    zmod_ring::elem x_, y_;
    std::vector<zmod_ring::elem> xp_, yp_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

void criterion3_fibonacci(checker& c) {
    zmod_ring r(1009);
    rng_t g(3);
    for (int pt = 0; pt < 20; ++pt) {
        auto x = rnd_mod(g, 1009);
        auto y = rnd_mod(g, 1009);
        running_closed_form closed(r, x, y, 2000);
        zmod_ring::elem prev = 0, cur = 1;  // U_0, U_1
        for (std::uint64_t m = 1; m <= 2000; ++m) {
            auto pair = fib_pair_dnc(r, x, y, m);
            if (pair.u != cur || (m >= 2 && pair.u_prev != prev)) {
                c.expect(false, "dnc vs recurrence at m=" + std::to_string(m));
                break;
            }
            if (closed.at(m) != cur) {
                c.expect(false, "summation form at m=" + std::to_string(m));
                break;
            }
            auto next = r.sub(r.mul(x, cur), r.mul(y, prev));
            prev = cur;
            cur = next;
        }
        // the public summation evaluator against the shared-row variant
        for (std::uint64_t m = 0; m <= 300; ++m)
            c.expect(fib_closed_form(r, x, y, m) == closed.at(m),
                     "public evaluator at m=" + std::to_string(m));
        for (int t = 0; t < 3; ++t) {
            std::uint64_t m = 301 + g() % 1700;
            c.expect(fib_closed_form(r, x, y, m) == closed.at(m),
                     "public evaluator at m=" + std::to_string(m));
        }
    }

    zmod_ring r60(60);
    rng_t g2(32);
    for (int round = 0; round < 500; ++round) {
        mat2<zmod_ring::elem> a{rnd_mod(g2, 60), rnd_mod(g2, 60), rnd_mod(g2, 60), rnd_mod(g2, 60)};
        std::uint64_t m = 1 + g2() % 64;
        auto fast = mat2_power_via_fib(r60, a, m);
        naive_mat2<zmod_ring::elem> na{a.e11, a.e12, a.e21, a.e22};
        auto slow = mat_power_naive(r60, na, m);
        c.expect(fast.e11 == slow.e11 && fast.e12 == slow.e12 && fast.e21 == slow.e21 &&
                     fast.e22 == slow.e22,
                 "matrix power via U at m=" + std::to_string(m));
    }
}

// ---------------------------------------------------------------------------

template <typename R>
void continuant_suite(checker& c, const R& ring, const std::vector<typename R::elem>& a,
                      const std::vector<typename R::elem>& d) {
    const std::size_t k = a.size();
    auto t = build_table(ring, a, d);
    auto t1 = shifted_table(ring, a, d, 1);

    for (std::size_t r = 1; r <= k + 1; ++r) {
        auto rhs = (r < 2) ? ring.zero() : ring.neg(ring.mul(d[k - 1], t1.alpha[r - 2]));
        c.expect(ring.eq(t.beta[r], rhs), "identity beta/shift");
    }
    c.expect(ring.eq(t.alpha[1], a[0]), "alpha seed");
    for (std::size_t r = 1; r + 1 <= k; ++r)
        c.expect(ring.eq(t.alpha[r + 1],
                         ring.sub(ring.mul(a[r], t.alpha[r]), ring.mul(d[r - 1], t.alpha[r - 1]))),
                 "alpha recurrence");
    for (std::size_t r = 2; r <= k; ++r)
        c.expect(ring.eq(t.beta[r + 1],
                         ring.sub(ring.mul(a[r - 1], t.beta[r]), ring.mul(d[r - 2], t.beta[r - 1]))),
                 "beta recurrence");
    for (std::size_t r = 1; r + 1 <= k; ++r)
        for (std::size_t s = 1; s + r <= k; ++s) {
            auto left = shifted_table(ring, a, d, s - 1).alpha[r];
            auto rhs = ring.mul(a[s - 1], shifted_table(ring, a, d, s).alpha[r - 1]);
            if (r >= 2)
                rhs = ring.sub(rhs,
                               ring.mul(d[s - 1], shifted_table(ring, a, d, s + 1).alpha[r - 2]));
            c.expect(ring.eq(left, rhs), "shift decomposition");
        }
    for (std::size_t r = 0; r < k; ++r) {
        auto lhs =
            ring.sub(ring.mul(t.alpha[k - 1], t.beta[r + 1]), ring.mul(t.alpha[r], t.beta[k]));
        typename R::elem dprod = d[k - 1];
        for (std::size_t i = 1; i <= r; ++i) dprod = ring.mul(dprod, d[i - 1]);
        auto rhs = (r + 2 > k) ? ring.zero()
                               : ring.mul(dprod, alpha_extend(ring, rotated_seed(a, r + 1),
                                                              rotated_seed(d, r + 1), k - r - 2));
        c.expect(ring.eq(lhs, rhs), "cross product identity");
        c.expect(ring.eq(second_period_alpha(ring, t, r), alpha_extend(ring, a, d, k + r)),
                 "second period alpha");
    }
    c.expect(ring.eq(t.pi, ring.add(t.alpha[k], t.beta[k])), "pi decomposition");
    typename R::elem dd = d[0];
    for (std::size_t i = 1; i < k; ++i) dd = ring.mul(dd, d[i]);
    c.expect(ring.eq(t.d, dd), "transfer determinant vs direct product");
}

void criterion4_continuants(checker& c) {
    rng_t g(4);
    bigint_ring z;
    std::uniform_int_distribution<int> entry(-50, 50);
    for (std::size_t k = 1; k <= 8; ++k)
        for (int round = 0; round < 200; ++round) {
            std::vector<bigint_ring::elem> a, d;
            for (std::size_t i = 0; i < k; ++i) {
                a.push_back(z.from_int(entry(g)));
                d.push_back(z.from_int(entry(g)));
            }
            continuant_suite(c, z, a, d);
        }
    zmod_ring r(60);
    for (std::size_t k = 1; k <= 8; ++k)
        for (int round = 0; round < 200; ++round)
            continuant_suite(c, r, seed_zmod(g, r, k), seed_zmod(g, r, k));

    // combinatorial definition against the recurrence tables
    for (std::size_t k = 1; k <= 9; ++k)
        for (int round = 0; round < 50; ++round) {
            auto a = seed_int(g, z, k, 50);
            auto d = seed_int(g, z, k, 50);
            auto t = build_table(z, a, d);
            bool ok = true;
            for (std::size_t r = 0; r <= k; ++r) {
                ok = ok && z.eq(continuant_def_oracle(z, continuant_kind::alpha, r, k, a, d),
                                t.alpha[r]);
                ok = ok && z.eq(continuant_def_oracle(z, continuant_kind::pi, r, k, a, d),
                                z.add(t.alpha[r], t.beta[r]));
            }
            for (std::size_t r = 0; r <= k + 1; ++r)
                ok = ok &&
                     z.eq(continuant_def_oracle(z, continuant_kind::beta, r, k, a, d), t.beta[r]);
            c.expect(ok, "definition oracle at k=" + std::to_string(k));
        }
}

// ---------------------------------------------------------------------------

void criterion5_reducible(checker& c) {
    rng_t g(5);
    bigint_ring z;
    int done_b = 0, done_c = 0;
    while (done_b < 200 || done_c < 200) {
        std::size_t k = 2 + g() % 7;
        std::size_t n = k + 1 + g() % 40;
        ktoeplitz_spec<bigint_ring::elem> s{n, k, seed_int(g, z, k, 9), seed_int(g, z, k, 9),
                                            seed_int(g, z, k, 9)};
        bool use_b = done_b < 200;
        auto& diag = use_b ? s.b : s.c;
        std::vector<std::size_t> pos;
        for (std::size_t i = 1; i <= k; ++i)
            if (g() % 3 == 0) {
                diag[i - 1] = z.zero();
                pos.push_back(i);
            }
        if (pos.empty() || n <= pos.front()) continue;
        auto got = det_reducible_factored(z, s, pos,
                                          use_b ? zero_side::upper_b : zero_side::lower_c);
        c.expect(z.eq(got, det_d1(z, s)), "factored reducible determinant");
        (use_b ? done_b : done_c) += 1;
    }
}

// ---------------------------------------------------------------------------

void criterion6_boundary_factorization(checker& c) {
    rng_t g(6);
    bigint_ring z;
    poly_ring<bigint_ring> P(z);
    for (int round = 0; round < 100; ++round) {
        std::size_t k = 1 + g() % 6;
        std::size_t m = 1 + g() % 5;
        if (k == 1) ++m;  // keep n above k so the periodic route applies
        std::size_t n = m * k + k - 1;
        ktoeplitz_spec<bigint_ring::elem> s{n, k, seed_int(g, z, k, 6), seed_int(g, z, k, 6),
                                            seed_int(g, z, k, 6)};
        auto d = offdiag_products(z, s);
        auto t = build_table(z, s.a, d);
        auto pair = fib_pair_dnc(z, t.pi, t.d, m + 1);
        if (k >= 2) {
            auto trunc = s;
            trunc.n = k - 1;
            c.expect(z.eq(det_d3(z, s), z.mul(pair.u, det_general(z, trunc))),
                     "boundary determinant factorization");
        } else {
            c.expect(z.eq(det_d3(z, s), pair.u), "period-one boundary determinant");
        }
        auto f = charpoly_factored_special(z, s);
        c.expect(P.eq(P.mul(f.fib_factor, f.alpha_factor), charpoly(z, s)),
                 "characteristic polynomial factorization");
    }

    // Fibonacci divisibility: F_k divides F_n whenever k divides n
    bigint_ring z2;
    std::vector<bigint_ring::elem> fib{z2.zero(), z2.one()};
    for (std::size_t i = 2; i <= 60; ++i) fib.push_back(z2.add(fib[i - 1], fib[i - 2]));
    for (std::size_t i = 0; i <= 60; ++i)
        c.expect(z2.eq(fib[i], fib_closed_form(z2, z2.one(), z2.from_int(-1), i)),
                 "fibonacci via U_m(1,-1)");
    for (std::size_t k = 2; k <= 30; ++k)
        for (std::size_t n = k; n <= 60; n += k)
            c.expect(fib[n] % fib[k] == 0,
                     "divisibility F_" + std::to_string(k) + " | F_" + std::to_string(n));
}

// ---------------------------------------------------------------------------

void criterion7_inverse(checker& c) {
    zmod_ring r(101);
    rng_t g(7);
    int done = 0;
    while (done < 100) {
        std::size_t k = 1 + g() % 8;
        std::size_t n = 1 + g() % 30;
        ktoeplitz_spec<zmod_ring::elem> s{n, std::max(k, std::size_t{1}), {}, {}, {}};
        s.k = k;
        s.a = seed_zmod(g, r, k);
        s.b = seed_zmod(g, r, k);
        s.c = seed_zmod(g, r, k);
        auto inv = (n > k) ? inv_full(r, s) : inv_full_general(r, s);
        if (!inv.unit) continue;
        ++done;
        auto T = dense_materialize(r, s);
        bool ok = true;
        for (std::size_t i = 1; i <= n && ok; ++i)
            for (std::size_t j = 1; j <= n && ok; ++j) {
                zmod_ring::elem tx = 0, xt = 0;
                for (std::size_t t = 1; t <= n; ++t) {
                    tx = r.add(tx, r.mul(T.at(i, t), inv.at(t, j)));
                    xt = r.add(xt, r.mul(inv.at(i, t), T.at(t, j)));
                }
                zmod_ring::elem want = (i == j) ? 1 : 0;
                ok = tx == want && xt == want;
            }
        c.expect(ok, "two-sided inverse at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }

    // adjugate agreement over Z, unit or not
    bigint_ring z;
    for (int round = 0; round < 120; ++round) {
        std::size_t k = 1 + g() % 8;
        std::size_t n = 1 + g() % 8;
        ktoeplitz_spec<bigint_ring::elem> s{n, k, seed_int(g, z, k, 9), seed_int(g, z, k, 9),
                                            seed_int(g, z, k, 9)};
        auto M = dense_materialize(z, s);
        auto [adj, det] = adjugate_inverse(z, M);
        bool ok = true;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                auto e = (n > k) ? inv_entry(z, s, i, j) : inv_entry_general(z, s, i, j);
                ok = ok && z.eq(e.det, det) && z.eq(e.numerator, adj.at(i, j));
                if (e.quotient) ok = ok && z.eq(z.mul(*e.quotient, e.det), e.numerator);
            }
        c.expect(ok, "adjugate agreement at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
}

// ---------------------------------------------------------------------------

void criterion8_eigen_scan(checker& c) {
    auto s = golden_spec();
    auto T = dense_materialize(z60, s);
    std::vector<std::uint64_t> non_eigen;
    int vectors = 0;
    for (std::uint64_t lambda = 0; lambda < 60; ++lambda) {
        auto chk = eigencheck(z60, s, lambda);
        if (!chk.is_eigenvalue()) {
            non_eigen.push_back(lambda);
            continue;
        }
        for (bool top : {true, false}) {
            auto vec = top ? eigvec_v(z60, s, lambda, *chk.witness)
                           : eigvec_w(z60, s, lambda, *chk.witness);
            if (!vec) continue;
            ++vectors;
            auto tv = matvec(z60, T, *vec);
            bool ok = true;
            for (std::size_t i = 0; i < 19; ++i) ok = ok && tv[i] == z60.mul(lambda, (*vec)[i]);
            c.expect(ok, "eigen equation at lambda=" + std::to_string(lambda));
        }
    }
    std::vector<std::uint64_t> want{0, 2, 8, 12, 14, 18, 20, 24, 30, 32, 38, 42, 44, 48, 50, 54};
    c.expect(non_eigen == want, "non-eigenvalue residue set");
    c.expect(vectors > 0, "at least one constructed eigenvector");
}

// ---------------------------------------------------------------------------

void criterion9_instrumentation(checker& c) {
    zmod_ring r(101);
    const std::vector<std::size_t> ns{100, 1000, 10000, 100000};
    const std::vector<std::size_t> ks{2, 3, 5, 8};
    rng_t g(9);

    for (std::size_t n : ns) {
        for (std::size_t k : ks) {
            ktoeplitz_spec<zmod_ring::elem> s{n, k, seed_zmod(g, r, k), seed_zmod(g, r, k),
                                              seed_zmod(g, r, k)};
            op_count tally;
            counted_ring<zmod_ring> cr(r, tally);
            auto tag = " at n=" + std::to_string(n) + " k=" + std::to_string(k);

            det_d1(cr, s);
            c.expect(tally.ring_total() == cost::d1_exact(n, k), "d1 exact" + tag);

            tally.reset();
            det_d2(cr, s);
            c.expect(tally.ring_total() <= cost::d2_bound(n, k), "d2 bound" + tag);

            tally.reset();
            det_d3(cr, s);
            c.expect(tally.ring_total() <= cost::d3_bound(n, k), "d3 bound" + tag);
            c.expect(tally.ring_total() + tally.int_ops <= cost::d3_total_bound(n, k),
                     "d3 combined headline bound" + tag);

            tally.reset();
            inv_entry(cr, s, 2, n - 1);
            c.expect(tally.ring_total() <= cost::entry_bound(n, k), "entry bound" + tag);

            if (n <= 10000) {
                tally.reset();
                inv_full_count_only(cr, s);
                c.expect(tally.ring_total() <= cost::inv_bound(n, k), "inv bound" + tag);
            }
        }

        // non-periodic recurrence on a matrix declared with k = n
        ktoeplitz_spec<zmod_ring::elem> gen{n, n, seed_zmod(g, r, n), seed_zmod(g, r, n),
                                            seed_zmod(g, r, n)};
        op_count tally;
        counted_ring<zmod_ring> cr(r, tally);
        det_general(cr, gen);
        c.expect(tally.ring_total() == cost::general_exact(n),
                 "general exact at n=" + std::to_string(n));
    }

    // eigenvector assembly budget, measured where a witness exists
    for (std::size_t n : ns) {
        for (std::size_t k : ks) {
            ktoeplitz_spec<zmod_ring::elem> s{n, k, seed_zmod(g, z60, k), seed_zmod(g, z60, k),
                                              seed_zmod(g, z60, k)};
            std::optional<std::uint64_t> lambda;
            std::uint64_t witness = 0;
            for (std::uint64_t cand = 0; cand < 60; ++cand) {
                auto chk = eigencheck(z60, s, cand);
                if (chk.is_eigenvalue()) {
                    lambda = cand;
                    witness = *chk.witness;
                    break;
                }
            }
            if (!lambda) continue;
            op_count tally;
            counted_ring<zmod_ring> cr(z60, tally);
            auto v = eigvec_v(cr, s, *lambda, witness);
            (void)v;
            c.expect(tally.ring_total() <= cost::eig_bound(n, k),
                     "eig bound at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
}

}  // namespace

int main() {
    struct criterion {
        const char* name;
        std::function<void(checker&)> run;
    };
    const std::vector<criterion> criteria{
        {"golden example over Z/60", criterion1_golden},
        {"cross-algorithm determinants, 5 rings x 1000 specs", criterion2_cross_algorithms},
        {"fibonacci evaluator equivalence and 2x2 powers", criterion3_fibonacci},
        {"continuant identity suite", criterion4_continuants},
        {"reducible factored determinants", criterion5_reducible},
        {"boundary factorization and fibonacci divisibility", criterion6_boundary_factorization},
        {"inverse correctness", criterion7_inverse},
        {"eigen equation over the full residue scan", criterion8_eigen_scan},
        {"operation-count instrumentation grid", criterion9_instrumentation},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        checker c;
        auto start = std::chrono::steady_clock::now();
        criteria[i].run(c);
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << (i + 1) << " [" << criteria[i].name << "]: "
             << (c.failed == 0 ? "PASS" : "FAIL") << " (" << c.total << " checks, " << std::fixed;
        line.precision(2);
        line << secs << "s)";
        std::cout << line.str() << "\n";
        for (const auto& note : c.notes) std::cout << "    failed: " << note << "\n";
        if (c.failed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
