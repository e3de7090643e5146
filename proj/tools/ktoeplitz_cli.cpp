// Command-line surface: reads a JSON problem description (ring + the three
// period seeds), computes determinants / characteristic polynomials /
// eigenvectors / inverse entries, and reports measured operation counts
// against the closed-form budgets. Output is deterministic: keys sorted,
// elements printed as canonical decimal strings.
//
// Exit codes: 0 ok; 2 malformed input or incompatible request; 3 semantic
// failure (--require-unit when the determinant is not a unit).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ktz/bigint.hpp"
#include "ktz/cost_model.hpp"
#include "ktz/determinant.hpp"
#include "ktz/inverse.hpp"
#include "ktz/oracle.hpp"
#include "ktz/poly.hpp"
#include "ktz/spectral.hpp"
#include "ktz/zmod.hpp"

namespace {

using json = nlohmann::json;
using boost::multiprecision::cpp_int;

struct cli_error {
    int code;
    std::string message;
};

cpp_int parse_integer(const json& v) {
    if (v.is_number_integer()) return cpp_int(v.get<std::int64_t>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == digits_from) throw cli_error{2, "bad integer literal: " + s};
        for (std::size_t i = digits_from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw cli_error{2, "bad integer literal: " + s};
        return cpp_int(s);
    }
    throw cli_error{2, "expected an integer or a decimal string"};
}

ktz::bigint_ring::elem ingest(const ktz::bigint_ring&, const cpp_int& v) { return v; }

ktz::zmod_ring::elem ingest(const ktz::zmod_ring& r, const cpp_int& v) {
    cpp_int m(r.modulus());
    cpp_int red = v % m;
    if (red < 0) red += m;
    return red.convert_to<std::uint64_t>();
}

std::string elem_str(const ktz::bigint_ring&, const ktz::bigint_ring::elem& e) { return e.str(); }
std::string elem_str(const ktz::zmod_ring&, ktz::zmod_ring::elem e) { return std::to_string(e); }

template <typename R>
ktz::ktoeplitz_spec<typename R::elem> spec_from_json(const R& ring, const json& j) {
    for (const char* key : {"n", "k", "a", "b", "c"})
        if (!j.contains(key)) throw cli_error{2, std::string("problem spec missing '") + key + "'"};
    ktz::ktoeplitz_spec<typename R::elem> s;
    if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
        throw cli_error{2, "'n' must be a positive integer"};
    std::int64_t n = j["n"].get<std::int64_t>();
    std::int64_t k = j["k"].get<std::int64_t>();
    if (n < 1 || k < 1) throw cli_error{2, "'n' and 'k' must be positive"};
    s.n = static_cast<std::size_t>(n);
    s.k = static_cast<std::size_t>(k);
    for (auto [key, out] : {std::pair{"a", &s.a}, {"b", &s.b}, {"c", &s.c}}) {
        const json& arr = j[key];
        if (!arr.is_array() || arr.size() != s.k)
            throw cli_error{2, std::string("'") + key + "' must be an array of length k"};
        for (const auto& v : arr) out->push_back(ingest(ring, parse_integer(v)));
    }
    return s;
}

json ops_json(const ktz::op_count& t) {
    json o;
    o["K"] = t.ring_total();
    o["Z"] = t.int_ops;
    o["adds"] = t.adds;
    o["subs"] = t.subs;
    o["muls"] = t.muls;
    o["divs"] = t.divs;
    return o;
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        os << prefix << " =";
        for (const auto& v : j) os << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        os << "\n";
    } else if (j.is_string()) {
        os << prefix << " = " << j.get<std::string>() << "\n";
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit(const json& out, const std::string& mode) {
    if (mode == "text") {
        flatten(out, "", std::cout);
    } else {
        std::cout << out.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------------------
// det

template <typename R>
typename R::elem det_by_algo(const R& ring, const ktz::ktoeplitz_spec<typename R::elem>& s,
                             const std::string& algo) {
    if (algo == "d1") return ktz::det_d1(ring, s);
    if (algo == "d2") return ktz::det_d2(ring, s);
    if (algo == "d3") return ktz::det_d3(ring, s);
    if (algo == "d4") return ktz::det_d4(ring, s);
    if (algo == "general") return ktz::det_general(ring, s);
    if (algo == "auto") return ktz::det_auto(ring, s);
    if (algo == "reducible") {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < s.k; ++i)
            if (ktz::is_zero(ring, s.b[i])) pos.push_back(i + 1);
        if (!pos.empty()) return ktz::det_reducible_factored(ring, s, pos, ktz::zero_side::upper_b);
        for (std::size_t i = 0; i < s.k; ++i)
            if (ktz::is_zero(ring, s.c[i])) pos.push_back(i + 1);
        if (!pos.empty()) return ktz::det_reducible_factored(ring, s, pos, ktz::zero_side::lower_c);
        throw cli_error{2, "reducible algorithm requires a zero in b or c"};
    }
    throw cli_error{2, "unknown determinant algorithm: " + algo};
}

template <typename R>
json run_det(const R& ring, const json& problem, const std::string& algo, bool count_ops) {
    auto s = spec_from_json(ring, problem);
    json out;
    out["algo"] = algo;
    if (count_ops) {
        ktz::op_count tally;
        ktz::counted_ring<R> cr(ring, tally);
        out["det"] = elem_str(ring, det_by_algo(cr, s, algo));
        out["ops"] = ops_json(tally);
    } else {
        out["det"] = elem_str(ring, det_by_algo(ring, s, algo));
    }
    return out;
}

// ---------------------------------------------------------------------------
// charpoly

template <typename R>
json run_charpoly(const R& ring, const json& problem, bool count_ops) {
    auto s = spec_from_json(ring, problem);
    json out;
    std::vector<typename R::elem> coeffs;
    if (count_ops) {
        ktz::op_count tally;
        ktz::poly_ring<R> P(ring);
        ktz::counted_ring<ktz::poly_ring<R>> cp(P, tally);
        coeffs = ktz::det_auto(cp, ktz::charpoly_spec(ring, s));
        out["ops"] = ops_json(tally);  // counted at whole-polynomial granularity
    } else {
        coeffs = ktz::charpoly(ring, s);
    }
    json arr = json::array();
    for (std::size_t i = coeffs.size(); i-- > 0;) arr.push_back(elem_str(ring, coeffs[i]));
    out["degree"] = s.n;
    out["coefficients"] = arr;  // leading coefficient first
    return out;
}

// ---------------------------------------------------------------------------
// eig

template <typename R>
json eig_single(const R& ring, const ktz::ktoeplitz_spec<typename R::elem>& s,
                const typename R::elem& lambda, std::optional<typename R::elem> z,
                const std::string& form) {
    auto chk = ktz::eigencheck(ring, s, lambda);
    json out;
    out["lambda"] = elem_str(ring, lambda);
    out["p_value"] = elem_str(ring, chk.p_value);
    out["eigenvalue"] = chk.is_eigenvalue();
    if (!z && chk.witness) z = chk.witness;
    if (!chk.is_eigenvalue() || !z) {
        out["vector"] = "absent";
        return out;
    }
    out["z"] = elem_str(ring, *z);
    auto vec = (form == "w") ? ktz::eigvec_w(ring, s, lambda, *z) : ktz::eigvec_v(ring, s, lambda, *z);
    if (!vec) {
        out["vector"] = "absent";
        return out;
    }
    json arr = json::array();
    for (const auto& x : *vec) arr.push_back(elem_str(ring, x));
    out["vector"] = arr;
    return out;
}

json run_eig_scan(const ktz::zmod_ring& ring, const ktz::ktoeplitz_spec<std::uint64_t>& s) {
    json eigenvalues = json::array();
    json rest = json::array();
    for (std::uint64_t lambda = 0; lambda < ring.modulus(); ++lambda) {
        auto chk = ktz::eigencheck(ring, s, lambda);
        (chk.is_eigenvalue() ? eigenvalues : rest).push_back(std::to_string(lambda));
    }
    json out;
    out["modulus"] = ring.modulus();
    out["eigenvalues"] = eigenvalues;
    out["non_eigenvalues"] = rest;
    return out;
}

// ---------------------------------------------------------------------------
// inv

template <typename R>
json run_inv(const R& ring, const json& problem, std::optional<std::size_t> row,
             std::optional<std::size_t> col, bool require_unit, bool verify, bool count_ops) {
    auto s = spec_from_json(ring, problem);
    if (row.has_value() != col.has_value())
        throw cli_error{2, "--row and --col must be given together"};
    json out;
    ktz::op_count tally;
    ktz::counted_ring<R> cr(ring, tally);
    if (row) {
        auto e = count_ops ? (s.n > s.k ? ktz::inv_entry(cr, s, *row, *col)
                                        : ktz::inv_entry_general(cr, s, *row, *col))
                           : (s.n > s.k ? ktz::inv_entry(ring, s, *row, *col)
                                        : ktz::inv_entry_general(ring, s, *row, *col));
        out["row"] = *row;
        out["col"] = *col;
        out["numerator"] = elem_str(ring, e.numerator);
        out["det"] = elem_str(ring, e.det);
        if (e.quotient) out["quotient"] = elem_str(ring, *e.quotient);
        if (require_unit && !e.quotient) throw cli_error{3, "determinant is not a unit"};
    } else {
        auto full = count_ops ? (s.n > s.k ? ktz::inv_full(cr, s) : ktz::inv_full_general(cr, s))
                              : (s.n > s.k ? ktz::inv_full(ring, s) : ktz::inv_full_general(ring, s));
        if (require_unit && !full.unit) throw cli_error{3, "determinant is not a unit"};
        out["det"] = elem_str(ring, full.det);
        out["unit"] = full.unit;
        out["entries_are"] = full.unit ? "inverse" : "adjugate_numerators";
        json rows = json::array();
        for (std::size_t i = 1; i <= s.n; ++i) {
            json r = json::array();
            for (std::size_t j = 1; j <= s.n; ++j) r.push_back(elem_str(ring, full.at(i, j)));
            rows.push_back(r);
        }
        out["entries"] = rows;
        if (verify && full.unit) {
            auto T = ktz::dense_materialize(ring, s);
            bool ok = true;
            for (std::size_t j = 1; j <= s.n && ok; ++j) {
                std::vector<typename R::elem> colv;
                for (std::size_t i = 1; i <= s.n; ++i) colv.push_back(full.at(i, j));
                auto tx = ktz::matvec(ring, T, colv);
                for (std::size_t i = 1; i <= s.n; ++i)
                    if (!ring.eq(tx[i - 1], i == j ? ring.one() : ring.zero())) ok = false;
            }
            out["verified"] = ok;
        }
    }
    if (count_ops) out["ops"] = ops_json(tally);
    return out;
}

// ---------------------------------------------------------------------------
// bench

struct bench_row {
    std::string algo;
    std::size_t n, k;
    std::uint64_t ring_ops, int_ops, bound;
    bool exact;
    bool pass;
};

template <typename R>
ktz::ktoeplitz_spec<typename R::elem> bench_spec(const R& ring, std::size_t n, std::size_t k) {
    std::mt19937_64 g(1000003 * n + k);
    auto seed = [&] {
        std::vector<typename R::elem> v;
        for (std::size_t i = 0; i < k; ++i)
            v.push_back(ring.from_int(static_cast<std::int64_t>(g() % 1024) - 512));
        return v;
    };
    return {n, k, seed(), seed(), seed()};
}

template <typename R>
std::vector<bench_row> run_bench_rows(const R& ring, const std::vector<std::size_t>& ns,
                                      const std::vector<std::size_t>& ks, std::size_t max_inv_n) {
    std::vector<bench_row> rows;
    for (std::size_t n : ns) {
        for (std::size_t k : ks) {
            if (n <= k) continue;
            auto s = bench_spec(ring, n, k);
            auto measure = [&](const std::string& algo, auto&& fn, std::uint64_t bound,
                               bool exact) {
                ktz::op_count tally;
                ktz::counted_ring<R> cr(ring, tally);
                fn(cr);
                bool pass = exact ? tally.ring_total() == bound : tally.ring_total() <= bound;
                rows.push_back({algo, n, k, tally.ring_total(), tally.int_ops, bound, exact, pass});
            };
            measure("d1", [&](auto& cr) { ktz::det_d1(cr, s); }, ktz::cost::d1_exact(n, k), true);
            measure("d2", [&](auto& cr) { ktz::det_d2(cr, s); }, ktz::cost::d2_bound(n, k), false);
            measure("d3", [&](auto& cr) { ktz::det_d3(cr, s); }, ktz::cost::d3_bound(n, k), false);
            measure("entry", [&](auto& cr) { ktz::inv_entry(cr, s, 2, s.n - 1); },
                    ktz::cost::entry_bound(n, k), false);
            if (n <= max_inv_n)
                measure("inv", [&](auto& cr) { ktz::inv_full_count_only(cr, s); },
                        ktz::cost::inv_bound(n, k), false);
        }
        // the non-periodic recurrence, benchmarked on a matrix with k = n
        auto gen = bench_spec(ring, n, n);
        ktz::op_count tally;
        ktz::counted_ring<R> cr(ring, tally);
        ktz::det_general(cr, gen);
        rows.push_back({"general", n, n, tally.ring_total(), tally.int_ops,
                        ktz::cost::general_exact(n), true,
                        tally.ring_total() == ktz::cost::general_exact(n)});
    }
    return rows;
}

/// Eigenvector rows need a (lambda, z) pair; over Z/M with composite M a
/// scan almost always finds one.
std::vector<bench_row> run_bench_eig(const ktz::zmod_ring& ring, const std::vector<std::size_t>& ns,
                                     const std::vector<std::size_t>& ks) {
    std::vector<bench_row> rows;
    for (std::size_t n : ns) {
        for (std::size_t k : ks) {
            if (n <= k) continue;
            auto s = bench_spec(ring, n, k);
            std::optional<std::uint64_t> lambda;
            std::uint64_t z = 0;
            for (std::uint64_t cand = 0; cand < ring.modulus(); ++cand) {
                auto chk = ktz::eigencheck(ring, s, cand);
                if (chk.is_eigenvalue()) {
                    lambda = cand;
                    z = *chk.witness;
                    break;
                }
            }
            if (!lambda) continue;
            ktz::op_count tally;
            ktz::counted_ring<ktz::zmod_ring> cr(ring, tally);
            auto v = ktz::eigvec_v(cr, s, *lambda, z);
            (void)v;
            rows.push_back({"eig", n, k, tally.ring_total(), tally.int_ops,
                            ktz::cost::eig_bound(n, k), false,
                            tally.ring_total() <= ktz::cost::eig_bound(n, k)});
        }
    }
    return rows;
}

json rows_to_json(const std::vector<bench_row>& rows) {
    json arr = json::array();
    bool all = true;
    for (const auto& r : rows) {
        json j;
        j["algo"] = r.algo;
        j["n"] = r.n;
        j["k"] = r.k;
        j["ring_ops"] = r.ring_ops;
        j["int_ops"] = r.int_ops;
        j["bound"] = r.bound;
        j["exact"] = r.exact;
        j["pass"] = r.pass;
        arr.push_back(j);
        all = all && r.pass;
    }
    json out;
    out["rows"] = arr;
    out["all_pass"] = all;
    return out;
}

void rows_to_csv(const std::vector<bench_row>& rows, std::ostream& os) {
    os << "algo,n,k,ring_ops,int_ops,bound,exact,pass\n";
    for (const auto& r : rows)
        os << r.algo << "," << r.n << "," << r.k << "," << r.ring_ops << "," << r.int_ops << ","
           << r.bound << "," << (r.exact ? 1 : 0) << "," << (r.pass ? 1 : 0) << "\n";
}

// ---------------------------------------------------------------------------

json read_problem(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw cli_error{2, "cannot open input file: " + path};
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw cli_error{2, "input is not valid JSON"};
    return j;
}

struct ring_choice {
    bool is_zmod = false;
    std::uint64_t modulus = 0;
};

ring_choice ring_from_json(const json& problem) {
    if (!problem.contains("ring") || !problem["ring"].is_object() ||
        !problem["ring"].contains("kind"))
        throw cli_error{2, "problem spec must carry ring: {\"kind\": ...}"};
    const json& r = problem["ring"];
    std::string kind = r["kind"].get<std::string>();
    if (kind == "integer") return {false, 0};
    if (kind == "zmod") {
        if (!r.contains("modulus")) throw cli_error{2, "zmod ring needs a modulus"};
        cpp_int m = parse_integer(r["modulus"]);
        if (m < 2 || m > cpp_int("4611686018427387904"))
            throw cli_error{2, "modulus out of range"};
        return {true, m.convert_to<std::uint64_t>()};
    }
    throw cli_error{2, "unknown ring kind: " + kind};
}

template <typename Fn>
json with_ring(const json& problem, Fn&& fn) {
    auto rc = ring_from_json(problem);
    if (rc.is_zmod) return fn(ktz::zmod_ring(rc.modulus));
    return fn(ktz::bigint_ring{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact determinants, characteristic polynomials, eigenvectors and inverses of "
                 "tridiagonal k-Toeplitz matrices over commutative rings"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_mode = "json";
    app.add_option("--output", output_mode, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    std::string input_path = "-";
    std::string algo = "auto";
    bool count_ops = false;
    std::string lambda_str, z_str;
    bool scan = false;
    std::string form = "v";
    std::optional<std::size_t> row, col;
    bool require_unit = false, verify = false;
    std::string n_grid = "100,1000,10000,100000", k_grid = "2,3,5,8";
    std::size_t max_inv_n = 10000;

    auto* det = app.add_subcommand("det", "determinant of the described matrix");
    det->add_option("input", input_path, "JSON problem spec ('-' for stdin)");
    det->add_option("--algo", algo, "d1|d2|d3|d4|general|reducible|auto");
    det->add_flag("--count-ops", count_ops, "report elementary operation counts");

    auto* charpoly_cmd = app.add_subcommand("charpoly", "dense monic characteristic polynomial");
    charpoly_cmd->add_option("input", input_path, "JSON problem spec ('-' for stdin)");
    charpoly_cmd->add_flag("--count-ops", count_ops, "count operations over K[x]");

    auto* eig = app.add_subcommand("eig", "eigenvalue test and eigenvector construction");
    eig->add_option("input", input_path, "JSON problem spec ('-' for stdin)");
    eig->add_option("--lambda", lambda_str, "candidate eigenvalue");
    eig->add_option("--z", z_str, "annihilator witness override");
    eig->add_flag("--scan", scan, "enumerate all residues of Z/M");
    eig->add_option("--form", form, "v (top-anchored) or w (bottom-anchored)")
        ->check(CLI::IsMember({"v", "w"}));

    auto* inv = app.add_subcommand("inv", "inverse entry or full inverse");
    inv->add_option("input", input_path, "JSON problem spec ('-' for stdin)");
    inv->add_option("--row", row, "entry row (1-based)");
    inv->add_option("--col", col, "entry column (1-based)");
    inv->add_flag("--require-unit", require_unit, "fail (exit 3) unless det is a unit");
    inv->add_flag("--verify", verify, "check T * X = I densely");
    inv->add_flag("--count-ops", count_ops, "report elementary operation counts");

    auto* bench = app.add_subcommand("bench", "measured operation counts against budgets");
    bench->add_option("--ring", input_path, "JSON problem spec supplying the ring ('-' stdin)");
    bench->add_option("--n-grid", n_grid, "comma-separated matrix orders");
    bench->add_option("--k-grid", k_grid, "comma-separated periods");
    bench->add_option("--max-inv-n", max_inv_n, "largest order for full-inverse rows");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (det->parsed()) {
            auto problem = read_problem(input_path);
            out = with_ring(problem, [&](const auto& ring) {
                return run_det(ring, problem, algo, count_ops);
            });
        } else if (charpoly_cmd->parsed()) {
            auto problem = read_problem(input_path);
            out = with_ring(problem,
                            [&](const auto& ring) { return run_charpoly(ring, problem, count_ops); });
        } else if (eig->parsed()) {
            auto problem = read_problem(input_path);
            auto rc = ring_from_json(problem);
            if (scan) {
                if (!rc.is_zmod) throw cli_error{2, "--scan requires a zmod ring"};
                ktz::zmod_ring ring(rc.modulus);
                out = run_eig_scan(ring, spec_from_json(ring, problem));
            } else {
                if (lambda_str.empty()) throw cli_error{2, "eig needs --lambda or --scan"};
                out = with_ring(problem, [&](const auto& ring) {
                    auto s = spec_from_json(ring, problem);
                    auto lambda = ingest(ring, parse_integer(json(lambda_str)));
                    std::optional<std::decay_t<decltype(lambda)>> z;
                    if (!z_str.empty()) z = ingest(ring, parse_integer(json(z_str)));
                    return eig_single(ring, s, lambda, z, form);
                });
            }
        } else if (inv->parsed()) {
            auto problem = read_problem(input_path);
            out = with_ring(problem, [&](const auto& ring) {
                return run_inv(ring, problem, row, col, require_unit, verify, count_ops);
            });
        } else if (bench->parsed()) {
            auto parse_grid = [](const std::string& text) {
                std::vector<std::size_t> out_grid;
                std::stringstream ss(text);
                std::string tok;
                while (std::getline(ss, tok, ',')) out_grid.push_back(std::stoull(tok));
                if (out_grid.empty()) throw cli_error{2, "empty grid"};
                return out_grid;
            };
            auto ns = parse_grid(n_grid);
            auto ks = parse_grid(k_grid);
            ring_choice rc{true, 60};
            if (input_path != "-") rc = ring_from_json(read_problem(input_path));
            std::vector<bench_row> rows;
            if (rc.is_zmod) {
                ktz::zmod_ring ring(rc.modulus);
                rows = run_bench_rows(ring, ns, ks, max_inv_n);
                auto eig_rows = run_bench_eig(ring, ns, ks);
                rows.insert(rows.end(), eig_rows.begin(), eig_rows.end());
            } else {
                rows = run_bench_rows(ktz::bigint_ring{}, ns, ks, max_inv_n);
            }
            if (output_mode == "text") {
                rows_to_csv(rows, std::cout);
                return 0;
            }
            out = rows_to_json(rows);
        }
        emit(out, output_mode);
        return 0;
    } catch (const cli_error& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
