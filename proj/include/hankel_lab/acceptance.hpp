#ifndef HANKEL_LAB_ACCEPTANCE_HPP
#define HANKEL_LAB_ACCEPTANCE_HPP

// Twelve-point verification gate. Every headline value is recomputed along
// independent routes (window determinant, continued fraction, closed product,
// path count, grid expansion) and the routes must agree exactly. Shared by
// the gate binary, the test suite, and the CLI `all` subcommand.

#include <array>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/identities.hpp"
#include "hankel_lab/paths.hpp"

namespace hankel_lab {

// Caps for one full gate run. `quick` is the default budget (< 1 min);
// `full` widens the windows where no frozen table bounds them.
struct AcceptanceProfile {
    std::string name = "quick";
    long long cross_n = 7;      // cross-route window-determinant cap
    long long med_n = 6;        // mid-size determinant cap
    long long prop_n = 4;       // randomized transform window cap
    long long path_n = 4;       // path identity index cap
    long long det_n = 5;        // factorization / determinant-chain cap
    long long grid_n = 7;       // coefficient-grid cap
    long long r_max = 4;        // family parameter cap
    long long order = 24;       // series cross-multiplication order
    long long tuple_n = 3;        // exhaustive nonintersecting-tuple cap
    std::size_t enum_cap = 500; // largest exhaustively enumerated path set
};

inline AcceptanceProfile quick_profile() { return {}; }

inline AcceptanceProfile full_profile() {
    AcceptanceProfile p;
    p.name = "full";
    p.cross_n = 9;
    p.med_n = 7;
    p.prop_n = 5;
    p.path_n = 5;
    p.det_n = 6;
    p.grid_n = 8;
    p.order = 128;
    return p;
}

inline AcceptanceProfile acceptance_profile(const std::string& name) {
    if (name == "quick") return quick_profile();
    if (name == "full") return full_profile();
    throw std::invalid_argument("unknown profile '" + name + "' (expected quick or full)");
}

namespace detail {

// Frozen reference values, n = 1..7.
inline constexpr std::array<long long, 7> table_u = {1, 2, 11, 170, 7429, 920460, 323801820};
inline constexpr std::array<long long, 7> table_v = {1, 3,  26, 646, 45885, 9304650,
                                                     5382618660LL};
inline constexpr std::array<long long, 7> table_w = {1, 1, 2, 6, 33, 286, 4420};

// Window determinants of the five companion sequences, n = 1..7.
struct WindowRow {
    const char* series;
    long long window;
    std::array<long long, 7> values;
};

inline const std::array<WindowRow, 10>& window_table() {
    static const std::array<WindowRow, 10> t = {{
        {"seq_a", 0, {1, 2, 11, 170, 7429, 920460, 323801820}},
        {"seq_a", 1, {1, 3, 26, 646, 45885, 9304650, 5382618660LL}},
        {"seq_b", 0, {1, 3, 26, 646, 45885, 9304650, 5382618660LL}},
        {"seq_b", 1, {2, 11, 170, 7429, 920460, 323801820, 323674802088LL}},
        {"seq_c", 0, {2, 11, 170, 7429, 920460, 323801820, 323674802088LL}},
        {"seq_c", 1, {3, 26, 646, 45885, 9304650, 5382618660LL, 8878734657276LL}},
        {"seq_d", 0, {2, 3, 10, 85, 1932, 120060, 20648232}},
        {"seq_d", 1, {1, 2, 10, 133, 4830, 485460, 136112196}},
        {"seq_e", 0, {5, 66, 2431, 252586, 74327145, 62062015500LL, 147198472495020LL}},
        {"seq_e", 1, {7, 143, 8398, 1411510, 677688675, 928501718850LL, 3628173844041420LL}},
    }};
    return t;
}

}  // namespace detail

// 1. The three window determinants of the ternary-tree sequence agree with the
//    continued-fraction route, the hypergeometric product route, the product
//    closed forms, and the frozen table.
inline CheckResult criterion_window_routes(const AcceptanceProfile& pr) {
    using detail::expect_eq;
    CheckResult out = CheckResult::ok();
    const long long nmax = std::max<long long>(pr.cross_n, 7);
    const long long depth = 2 * nmax - 1;
    const TruncatedSeries a = build_series("seq_a", 2 * nmax);
    const SFraction lam = extract_sfraction(build_series("g", depth + 1), depth);
    const Rational pa(2, 3), pb(1, 3), pc(1, 2), rho(27, 4);
    for (long long n = 1; n <= nmax; ++n) {
        const std::string tag = "_" + std::to_string(n);
        const Rational det_h = hankel_det(a, n, 0);
        const Rational det_h1 = hankel_det(a, n, 1);
        const Rational det_hat = hankel_hat_det(a, n);
        out.merge(expect_eq(hankel_from_lambdas(lam, n, HankelWindow::H), det_h,
                            "lambda route H" + tag));
        out.merge(expect_eq(hankel_from_lambdas(lam, n, HankelWindow::H1), det_h1,
                            "lambda route H1" + tag));
        out.merge(expect_eq(hankel_from_lambdas(lam, n, HankelWindow::Hhat), det_hat,
                            "lambda route Hhat" + tag));
        out.merge(expect_eq(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::H), det_h,
                            "product route H" + tag));
        out.merge(expect_eq(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::H1), det_h1,
                            "product route H1" + tag));
        out.merge(expect_eq(hankel_closed_form(pa, pb, pc, rho, n, HankelWindow::Hhat), det_hat,
                            "product route Hhat" + tag));
        out.merge(expect_eq(closed_form(ClosedFormName::TypeA, {Rational(n)}), det_h,
                            "typea product U" + tag));
        out.merge(expect_eq(closed_form(ClosedFormName::TypeB, {Rational(n)}), det_h1,
                            "typeb product V" + tag));
        if (n <= 7) {
            out.merge(expect_eq(det_h, Rational(detail::table_u[std::size_t(n - 1)]),
                                "frozen U" + tag));
            out.merge(expect_eq(det_h1, Rational(detail::table_v[std::size_t(n - 1)]),
                                "frozen V" + tag));
            out.merge(expect_eq(det_hat, Rational(detail::table_w[std::size_t(n - 1)]),
                                "frozen W" + tag));
        }
    }
    return out;
}

// 2. Interleaved-window determinants split into products of the plain windows,
//    and the splits reproduce the frozen table.
inline CheckResult criterion_window_split(const AcceptanceProfile&) {
    using detail::expect_eq;
    const TruncatedSeries a = build_series("seq_a", 8);
    CheckResult out = verify_hat_split(a, 3);
    const auto& u = detail::table_u;
    const auto& v = detail::table_v;
    const auto& w = detail::table_w;
    for (std::size_t n = 1; n <= 3; ++n) {
        out.merge(expect_eq(Rational(w[2 * n - 1]), Rational(u[n - 1]) * Rational(v[n - 1]),
                            "even split n=" + std::to_string(n)));
        out.merge(expect_eq(Rational(w[2 * n]), Rational(u[n]) * Rational(v[n - 1]),
                            "odd split n=" + std::to_string(n)));
    }
    return out;
}

// 3. All seventy window determinants of the five companion sequences match the
//    frozen table, and the cross-sequence coincidence chains hold.
inline CheckResult criterion_window_table(const AcceptanceProfile&) {
    using detail::expect_eq;
    CheckResult out = CheckResult::ok();
    const long long order = 13;
    for (const auto& row : detail::window_table()) {
        const TruncatedSeries s = build_series(row.series, order);
        for (long long n = 1; n <= 7; ++n)
            out.merge(expect_eq(hankel_det(s, n, row.window),
                                Rational(row.values[std::size_t(n - 1)]),
                                std::string(row.series) + " window " +
                                    std::to_string(row.window) + " n=" + std::to_string(n)));
    }
    const TruncatedSeries sa = build_series("seq_a", order);
    const TruncatedSeries sb = build_series("seq_b", order);
    const TruncatedSeries sc = build_series("seq_c", order);
    for (long long n = 1; n <= 7; ++n) {
        const std::string tag = " chain n=" + std::to_string(n);
        const Rational u = hankel_det(sa, n, 0);
        out.merge(expect_eq(hankel_det(sb, n - 1, 1), u, "U via seq_b" + tag));
        out.merge(expect_eq(hankel_det(sc, n - 1, 0), u, "U via seq_c" + tag));
        const Rational v = hankel_det(sa, n, 1);
        out.merge(expect_eq(hankel_det(sb, n, 0), v, "V via seq_b" + tag));
        out.merge(expect_eq(hankel_det(sc, n - 1, 1), v, "V via seq_c" + tag));
    }
    return out;
}

// 4. The ten quotient evaluations hold coefficientwise under
//    cross-multiplication, the five auxiliary quotients likewise, and each
//    companion polynomial follows from the swap relation.
inline CheckResult criterion_quotient_coefficients(const AcceptanceProfile& pr) {
    using detail::expect_eq;
    CheckResult out = verify_series_identities("tcfs_all", pr.order);
    out.merge(verify_series_identities("q41_q45", pr.order));
    const auto& cases = gauss_cases();
    for (const auto& [p, q] : gauss_companion_pairs()) {
        const GaussCase& cp = cases[p];
        const GaussCase& cq = cases[q];
        const Rational denom = cp.a * (cp.c - cp.b);
        const Rational alpha = cp.c * (cp.a - cp.b) / denom;
        const Rational beta = cp.b * (cp.c - cp.a) / denom;
        const std::size_t len = std::max(cp.poly.size(), cq.poly.size());
        for (std::size_t k = 0; k < len; ++k) {
            const Rational lhs = k < cq.poly.size() ? cq.poly[k] : Rational(0);
            Rational rhs = k < cp.poly.size() ? beta * cp.poly[k] : Rational(0);
            if (k == 0) rhs += alpha;
            out.merge(expect_eq(lhs, rhs,
                                cq.label + " companion coefficient " + std::to_string(k)));
        }
        out.merge(verify_contiguous(cp.a, cp.b, cp.c, Rational(27, 4), 16));
    }
    return out;
}

// 5. Shifted-entry determinant families hold for a spread of parameter values.
inline CheckResult criterion_shifted_entries(const AcceptanceProfile& pr) {
    CheckResult out = CheckResult::ok();
    const std::array<Rational, 5> us = {Rational(1), Rational(3), rat(1, 2), Rational(-2),
                                        rat(7, 2)};
    for (const Rational& u : us) {
        IdentityParams p;
        p.n = pr.med_n;
        p.u = u;
        out.merge(verify_identity("err", p));
        out.merge(verify_identity("sdet", p));
    }
    IdentityParams p;
    p.n = pr.med_n;
    out.merge(verify_identity("rdet", p));
    return out;
}

// 6. Binomial-kernel determinants equal the window determinants, and the
//    general shifted kernel matches its product closed form.
inline CheckResult criterion_binomial_kernels(const AcceptanceProfile& pr) {
    CheckResult out = CheckResult::ok();
    IdentityParams p;
    p.n = pr.med_n;
    out.merge(verify_identity("un", p));
    out.merge(verify_identity("vn", p));
    for (long long r = 0; r <= pr.r_max; ++r) {
        IdentityParams q;
        q.n = pr.med_n;
        q.r = r;
        out.merge(verify_identity("gen_det", q));
    }
    return out;
}

// 7. Determinant-preserving series transforms hold on randomized inputs for
//    several transform constants.
inline CheckResult criterion_transform_properties(const AcceptanceProfile& pr) {
    CheckResult out = CheckResult::ok();
    std::mt19937 rng(20230823u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const std::array<Rational, 3> cs = {Rational(2), Rational(-1), rat(1, 3)};
    const long long order = 10;
    for (int trial = 0; trial < 50 && out.pass; ++trial) {
        TruncatedSeries a(order);
        a[0] = 1;
        for (long long k = 1; k <= order; ++k) a[k] = rat(num(rng), den(rng));
        for (const Rational& c : cs) {
            IdentityParams p;
            p.n = pr.prop_n;
            p.c = c;
            p.series = a;
            for (const char* tag : {"tsame", "tsame1", "hn1a"})
                out.merge(verify_identity(tag, p));
        }
    }
    return out;
}

// 8. The scaled window determinants of the two cube-root series match the
//    perturbed binomial determinants and the frozen product values.
inline CheckResult criterion_counting_products(const AcceptanceProfile& pr) {
    using detail::expect_eq;
    CheckResult out = CheckResult::ok();
    IdentityParams p;
    p.n = pr.med_n;
    for (const char* tag : {"asm", "asm_remark", "asm1"}) out.merge(verify_identity(tag, p));
    const std::array<long long, 6> products = {1, 2, 7, 42, 429, 7436};
    for (long long n = 1; n <= 6; ++n)
        out.merge(expect_eq(closed_form(ClosedFormName::Asm, {Rational(n)}),
                            Rational(products[std::size_t(n - 1)]),
                            "frozen product n=" + std::to_string(n)));
    return out;
}

// 9. Composite diagonal path families are counted by the tree sequences, for
//    every shift, and the slide-invariant counts match the frozen table.
inline CheckResult criterion_path_counts(const AcceptanceProfile& pr) {
    using detail::expect_eq;
    CheckResult out = CheckResult::ok();
    IdentityParams p;
    p.n = pr.path_n;
    out.merge(verify_path_identity("thm62", p));
    out.merge(verify_path_identity("thm75", p));
    for (long long r = 1; r <= pr.r_max; ++r) {
        IdentityParams q;
        q.n = pr.path_n;
        q.r = r;
        out.merge(verify_path_identity("thm83", q));
    }
    struct Entry {
        long long i, j, value;
    };
    const std::array<Entry, 9> table = {{{0, 0, 1},
                                         {0, 1, 2},
                                         {0, 2, 1},
                                         {1, 0, 2},
                                         {1, 1, 7},
                                         {1, 2, 9},
                                         {1, 3, 5},
                                         {1, 4, 1},
                                         {2, 1, 9}}};
    for (const auto& e : table)
        out.merge(expect_eq(Rational(paths::count_named("N_slide", {e.i, e.j})),
                            Rational(e.value),
                            "slide count (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                ")"));
    return out;
}

// 10. The coefficient-matrix factorization holds entrywise and the resulting
//     determinant identities hold for every shift.
inline CheckResult criterion_matrix_factorizations(const AcceptanceProfile& pr) {
    CheckResult out = CheckResult::ok();
    for (long long r = 1; r <= pr.r_max; ++r) {
        IdentityParams p;
        p.n = pr.det_n;
        p.r = r;
        out.merge(verify_path_identity("matrix_id", p));
        out.merge(verify_path_identity("e98_e99", p));
    }
    IdentityParams q;
    q.n = pr.det_n;
    out.merge(verify_path_identity("unt", q));
    return out;
}

// 11. Rational coefficient grids expand to the binomial and step-count arrays,
//     and the three-way determinant agreement holds.
inline CheckResult criterion_grid_expansions(const AcceptanceProfile& pr) {
    CheckResult out = CheckResult::ok();
    {
        IdentityParams p;
        p.n = pr.grid_n;
        p.r = 6;
        out.merge(verify_identity("gfzzz", p));
    }
    for (long long r = 0; r <= pr.r_max; ++r) {
        IdentityParams p;
        p.n = pr.grid_n;
        p.r = r;
        out.merge(verify_identity("e_r", p));
    }
    for (long long r = 1; r <= pr.r_max; ++r) {
        IdentityParams p;
        p.n = pr.grid_n - 1;
        p.r = r;
        out.merge(verify_ct_identity("gf_tr0", p));
        IdentityParams q;
        q.n = pr.det_n;
        q.r = r;
        out.merge(verify_path_identity("thm93", q));
        out.merge(verify_ct_identity("s9", q));
    }
    return out;
}

// 12. The step-splitting maps are endpoint-preserving bijections on
//     exhaustively enumerated domains, and brute-force nonintersecting tuple
//     counts equal their determinants.
inline CheckResult criterion_bijections(const AcceptanceProfile& pr) {
    using detail::expect_eq;
    using paths::LatticePath;
    CheckResult out = CheckResult::ok();
    for (long long r = 2; r <= 3; ++r) {
        for (long long i = 0; i <= 4; ++i) {
            for (long long j = 0; j <= r * i && out.pass; ++j) {
                const Rational expected = trinomial_r(j, r * i - j, r);
                if (expected > Rational(pr.enum_cap)) continue;
                const std::string tag = " (i=" + std::to_string(i) + ",j=" + std::to_string(j) +
                                        ",r=" + std::to_string(r) + ")";
                const auto counts = paths::gtv_counts(i, j, r);
                for (const auto& c : counts)
                    out.merge(expect_eq(Rational(c), expected, "phase count" + tag));
                const auto dom_v = paths::enumerate_paths(
                    paths::plain_problem(paths::t_steps(r), {0, -r * i}, {j, -j}), pr.enum_cap);
                out.merge(expect_eq(Rational(Integer(dom_v.size())), Rational(counts[0]),
                                    "vertical domain size" + tag));
                std::set<LatticePath> image_v;
                for (const auto& path : dom_v) {
                    const LatticePath mapped = paths::phi_v(path, r);
                    if (!(mapped.start == path.start) || !(mapped.end() == path.end()))
                        out.merge(CheckResult::fail("moved", "fixed endpoints",
                                                    "vertical map" + tag));
                    if (!(paths::phi_v_inv(mapped, r) == path))
                        out.merge(CheckResult::fail("different path", "round trip",
                                                    "vertical inverse" + tag));
                    image_v.insert(mapped);
                }
                out.merge(expect_eq(Rational(Integer(image_v.size())), Rational(counts[2]),
                                    "vertical image size" + tag));
                const auto dom_h = paths::enumerate_paths(
                    paths::plain_problem(paths::t_steps(r), {j, -j}, {r * i, 0}), pr.enum_cap);
                out.merge(expect_eq(Rational(Integer(dom_h.size())), Rational(counts[1]),
                                    "horizontal domain size" + tag));
                std::set<LatticePath> image_h;
                for (const auto& path : dom_h) {
                    const LatticePath mapped = paths::phi_h(path, r);
                    if (!(mapped.start == path.start) || !(mapped.end() == path.end()))
                        out.merge(CheckResult::fail("moved", "fixed endpoints",
                                                    "horizontal map" + tag));
                    if (!(paths::phi_h_inv(mapped, r) == path))
                        out.merge(CheckResult::fail("different path", "round trip",
                                                    "horizontal inverse" + tag));
                    image_h.insert(mapped);
                }
                out.merge(expect_eq(Rational(Integer(image_h.size())), Rational(counts[3]),
                                    "horizontal image size" + tag));
            }
        }
    }
    const TruncatedSeries a = build_series("seq_a", 2 * pr.tuple_n);
    for (long long n = 0; n <= pr.tuple_n; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        const Rational det_u = hankel_det(a, n, 0);
        const Rational right = Rational(paths::nonintersecting_tuples("UR", n));
        const Rational det_binom = det_exact(matrix_from(
            n, [](long long i, long long j) { return Rational(binom(i + j, 2 * i - j)); }));
        out.merge(expect_eq(right, det_binom, "tuples vs kernel determinant" + tag));
        out.merge(expect_eq(right, det_u, "tuples vs window determinant" + tag));
        out.merge(expect_eq(Rational(paths::nonintersecting_tuples("UL", n)), det_u,
                            "half-plane tuples" + tag));
        out.merge(expect_eq(Rational(paths::nonintersecting_tuples("UK", n)), det_u,
                            "composite tuples" + tag));
    }
    return out;
}

struct CriterionResult {
    int index = 0;
    std::string name;
    CheckResult check;
    double elapsed_ms = 0.0;
};

inline std::vector<CriterionResult> run_acceptance(const AcceptanceProfile& pr = {}) {
    using Runner = CheckResult (*)(const AcceptanceProfile&);
    struct Item {
        int index;
        const char* name;
        Runner run;
    };
    static const std::array<Item, 12> items = {{
        {1, "window determinant routes", &criterion_window_routes},
        {2, "interleaved window split", &criterion_window_split},
        {3, "sequence determinant table", &criterion_window_table},
        {4, "quotient series coefficients", &criterion_quotient_coefficients},
        {5, "shifted entry determinants", &criterion_shifted_entries},
        {6, "binomial kernel determinants", &criterion_binomial_kernels},
        {7, "determinant transform properties", &criterion_transform_properties},
        {8, "cube root series products", &criterion_counting_products},
        {9, "diagonal path counts", &criterion_path_counts},
        {10, "path matrix factorizations", &criterion_matrix_factorizations},
        {11, "grid generating functions", &criterion_grid_expansions},
        {12, "bijection and tuple counts", &criterion_bijections},
    }};
    std::vector<CriterionResult> out;
    for (const auto& it : items) {
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        r.index = it.index;
        r.name = it.name;
        try {
            r.check = it.run(pr);
        } catch (const std::exception& e) {
            r.check = CheckResult::fail("exception", "clean run", e.what());
        }
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hankel_lab

#endif
