// Command line front end: exact value tables, identity verification, the
// acceptance gate, continued-fraction expansion, and lattice path counting.
// Exit codes: 0 all checks passed / values printed, 1 at least one mismatch,
// 2 usage error. Parameter caps produce a `skipped` report, not a failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankel_lab/acceptance.hpp"
#include "hankel_lab/reports.hpp"

namespace {

using namespace hankel_lab;

// Truncation ceiling; HANKEL_LAB_MAX_ORDER overrides the default.
long long max_order_cap() {
    if (const char* s = std::getenv("HANKEL_LAB_MAX_ORDER")) {
        try {
            long long v = std::stoll(s);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 256;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string quote_list(const std::vector<std::string>& vals) {
    std::string out = "[";
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (k) out += ",";
        out += "\"" + vals[k] + "\"";
    }
    return out + "]";
}

bool parse_point(const std::string& text, paths::Point& out) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        out.x = std::stoll(text.substr(0, comma));
        out.y = std::stoll(text.substr(comma + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int emit(const VerificationReport& rep, ReportFormat fmt) {
    print_reports(std::cout, {rep}, fmt);
    if (rep.status == "fail") return 1;
    return 0;
}

int run_table(const std::string& name, long long nmax, ReportFormat fmt) {
    if (nmax < 1) {
        std::cerr << "table: --n must be >= 1\n";
        return 2;
    }
    const long long cap = std::min<long long>(64, max_order_cap());
    if (nmax > cap)
        return emit(skipped_report("table " + name, "n=" + std::to_string(nmax),
                                   "cap exceeded: n <= " + std::to_string(cap)),
                    fmt);
    std::vector<std::string> vals;
    long long first = 1;
    if (name == "U" || name == "V") {
        const auto which = name == "U" ? ClosedFormName::TypeA : ClosedFormName::TypeB;
        for (long long n = 1; n <= nmax; ++n)
            vals.push_back(to_string(closed_form(which, {Rational(n)})));
    } else if (name == "W") {
        const TruncatedSeries a = build_series("seq_a", nmax);
        for (long long n = 1; n <= nmax; ++n) vals.push_back(to_string(hankel_hat_det(a, n)));
    } else if (name == "asm") {
        for (long long n = 1; n <= nmax; ++n)
            vals.push_back(to_string(closed_form(ClosedFormName::Asm, {Rational(n)})));
    } else if (name == "a" || name == "b" || name == "c" || name == "d" || name == "e") {
        first = 0;
        const TruncatedSeries s = build_series("seq_" + name, nmax);
        for (long long n = 0; n <= nmax; ++n) vals.push_back(to_string(s[n]));
    } else if (name == "r") {
        first = 0;
        for (long long n = 0; n <= nmax; ++n) vals.push_back(to_string(seq_r_term(n)));
    } else {
        std::cerr << "unknown table '" << name << "' (expected U V W asm a b c d e r)\n";
        return 2;
    }
    switch (fmt) {
        case ReportFormat::Pretty: {
            for (std::size_t k = 0; k < vals.size(); ++k)
                std::cout << (k ? " " : "") << vals[k];
            std::cout << "\n";
            break;
        }
        case ReportFormat::Json:
            std::cout << "{\"name\":\"" << name << "\",\"first_n\":" << first
                      << ",\"values\":" << quote_list(vals) << "}\n";
            break;
        case ReportFormat::Csv: {
            std::cout << "name,n,value\n";
            for (std::size_t k = 0; k < vals.size(); ++k)
                std::cout << name << "," << (first + static_cast<long long>(k)) << "," << vals[k]
                          << "\n";
            break;
        }
    }
    return 0;
}

struct VerifyFlags {
    std::optional<long long> n, r, s, order;
    std::optional<std::string> u, c;
};

int run_verify(const std::string& ident, const VerifyFlags& f, ReportFormat fmt) {
    static const std::set<std::string> series_tags = {
        "functional_eq", "f_kth", "g_kth", "kth", "tcfs_all", "q41_q45", "fs_expansion"};
    static const std::set<std::string> window_tags = {"un",   "vn",    "err",   "sdet",
                                                      "rdet", "tsame", "tsame1", "hn1a",
                                                      "asm",  "asm_remark", "asm1", "gen_det",
                                                      "gfzzz", "e_r"};
    static const std::set<std::string> ct_tags = {"t2ab", "trexpand", "gf_tr0", "s9"};
    static const std::set<std::string> path_tags = {"matrix_id", "unt",   "e98_e99", "thm93",
                                                    "thm62",     "thm75", "thm83",   "lemma85"};
    const long long cap = max_order_cap();
    const auto t0 = std::chrono::steady_clock::now();

    if (series_tags.count(ident)) {
        const long long order = f.order.value_or(24);
        std::string params = "order=" + std::to_string(order);
        std::vector<Rational> extra;
        try {
            if (ident == "fs_expansion") {
                const Rational u = f.u ? parse_rational(*f.u) : Rational(1);
                extra = {u};
                params += " u=" + to_string(u);
            } else if (ident == "f_kth" || ident == "g_kth" || ident == "kth") {
                const long long kmax = f.n.value_or(6);
                extra = {Rational(kmax)};
                params += " kmax=" + std::to_string(kmax);
            }
            if (order < 1) {
                std::cerr << "verify: --order must be >= 1\n";
                return 2;
            }
            if (order > cap)
                return emit(skipped_report(ident, params,
                                           "cap exceeded: order <= " + std::to_string(cap)),
                            fmt);
            const CheckResult ck = verify_series_identities(ident, order, extra);
            return emit(make_report(ident, params, ck, ms_since(t0)), fmt);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    const bool is_window = window_tags.count(ident) > 0;
    const bool is_ct = ct_tags.count(ident) > 0;
    const bool is_path = path_tags.count(ident) > 0;
    if (!is_window && !is_ct && !is_path) {
        std::cerr << "unknown identity '" << ident << "'\n";
        return 2;
    }

    IdentityParams p;
    std::string params;
    try {
        if (f.n) p.n = *f.n;
        if (f.r) p.r = *f.r;
        if (f.s) p.s = *f.s;
        if (f.u) p.u = parse_rational(*f.u);
        if (f.c) p.c = parse_rational(*f.c);
        if (f.order) p.order = *f.order;
        p.order = std::min<long long>(p.order, cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const bool takes_r = ident == "gen_det" || ident == "gfzzz" || ident == "e_r" ||
                         ident == "trexpand" || ident == "gf_tr0" || ident == "s9" ||
                         ident == "matrix_id" || ident == "e98_e99" || ident == "thm93" ||
                         ident == "thm83" || ident == "lemma85";
    const bool takes_s = ident == "e98_e99" || ident == "thm83" || ident == "lemma85";
    const bool takes_u = ident == "err" || ident == "sdet";
    const bool takes_c = ident == "tsame" || ident == "tsame1" || ident == "hn1a";
    params = "n=" + std::to_string(p.n);
    if (takes_r) params += " r=" + std::to_string(p.r);
    if (takes_s) params += " s=" + (p.s < 0 ? std::string("all") : std::to_string(p.s));
    if (takes_u) params += " u=" + to_string(p.u);
    if (takes_c) params += " c=" + to_string(p.c);
    if (f.order) params += " order=" + std::to_string(p.order);

    if (p.n < 1) {
        std::cerr << "verify: --n must be >= 1\n";
        return 2;
    }
    if (p.n > 12)
        return emit(skipped_report(ident, params, "cap exceeded: n <= 12"), fmt);
    if (takes_r && p.r > 8)
        return emit(skipped_report(ident, params, "cap exceeded: r <= 8"), fmt);

    try {
        CheckResult ck;
        if (is_window) ck = verify_identity(ident, p);
        else if (is_ct) ck = verify_ct_identity(ident, p);
        else ck = verify_path_identity(ident, p);
        return emit(make_report(ident, params, ck, ms_since(t0)), fmt);
    } catch (const std::length_error& e) {
        return emit(skipped_report(ident, params, std::string("cap exceeded: ") + e.what()),
                    fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_all(const std::string& profile, ReportFormat fmt) {
    const auto results = run_acceptance(acceptance_profile(profile));
    std::vector<VerificationReport> reps;
    reps.reserve(results.size());
    for (const auto& c : results) {
        char idx[8];
        std::snprintf(idx, sizeof idx, "%02d", c.index);
        reps.push_back(make_report("gate " + std::string(idx) + " " + c.name,
                                   "profile=" + profile, c.check, c.elapsed_ms));
    }
    print_reports(std::cout, reps, fmt);
    return all_passed(reps) ? 0 : 1;
}

int run_cfrac(const std::string& name, long long depth, std::optional<long long> r,
              const std::optional<std::string>& u, ReportFormat fmt) {
    if (depth < 1) {
        std::cerr << "cfrac: --depth must be >= 1\n";
        return 2;
    }
    const long long cap = max_order_cap();
    if (depth > cap)
        return emit(skipped_report("cfrac " + name, "depth=" + std::to_string(depth),
                                   "cap exceeded: depth <= " + std::to_string(cap)),
                    fmt);
    std::vector<Rational> extra;
    if (name == "s_u") extra = {u ? parse_rational(*u) : Rational(1)};
    if (name == "g_r" || name == "f_r") extra = {Rational(r.value_or(3))};
    try {
        const TruncatedSeries s = build_series(name, depth + 1, extra);
        const SFraction frac = extract_sfraction(s, depth);
        std::vector<std::string> vals;
        for (const Rational& l : frac.lambdas) vals.push_back(to_string(l));
        switch (fmt) {
            case ReportFormat::Pretty: {
                for (std::size_t k = 0; k < vals.size(); ++k)
                    std::cout << (k ? " " : "") << vals[k];
                if (frac.terminated)
                    std::cout << (vals.empty() ? "" : " ") << "(terminates at depth "
                              << frac.depth() << ")";
                std::cout << "\n";
                break;
            }
            case ReportFormat::Json:
                std::cout << "{\"series\":\"" << name << "\",\"depth\":" << depth
                          << ",\"terminated\":" << (frac.terminated ? "true" : "false")
                          << ",\"lambdas\":" << quote_list(vals) << "}\n";
                break;
            case ReportFormat::Csv: {
                std::cout << "k,lambda\n";
                for (std::size_t k = 0; k < vals.size(); ++k)
                    std::cout << (k + 1) << "," << vals[k] << "\n";
                break;
            }
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int print_count(const std::string& label, const std::string& detail_json, const Integer& count,
                ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Pretty:
            std::cout << count.str() << "\n";
            break;
        case ReportFormat::Json:
            std::cout << "{" << detail_json << ",\"count\":\"" << count.str() << "\"}\n";
            break;
        case ReportFormat::Csv:
            std::cout << "instance,count\n" << label << "," << count.str() << "\n";
            break;
    }
    return 0;
}

int run_paths_count(const std::string& family, const std::string& from_s,
                    const std::string& to_s, long long r, bool below, ReportFormat fmt) {
    paths::Point a, b;
    if (!parse_point(from_s, a) || !parse_point(to_s, b)) {
        std::cerr << "paths count: --from/--to expect \"x,y\" (use --from=-2,-2 for "
                     "negatives)\n";
        return 2;
    }
    const long long side_x = std::llabs(b.x - a.x) + 1, side_y = std::llabs(b.y - a.y) + 1;
    const std::string params = "family=" + family + " from=" + from_s + " to=" + to_s +
                               " r=" + std::to_string(r);
    if (side_x * side_y > 4000000)
        return emit(skipped_report("paths count", params, "cap exceeded: bounding box"), fmt);
    try {
        const Integer count = paths::count_paths(paths::family_problem(family, r, a, b, below));
        const std::string detail = "\"family\":\"" + family + "\",\"from\":[" +
                                   std::to_string(a.x) + "," + std::to_string(a.y) +
                                   "],\"to\":[" + std::to_string(b.x) + "," +
                                   std::to_string(b.y) + "],\"r\":" + std::to_string(r) +
                                   ",\"below_diagonal\":" + (below ? "true" : "false");
        return print_count(family + " " + from_s + " " + to_s, detail, count, fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_paths_named(const std::string& name, const std::optional<long long>& i,
                    const std::optional<long long>& j, const std::optional<long long>& r,
                    const std::optional<long long>& s, const std::optional<long long>& m,
                    ReportFormat fmt) {
    std::vector<long long> args;
    auto need = [&](std::initializer_list<std::pair<const char*, const std::optional<long long>*>>
                        wanted) {
        for (const auto& [key, opt] : wanted) {
            if (!opt->has_value()) {
                std::cerr << "paths named " << name << ": missing --" << key << "\n";
                return false;
            }
            args.push_back(**opt);
        }
        return true;
    };
    bool ok;
    if (name == "N_slide") ok = need({{"i", &i}, {"j", &j}});
    else if (name == "As" || name == "Bs") ok = need({{"i", &i}, {"j", &j}, {"r", &r}, {"s", &s}});
    else if (name == "tv") ok = need({{"m", &m}, {"i", &i}});
    else {
        std::cerr << "unknown named instance '" << name << "' (N_slide As Bs tv)\n";
        return 2;
    }
    if (!ok) return 2;
    try {
        const Integer count = paths::count_named(name, args);
        std::string detail = "\"name\":\"" + name + "\",\"args\":[";
        for (std::size_t k = 0; k < args.size(); ++k)
            detail += (k ? "," : "") + std::to_string(args[k]);
        detail += "]";
        return print_count(name, detail, count, fmt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hankel determinant, continued fraction, and lattice path toolkit"};
    app.require_subcommand(1);
    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));

    auto* table = app.add_subcommand("table", "print a value table (U V W asm a b c d e r)");
    table->fallthrough();
    std::string table_name;
    long long table_n = 7;
    table->add_option("name", table_name, "table name")->required();
    table->add_option("--n", table_n, "largest index");

    auto* verify = app.add_subcommand("verify", "verify one identity family");
    verify->fallthrough();
    std::string ident;
    VerifyFlags vf;
    verify->add_option("identity", ident, "identity tag")->required();
    verify->add_option("--n", vf.n, "window / index cap");
    verify->add_option("--r", vf.r, "family parameter");
    verify->add_option("--s", vf.s, "shift (omit for every applicable shift)");
    verify->add_option("--u", vf.u, "series parameter (rational, p/q)");
    verify->add_option("--c", vf.c, "transform constant (rational, p/q)");
    verify->add_option("--order", vf.order, "truncation order");

    auto* all = app.add_subcommand("all", "run the twelve-point acceptance gate");
    all->fallthrough();
    std::string profile = "quick";
    all->add_option("--profile", profile, "cap profile")
        ->check(CLI::IsMember({"quick", "full"}));

    auto* cfrac = app.add_subcommand("cfrac", "continued-fraction coefficients of a series");
    cfrac->fallthrough();
    std::string cf_name;
    long long cf_depth = 8;
    std::optional<long long> cf_r;
    std::optional<std::string> cf_u;
    cfrac->add_option("series", cf_name, "series name")->required();
    cfrac->add_option("--depth", cf_depth, "number of coefficients");
    cfrac->add_option("--r", cf_r, "family parameter for g_r / f_r");
    cfrac->add_option("--u", cf_u, "parameter for s_u");

    auto* paths_cmd = app.add_subcommand("paths", "lattice path counting");
    paths_cmd->fallthrough();
    paths_cmd->require_subcommand(1);
    auto* pcount = paths_cmd->add_subcommand("count", "count paths between two points");
    pcount->fallthrough();
    std::string family, from_s, to_s;
    long long path_r = 2;
    bool below = false;
    pcount->add_option("family", family, "step family (normal h v t k kt)")->required();
    pcount->add_option("--from", from_s, "start point x,y")->required();
    pcount->add_option("--to", to_s, "end point x,y")->required();
    pcount->add_option("--r", path_r, "step width parameter");
    pcount->add_flag("--below-diag", below, "restrict to y <= x");
    auto* pnamed = paths_cmd->add_subcommand("named", "count a named instance");
    pnamed->fallthrough();
    std::string named_name;
    std::optional<long long> ni, nj, nr, ns, nm;
    pnamed->add_option("name", named_name, "instance name (N_slide As Bs tv)")->required();
    pnamed->add_option("--i", ni);
    pnamed->add_option("--j", nj);
    pnamed->add_option("--r", nr);
    pnamed->add_option("--s", ns);
    pnamed->add_option("--m", nm);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const ReportFormat fmt = report_format(format);
    try {
        if (table->parsed()) return run_table(table_name, table_n, fmt);
        if (verify->parsed()) return run_verify(ident, vf, fmt);
        if (all->parsed()) return run_all(profile, fmt);
        if (cfrac->parsed()) return run_cfrac(cf_name, cf_depth, cf_r, cf_u, fmt);
        if (paths_cmd->parsed()) {
            if (pcount->parsed()) return run_paths_count(family, from_s, to_s, path_r, below, fmt);
            if (pnamed->parsed()) return run_paths_named(named_name, ni, nj, nr, ns, nm, fmt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
