#ifndef HANKEL_LAB_PATHS_HPP
#define HANKEL_LAB_PATHS_HPP

// Lattice path counting over plane regions, the step-splitting bijections
// between trinomial-step paths and two-phase composites, and brute-force
// counting of nonintersecting path tuples.
//
// Region rule: a step from p to q is legal iff some region's step set
// contains the step vector and both p and q lie in that region's closure.
// Closures overlap along the boundary lines, which is exactly what lets a
// path hand over from one phase to the next at a boundary lattice point.
// All steps move weakly right and up, so the boundary forms only increase
// along a path and the phases occur in order; no phase state is needed.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel_lab/rational.hpp"

namespace hankel_lab::paths {

struct Point {
    long long x = 0, y = 0;
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

struct Step {
    long long dx = 0, dy = 0;
    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

using StepSet = std::vector<Step>;

inline StepSet normal_steps() { return {{1, 0}, {0, 1}}; }
inline StepSet h_steps(long long r) { return {{r, 0}, {0, 1}}; }
inline StepSet v_steps(long long r) { return {{1, 0}, {0, r}}; }
inline StepSet t_steps(long long r) {
    if (r < 1) throw std::invalid_argument("t_steps: needs r >= 1");
    StepSet s;
    for (long long k = 0; k <= r; ++k) s.push_back({r - k, k});
    return s;
}

// Closed half-plane ax*x + ay*y >= c.
struct HalfPlane {
    long long ax = 0, ay = 0, c = 0;
    bool contains(Point p) const { return ax * p.x + ay * p.y >= c; }
};

struct Region {
    std::vector<HalfPlane> closure;
    StepSet steps;
    bool contains(Point p) const {
        for (const auto& h : closure)
            if (!h.contains(p)) return false;
        return true;
    }
};

struct PathProblem {
    Point start, end;
    std::vector<Region> regions;
    bool below_diagonal = false;  // y <= x at every vertex; touching allowed

    StepSet step_union() const {
        StepSet all;
        for (const auto& r : regions)
            for (const auto& s : r.steps)
                if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
        std::sort(all.begin(), all.end());
        return all;
    }

    bool vertex_ok(Point p) const { return !below_diagonal || p.y <= p.x; }

    bool step_ok(Point from, Point to, Step s) const {
        for (const auto& r : regions)
            if (std::find(r.steps.begin(), r.steps.end(), s) != r.steps.end() &&
                r.contains(from) && r.contains(to))
                return true;
        return false;
    }
};

// Single-region problem over the whole plane.
inline PathProblem plain_problem(StepSet steps, Point start, Point end,
                                 bool below_diagonal = false) {
    PathProblem p;
    p.start = start;
    p.end = end;
    p.regions = {Region{{}, std::move(steps)}};
    p.below_diagonal = below_diagonal;
    return p;
}

// Two phases split by the line ax*x + ay*y = cut: steps_low applies on the
// <= side, steps_high on the >= side.
inline PathProblem two_region_problem(long long ax, long long ay, long long cut,
                                      StepSet steps_low, StepSet steps_high, Point start,
                                      Point end, bool below_diagonal = false) {
    PathProblem p;
    p.start = start;
    p.end = end;
    p.regions = {Region{{HalfPlane{-ax, -ay, -cut}}, std::move(steps_low)},
                 Region{{HalfPlane{ax, ay, cut}}, std::move(steps_high)}};
    p.below_diagonal = below_diagonal;
    return p;
}

// Three-phase family split by y = -rx and x = -ry: vertical-step paths on the
// far side of the first line, trinomial steps of width r-1 between the lines,
// horizontal-step paths past the second line. Never above the diagonal.
inline PathProblem k_problem(long long r, Point start, Point end) {
    if (r < 2) throw std::invalid_argument("k_problem: needs r >= 2");
    PathProblem p;
    p.start = start;
    p.end = end;
    p.regions = {Region{{HalfPlane{-r, -1, 0}}, v_steps(r)},
                 Region{{HalfPlane{r, 1, 0}, HalfPlane{-1, -r, 0}}, t_steps(r - 1)},
                 Region{{HalfPlane{1, r, 0}}, h_steps(r)}};
    p.below_diagonal = true;
    return p;
}

// Three-phase family split by the coordinate axes: vertical-step paths left
// of x = 0, trinomial steps of width r in the fourth quadrant, horizontal-step
// paths above y = 0. Never above the diagonal.
inline PathProblem kt_problem(long long r, Point start, Point end) {
    if (r < 1) throw std::invalid_argument("kt_problem: needs r >= 1");
    PathProblem p;
    p.start = start;
    p.end = end;
    p.regions = {Region{{HalfPlane{-1, 0, 0}}, v_steps(r)},
                 Region{{HalfPlane{1, 0, 0}, HalfPlane{0, -1, 0}}, t_steps(r)},
                 Region{{HalfPlane{0, 1, 0}}, h_steps(r)}};
    p.below_diagonal = true;
    return p;
}

inline PathProblem family_problem(const std::string& family, long long r, Point start,
                                  Point end, bool below_diagonal = false) {
    if (family == "normal") return plain_problem(normal_steps(), start, end, below_diagonal);
    if (family == "h") return plain_problem(h_steps(r), start, end, below_diagonal);
    if (family == "v") return plain_problem(v_steps(r), start, end, below_diagonal);
    if (family == "t") return plain_problem(t_steps(r), start, end, below_diagonal);
    if (family == "k") return k_problem(r, start, end);
    if (family == "kt") return kt_problem(r, start, end);
    throw std::invalid_argument("unknown path family '" + family + "'");
}

struct LatticePath {
    Point start;
    std::vector<Step> steps;

    Point end() const {
        Point p = start;
        for (const auto& s : steps) {
            p.x += s.dx;
            p.y += s.dy;
        }
        return p;
    }
    std::vector<Point> vertices() const {
        std::vector<Point> v = {start};
        Point p = start;
        for (const auto& s : steps) {
            p.x += s.dx;
            p.y += s.dy;
            v.push_back(p);
        }
        return v;
    }
    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;
};

// Dynamic program over the bounding box; all steps move weakly up-right so a
// lexicographic sweep is a topological order. Linear in box area.
inline Integer count_paths(const PathProblem& prob) {
    const Point s = prob.start, e = prob.end;
    if (e.x < s.x || e.y < s.y) return 0;
    if (!prob.vertex_ok(s) || !prob.vertex_ok(e)) return 0;
    const long long w = e.x - s.x + 1, h = e.y - s.y + 1;
    const StepSet steps = prob.step_union();
    std::vector<Integer> ways(static_cast<std::size_t>(w * h), Integer(0));
    auto at = [&](long long x, long long y) -> Integer& {
        return ways[static_cast<std::size_t>((x - s.x) * h + (y - s.y))];
    };
    at(s.x, s.y) = 1;
    for (long long x = s.x; x <= e.x; ++x)
        for (long long y = s.y; y <= e.y; ++y) {
            if (x == s.x && y == s.y) continue;
            Point q{x, y};
            if (!prob.vertex_ok(q)) continue;
            Integer acc = 0;
            for (const auto& st : steps) {
                Point p{x - st.dx, y - st.dy};
                if (p.x < s.x || p.y < s.y) continue;
                if (!prob.vertex_ok(p)) continue;
                if (at(p.x, p.y) == 0) continue;
                if (prob.step_ok(p, q, st)) acc += at(p.x, p.y);
            }
            at(x, y) = acc;
        }
    return at(e.x, e.y);
}

// Exhaustive enumeration (exponential); guarded by a hard cap on the result
// size so misuse fails loudly instead of hanging.
inline std::vector<LatticePath> enumerate_paths(const PathProblem& prob,
                                                std::size_t cap = 1000000) {
    std::vector<LatticePath> out;
    if (prob.end.x < prob.start.x || prob.end.y < prob.start.y) return out;
    if (!prob.vertex_ok(prob.start)) return out;
    const StepSet steps = prob.step_union();
    LatticePath cur;
    cur.start = prob.start;
    auto dfs = [&](auto&& self, Point p) -> void {
        if (p == prob.end) {
            if (out.size() >= cap) throw std::length_error("enumerate_paths: cap exceeded");
            out.push_back(cur);
            return;
        }
        for (const auto& st : steps) {
            Point q{p.x + st.dx, p.y + st.dy};
            if (q.x > prob.end.x || q.y > prob.end.y) continue;
            if (!prob.vertex_ok(q)) continue;
            if (!prob.step_ok(p, q, st)) continue;
            cur.steps.push_back(st);
            self(self, q);
            cur.steps.pop_back();
        }
    };
    dfs(dfs, prob.start);
    return out;
}

// Named counting instances.
//   N_slide(i, j)      three-phase r=2 paths from (i-2, -2i-2) to (2j, -j)
//   As(i, j, r, s)     axis-split family from (0, s-ri) to (rj+s, 1)
//   Bs(i, j, r, s)     axis-split family from (-1, s-ri-1) to (rj+s-1, 0)
//   tv(m, i)           vertical-then-normal composite (0,-2m) -> (i,-i)
inline Integer count_named(const std::string& name, const std::vector<long long>& args) {
    auto need = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("count_named: " + name + " expects " +
                                        std::to_string(k) + " arguments");
    };
    if (name == "N_slide") {
        need(2);
        long long i = args[0], j = args[1];
        if (i < 0 || j < 0) throw std::invalid_argument("N_slide: needs i, j >= 0");
        return count_paths(k_problem(2, {i - 2, -2 * i - 2}, {2 * j, -j}));
    }
    if (name == "As") {
        need(4);
        long long i = args[0], j = args[1], r = args[2], s = args[3];
        return count_paths(kt_problem(r, {0, s - r * i}, {r * j + s, 1}));
    }
    if (name == "Bs") {
        need(4);
        long long i = args[0], j = args[1], r = args[2], s = args[3];
        return count_paths(kt_problem(r, {-1, s - r * i - 1}, {r * j + s - 1, 0}));
    }
    if (name == "tv") {
        need(2);
        long long m = args[0], i = args[1];
        return count_paths(
            two_region_problem(2, 1, 0, v_steps(2), normal_steps(), {0, -2 * m}, {i, -i}));
    }
    throw std::invalid_argument("count_named: unknown name '" + name + "'");
}

// The four path sets of the step-splitting correspondence, all of cardinality
// T^{(r)}(j, ri - j):
//   [0] trinomial paths (0, -ri) -> (j, -j)
//   [1] trinomial paths (j, -j) -> (ri, 0)
//   [2] vertical-then-trinomial composites (0, -ri) -> (j, -j), split at y = -rx
//   [3] trinomial-then-horizontal composites (j, -j) -> (ri, 0), split at x = -ry
inline std::array<Integer, 4> gtv_counts(long long i, long long j, long long r) {
    if (r < 2) throw std::invalid_argument("gtv_counts: needs r >= 2");
    std::array<Integer, 4> out;
    out[0] = count_paths(plain_problem(t_steps(r), {0, -r * i}, {j, -j}));
    out[1] = count_paths(plain_problem(t_steps(r), {j, -j}, {r * i, 0}));
    out[2] = count_paths(
        two_region_problem(r, 1, 0, v_steps(r), t_steps(r - 1), {0, -r * i}, {j, -j}));
    out[3] = count_paths(
        two_region_problem(1, r, 0, t_steps(r - 1), h_steps(r), {j, -j}, {r * i, 0}));
    return out;
}

namespace detail {

inline bool is_t_step(Step s, long long r) { return s.dx >= 0 && s.dy >= 0 && s.dx + s.dy == r; }

inline void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(std::string("phi map: path not in domain: ") + what);
}

}  // namespace detail

// Splits every trinomial step (r-k, k) into (1,0) + (r-1-k, k), keeps (0,r)
// steps whole, and sorts the pieces into a vertical-step phase followed by a
// width-(r-1) trinomial phase. Endpoints are preserved.
inline LatticePath phi_v(const LatticePath& path, long long r) {
    if (r < 2) throw std::invalid_argument("phi_v: needs r >= 2");
    LatticePath out;
    out.start = path.start;
    std::vector<Step> tail;
    for (const auto& s : path.steps) {
        detail::require(detail::is_t_step(s, r), "expected trinomial steps");
        if (s == Step{0, r}) {
            out.steps.push_back(s);
        } else {
            out.steps.push_back({1, 0});
            tail.push_back({s.dx - 1, s.dy});
        }
    }
    out.steps.insert(out.steps.end(), tail.begin(), tail.end());
    return out;
}

// Mirror image of phi_v: trinomial phase of width r-1 followed by a
// horizontal-step phase, splitting (r-k, k) with k >= 1 into (r-k, k-1) + (0,1).
inline LatticePath phi_h(const LatticePath& path, long long r) {
    if (r < 2) throw std::invalid_argument("phi_h: needs r >= 2");
    LatticePath out;
    out.start = path.start;
    std::vector<Step> tail;
    for (const auto& s : path.steps) {
        detail::require(detail::is_t_step(s, r), "expected trinomial steps");
        if (s == Step{r, 0}) {
            tail.push_back(s);
        } else {
            out.steps.push_back({s.dx, s.dy - 1});
            tail.push_back({0, 1});
        }
    }
    out.steps.insert(out.steps.end(), tail.begin(), tail.end());
    return out;
}

namespace detail {

// Index of the unique vertex lying on form = cut; the form is strictly
// increasing along any up-right path, so there is at most one.
inline std::size_t split_vertex(const LatticePath& path, long long ax, long long ay,
                                long long cut) {
    auto verts = path.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        long long v = ax * verts[i].x + ay * verts[i].y;
        if (v == cut) return i;
        if (v > cut) {
            require(i > 0 || v == cut, "starts past the split line");
            require(false, "no vertex on the split line");
        }
    }
    require(false, "never reaches the split line");
    return 0;
}

}  // namespace detail

// Inverse of phi_v. The split line has slope -r and passes through the
// intersection of the vertical line at the start with the slope -1 line at
// the end; for the canonical sets this is y = -rx.
inline LatticePath phi_v_inv(const LatticePath& path, long long r) {
    if (r < 2) throw std::invalid_argument("phi_v_inv: needs r >= 2");
    Point s = path.start, e = path.end();
    long long cut = (e.x + e.y - s.x) + r * s.x;
    std::size_t split = detail::split_vertex(path, r, 1, cut);
    std::vector<Step> head(path.steps.begin(), path.steps.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<Step> tail(path.steps.begin() + static_cast<std::ptrdiff_t>(split), path.steps.end());
    std::size_t singles = 0;
    for (const auto& st : head) {
        detail::require(st == Step{1, 0} || st == Step{0, r}, "vertical phase step");
        if (st == Step{1, 0}) ++singles;
    }
    for (const auto& st : tail) detail::require(detail::is_t_step(st, r - 1), "trinomial phase step");
    detail::require(singles == tail.size(), "phase sizes disagree");
    LatticePath out;
    out.start = path.start;
    std::size_t next = 0;
    for (const auto& st : head) {
        if (st == Step{0, r}) {
            out.steps.push_back(st);
        } else {
            Step t = tail[next++];
            out.steps.push_back({t.dx + 1, t.dy});
        }
    }
    return out;
}

// Inverse of phi_h; the split line has slope -1/r through the intersection of
// the horizontal line at the end with the slope -1 line at the start.
inline LatticePath phi_h_inv(const LatticePath& path, long long r) {
    if (r < 2) throw std::invalid_argument("phi_h_inv: needs r >= 2");
    Point s = path.start, e = path.end();
    long long cut = (s.x + s.y - e.y) + r * e.y;
    std::size_t split = detail::split_vertex(path, 1, r, cut);
    std::vector<Step> head(path.steps.begin(), path.steps.begin() + static_cast<std::ptrdiff_t>(split));
    std::vector<Step> tail(path.steps.begin() + static_cast<std::ptrdiff_t>(split), path.steps.end());
    std::size_t singles = 0;
    for (const auto& st : tail) {
        detail::require(st == Step{0, 1} || st == Step{r, 0}, "horizontal phase step");
        if (st == Step{0, 1}) ++singles;
    }
    for (const auto& st : head) detail::require(detail::is_t_step(st, r - 1), "trinomial phase step");
    detail::require(singles == head.size(), "phase sizes disagree");
    LatticePath out;
    out.start = path.start;
    std::size_t next = 0;
    for (const auto& st : tail) {
        if (st == Step{r, 0}) {
            out.steps.push_back(st);
        } else {
            Step t = head[next++];
            out.steps.push_back({t.dx, t.dy + 1});
        }
    }
    return out;
}

// Tuple families for the nonintersecting-path determinants. Configurations:
//   UR  normal paths (i, -2i) -> (2i, -i), no other constraint
//   UL  normal paths (-2i, -i) -> (2i, i) staying weakly below y = x/2
//   UK  three-phase r=2 paths (-2i, -2i) -> (2i, 2i)
inline std::vector<std::vector<LatticePath>> tuple_families(const std::string& config,
                                                            long long n) {
    std::vector<std::vector<LatticePath>> fams;
    for (long long i = 0; i < n; ++i) {
        PathProblem prob;
        if (config == "UR") {
            prob = plain_problem(normal_steps(), {i, -2 * i}, {2 * i, -i});
        } else if (config == "UL") {
            prob = plain_problem(normal_steps(), {-2 * i, -i}, {2 * i, i});
        } else if (config == "UK") {
            prob = k_problem(2, {-2 * i, -2 * i}, {2 * i, 2 * i});
        } else {
            throw std::invalid_argument("tuple_families: unknown config '" + config + "'");
        }
        auto paths = enumerate_paths(prob);
        if (config == "UL") {
            // keep paths weakly below y = x/2
            std::vector<LatticePath> kept;
            for (auto& p : paths) {
                bool ok = true;
                for (auto v : p.vertices())
                    if (2 * v.y > v.x) {
                        ok = false;
                        break;
                    }
                if (ok) kept.push_back(std::move(p));
            }
            paths = std::move(kept);
        }
        fams.push_back(std::move(paths));
    }
    return fams;
}

// Counts n-tuples (one path per family member) that are pairwise
// vertex-disjoint, by exhaustive search.
inline Integer nonintersecting_tuples(const std::string& config, long long n) {
    auto fams = tuple_families(config, n);
    std::vector<std::vector<std::vector<Point>>> verts(fams.size());
    for (std::size_t i = 0; i < fams.size(); ++i)
        for (const auto& p : fams[i]) verts[i].push_back(p.vertices());
    Integer total = 0;
    std::vector<const std::vector<Point>*> chosen;
    auto disjoint = [](const std::vector<Point>& a, const std::vector<Point>& b) {
        for (const auto& p : a)
            for (const auto& q : b)
                if (p == q) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == verts.size()) {
            ++total;
            return;
        }
        for (const auto& cand : verts[level]) {
            bool ok = true;
            for (const auto* prev : chosen)
                if (!disjoint(*prev, cand)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(&cand);
            self(self, level + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace hankel_lab::paths

#endif
