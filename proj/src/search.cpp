#include "ryserlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ryserlab/canonical.hpp"
#include "ryserlab/invariants.hpp"
#include "ryserlab/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ryserlab {

std::vector<int> admissible_sizes(const ParameterTuple& t) {
    if (t.a < 1)
        throw std::invalid_argument("tuple needs a positive class gap");
    std::vector<int> sizes;
    for (long long s = t.r2; s <= t.r1; ++s)
        if (s > t.lambda && (s - 2 * t.lambda) % t.a == 0)
            sizes.push_back(static_cast<int>(s));
    return sizes;
}

namespace {

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Columns that no placed row distinguishes form an interval group; a row
// candidate is a count per group, not a point set, so column symmetry is
// never explored twice.
struct Group {
    int begin = 0;
    int size = 0;
    int colsum = 0;
    std::uint64_t in_rows = 0; // bit j set: columns lie inside row j
};

struct Engine {
    // instance
    int v = 0;
    long long lambda = 0;
    int r1 = 0, r2 = 0, e1 = 0;
    ParameterTuple tuple;
    std::vector<int> sizes; // ascending
    int smin = 0, smax = 0;
    int total_sum = 0;
    const std::vector<std::vector<char>>* can = nullptr; // can[k][m]
    bool p1 = true, p2 = true, p3 = true;
    long long max_solutions = -1;
    unsigned long long node_budget = 0;
    double budget_secs = 0;

    // state
    std::chrono::steady_clock::time_point t0;
    std::vector<std::uint64_t> rows;
    std::vector<Group> groups;
    int sum_so_far = 0;
    unsigned long long nodes = 0;
    bool stop = false;
    bool incomplete = false;
    std::map<std::string, SearchSolution> found;

    void run_task(int first_size) {
        t0 = std::chrono::steady_clock::now();
        rows.clear();
        groups.assign(1, Group{0, v, 0, 0});
        sum_so_far = 0;
        std::vector<int> counts{first_size};
        commit_row(counts, first_size);
    }

    void commit_row(const std::vector<int>& counts, int total) {
        if (stop) return;
        if (node_budget && nodes >= node_budget) {
            incomplete = stop = true;
            return;
        }
        ++nodes;
        if (budget_secs > 0 && (nodes & 255u) == 0 &&
            elapsed_since(t0) > budget_secs) {
            incomplete = stop = true;
            return;
        }

        const int depth = static_cast<int>(rows.size());
        const int remaining = v - depth - 1;

        std::uint64_t mask = 0;
        std::vector<Group> next;
        next.reserve(groups.size() * 2);
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const Group& g = groups[gi];
            const int cnt = counts[gi];
            if (cnt > 0)
                mask |= ((std::uint64_t{1} << cnt) - 1) << g.begin;
            if (cnt == 0) {
                next.push_back(g);
            } else if (cnt == g.size) {
                next.push_back({g.begin, g.size, g.colsum + 1,
                                g.in_rows | (std::uint64_t{1} << depth)});
            } else {
                next.push_back({g.begin, cnt, g.colsum + 1,
                                g.in_rows | (std::uint64_t{1} << depth)});
                next.push_back({g.begin + cnt, g.size - cnt, g.colsum, g.in_rows});
            }
        }

        if (p1) {
            // Columns committed to the heavy replication (already past r2) or
            // to the light one (can no longer reach r1) must not outgrow the
            // point class counts, and every column must stay able to finish
            // at r2 or r1.
            long long committed_e1 = 0, committed_e2 = 0;
            for (const Group& g : next) {
                if (g.colsum + remaining < r2) return;
                const bool must_r1 = g.colsum > r2;
                const bool cant_r1 = g.colsum + remaining < r1;
                if (must_r1 && cant_r1) return;
                if (must_r1) committed_e1 += g.size;
                if (cant_r1) committed_e2 += g.size;
            }
            if (committed_e1 > e1 || committed_e2 > v - e1) return;
        }
        if (p2) {
            // The block just placed meets the heavy point class in exactly
            // lambda - t*d points and the light one in lambda + t*c, so the
            // columns already committed inside it must fit under those caps.
            const long long t = (total - 2 * lambda) / tuple.a;
            const long long tau1 = lambda - t * tuple.d;
            const long long tau2 = lambda + t * tuple.c;
            long long in_e1 = 0, in_e2 = 0;
            for (const Group& g : next) {
                if (!(g.in_rows >> depth & 1)) continue;
                if (g.colsum > r2) in_e1 += g.size;
                if (g.colsum + remaining < r1) in_e2 += g.size;
            }
            if (in_e1 > tau1 || in_e2 > tau2) return;
        }

        rows.push_back(mask);
        std::vector<Group> saved = std::move(groups);
        groups = std::move(next);
        sum_so_far += total;

        place_rows();

        sum_so_far -= total;
        groups = std::move(saved);
        rows.pop_back();
    }

    void place_rows() {
        if (stop) return;
        const int depth = static_cast<int>(rows.size());
        if (depth == v) {
            leaf();
            return;
        }

        const int G = static_cast<int>(groups.size());
        std::vector<int> suffix_total(G + 1, 0);
        for (int gi = G - 1; gi >= 0; --gi)
            suffix_total[gi] = suffix_total[gi + 1] + groups[gi].size;
        std::vector<std::vector<int>> suffix_in(depth, std::vector<int>(G + 1, 0));
        for (int j = 0; j < depth; ++j)
            for (int gi = G - 1; gi >= 0; --gi)
                suffix_in[j][gi] = suffix_in[j][gi + 1] +
                                   ((groups[gi].in_rows >> j & 1) ? groups[gi].size : 0);
        // Count vector of the previous row over the current groups; rows
        // from the third on may not exceed it lexicographically.
        std::vector<int> prev_cnt(G, 0);
        if (depth >= 2)
            for (int gi = 0; gi < G; ++gi)
                prev_cnt[gi] = (groups[gi].in_rows >> (depth - 1) & 1) ? groups[gi].size : 0;

        std::vector<int> partial(depth, 0);
        std::vector<int> counts(G, 0);

        auto rec = [&](auto&& self, int gi, bool tied, int total) -> void {
            if (stop) return;
            for (int j = 0; j < depth; ++j)
                if (partial[j] + suffix_in[j][gi] < lambda) return;
            if (total + suffix_total[gi] < smin) return;
            if (gi == G) {
                if (!std::binary_search(sizes.begin(), sizes.end(), total)) return;
                if (p3) {
                    const int rest = v - depth - 1;
                    const int need = total_sum - sum_so_far - total;
                    if (need < 0 || !(*can)[rest][need]) return;
                }
                commit_row(counts, total);
                return;
            }
            const Group& g = groups[gi];
            int hi = g.size;
            if (g.colsum + 1 > r1) hi = 0; // running column sums stay within r1
            if (tied && hi > prev_cnt[gi]) hi = prev_cnt[gi];
            if (hi > smax - total) hi = smax - total;
            int lo = smin - total - suffix_total[gi + 1];
            if (lo < 0) lo = 0;
            for (int j = 0; j < depth; ++j) {
                if (!(g.in_rows >> j & 1)) continue;
                const int cap = static_cast<int>(lambda) - partial[j];
                if (hi > cap) hi = cap;
                const int need =
                    static_cast<int>(lambda) - partial[j] - suffix_in[j][gi + 1];
                if (lo < need) lo = need;
            }
            for (int cnt = hi; cnt >= lo; --cnt) {
                counts[gi] = cnt;
                for (int j = 0; j < depth; ++j)
                    if (g.in_rows >> j & 1) partial[j] += cnt;
                self(self, gi + 1, tied && cnt == prev_cnt[gi], total + cnt);
                for (int j = 0; j < depth; ++j)
                    if (g.in_rows >> j & 1) partial[j] -= cnt;
                if (stop) return;
            }
        };
        rec(rec, 0, depth >= 2, 0);
    }

    void leaf() {
        long long got_e1 = 0;
        for (const Group& g : groups) {
            if (g.colsum == r1) got_e1 += g.size;
            else if (g.colsum != r2) return;
        }
        if (got_e1 != e1) return;

        IncidenceStructure s;
        s.v = v;
        s.blocks.reserve(v);
        for (std::uint64_t m : rows) {
            PointSet ps(v);
            for (int p = 0; p < v; ++p)
                if (m >> p & 1) ps.set(p);
            s.blocks.push_back(std::move(ps));
        }
        const DesignClass cls = classify(s);
        const auto* ry = std::get_if<RyserClass>(&cls);
        if (!ry || ry->lambda != lambda) return;
        const RyserInvariants inv = ryser_invariants(s);
        if (inv.r1 != tuple.r1 || inv.r2 != tuple.r2 || inv.e1 != tuple.e1 ||
            inv.e2 != tuple.e2 || inv.g != tuple.g || inv.c != tuple.c ||
            inv.d != tuple.d || inv.D != tuple.D || inv.x != tuple.x ||
            inv.y != tuple.y)
            return;

        IncidenceStructure canon = weak_canonical(s);
        std::string key = serialize_design(canon);
        if (found.count(key)) return;
        const bool t1 = type1_test(inv);
        found.emplace(std::move(key), SearchSolution{std::move(canon), t1});
        if (max_solutions >= 0 &&
            static_cast<long long>(found.size()) >= max_solutions) {
            incomplete = stop = true;
        }
    }
};

Engine make_engine(const SearchSpec& spec, const std::vector<int>& sizes,
                   const std::vector<std::vector<char>>& can, int total_sum) {
    Engine e;
    e.v = static_cast<int>(spec.tuple.v);
    e.lambda = spec.tuple.lambda;
    e.r1 = static_cast<int>(spec.tuple.r1);
    e.r2 = static_cast<int>(spec.tuple.r2);
    e.e1 = static_cast<int>(spec.tuple.e1);
    e.tuple = spec.tuple;
    e.sizes = sizes;
    e.smin = sizes.front();
    e.smax = sizes.back();
    e.total_sum = total_sum;
    e.can = &can;
    e.p1 = spec.prunes.column_sums;
    e.p2 = spec.prunes.tau_bounds;
    e.p3 = spec.prunes.size_multiset;
    e.max_solutions = spec.limits.max_solutions;
    e.node_budget = spec.limits.node_budget;
    e.budget_secs = spec.limits.budget_secs;
    return e;
}

} // namespace

SearchResult search_designs(const SearchSpec& spec, int jobs) {
    const ParameterTuple& t = spec.tuple;
    if (t.v > spec.limits.point_cap)
        throw std::invalid_argument("instance has " + std::to_string(t.v) +
                                    " points, over the cap of " +
                                    std::to_string(spec.limits.point_cap));
    if (t.v < 2 || t.v > 64)
        throw std::invalid_argument("search supports 2..64 points");
    if (t.lambda < 1 || t.a < 1 || t.r1 <= t.r2 || t.r2 < 2 || t.e1 < 1 ||
        t.e2 < 1 || t.e1 + t.e2 != t.v || t.r1 + t.r2 != t.v + 1)
        throw std::invalid_argument("inconsistent parameter tuple");

    const auto wall0 = std::chrono::steady_clock::now();
    SearchResult res;

    const std::vector<int> sizes = admissible_sizes(t);
    const int total_sum = static_cast<int>(t.e1 * t.r1 + t.e2 * t.r2);

    // Completion table: can[k][m] holds when some multiset of k admissible
    // sizes sums to m.  Doubles as the up-front feasibility test.
    std::vector<std::vector<char>> can(t.v + 1,
                                       std::vector<char>(total_sum + 1, 0));
    can[0][0] = 1;
    for (int k = 1; k <= t.v; ++k)
        for (int m = 0; m <= total_sum; ++m)
            for (int s : sizes)
                if (m >= s && can[k - 1][m - s]) {
                    can[k][m] = 1;
                    break;
                }
    if (sizes.empty() || !can[t.v][total_sum]) {
        res.status = SearchStatus::Infeasible;
        res.wall_secs = elapsed_since(wall0);
        return res;
    }

    // One task per non-average first-block size.  Every design here has at
    // least one block off the average (a single size would make it
    // symmetric), so these tasks cover the space; per-task budgets keep the
    // outcome independent of scheduling.
    std::vector<int> tasks;
    for (int s : sizes)
        if (s != 2 * t.lambda) tasks.push_back(s);

    std::vector<Engine> engines;
    engines.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i)
        engines.push_back(make_engine(spec, sizes, can, total_sum));

    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            engines[i].run_task(tasks[i]);
    } else {
#ifdef _OPENMP
        const int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::size_t i = 0; i < tasks.size(); ++i)
            engines[i].run_task(tasks[i]);
#else
        for (std::size_t i = 0; i < tasks.size(); ++i)
            engines[i].run_task(tasks[i]);
#endif
    }

    std::map<std::string, SearchSolution> merged;
    for (Engine& e : engines) {
        res.nodes += e.nodes;
        if (e.incomplete) res.status = SearchStatus::Incomplete;
        for (auto& kv : e.found)
            merged.emplace(kv.first, std::move(kv.second));
    }
    res.found = static_cast<long long>(merged.size());
    for (auto& kv : merged)
        res.solutions.push_back(std::move(kv.second));
    if (spec.limits.max_solutions >= 0 &&
        static_cast<long long>(res.solutions.size()) > spec.limits.max_solutions)
        res.solutions.resize(static_cast<std::size_t>(spec.limits.max_solutions));
    res.wall_secs = elapsed_since(wall0);
    return res;
}

Type2Report search_type2(long long lambda, long long v_cap,
                         const SearchLimits& limits, const PruneToggles& prunes,
                         int jobs) {
    Type2Report rep;
    for (const ParameterTuple& t : enumerate_tuples(lambda)) {
        if (t.v > v_cap) continue;
        const Verdict verdict = apply_rules(t);
        if (verdict.kind == VerdictKind::Eliminated) continue;

        SearchSpec spec{t, limits, prunes};
        const SearchResult r = search_designs(spec, jobs);

        Type2Row row;
        row.tuple = t;
        row.verdict = verdict;
        row.status = r.status;
        row.solutions = r.found;
        for (const SearchSolution& sol : r.solutions)
            if (!sol.type1) ++row.type2;
        row.nodes = r.nodes;
        if (row.type2 > 0) rep.any_type2 = true;
        if (r.status == SearchStatus::Incomplete) rep.all_complete = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace ryserlab
