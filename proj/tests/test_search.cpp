#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "ryserlab/canonical.hpp"
#include "ryserlab/catalog.hpp"
#include "ryserlab/complement.hpp"
#include "ryserlab/design.hpp"
#include "ryserlab/feasibility.hpp"
#include "ryserlab/invariants.hpp"
#include "ryserlab/io.hpp"
#include "ryserlab/search.hpp"
#include "helpers.hpp"

using namespace ryserlab;

namespace {

ParameterTuple tuple_at(long long lambda, long long v, long long r1) {
    for (const auto& t : enumerate_tuples(lambda))
        if (t.v == v && t.r1 == r1) return t;
    FAIL("no tuple (" << lambda << "," << v << "," << r1 << ")");
    return {};
}

bool tuple_matches(const RyserInvariants& inv, const ParameterTuple& t) {
    return inv.r1 == t.r1 && inv.r2 == t.r2 && inv.e1 == t.e1 && inv.e2 == t.e2 &&
           inv.g == t.g && inv.c == t.c && inv.d == t.d && inv.D == t.D && inv.x == t.x &&
           inv.y == t.y;
}

// Exhaustive reference enumeration, independent of the search engine: every
// set of v distinct blocks (any size strictly between lambda and v) whose
// pairwise intersections all equal lambda, filtered down to structures whose
// computed invariants match the tuple.  Block sets are visited once by
// choosing candidate indices in increasing order.
std::set<std::string> brute_force_keys(const ParameterTuple& t) {
    const int v = static_cast<int>(t.v);
    REQUIRE(v <= 14); // keeps the candidate mask in one word and the run short
    std::vector<PointSet> cand;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << v); ++mask) {
        const int sz = std::popcount(mask);
        if (sz <= t.lambda) continue;
        PointSet ps(v);
        for (int p = 0; p < v; ++p)
            if ((mask >> p) & 1) ps.set(p);
        cand.push_back(ps);
    }
    const int n = static_cast<int>(cand.size());
    std::set<std::string> keys;
    std::vector<int> chosen;

    auto leaf = [&]() {
        IncidenceStructure s;
        s.v = v;
        for (int i : chosen) s.blocks.push_back(cand[i]);
        const DesignClass cls = classify(s);
        if (!std::holds_alternative<RyserClass>(cls)) return;
        if (std::get<RyserClass>(cls).lambda != t.lambda) return;
        if (!tuple_matches(ryser_invariants(s), t)) return;
        keys.insert(canonical_key(s));
    };

    // pool holds the candidates compatible with everything chosen so far, in
    // increasing index order.
    std::function<void(const std::vector<int>&)> rec =
        [&](const std::vector<int>& pool) {
            const int depth = static_cast<int>(chosen.size());
            if (depth == v) {
                leaf();
                return;
            }
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (static_cast<int>(pool.size() - k) < v - depth) break;
                const int i = pool[k];
                std::vector<int> next;
                for (std::size_t m = k + 1; m < pool.size(); ++m)
                    if (cand[i].intersection_count(cand[pool[m]]) == t.lambda)
                        next.push_back(pool[m]);
                chosen.push_back(i);
                rec(next);
                chosen.pop_back();
            }
        };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    rec(all);
    return keys;
}

std::set<std::string> engine_keys(const SearchResult& res) {
    std::set<std::string> keys;
    for (const auto& sol : res.solutions) keys.insert(serialize_design(sol.design));
    return keys;
}

} // namespace

TEST_CASE("admissible sizes per tuple") {
    CHECK(admissible_sizes(tuple_at(2, 7, 5)) == std::vector<int>{3, 4, 5});
    CHECK(admissible_sizes(tuple_at(3, 13, 10)) == std::vector<int>{4, 6, 8, 10});
    CHECK(admissible_sizes(tuple_at(3, 9, 6)) == std::vector<int>{4, 6});
    CHECK(admissible_sizes(tuple_at(3, 11, 7)) == std::vector<int>{5, 6, 7});
    CHECK(admissible_sizes(tuple_at(3, 13, 9)) == std::vector<int>{5, 6, 7, 8, 9});
}

TEST_CASE("search finds the complemented fano plane and nothing else") {
    SearchSpec spec;
    spec.tuple = tuple_at(2, 7, 5);
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Complete);
    CHECK(res.found == 1);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0].type1);
    CHECK(res.nodes > 0);

    const auto expected = canonical_key(testutil::derived("fano", 0));
    CHECK(serialize_design(res.solutions[0].design) == expected);

    // The solution is stored canonically and still verifies.
    const auto& d = res.solutions[0].design;
    CHECK(describe(classify(d)) == "Ryser v=7 lambda=2");
    const RyserInvariants inv = ryser_invariants(d);
    CHECK(verify_equations(d, inv, all_block_profiles(d, inv)).overall);
    auto sizes = block_sizes(d);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{3, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("search agrees with brute force on small instances") {
    for (auto [lam, v, r1] : {std::tuple<long long, long long, long long>{2, 7, 5},
                              {2, 6, 4},
                              {2, 8, 5}}) {
        CAPTURE(v);
        SearchSpec spec;
        spec.tuple = tuple_at(lam, v, r1);
        const SearchResult res = search_designs(spec);
        CHECK(res.status == SearchStatus::Complete);
        CHECK(engine_keys(res) == brute_force_keys(spec.tuple));
    }
}

TEST_CASE("eliminated tuples really have no realizations") {
    SearchSpec spec;
    spec.tuple = tuple_at(2, 6, 4); // E1-eliminated
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Complete);
    CHECK(res.found == 0);
    CHECK(res.solutions.empty());

    spec.tuple = tuple_at(2, 8, 5); // E1-eliminated
    const SearchResult res2 = search_designs(spec);
    CHECK(res2.status == SearchStatus::Complete);
    CHECK(res2.found == 0);
}

TEST_CASE("a feasible size multiset can still have zero designs") {
    SearchSpec spec;
    spec.tuple = tuple_at(3, 9, 6);
    const SearchResult res = search_designs(spec);
    // Sizes {4,6} admit a column-sum multiset, so the tree is searched.
    CHECK(res.status == SearchStatus::Complete);
    CHECK(res.nodes > 0);
    CHECK(res.found == 0);
}

TEST_CASE("search realizes the near-pencil tuple") {
    ParameterTuple t;
    t.lambda = 1;
    t.v = 4;
    t.r1 = 3;
    t.r2 = 2;
    t.g = 1;
    t.c = 2;
    t.d = 1;
    t.a = 1;
    t.e1 = 1;
    t.e2 = 3;
    t.D = -1;
    t.x = 1;
    t.y = 0;
    SearchSpec spec;
    spec.tuple = t;
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Complete);
    REQUIRE(res.found == 1);
    CHECK(res.solutions[0].type1);
    CHECK(serialize_design(res.solutions[0].design) ==
          canonical_key(testutil::near_pencil4()));
}

TEST_CASE("search finds the complemented biplane at v=11") {
    SearchSpec spec;
    spec.tuple = tuple_at(3, 11, 7);
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Complete);
    CHECK(res.found >= 1);
    const auto keys = engine_keys(res);
    CHECK(keys.count(canonical_key(testutil::derived("biplane11", 0))) == 1);
    for (const auto& sol : res.solutions) {
        CHECK(sol.type1);
        const RyserInvariants inv = ryser_invariants(sol.design);
        CHECK(verify_equations(sol.design, inv, all_block_profiles(sol.design, inv)).overall);
        CHECK(tuple_matches(inv, spec.tuple));
    }
}

TEST_CASE("pruning toggles never change the solution set") {
    SearchSpec base;
    base.tuple = tuple_at(2, 7, 5);
    const SearchResult ref = search_designs(base);
    for (int bits = 0; bits < 8; ++bits) {
        CAPTURE(bits);
        SearchSpec spec = base;
        spec.prunes.column_sums = bits & 1;
        spec.prunes.tau_bounds = bits & 2;
        spec.prunes.size_multiset = bits & 4;
        const SearchResult res = search_designs(spec);
        CHECK(res.status == SearchStatus::Complete);
        CHECK(engine_keys(res) == engine_keys(ref));
    }
}

TEST_CASE("disabled pruning visits at least as many nodes") {
    SearchSpec all_on;
    all_on.tuple = tuple_at(3, 11, 7);
    SearchSpec all_off = all_on;
    all_off.prunes.column_sums = false;
    all_off.prunes.tau_bounds = false;
    all_off.prunes.size_multiset = false;
    const SearchResult fast = search_designs(all_on);
    const SearchResult slow = search_designs(all_off);
    CHECK(engine_keys(fast) == engine_keys(slow));
    CHECK(slow.nodes >= fast.nodes);
}

TEST_CASE("results are identical across job counts") {
    SearchSpec spec;
    spec.tuple = tuple_at(3, 11, 7);
    const SearchResult serial = search_designs(spec, 1);
    const SearchResult wide = search_designs(spec, 2);
    const SearchResult all = search_designs(spec, 0);
    CHECK(serial.status == wide.status);
    CHECK(serial.found == wide.found);
    CHECK(serial.nodes == wide.nodes);
    CHECK(engine_keys(serial) == engine_keys(wide));
    CHECK(serial.nodes == all.nodes);
    CHECK(engine_keys(serial) == engine_keys(all));
}

TEST_CASE("node budget cuts the search short") {
    SearchSpec spec;
    spec.tuple = tuple_at(2, 7, 5);
    spec.limits.node_budget = 1;
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Incomplete);
    CHECK(res.nodes <= 2); // one committed row per task at most
}

TEST_CASE("solution cap cuts the search short") {
    SearchSpec spec;
    spec.tuple = tuple_at(2, 7, 5);
    spec.limits.max_solutions = 1;
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Incomplete);
    CHECK(res.solutions.size() == 1);
    CHECK(serialize_design(res.solutions[0].design) ==
          canonical_key(testutil::derived("fano", 0)));
}

TEST_CASE("inconsistent block-size totals are reported infeasible") {
    // A deliberately corrupted shape: the (13,10,4) tuple with the size gap
    // forced to 4, so admissible sizes {6,10} cannot hit the column total.
    ParameterTuple t = tuple_at(3, 13, 10);
    t.a = 4;
    SearchSpec spec;
    spec.tuple = t;
    const SearchResult res = search_designs(spec);
    CHECK(res.status == SearchStatus::Infeasible);
    CHECK(res.nodes == 0);
    CHECK(res.found == 0);
}

TEST_CASE("the point cap rejects big instances") {
    SearchSpec spec;
    spec.tuple = tuple_at(3, 16, 11);
    CHECK_THROWS_AS(search_designs(spec), std::invalid_argument);
    CHECK_THROWS_WITH(search_designs(spec), doctest::Contains("over the cap"));
}

TEST_CASE("search validates tuple consistency") {
    ParameterTuple t = tuple_at(2, 7, 5);
    t.e1 = 2; // breaks e1 + e2 = v
    SearchSpec spec;
    spec.tuple = t;
    CHECK_THROWS_AS(search_designs(spec), std::invalid_argument);
}

TEST_CASE("type2 hunt below the cap finds nothing") {
    const Type2Report rep = search_type2(2, 13);
    REQUIRE(rep.rows.size() == 2); // (7,5,3) and (10,7,4) survive the rules
    CHECK(rep.rows[0].tuple.v == 7);
    CHECK(rep.rows[0].solutions == 1);
    CHECK(rep.rows[0].type2 == 0);
    CHECK(rep.rows[0].status == SearchStatus::Complete);
    CHECK(rep.rows[1].tuple.v == 10);
    CHECK(rep.rows[1].solutions == 0);
    CHECK(rep.rows[1].type2 == 0);
    CHECK_FALSE(rep.any_type2);
    CHECK(rep.all_complete);
}

TEST_CASE("type2 hunt with a tiny cap is empty") {
    const Type2Report rep = search_type2(2, 4);
    CHECK(rep.rows.empty());
    CHECK_FALSE(rep.any_type2);
    CHECK(rep.all_complete);
}
