#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ryserlab/canonical.hpp"
#include "ryserlab/catalog.hpp"
#include "ryserlab/design.hpp"
#include "ryserlab/io.hpp"
#include "helpers.hpp"

using namespace ryserlab;

TEST_CASE("canonical form is stable under point and block relabeling") {
    const auto d = testutil::derived("fano", 0);
    const std::string key = canonical_key(d);

    const std::vector<std::vector<int>> point_perms = {
        {1, 0, 2, 3, 4, 5, 6},
        {6, 5, 4, 3, 2, 1, 0},
        {2, 4, 6, 1, 3, 5, 0},
        {3, 0, 6, 2, 5, 1, 4},
    };
    const std::vector<std::vector<int>> block_orders = {
        {0, 1, 2, 3, 4, 5, 6},
        {4, 2, 6, 0, 3, 1, 5},
        {6, 0, 5, 1, 4, 2, 3},
        {1, 3, 5, 0, 2, 4, 6},
    };
    for (const auto& pp : point_perms) {
        for (const auto& bo : block_orders) {
            const auto moved = testutil::relabel(d, pp, bo);
            CHECK(canonical_key(moved) == key);
        }
    }
}

TEST_CASE("canonical form is idempotent") {
    const auto d = testutil::derived("biplane11", 2);
    const auto c1 = weak_canonical(d);
    const auto c2 = weak_canonical(c1);
    CHECK(serialize_design(c1) == serialize_design(c2));
}

TEST_CASE("canonical form parses back to an equivalent design") {
    const auto d = testutil::derived("pg2-3", 4);
    const auto c = weak_canonical(d);
    CHECK(c.v == d.v);
    CHECK(describe(classify(c)) == describe(classify(d)));
    // Same block-size multiset.
    auto sd = block_sizes(d);
    auto sc = block_sizes(c);
    std::sort(sd.begin(), sd.end());
    std::sort(sc.begin(), sc.end());
    CHECK(sd == sc);
    const auto back = parse_design_text(canonical_key(d));
    CHECK(back.v == d.v);
}

TEST_CASE("different designs keep different keys") {
    const auto a = testutil::derived("fano", 0);
    const auto b = testutil::fano();
    CHECK(canonical_key(a) != canonical_key(b));
    const auto c = testutil::near_pencil4();
    CHECK(canonical_key(a) != canonical_key(c));
}

TEST_CASE("canonical form works on symmetric and degenerate designs") {
    const auto f = testutil::fano();
    const std::string key = canonical_key(f);
    const auto moved = testutil::relabel(f, {3, 1, 4, 0, 5, 2, 6}, {2, 0, 1, 6, 5, 4, 3});
    CHECK(canonical_key(moved) == key);

    const auto np = testutil::near_pencil4();
    const auto np_moved = testutil::relabel(np, {2, 0, 3, 1}, {3, 1, 0, 2});
    CHECK(canonical_key(np_moved) == canonical_key(np));
}

TEST_CASE("canonical form rejects oversized universes") {
    IncidenceStructure s;
    s.v = 65;
    CHECK_THROWS_AS(weak_canonical(s), std::invalid_argument);
}
