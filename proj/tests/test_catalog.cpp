#include <doctest.h>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ryserlab/catalog.hpp"
#include "ryserlab/design.hpp"
#include "helpers.hpp"

using namespace ryserlab;

TEST_CASE("catalog holds the expected entries in a fixed order") {
    const auto& list = catalog_list();
    REQUIRE(list.size() == 9);

    struct Expect {
        const char* name;
        int v, k, lambda;
        bool complementable;
    };
    const Expect expect[] = {
        {"fano", 7, 3, 1, true},
        {"fano-complement", 7, 4, 2, false},
        {"biplane11", 11, 5, 2, true},
        {"biplane11-complement", 11, 6, 3, false},
        {"pg2-3", 13, 4, 1, true},
        {"pg2-3-complement", 13, 9, 6, true},
        {"paley19", 19, 9, 4, true},
        {"paley23", 23, 11, 5, true},
        {"pg2-4", 21, 5, 1, true},
    };
    for (std::size_t i = 0; i < list.size(); ++i) {
        CAPTURE(i);
        CHECK(list[i].name == expect[i].name);
        CHECK(list[i].v == expect[i].v);
        CHECK(list[i].k == expect[i].k);
        CHECK(list[i].lambda == expect[i].lambda);
        CHECK(list[i].complementable == expect[i].complementable);
        CHECK(list[i].complementable == (expect[i].k != 2 * expect[i].lambda));
        CHECK_FALSE(list[i].summary.empty());
    }
}

TEST_CASE("every catalog design classifies as declared") {
    for (const auto& e : catalog_list()) {
        CAPTURE(e.name);
        const DesignClass c = classify(e.design);
        const auto* sym = std::get_if<SymmetricClass>(&c);
        REQUIRE(sym != nullptr);
        CHECK(sym->v == e.v);
        CHECK(sym->k == e.k);
        CHECK(sym->lambda == e.lambda);
        CHECK(static_cast<int>(e.design.blocks.size()) == e.v);
    }
}

TEST_CASE("develop validates the difference property") {
    // {1,2,4} mod 7 is a planar difference set; {1,2,3} is not.
    CHECK_NOTHROW(develop({7, {1, 2, 4}, 3, 1}));
    CHECK_THROWS_AS(develop({7, {1, 2, 3}, 3, 1}), std::invalid_argument);
    // Declared parameters must match the residue list.
    CHECK_THROWS_AS(develop({7, {1, 2, 4}, 4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(develop({7, {1, 2, 4}, 3, 2}), std::invalid_argument);
}

TEST_CASE("developing the fano difference set gives the fano plane") {
    const auto dev = develop({7, {1, 2, 4}, 3, 1});
    CHECK(describe(classify(dev)) == "Symmetric v=7 k=3 lambda=1");
}

TEST_CASE("quadratic residues") {
    CHECK(quadratic_residues(7) == std::vector<int>{1, 2, 4});
    CHECK(quadratic_residues(11) == std::vector<int>{1, 3, 4, 5, 9});
    CHECK(quadratic_residues(19).size() == 9);
}

TEST_CASE("paley designs develop quadratic residues") {
    const auto p7 = paley_design(7);
    CHECK(describe(classify(p7)) == "Symmetric v=7 k=3 lambda=1");
    const auto p11 = paley_design(11);
    CHECK(describe(classify(p11)) == "Symmetric v=11 k=5 lambda=2");
    const auto p23 = paley_design(23);
    CHECK(describe(classify(p23)) == "Symmetric v=23 k=11 lambda=5");
}

TEST_CASE("paley construction rejects bad moduli") {
    CHECK_THROWS_AS(paley_design(5), std::invalid_argument);  // 5 = 1 (mod 4)
    CHECK_THROWS_AS(paley_design(9), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(paley_design(2), std::invalid_argument);
}

TEST_CASE("set complement flips symmetric parameters") {
    const auto* fano = catalog_find("fano");
    REQUIRE(fano != nullptr);
    const auto comp = set_complement(fano->design);
    CHECK(describe(classify(comp)) == "Symmetric v=7 k=4 lambda=2");
    // Complementing twice returns to the original parameters.
    const auto back = set_complement(comp);
    CHECK(describe(classify(back)) == "Symmetric v=7 k=3 lambda=1");

    const auto* e11 = catalog_find("biplane11");
    REQUIRE(e11 != nullptr);
    CHECK(describe(classify(set_complement(e11->design))) == "Symmetric v=11 k=6 lambda=3");
}

TEST_CASE("set complement requires a symmetric source with a positive result index") {
    CHECK_THROWS_AS(set_complement(testutil::near_pencil4()), std::invalid_argument);
    // Symmetric(4,3,2) complements to index 4-6+2 = 0.
    const auto s = make_structure(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(describe(classify(s)) == "Symmetric v=4 k=3 lambda=2");
    CHECK_THROWS_AS(set_complement(s), std::invalid_argument);
}

TEST_CASE("catalog_find") {
    CHECK(catalog_find("fano") != nullptr);
    CHECK(catalog_find("fano")->v == 7);
    CHECK(catalog_find("no-such-entry") == nullptr);
    CHECK(catalog_find("") == nullptr);
}
