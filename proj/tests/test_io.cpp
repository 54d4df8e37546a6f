#include <doctest.h>

#include <sstream>
#include <string>

#include "ryserlab/design.hpp"
#include "ryserlab/io.hpp"
#include "helpers.hpp"

using namespace ryserlab;

namespace {

ParseError capture(const std::string& text) {
    try {
        parse_design_text(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error");
    return ParseError("unreachable", 0, 0);
}

} // namespace

TEST_CASE("serialize then parse is the identity") {
    const auto f = testutil::fano();
    const std::string text = serialize_design(f);
    const auto back = parse_design_text(text);
    CHECK(back.v == f.v);
    REQUIRE(back.blocks.size() == f.blocks.size());
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        CHECK(back.blocks[i] == f.blocks[i]);
    CHECK(serialize_design(back) == text);
}

TEST_CASE("serialized form starts with the header and ends with a newline") {
    const auto np = testutil::near_pencil4();
    const std::string text = serialize_design(np);
    CHECK(text.rfind("RYSERLAB v=4 b=4\n", 0) == 0);
    CHECK(text.back() == '\n');
    CHECK(text.find("1100\n") != std::string::npos);
}

TEST_CASE("comments, blank lines and CRLF endings are tolerated") {
    const std::string text =
        "# a comment\r\n"
        "\r\n"
        "RYSERLAB v=2 b=2\r\n"
        "# another\n"
        "10\r\n"
        "\n"
        "01\r\n";
    const auto s = parse_design_text(text);
    CHECK(s.v == 2);
    CHECK(s.blocks[0].to_row() == "10");
    CHECK(s.blocks[1].to_row() == "01");
}

TEST_CASE("stream and string parsers agree") {
    std::istringstream in("RYSERLAB v=2 b=2\n10\n01\n");
    const auto a = parse_design(in);
    const auto b = parse_design_text("RYSERLAB v=2 b=2\n10\n01\n");
    CHECK(serialize_design(a) == serialize_design(b));
}

TEST_CASE("missing or malformed header is rejected") {
    auto e = capture("HELLO v=2 b=2\n10\n01\n");
    CHECK(std::string(e.what()).find("expected RYSERLAB header") != std::string::npos);
    CHECK(e.line == 1);
    CHECK(e.col == 1);

    e = capture("RYSERLAB v=x b=2\n10\n01\n");
    CHECK(std::string(e.what()).find("expected v=<number>") != std::string::npos);

    e = capture("");
    CHECK(e.line == 1);
    CHECK(e.col == 1);
}

TEST_CASE("header values are bounds checked") {
    auto e = capture("RYSERLAB v=2000000 b=2000000\n");
    CHECK(std::string(e.what()).find("unreasonably large") != std::string::npos);

    e = capture("RYSERLAB v=0 b=0\n");
    CHECK(std::string(e.what()).find("must be positive") != std::string::npos);
}

TEST_CASE("trailing junk after the header is rejected") {
    const auto e = capture("RYSERLAB v=2 b=2 extra\n10\n01\n");
    CHECK(std::string(e.what()).find("trailing characters after header") != std::string::npos);
    CHECK(e.line == 1);
}

TEST_CASE("rectangular structures are rejected") {
    const auto e = capture("RYSERLAB v=3 b=2\n110\n011\n");
    CHECK(std::string(e.what()).find("b=2 does not match v=3") != std::string::npos);
    CHECK(e.line == 1);
    CHECK(e.col == 1);
}

TEST_CASE("row length mismatches point at the offending column") {
    const auto e = capture("RYSERLAB v=3 b=3\n110\n01\n011\n");
    CHECK(std::string(e.what()).find("row has 2 characters, expected 3") != std::string::npos);
    CHECK(e.line == 3);
    CHECK(e.col == 3);
}

TEST_CASE("invalid incidence characters point at their column") {
    const auto e = capture("RYSERLAB v=3 b=3\n110\n0x1\n011\n");
    CHECK(std::string(e.what()).find("invalid character in incidence row") != std::string::npos);
    CHECK(e.line == 3);
    CHECK(e.col == 2);
}

TEST_CASE("too few rows is reported at end of input") {
    const auto e = capture("RYSERLAB v=3 b=3\n110\n011\n");
    CHECK(std::string(e.what()).find("expected 3 rows, got 2") != std::string::npos);
    CHECK(e.line == 4);
}

TEST_CASE("extra rows are rejected") {
    const auto e = capture("RYSERLAB v=2 b=2\n10\n01\n11\n");
    CHECK(std::string(e.what()).find("unexpected content after 2 rows") != std::string::npos);
    CHECK(e.line == 4);
    CHECK(e.col == 1);
}
