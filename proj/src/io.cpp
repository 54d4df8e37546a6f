#include "ryserlab/io.hpp"

#include <istream>
#include <sstream>

namespace ryserlab {

namespace {

bool is_blank(const std::string& line) {
    for (char ch : line)
        if (ch != ' ' && ch != '\t') return false;
    return true;
}

bool is_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t') continue;
        return ch == '#';
    }
    return false;
}

// Reads "<key>=<positive int>" starting at pos; advances pos past the value.
int parse_keyed_int(const std::string& line, const char* key, std::size_t& pos, int lineno) {
    const std::string prefix = std::string(key) + "=";
    if (line.compare(pos, prefix.size(), prefix) != 0)
        throw ParseError(std::string("expected ") + prefix + "<number>", lineno,
                         static_cast<int>(pos) + 1);
    pos += prefix.size();
    std::size_t start = pos;
    long value = 0;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
        value = value * 10 + (line[pos] - '0');
        if (value > 1000000)
            throw ParseError(std::string(key) + " is unreasonably large", lineno,
                             static_cast<int>(start) + 1);
        ++pos;
    }
    if (pos == start)
        throw ParseError(std::string("expected ") + prefix + "<number>", lineno,
                         static_cast<int>(start) + 1);
    if (value < 1)
        throw ParseError(std::string(key) + " must be positive", lineno,
                         static_cast<int>(start) + 1);
    return static_cast<int>(value);
}

} // namespace

IncidenceStructure parse_design(std::istream& in) {
    std::string line;
    int lineno = 0;
    int v = -1, b = -1;
    IncidenceStructure s;
    int rows_seen = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || is_comment(line)) continue;

        if (v < 0) {
            // Header: RYSERLAB v=<n> b=<n>
            std::size_t pos = 0;
            const std::string magic = "RYSERLAB";
            if (line.compare(0, magic.size(), magic) != 0)
                throw ParseError("expected RYSERLAB header", lineno, 1);
            pos = magic.size();
            if (pos >= line.size() || line[pos] != ' ')
                throw ParseError("expected space after RYSERLAB", lineno,
                                 static_cast<int>(pos) + 1);
            ++pos;
            v = parse_keyed_int(line, "v", pos, lineno);
            if (pos >= line.size() || line[pos] != ' ')
                throw ParseError("expected space before b=", lineno, static_cast<int>(pos) + 1);
            ++pos;
            b = parse_keyed_int(line, "b", pos, lineno);
            if (pos != line.size())
                throw ParseError("trailing characters after header", lineno,
                                 static_cast<int>(pos) + 1);
            if (b != v)
                throw ParseError("b=" + std::to_string(b) + " does not match v=" +
                                     std::to_string(v) + " (square structures only)",
                                 lineno, 1);
            s.v = v;
            continue;
        }

        if (rows_seen == b)
            throw ParseError("unexpected content after " + std::to_string(b) + " rows",
                             lineno, 1);
        if (static_cast<int>(line.size()) != v)
            throw ParseError("row has " + std::to_string(line.size()) +
                                 " characters, expected " + std::to_string(v),
                             lineno, static_cast<int>(line.size()) + 1);
        PointSet block(v);
        for (int j = 0; j < v; ++j) {
            if (line[j] == '1')
                block.set(j);
            else if (line[j] != '0')
                throw ParseError("invalid character in incidence row", lineno, j + 1);
        }
        s.blocks.push_back(std::move(block));
        ++rows_seen;
    }

    if (v < 0)
        throw ParseError("missing RYSERLAB header", lineno + 1, 1);
    if (rows_seen != b)
        throw ParseError("expected " + std::to_string(b) + " rows, got " +
                             std::to_string(rows_seen),
                         lineno + 1, 1);
    return s;
}

IncidenceStructure parse_design_text(const std::string& text) {
    std::istringstream in(text);
    return parse_design(in);
}

std::string serialize_design(const IncidenceStructure& s) {
    std::string out = "RYSERLAB v=" + std::to_string(s.v) + " b=" +
                      std::to_string(s.blocks.size()) + "\n";
    for (const auto& b : s.blocks) {
        out += b.to_row();
        out += '\n';
    }
    return out;
}

} // namespace ryserlab
