#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ryserlab/design.hpp"

namespace ryserlab {

// Raised on malformed design files.  line and col are 1-based and point at
// the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what), line(line), col(col) {}
    int line;
    int col;
};

// Text format for square incidence structures:
//
//   RYSERLAB v=7 b=7
//   0110100
//   ...            (b rows, each exactly v characters of 0/1)
//
// Row i has a 1 in column j when point j lies in block i.  Blank lines and
// lines starting with '#' are skipped on input and never produced on output.
// b must equal v.
IncidenceStructure parse_design(std::istream& in);
IncidenceStructure parse_design_text(const std::string& text);

std::string serialize_design(const IncidenceStructure& s);

} // namespace ryserlab
