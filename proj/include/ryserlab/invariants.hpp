#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ryserlab/design.hpp"

namespace ryserlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// The full derived parameter set of a Ryser design.  Everything is exact;
// rho is a true rational, never a float.
struct RyserInvariants {
    Int v, lambda;
    Int r1, r2;        // the two replication values, r1 > r2
    Int e1, e2;        // sizes of the point classes E1 (replication r1) and E2
    Int g;             // gcd(r1-1, r2-1)
    Int c, d, a;       // (r1-1)/g, (r2-1)/g, c-d
    Rat rho;           // (r1-1)/(r2-1)
    Int D;             // e1 - r2
    Int x, y;          // (e2-lambda)/c and (e1-lambda)/d
    bool x_exact = false, y_exact = false;   // the divisions above were exact
    PointSet E1, E2;
};

// Computes the invariants by direct counting.  Throws std::invalid_argument
// unless the structure classifies Ryser.  Degenerate replication profiles
// (anything but two classes) are absorbed with sentinel values so that
// verify_equations can report the breakage instead of crashing.
RyserInvariants ryser_invariants(const IncidenceStructure& s);

enum class SizeClass { Small, Average, Large };

const char* size_class_name(SizeClass sc);

struct BlockProfile {
    int block_index;
    Int size;
    Int tau1, tau2;    // points of E1 / E2 on the block
    Int t;             // the integer with size = 2*lambda + t*a
    bool t_exact;      // (size - 2*lambda) was divisible by a
    SizeClass size_class;
};

BlockProfile block_profile(const IncidenceStructure& s, const RyserInvariants& inv,
                           int block_index);

std::vector<BlockProfile> all_block_profiles(const IncidenceStructure& s,
                                             const RyserInvariants& inv);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckLine {
    std::string id;
    std::string lhs, rhs;   // both evaluated sides, exact renderings
    CheckStatus status;
};

struct EquationReport {
    std::vector<CheckLine> lines;
    bool overall = false;   // no line failed (skips do not fail)
};

// Evaluates every arithmetic fact the library knows about a Ryser design:
// the global identities linking v, lambda, r1, r2, e1, e2, g, c, d, a, rho,
// D, x, y; the bound checks (gated on lambda where they need lambda > 1 or
// > 2, reported as SKIP below the gate); the Type-1 equivalences; and the
// per-block tau/size facts.  Order is fixed: global checks first, then the
// per-block families grouped by check id and ordered by block index.
EquationReport verify_equations(const IncidenceStructure& s, const RyserInvariants& inv,
                                const std::vector<BlockProfile>& profiles);

// One line per check: "id<TAB>lhs<TAB>rhs<TAB>PASS|FAIL|SKIP", terminated by
// a final "OVERALL PASS" or "OVERALL FAIL" line.
std::string serialize_report(const EquationReport& rep);

// The arithmetic Type-1 test: D == 0 or D == -1.
bool type1_test(const RyserInvariants& inv);

// Which of the four sign cases of D the instance sits in:
// 1: D == 0, 2: D == -1, 3: D > 0, 4: D < -1.
int deficit_case(const RyserInvariants& inv);

} // namespace ryserlab
