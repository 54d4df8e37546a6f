#pragma once

#include <array>
#include <optional>
#include <string>

#include "ryserlab/design.hpp"

namespace ryserlab {

// Block complementation: keep block A, replace every other block B by the
// symmetric difference A^B.  A stays at its original index and A^B sits at
// B's index, so the operation is a positional involution.  Throws
// std::out_of_range on a bad index and std::invalid_argument when the source
// does not classify as a design (Symmetric or Ryser).
IncidenceStructure complement_at(const IncidenceStructure& s, int block_index);

// Order-insensitive block equality (multiset comparison).
bool same_blocks_unordered(const IncidenceStructure& a, const IncidenceStructure& b);

enum class PropStatus { Pass, Fail, NotApplicable };

struct PropCheck {
    PropStatus status = PropStatus::NotApplicable;
    std::string lhs, rhs;   // both evaluated sides where the item computes values
};

// The seven structural facts checked for a complementation step D -> D*A,
// reported per item:
//   1  (D*A)*A = D, block for block
//   2  A^B is a block of D*A, and (D*A)*(A^B) has the same blocks as D*B
//   3  r1(D*A) = r1(D)
//   4  index(D*A) = |A| - index(D)
//   5  E1(D*A) = E1(D) ^ A
//   6  e1(D*A) = e1 - tau1(A) + tau2(A)
//   7  D*A is symmetric exactly when A = E1 or A = E2
// Items 5-7 need the replication split of the source, so they are
// NotApplicable when the source is symmetric (single replication class).
// A symmetric structure encountered on either side is placed in the
// replication family of its source: its r1 is max(k, v+1-k) and its E1 is
// the set of points whose replication equals the source's r1.
struct ComplementReport {
    std::array<PropCheck, 7> item;
    bool overall = false;   // no item failed
};

ComplementReport verify_complement_properties(const IncidenceStructure& s,
                                              int a_index, int b_index);

struct Type1Witness {
    int block_index;            // first block equal to E1 or E2
    DesignClass complement_class;   // classification of s complemented there
};

// Looks for a block equal to E1 or E2; complementing at such a block is what
// makes a Ryser design Type-1.  Requires a Ryser source.  Empty when neither
// point class occurs as a block.
std::optional<Type1Witness> type1_witness(const IncidenceStructure& s);

// Runs verify_complement_properties over every ordered pair (A,B), A != B.
// jobs == 1 runs the plain serial loop (the determinism reference), jobs > 1
// splits the A loop across that many OpenMP threads, jobs <= 0 uses all
// available threads.  The result is identical in every mode.
struct SweepResult {
    long long pairs = 0;
    long long failed_items = 0;
    std::string first_failure;   // empty when everything passed
};

SweepResult sweep_complement_properties(const IncidenceStructure& s, int jobs = 1);

} // namespace ryserlab
