#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ryserlab/bits.hpp"

namespace ryserlab {

// A square incidence structure: exactly v blocks over v points.  Blocks may
// be degenerate (empty, repeated, the whole point set); classify() decides
// whether the structure is a design and reports a witness when it is not.
struct IncidenceStructure {
    int v = 0;
    std::vector<PointSet> blocks;
};

// Builds a structure from explicit point lists.  Throws std::invalid_argument
// when a point is out of range or the number of blocks differs from v.
IncidenceStructure make_structure(int v, const std::vector<std::vector<int>>& blocks);

std::vector<int> block_sizes(const IncidenceStructure& s);

struct ReplicationProfile {
    std::vector<int> count;                      // per point, index order
    std::vector<std::pair<int, int>> distinct;   // (replication, multiplicity), replication descending
};

ReplicationProfile replication_profile(const IncidenceStructure& s);

struct SymmetricClass {
    int v, k, lambda;
    bool operator==(const SymmetricClass&) const = default;
};

struct RyserClass {
    int v, lambda;
    bool operator==(const RyserClass&) const = default;
};

enum class Violation {
    EmptyBlock,
    FullBlock,
    UnequalIntersection,
    BlockSizeAtMostIndex,
    ZeroIndex,
};

// Witness convention: UnequalIntersection carries the first block pair i < j
// whose intersection differs from |B0 n B1|; the single-block violations
// carry (i, i); ZeroIndex carries the pair (0, 1) that realized index zero.
struct InvalidClass {
    Violation reason;
    int i, j;
    bool operator==(const InvalidClass&) const = default;
};

using DesignClass = std::variant<SymmetricClass, RyserClass, InvalidClass>;

DesignClass classify(const IncidenceStructure& s);

const char* violation_name(Violation r);

// One-line rendering, e.g. "Symmetric v=7 k=3 lambda=1",
// "Ryser v=7 lambda=2", "Invalid reason=empty-block witness=2,2".
std::string describe(const DesignClass& c);

} // namespace ryserlab
