#include "ryserlab/design.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ryserlab {

IncidenceStructure make_structure(int v, const std::vector<std::vector<int>>& blocks) {
    if (v < 1)
        throw std::invalid_argument("point count must be positive");
    if (static_cast<int>(blocks.size()) != v)
        throw std::invalid_argument("expected " + std::to_string(v) + " blocks, got " +
                                    std::to_string(blocks.size()));
    IncidenceStructure s;
    s.v = v;
    s.blocks.reserve(blocks.size());
    for (const auto& pts : blocks) {
        PointSet b(v);
        for (int p : pts) {
            if (p < 0 || p >= v)
                throw std::invalid_argument("point " + std::to_string(p) + " out of range");
            if (b.test(p))
                throw std::invalid_argument("point " + std::to_string(p) + " repeated in block");
            b.set(p);
        }
        s.blocks.push_back(std::move(b));
    }
    return s;
}

std::vector<int> block_sizes(const IncidenceStructure& s) {
    std::vector<int> out;
    out.reserve(s.blocks.size());
    for (const auto& b : s.blocks) out.push_back(b.count());
    return out;
}

ReplicationProfile replication_profile(const IncidenceStructure& s) {
    ReplicationProfile prof;
    prof.count.assign(s.v, 0);
    for (const auto& b : s.blocks)
        for (int p : b.points()) prof.count[p]++;
    // Collect the distinct values, largest first.
    std::vector<int> sorted = prof.count;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int r : sorted) {
        if (!prof.distinct.empty() && prof.distinct.back().first == r)
            prof.distinct.back().second++;
        else
            prof.distinct.emplace_back(r, 1);
    }
    return prof;
}

DesignClass classify(const IncidenceStructure& s) {
    const int v = s.v;
    for (int i = 0; i < v; ++i) {
        if (s.blocks[i].count() == 0)
            return InvalidClass{Violation::EmptyBlock, i, i};
    }
    for (int i = 0; i < v; ++i) {
        if (s.blocks[i].count() == v)
            return InvalidClass{Violation::FullBlock, i, i};
    }
    // v == 1 cannot reach this point: the single block is empty or full.
    const int lambda = s.blocks[0].intersection_count(s.blocks[1]);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            if (s.blocks[i].intersection_count(s.blocks[j]) != lambda)
                return InvalidClass{Violation::UnequalIntersection, i, j};
        }
    }
    if (lambda == 0)
        return InvalidClass{Violation::ZeroIndex, 0, 1};
    for (int i = 0; i < v; ++i) {
        if (s.blocks[i].count() <= lambda)
            return InvalidClass{Violation::BlockSizeAtMostIndex, i, i};
    }
    const int k = s.blocks[0].count();
    bool equal_sizes = true;
    for (int i = 1; i < v && equal_sizes; ++i)
        equal_sizes = (s.blocks[i].count() == k);
    if (equal_sizes)
        return SymmetricClass{v, k, lambda};
    return RyserClass{v, lambda};
}

const char* violation_name(Violation r) {
    switch (r) {
        case Violation::EmptyBlock: return "empty-block";
        case Violation::FullBlock: return "full-block";
        case Violation::UnequalIntersection: return "unequal-intersection";
        case Violation::BlockSizeAtMostIndex: return "block-size-at-most-index";
        case Violation::ZeroIndex: return "zero-index";
    }
    return "unknown";
}

std::string describe(const DesignClass& c) {
    if (const auto* sym = std::get_if<SymmetricClass>(&c))
        return "Symmetric v=" + std::to_string(sym->v) + " k=" + std::to_string(sym->k) +
               " lambda=" + std::to_string(sym->lambda);
    if (const auto* ry = std::get_if<RyserClass>(&c))
        return "Ryser v=" + std::to_string(ry->v) + " lambda=" + std::to_string(ry->lambda);
    const auto& bad = std::get<InvalidClass>(c);
    return std::string("Invalid reason=") + violation_name(bad.reason) + " witness=" +
           std::to_string(bad.i) + "," + std::to_string(bad.j);
}

} // namespace ryserlab
