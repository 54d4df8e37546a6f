#pragma once

#include <vector>

#include "ryserlab/catalog.hpp"
#include "ryserlab/complement.hpp"
#include "ryserlab/design.hpp"

namespace testutil {

inline ryserlab::IncidenceStructure fano() {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < 7; ++i)
        blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return ryserlab::make_structure(7, blocks);
}

// One long block plus 2-point blocks through a common point: the degenerate
// index-1 design family.
inline ryserlab::IncidenceStructure near_pencil4() {
    return ryserlab::make_structure(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}});
}

inline ryserlab::IncidenceStructure derived(const char* catalog_name, int block) {
    const ryserlab::CatalogEntry* e = ryserlab::catalog_find(catalog_name);
    REQUIRE(e != nullptr);
    return ryserlab::complement_at(e->design, block);
}

// Applies a point relabeling (new point p was old point perm[p]) and then
// reorders blocks by block_order.
inline ryserlab::IncidenceStructure relabel(const ryserlab::IncidenceStructure& s,
                                            const std::vector<int>& perm,
                                            const std::vector<int>& block_order) {
    ryserlab::IncidenceStructure out;
    out.v = s.v;
    for (int b : block_order) {
        ryserlab::PointSet ps(s.v);
        for (int p = 0; p < s.v; ++p)
            if (s.blocks[b].test(perm[p])) ps.set(p);
        out.blocks.push_back(ps);
    }
    return out;
}

} // namespace testutil
