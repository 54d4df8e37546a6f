#pragma once

#include <string>

#include "ryserlab/design.hpp"

namespace ryserlab {

// Relabels points and blocks into a canonical order.  Points may only be
// permuted within their signature class (replication count plus the multiset
// of incident block sizes), blocks within their size class; among those
// relabelings the lexicographically extremal incidence matrix is chosen by
// branch and bound.  Two structures related by such a class-respecting
// isomorphism map to the same output, so serialized canonical forms work as
// dedup keys.  Structures over more than 64 points are rejected.
IncidenceStructure weak_canonical(const IncidenceStructure& s);

// serialize_design(weak_canonical(s)), the form used for dedup and sorting.
std::string canonical_key(const IncidenceStructure& s);

} // namespace ryserlab
