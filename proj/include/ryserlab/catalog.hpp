#pragma once

#include <string>
#include <vector>

#include "ryserlab/design.hpp"

namespace ryserlab {

// A cyclic difference set: residues K in Z_v whose pairwise differences hit
// every nonzero residue exactly lambda times.  Developing it (all cyclic
// shifts) yields a symmetric design.
struct DifferenceSet {
    int v;
    std::vector<int> residues;
    int k;        // |residues|
    int lambda;   // declared difference multiplicity
};

// Develops ds into the v shifts K+i mod v.  Validates the difference-set
// property first; throws std::invalid_argument when the declared parameters
// do not hold.
IncidenceStructure develop(const DifferenceSet& ds);

// Quadratic residues mod q, as a sorted list of nonzero residues.
std::vector<int> quadratic_residues(int q);

// Paley construction: develops the quadratic-residue difference set mod q.
// Requires q prime with q = 3 (mod 4); yields Symmetric(q, (q-1)/2, (q-3)/4).
IncidenceStructure paley_design(int q);

// Replaces every block by its set complement.  Requires a symmetric source
// (v,k,l'); the result is Symmetric(v, v-k, v-2k+l').  Throws when the source
// is not symmetric or when the resulting index v-2k+l' would drop below 1.
IncidenceStructure set_complement(const IncidenceStructure& s);

struct CatalogEntry {
    std::string name;
    std::string summary;
    int v, k, lambda;      // verified symmetric parameters
    bool complementable;   // k != 2*lambda, i.e. block complementation yields a Ryser design
    IncidenceStructure design;
};

// The built-in symmetric designs, each validated at construction.  Built once
// and cached; order is fixed.
const std::vector<CatalogEntry>& catalog_list();

// nullptr when no entry has that name.
const CatalogEntry* catalog_find(const std::string& name);

} // namespace ryserlab
