#include "ryserlab/catalog.hpp"

#include <stdexcept>

namespace ryserlab {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

void validate_difference_set(const DifferenceSet& ds) {
    if (ds.v < 2)
        throw std::invalid_argument("difference set modulus must be at least 2");
    if (static_cast<int>(ds.residues.size()) != ds.k)
        throw std::invalid_argument("difference set size does not match declared k");
    std::vector<int> seen(ds.v, 0);
    for (int r : ds.residues) {
        if (r < 0 || r >= ds.v)
            throw std::invalid_argument("difference set residue out of range");
        if (seen[r]++)
            throw std::invalid_argument("difference set residue repeated");
    }
    std::vector<int> diff_count(ds.v, 0);
    for (int r1 : ds.residues)
        for (int r2 : ds.residues)
            if (r1 != r2) diff_count[((r1 - r2) % ds.v + ds.v) % ds.v]++;
    for (int t = 1; t < ds.v; ++t)
        if (diff_count[t] != ds.lambda)
            throw std::invalid_argument("difference " + std::to_string(t) + " occurs " +
                                        std::to_string(diff_count[t]) + " times, declared " +
                                        std::to_string(ds.lambda));
}

CatalogEntry make_entry(std::string name, std::string summary, IncidenceStructure design) {
    DesignClass cls = classify(design);
    const auto* sym = std::get_if<SymmetricClass>(&cls);
    if (!sym)
        throw std::logic_error("catalog entry " + name + " is not a symmetric design: " +
                               describe(cls));
    CatalogEntry e;
    e.name = std::move(name);
    e.summary = std::move(summary);
    e.v = sym->v;
    e.k = sym->k;
    e.lambda = sym->lambda;
    e.complementable = (sym->k != 2 * sym->lambda);
    e.design = std::move(design);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    const DifferenceSet fano{7, {1, 2, 4}, 3, 1};
    const DifferenceSet biplane{11, {1, 3, 4, 5, 9}, 5, 2};
    const DifferenceSet plane3{13, {0, 1, 3, 9}, 4, 1};
    const DifferenceSet plane4{21, {3, 6, 7, 12, 14}, 5, 1};

    std::vector<CatalogEntry> list;
    list.push_back(make_entry("fano", "projective plane of order 2, residues {1,2,4} mod 7",
                              develop(fano)));
    list.push_back(make_entry("fano-complement", "block-set complement of the Fano plane, (7,4,2)",
                              set_complement(develop(fano))));
    list.push_back(make_entry("biplane11", "biplane on 11 points, residues {1,3,4,5,9} mod 11",
                              develop(biplane)));
    list.push_back(make_entry("biplane11-complement", "complement of the 11-point biplane, (11,6,3)",
                              set_complement(develop(biplane))));
    list.push_back(make_entry("pg2-3", "projective plane of order 3, residues {0,1,3,9} mod 13",
                              develop(plane3)));
    list.push_back(make_entry("pg2-3-complement", "complement of the order-3 plane, (13,9,6)",
                              set_complement(develop(plane3))));
    list.push_back(make_entry("paley19", "Paley design on 19 points, (19,9,4)", paley_design(19)));
    list.push_back(make_entry("paley23", "Paley design on 23 points, (23,11,5)", paley_design(23)));
    list.push_back(make_entry("pg2-4", "projective plane of order 4, residues {3,6,7,12,14} mod 21",
                              develop(plane4)));
    return list;
}

} // namespace

IncidenceStructure develop(const DifferenceSet& ds) {
    validate_difference_set(ds);
    IncidenceStructure s;
    s.v = ds.v;
    s.blocks.reserve(ds.v);
    for (int shift = 0; shift < ds.v; ++shift) {
        PointSet b(ds.v);
        for (int r : ds.residues) b.set((r + shift) % ds.v);
        s.blocks.push_back(std::move(b));
    }
    return s;
}

std::vector<int> quadratic_residues(int q) {
    std::vector<int> seen(q, 0);
    for (int x = 1; x < q; ++x) seen[(x * x) % q] = 1;
    std::vector<int> out;
    for (int r = 1; r < q; ++r)
        if (seen[r]) out.push_back(r);
    return out;
}

IncidenceStructure paley_design(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("paley_design requires a prime modulus");
    if (q % 4 != 3)
        throw std::invalid_argument("paley_design requires q = 3 (mod 4)");
    DifferenceSet ds{q, quadratic_residues(q), (q - 1) / 2, (q - 3) / 4};
    return develop(ds);
}

IncidenceStructure set_complement(const IncidenceStructure& s) {
    DesignClass cls = classify(s);
    const auto* sym = std::get_if<SymmetricClass>(&cls);
    if (!sym)
        throw std::invalid_argument("set_complement requires a symmetric design, got " +
                                    describe(cls));
    int new_lambda = sym->v - 2 * sym->k + sym->lambda;
    if (new_lambda < 1)
        throw std::invalid_argument("set complement would have index " +
                                    std::to_string(new_lambda) + " < 1");
    IncidenceStructure out;
    out.v = s.v;
    out.blocks.reserve(s.blocks.size());
    for (const auto& b : s.blocks) out.blocks.push_back(b.complement());
    return out;
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> list = build_catalog();
    return list;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog_list())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace ryserlab
