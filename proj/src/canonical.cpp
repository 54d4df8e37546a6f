#include "ryserlab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ryserlab/io.hpp"

namespace ryserlab {

namespace {

// Branch-and-bound maximizer.  Point positions are filled left to right;
// each placement appends, for every block cell in order, the number of
// blocks in that cell containing the chosen point, and the whole flattened
// sequence is maximized lexicographically.  The sequence pins down the
// refined cell layout step by step, which pins down the canonical matrix, so
// equal sequences mean equal outputs and ties can be dropped.
struct Canonicalizer {
    int v = 0;
    std::vector<std::uint64_t> block_mask;
    std::vector<int> class_of;  // per point
    std::vector<int> pos_class; // per position

    std::vector<std::vector<int>> cells; // current block partition, ordered
    std::vector<int> perm;               // position -> original point
    std::vector<char> used;
    std::vector<int> cur;

    bool have_best = false;
    long long best_version = 0;
    std::vector<int> best;
    std::vector<int> best_perm;
    std::vector<int> best_blocks;

    // `tied` reports whether cur equals the best prefix (false: strictly
    // greater, or no best yet).  Whenever a descendant records a new best,
    // every node still on the stack is an ancestor of that leaf, so its
    // prefix is a prefix of the new best; the version counter restores the
    // tie in that case.
    void dfs(int pos, bool tied) {
        if (pos == v) {
            if (!have_best || !tied) {
                best = cur;
                best_perm = perm;
                best_blocks.clear();
                for (const auto& cell : cells)
                    best_blocks.insert(best_blocks.end(), cell.begin(), cell.end());
                have_best = true;
                ++best_version;
            }
            return;
        }
        long long seen_version = best_version;
        for (int p = 0; p < v; ++p) {
            if (used[p] || class_of[p] != pos_class[pos]) continue;
            if (best_version != seen_version) {
                tied = true;
                seen_version = best_version;
            }
            std::size_t mark = cur.size();
            bool t = tied && have_best;
            bool worse = false;
            for (const auto& cell : cells) {
                int cnt = 0;
                for (int b : cell)
                    if (block_mask[b] >> p & 1) ++cnt;
                if (t) {
                    int ref = best[cur.size()];
                    if (cnt < ref) { worse = true; break; }
                    if (cnt > ref) t = false;
                }
                cur.push_back(cnt);
            }
            if (worse) {
                cur.resize(mark);
                continue;
            }

            auto saved = cells;
            std::vector<std::vector<int>> split;
            for (const auto& cell : cells) {
                std::vector<int> in, out;
                for (int b : cell)
                    (block_mask[b] >> p & 1 ? in : out).push_back(b);
                if (!in.empty()) split.push_back(std::move(in));
                if (!out.empty()) split.push_back(std::move(out));
            }
            cells = std::move(split);
            used[p] = 1;
            perm[pos] = p;

            dfs(pos + 1, t);

            used[p] = 0;
            cells = std::move(saved);
            cur.resize(mark);
        }
    }
};

} // namespace

IncidenceStructure weak_canonical(const IncidenceStructure& s) {
    int v = s.v;
    if (v < 1 || v > 64)
        throw std::invalid_argument("canonical form supports 1..64 points");

    Canonicalizer cz;
    cz.v = v;
    cz.block_mask.resize(s.blocks.size());
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        std::uint64_t m = 0;
        for (int p : s.blocks[b].points()) m |= std::uint64_t{1} << p;
        cz.block_mask[b] = m;
    }

    // Point signature: replication, then the incident block sizes sorted
    // descending.  Classes are numbered in descending signature order so the
    // heavier points come first.
    std::vector<int> sizes = block_sizes(s);
    std::vector<std::pair<int, std::vector<int>>> sig(v);
    for (int p = 0; p < v; ++p) {
        std::vector<int> inc;
        for (std::size_t b = 0; b < s.blocks.size(); ++b)
            if (cz.block_mask[b] >> p & 1) inc.push_back(sizes[b]);
        std::sort(inc.rbegin(), inc.rend());
        sig[p] = {static_cast<int>(inc.size()), std::move(inc)};
    }
    std::vector<std::pair<int, std::vector<int>>> distinct(sig.begin(), sig.end());
    std::sort(distinct.rbegin(), distinct.rend());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    cz.class_of.resize(v);
    for (int p = 0; p < v; ++p)
        for (std::size_t k = 0; k < distinct.size(); ++k)
            if (distinct[k] == sig[p]) { cz.class_of[p] = static_cast<int>(k); break; }
    // Positions are laid out class by class.
    std::vector<int> class_count(distinct.size(), 0);
    for (int p = 0; p < v; ++p) class_count[cz.class_of[p]]++;
    for (std::size_t k = 0; k < distinct.size(); ++k)
        cz.pos_class.insert(cz.pos_class.end(), class_count[k], static_cast<int>(k));

    // Initial block cells: one per size, larger sizes first.
    std::map<int, std::vector<int>, std::greater<int>> by_size;
    for (std::size_t b = 0; b < s.blocks.size(); ++b)
        by_size[sizes[b]].push_back(static_cast<int>(b));
    for (auto& [sz, cell] : by_size) cz.cells.push_back(std::move(cell));

    cz.perm.assign(v, -1);
    cz.used.assign(v, 0);
    cz.dfs(0, true);

    IncidenceStructure out;
    out.v = v;
    out.blocks.reserve(s.blocks.size());
    for (int b : cz.best_blocks) {
        PointSet ps(v);
        for (int pos = 0; pos < v; ++pos)
            if (cz.block_mask[b] >> cz.best_perm[pos] & 1) ps.set(pos);
        out.blocks.push_back(std::move(ps));
    }
    return out;
}

std::string canonical_key(const IncidenceStructure& s) {
    return serialize_design(weak_canonical(s));
}

} // namespace ryserlab
