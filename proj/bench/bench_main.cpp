// Compares the serial reference paths (--jobs 1) against the OpenMP paths
// (--jobs 0) for the three parallel kernels: tuple scanning, design search,
// and the complementation property sweep.  Reports wall times and whether
// both modes produced identical results.  Not a test; numbers are hardware
// dependent.

#include <chrono>
#include <cstdio>
#include <string>

#include "ryserlab/catalog.hpp"
#include "ryserlab/complement.hpp"
#include "ryserlab/feasibility.hpp"
#include "ryserlab/io.hpp"
#include "ryserlab/search.hpp"

using namespace ryserlab;
using Clock = std::chrono::steady_clock;

namespace {

double secs_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-28s %10.3fs %10.3fs %7.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, match ? "match" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-28s %11s %11s %8s   %s\n", "kernel", "jobs=1", "jobs=0", "speedup",
                "results");

    {
        auto t0 = Clock::now();
        const std::string serial = scan_tsv(scan_report(2, 64, false, 1));
        const double ts = secs_since(t0);
        t0 = Clock::now();
        const std::string parallel = scan_tsv(scan_report(2, 64, false, 0));
        const double tp = secs_since(t0);
        report("scan lambda 2..64", ts, tp, serial == parallel);
    }

    {
        ParameterTuple tuple;
        for (const auto& t : enumerate_tuples(3))
            if (t.v == 13 && t.r1 == 9) tuple = t;
        SearchSpec spec;
        spec.tuple = tuple;
        auto t0 = Clock::now();
        const SearchResult serial = search_designs(spec, 1);
        const double ts = secs_since(t0);
        t0 = Clock::now();
        const SearchResult parallel = search_designs(spec, 0);
        const double tp = secs_since(t0);
        bool match = serial.found == parallel.found && serial.nodes == parallel.nodes &&
                     serial.solutions.size() == parallel.solutions.size();
        for (std::size_t i = 0; match && i < serial.solutions.size(); ++i)
            match = serialize_design(serial.solutions[i].design) ==
                    serialize_design(parallel.solutions[i].design);
        report("search v=13 lambda=3", ts, tp, match);
    }

    {
        const IncidenceStructure d = complement_at(paley_design(59), 0);
        auto t0 = Clock::now();
        const SweepResult serial = sweep_complement_properties(d, 1);
        const double ts = secs_since(t0);
        t0 = Clock::now();
        const SweepResult parallel = sweep_complement_properties(d, 0);
        const double tp = secs_since(t0);
        const bool match = serial.pairs == parallel.pairs &&
                           serial.failed_items == parallel.failed_items &&
                           serial.first_failure == parallel.first_failure;
        report("property sweep v=59", ts, tp, match);
    }

    return 0;
}
