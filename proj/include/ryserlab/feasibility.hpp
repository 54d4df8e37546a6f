#pragma once

#include <string>
#include <vector>

#include "ryserlab/invariants.hpp"

namespace ryserlab {

// One arithmetic candidate for a Ryser design.  Fields satisfy
//   r1+r2 = v+1,  r1-1 = g*c,  r2-1 = g*d,  a = c-d,  x+y = g,
//   x*d + y*c = 2*lambda - 1,  e1 = lambda + y*d,  e2 = lambda + x*c,
//   D = y*c - lambda.
// rho = (r1-1)/(r2-1) = c/d, already in lowest terms since gcd(c,d) = 1.
struct ParameterTuple {
    long long lambda = 0;
    long long v = 0, r1 = 0, r2 = 0;
    long long g = 0, c = 0, d = 0, a = 0;
    long long e1 = 0, e2 = 0;
    long long D = 0, x = 0, y = 0;

    Rat rho() const { return Rat(c, d); }
    bool operator==(const ParameterTuple&) const = default;
};

enum class VerdictKind { Eliminated, ForcedType1, Open };

struct Verdict {
    VerdictKind kind;
    std::string rule;   // E1..E4 / F1..F5 / F3b; empty for Open
    bool operator==(const Verdict&) const = default;
};

// All candidate tuples for the given index, sorted by (v, r1, e1).  The
// default generation imposes x >= 0, y >= 0 and a <= lambda-1; `relaxed`
// drops the sign constraint (keeping e1, e2 >= 1) so that the excluded
// candidates can be audited.  jobs picks the worker count as elsewhere:
// 1 = serial reference, >1 = that many OpenMP threads, <=0 = all available.
// Results are identical in every mode.  Throws on lambda < 2.
std::vector<ParameterTuple> enumerate_tuples(long long lambda, bool relaxed = false,
                                             int jobs = 1);

// The elimination / forcing cascade, first match wins:
//   E1  rho outside [lambda/(lambda-1), lambda] or inside (lambda-1, lambda)
//   E2  a >= lambda                      (only meaningful for lambda > 2)
//   E3  v >= 2*lambda^2 + 3*lambda - 1
//   E4  v-1 a power of two with g > 1 and D not in {0,-1}: the split
//       column-sum identity has odd left side and even right side
//   F1  g = 1
//   F2  lambda < 9                       (cited)
//   F3  lambda prime                     (cited)
//   F3b lambda twice a prime             (cited)
//   F4  D in {0,-1}
//   F5  rho in {lambda, lambda-1} and v <= lambda^2+lambda+1   (cited)
Verdict apply_rules(const ParameterTuple& t);

struct ScanRow {
    ParameterTuple tuple;
    Verdict verdict;
};

struct ScanSummary {
    long long lambda;
    long long eliminated = 0, forced = 0, open = 0;
};

struct ScanReport {
    std::vector<ScanRow> rows;          // lambda ascending, then (v, r1, e1)
    std::vector<ScanSummary> summaries; // one per lambda
};

ScanReport scan_report(long long lambda_min, long long lambda_max, bool relaxed = false,
                       int jobs = 1);

// Tab-separated table: header
// lambda v r1 r2 g c d a e1 e2 D x y verdict rule
// then one row per tuple; verdict is eliminated/forced-type1/open and rule
// is "-" for open tuples.
std::string scan_tsv(const ScanReport& rep);

// Per-lambda counts, one line each; meant for stderr, not for the table.
std::string scan_summary_text(const ScanReport& rep);

// Projects computed invariants down to a tuple (checked narrowing).
ParameterTuple tuple_from_invariants(const RyserInvariants& inv);

bool power_of_two(long long n);

// Parity of the two sides of the split column-sum identity when v-1 = 2^n
// and g = 2^m: left side e1*c + e2*d, right side
// (lambda-1)*2^(n-m) + 2^m*c*d + (c+d) with c+d = 2^(n-m).  Both reduced
// mod 2.  The E4 rule fires exactly when these parities differ.
struct ParityWitness {
    int lhs;
    int rhs;
};

ParityWitness e4_parity(int n, int m, long long c, long long d, long long e1,
                        long long e2, long long lambda);

} // namespace ryserlab
