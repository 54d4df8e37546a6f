#include "ryserlab/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ryserlab {

namespace {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool tuple_order(const ParameterTuple& a, const ParameterTuple& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    if (a.v != b.v) return a.v < b.v;
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.e1 < b.e1;
}

// All tuples for one coprime class pair (c,d).  Solutions of
// x*d + y*c = 2*lambda - 1 are walked over y; everything else follows.
void tuples_for_pair(long long lambda, long long c, long long d, bool relaxed,
                     std::vector<ParameterTuple>& out) {
    const long long target = 2 * lambda - 1;
    const long long v_max = lambda * lambda * lambda + 2;
    // y is bounded below by e1 >= 1 and above by e2 >= 1 (via x's lower
    // bound); the strict mode narrows both to the nonnegative quadrant.
    long long y_lo = relaxed ? -(lambda - 1) : 0;
    long long x_lo = relaxed ? -(lambda - 1) : 0;
    long long y_hi = (target - x_lo * d) / c;
    for (long long y = y_lo; y <= y_hi; ++y) {
        long long rem = target - y * c;
        if (rem % d != 0) continue;
        long long x = rem / d;
        if (x < x_lo) continue;
        long long g = x + y;
        if (g < 1) continue;
        long long e1 = lambda + y * d;
        long long e2 = lambda + x * c;
        if (e1 < 1 || e2 < 1) continue;
        long long v = 1 + (c + d) * g;
        if (v > v_max) continue;
        ParameterTuple t;
        t.lambda = lambda;
        t.v = v;
        t.r1 = g * c + 1;
        t.r2 = g * d + 1;
        t.g = g;
        t.c = c;
        t.d = d;
        t.a = c - d;
        t.e1 = e1;
        t.e2 = e2;
        t.D = y * c - lambda;
        t.x = x;
        t.y = y;
        out.push_back(t);
    }
}

} // namespace

std::vector<ParameterTuple> enumerate_tuples(long long lambda, bool relaxed, int jobs) {
    if (lambda < 2)
        throw std::invalid_argument("tuple enumeration needs lambda >= 2");

    // Candidate class pairs: coprime c > d >= 1 with the gap a = c-d capped
    // at lambda-1.  In strict mode y >= 1 forces c <= 2*lambda-1 and y = 0
    // forces d | 2*lambda-1, so d <= 2*lambda-1 covers everything; relaxed
    // mode only stops at the v bound.
    long long d_max = relaxed ? (lambda * lambda * lambda + 1) / 2 : 2 * lambda - 1;
    std::vector<std::pair<long long, long long>> pairs;
    for (long long d = 1; d <= d_max; ++d)
        for (long long c = d + 1; c <= d + lambda - 1; ++c)
            if (std::gcd(c, d) == 1) pairs.emplace_back(c, d);

    std::vector<std::vector<ParameterTuple>> per_pair(pairs.size());
    auto run_pair = [&](std::size_t i) {
        tuples_for_pair(lambda, pairs[i].first, pairs[i].second, relaxed, per_pair[i]);
    };

    if (jobs == 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) run_pair(i);
    } else {
#ifdef _OPENMP
        int threads = jobs <= 0 ? omp_get_max_threads() : jobs;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::size_t i = 0; i < pairs.size(); ++i) run_pair(i);
#else
        for (std::size_t i = 0; i < pairs.size(); ++i) run_pair(i);
#endif
    }

    std::vector<ParameterTuple> out;
    for (auto& chunk : per_pair)
        out.insert(out.end(), chunk.begin(), chunk.end());
    std::sort(out.begin(), out.end(), tuple_order);
    return out;
}

bool power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

ParityWitness e4_parity(int n, int m, long long c, long long d, long long e1,
                        long long e2, long long lambda) {
    int k = n - m;
    auto pow2_parity = [](int e) { return e == 0 ? 1 : 0; };
    int lhs = static_cast<int>(((e1 & 1) * (c & 1) + (e2 & 1) * (d & 1)) & 1);
    int rhs = static_cast<int>((((lambda - 1) & 1) * pow2_parity(k) +
                                pow2_parity(m) * ((c * d) & 1) + pow2_parity(k)) &
                               1);
    return {lhs, rhs};
}

Verdict apply_rules(const ParameterTuple& t) {
    const long long lam = t.lambda;
    if (lam < 2)
        throw std::invalid_argument("rules apply to lambda >= 2");

    // E1: rho must land in [lambda/(lambda-1), lambda] but outside the open
    // interval (lambda-1, lambda); all comparisons cross-multiplied.
    if (t.c > lam * t.d || t.c * (lam - 1) < lam * t.d ||
        (t.d * (lam - 1) < t.c && t.c < t.d * lam))
        return {VerdictKind::Eliminated, "E1"};
    if (lam > 2 && t.a >= lam)
        return {VerdictKind::Eliminated, "E2"};
    if (t.v >= 2 * lam * lam + 3 * lam - 1)
        return {VerdictKind::Eliminated, "E3"};
    if (power_of_two(t.v - 1) && t.g > 1 && t.D != 0 && t.D != -1) {
        // g divides v-1, so both are powers of two here.
        int n = 0, m = 0;
        while ((1LL << n) < t.v - 1) ++n;
        while ((1LL << m) < t.g) ++m;
        ParityWitness w = e4_parity(n, m, t.c, t.d, t.e1, t.e2, lam);
        if (w.lhs != w.rhs) return {VerdictKind::Eliminated, "E4"};
    }
    if (t.g == 1) return {VerdictKind::ForcedType1, "F1"};
    if (lam < 9) return {VerdictKind::ForcedType1, "F2"};
    if (is_prime_ll(lam)) return {VerdictKind::ForcedType1, "F3"};
    if (lam % 2 == 0 && is_prime_ll(lam / 2)) return {VerdictKind::ForcedType1, "F3b"};
    if (t.D == 0 || t.D == -1) return {VerdictKind::ForcedType1, "F4"};
    // rho is integral only when d = 1, so rho in {lambda, lambda-1} reads
    // c in {lambda, lambda-1} with d = 1.
    if (t.d == 1 && (t.c == lam || t.c == lam - 1) && t.v <= lam * lam + lam + 1)
        return {VerdictKind::ForcedType1, "F5"};
    return {VerdictKind::Open, ""};
}

ScanReport scan_report(long long lambda_min, long long lambda_max, bool relaxed, int jobs) {
    if (lambda_min < 2 || lambda_min > lambda_max)
        throw std::invalid_argument("scan needs 2 <= lambda_min <= lambda_max");
    ScanReport rep;
    for (long long lam = lambda_min; lam <= lambda_max; ++lam) {
        ScanSummary sum;
        sum.lambda = lam;
        for (const auto& t : enumerate_tuples(lam, relaxed, jobs)) {
            Verdict v = apply_rules(t);
            switch (v.kind) {
                case VerdictKind::Eliminated: sum.eliminated++; break;
                case VerdictKind::ForcedType1: sum.forced++; break;
                case VerdictKind::Open: sum.open++; break;
            }
            rep.rows.push_back({t, v});
        }
        rep.summaries.push_back(sum);
    }
    return rep;
}

namespace {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Eliminated: return "eliminated";
        case VerdictKind::ForcedType1: return "forced-type1";
        case VerdictKind::Open: return "open";
    }
    return "unknown";
}

} // namespace

std::string scan_tsv(const ScanReport& rep) {
    std::string out = "lambda\tv\tr1\tr2\tg\tc\td\ta\te1\te2\tD\tx\ty\tverdict\trule\n";
    for (const auto& row : rep.rows) {
        const auto& t = row.tuple;
        long long fields[] = {t.lambda, t.v, t.r1, t.r2, t.g, t.c, t.d,
                              t.a, t.e1, t.e2, t.D, t.x, t.y};
        for (long long f : fields) {
            out += std::to_string(f);
            out += '\t';
        }
        out += verdict_name(row.verdict.kind);
        out += '\t';
        out += row.verdict.rule.empty() ? "-" : row.verdict.rule;
        out += '\n';
    }
    return out;
}

std::string scan_summary_text(const ScanReport& rep) {
    std::string out;
    for (const auto& s : rep.summaries) {
        out += "lambda " + std::to_string(s.lambda) + ": " +
               std::to_string(s.eliminated + s.forced + s.open) + " tuples, " +
               std::to_string(s.eliminated) + " eliminated, " + std::to_string(s.forced) +
               " forced-type1, " + std::to_string(s.open) + " open\n";
    }
    return out;
}

ParameterTuple tuple_from_invariants(const RyserInvariants& inv) {
    auto narrow = [](const Int& n) { return n.convert_to<long long>(); };
    ParameterTuple t;
    t.lambda = narrow(inv.lambda);
    t.v = narrow(inv.v);
    t.r1 = narrow(inv.r1);
    t.r2 = narrow(inv.r2);
    t.g = narrow(inv.g);
    t.c = narrow(inv.c);
    t.d = narrow(inv.d);
    t.a = narrow(inv.a);
    t.e1 = narrow(inv.e1);
    t.e2 = narrow(inv.e2);
    t.D = narrow(inv.D);
    t.x = narrow(inv.x);
    t.y = narrow(inv.y);
    return t;
}

} // namespace ryserlab
