#include "ryserlab/invariants.hpp"

#include <stdexcept>

#include "ryserlab/complement.hpp"

namespace ryserlab {

namespace {

// Exact division with a validity flag; quotient is 0 when not exact.
std::pair<Int, bool> exact_div(const Int& num, const Int& den) {
    if (den == 0) return {0, false};
    if (num % den != 0) return {0, false};
    return {num / den, true};
}

std::string istr(const Int& n) { return n.str(); }
std::string rstr(const Rat& r) { return r.str(); }

struct ReportBuilder {
    EquationReport rep;

    void line(std::string id, std::string lhs, std::string rhs, CheckStatus st) {
        rep.lines.push_back({std::move(id), std::move(lhs), std::move(rhs), st});
    }
    void eq(const std::string& id, const Int& lhs, const Int& rhs) {
        line(id, istr(lhs), istr(rhs), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void eqr(const std::string& id, const Rat& lhs, const Rat& rhs) {
        line(id, rstr(lhs), rstr(rhs), lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void le(const std::string& id, const Int& lhs, const Int& rhs) {
        line(id, istr(lhs), istr(rhs), lhs <= rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void ge(const std::string& id, const Int& lhs, const Int& rhs) {
        line(id, istr(lhs), istr(rhs), lhs >= rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void lt(const std::string& id, const Int& lhs, const Int& rhs) {
        line(id, istr(lhs), istr(rhs), lhs < rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    // Biconditional: both sides must agree.
    void iff(const std::string& id, bool lhs, bool rhs) {
        line(id, lhs ? "1" : "0", rhs ? "1" : "0",
             lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail);
    }
    // Implication: fails only when the antecedent holds and the consequent does not.
    void implies(const std::string& id, bool ante, bool cons) {
        line(id, ante ? "1" : "0", cons ? "1" : "0",
             (!ante || cons) ? CheckStatus::Pass : CheckStatus::Fail);
    }
    void skip(const std::string& id, std::string lhs = "-", std::string rhs = "-") {
        line(id, std::move(lhs), std::move(rhs), CheckStatus::Skip);
    }
};

} // namespace

RyserInvariants ryser_invariants(const IncidenceStructure& s) {
    DesignClass cls = classify(s);
    const auto* ry = std::get_if<RyserClass>(&cls);
    if (!ry)
        throw std::invalid_argument("ryser_invariants requires a Ryser design, got " +
                                    describe(cls));

    RyserInvariants inv;
    inv.v = s.v;
    inv.lambda = ry->lambda;

    ReplicationProfile prof = replication_profile(s);
    // A genuine Ryser design has exactly two replication values; take the
    // extremes so a broken profile still yields a report, not a crash.
    int r1_val = prof.distinct.front().first;
    int r2_val = prof.distinct.back().first;
    inv.r1 = r1_val;
    inv.r2 = r2_val;

    inv.E1 = PointSet(s.v);
    for (int p = 0; p < s.v; ++p)
        if (prof.count[p] == r1_val) inv.E1.set(p);
    inv.E2 = inv.E1.complement();
    inv.e1 = inv.E1.count();
    inv.e2 = inv.E2.count();

    inv.g = boost::multiprecision::gcd(inv.r1 - 1, inv.r2 - 1);
    if (inv.g == 0) inv.g = 1;
    inv.c = (inv.r1 - 1) / inv.g;
    inv.d = (inv.r2 - 1) / inv.g;
    inv.a = inv.c - inv.d;
    inv.rho = (inv.r2 > 1) ? Rat(inv.r1 - 1, inv.r2 - 1) : Rat(0);
    inv.D = inv.e1 - inv.r2;

    auto [x, x_ok] = exact_div(inv.e2 - inv.lambda, inv.c);
    inv.x = x;
    inv.x_exact = x_ok;
    auto [y, y_ok] = exact_div(inv.e1 - inv.lambda, inv.d);
    inv.y = y;
    inv.y_exact = y_ok;
    return inv;
}

const char* size_class_name(SizeClass sc) {
    switch (sc) {
        case SizeClass::Small: return "small";
        case SizeClass::Average: return "average";
        case SizeClass::Large: return "large";
    }
    return "unknown";
}

BlockProfile block_profile(const IncidenceStructure& s, const RyserInvariants& inv,
                           int block_index) {
    if (block_index < 0 || block_index >= static_cast<int>(s.blocks.size()))
        throw std::out_of_range("block index out of range");
    const PointSet& b = s.blocks[block_index];
    BlockProfile p;
    p.block_index = block_index;
    p.size = b.count();
    p.tau1 = b.intersection_count(inv.E1);
    p.tau2 = p.size - p.tau1;
    auto [t, t_ok] = exact_div(p.size - 2 * inv.lambda, inv.a);
    p.t = t;
    p.t_exact = t_ok;
    Int avg = 2 * inv.lambda;
    p.size_class = p.size < avg   ? SizeClass::Small
                   : p.size == avg ? SizeClass::Average
                                   : SizeClass::Large;
    return p;
}

std::vector<BlockProfile> all_block_profiles(const IncidenceStructure& s,
                                             const RyserInvariants& inv) {
    std::vector<BlockProfile> out;
    out.reserve(s.blocks.size());
    for (int i = 0; i < static_cast<int>(s.blocks.size()); ++i)
        out.push_back(block_profile(s, inv, i));
    return out;
}

bool type1_test(const RyserInvariants& inv) { return inv.D == 0 || inv.D == -1; }

int deficit_case(const RyserInvariants& inv) {
    if (inv.D == 0) return 1;
    if (inv.D == -1) return 2;
    if (inv.D > 0) return 3;
    return 4;
}

EquationReport verify_equations(const IncidenceStructure& s, const RyserInvariants& inv,
                                const std::vector<BlockProfile>& profiles) {
    ReportBuilder b;
    const Int& v = inv.v;
    const Int& lam = inv.lambda;
    const Int &r1 = inv.r1, &r2 = inv.r2, &e1 = inv.e1, &e2 = inv.e2;
    const Int &g = inv.g, &c = inv.c, &d = inv.d, &a = inv.a;
    const Int &D = inv.D, &x = inv.x, &y = inv.y;
    const Rat& rho = inv.rho;

    ReplicationProfile prof = replication_profile(s);

    // Structural facts about the replication split.
    b.eq("replication-classes", Int(prof.distinct.size()), Int(2));
    b.eq("sum-replications", r1 + r2, v + 1);
    b.eq("sum-point-classes", e1 + e2, v);
    b.ge("point-classes-positive", e1 < e2 ? e1 : e2, Int(1));
    b.ge("min-replication", r2, Int(2));
    b.eq("coprime-classes",
         boost::multiprecision::gcd(c, d) * boost::multiprecision::gcd(c, a) *
             boost::multiprecision::gcd(d, a),
         Int(1));
    b.eq("order-split", (c + d) * g, v - 1);

    // Two-way counts.
    b.eq("pair-count", e1 * r1 * (r1 - 1) + e2 * r2 * (r2 - 1), lam * v * (v - 1));

    // The point-class sizes expressed through rho and through D.
    b.eqr("e1-ratio-form", (rho - 1) * Rat(e1), Rat(lam) * (rho + 1) - Rat(r2));
    b.eqr("e2-ratio-form", (rho - 1) * Rat(e2), rho * Rat(r1) - Rat(lam) * (rho + 1));
    if (rho != 0) {
        b.eqr("e1-deficit-form", Rat(e1), Rat(lam) + Rat(lam + D) / rho);
        b.eqr("e2-deficit-form", Rat(e2), Rat(lam) + Rat(lam - (D + 1)) * rho);
    } else {
        b.line("e1-deficit-form", rstr(Rat(e1)), "undefined", CheckStatus::Fail);
        b.line("e2-deficit-form", rstr(Rat(e2)), "undefined", CheckStatus::Fail);
    }

    // The replication values expressed through the class sizes.
    if (c != 0)
        b.eqr("r1-class-form", Rat(r1), Rat(2 * lam) + Rat(a, c) * Rat(e2 - lam));
    else
        b.line("r1-class-form", rstr(Rat(r1)), "undefined", CheckStatus::Fail);
    if (d != 0)
        b.eqr("r2-class-form", Rat(r2), Rat(2 * lam) - Rat(a, d) * Rat(e1 - lam));
    else
        b.line("r2-class-form", rstr(Rat(r2)), "undefined", CheckStatus::Fail);

    // Column sums, twice: as an identity and against the actual blocks.
    b.eq("column-sum", e1 * r1 + e2 * r2, lam * (v - 1) + r1 * r2);
    Int size_sum = 0;
    for (const auto& blk : s.blocks) size_sum += blk.count();
    b.eq("column-sum-blocks", size_sum, e1 * r1 + e2 * r2);

    // x and y, all four defining forms.
    b.eq("x-int-c", x * c, e2 - lam);
    b.eq("x-int-d", x * d, lam - (D + 1));
    b.eq("y-int-d", y * d, e1 - lam);
    b.eq("y-int-c", y * c, lam + D);

    // Linear relations in x and y.
    b.eq("xy-sum-points", x * c + y * d, v - 2 * lam);
    b.eq("xy-sum-index", x * d + y * c, 2 * lam - 1);
    b.eq("xy-sum", x + y, g);
    b.eq("xy-diff", (x - y) * a, v - (4 * lam - 1));

    // The deficit through x and through y.
    b.eq("deficit-from-x", D + 1, lam - x * d);
    b.eq("deficit-from-y", D, y * c - lam);

    // Bound checks, gated on the index where the facts need it.
    if (lam > 2)
        b.le("gap-bound", a, lam - 1);
    else
        b.skip("gap-bound", istr(a), istr(lam - 1));
    if (lam > 1) {
        Rat lower(lam, lam - 1);
        b.line("ratio-lower", rstr(rho), rstr(lower),
               rho >= lower ? CheckStatus::Pass : CheckStatus::Fail);
        b.line("ratio-upper", rstr(rho), rstr(Rat(lam)),
               rho <= Rat(lam) ? CheckStatus::Pass : CheckStatus::Fail);
        bool inside = rho > Rat(lam - 1) && rho < Rat(lam);
        b.line("ratio-gap", rstr(rho), "(" + istr(lam - 1) + "," + istr(lam) + ")",
               inside ? CheckStatus::Fail : CheckStatus::Pass);
        b.le("order-cubic-bound", v, lam * lam * lam + 2);
        b.lt("order-quadratic-bound", v, 2 * lam * lam + 3 * lam - 1);
    } else {
        b.skip("ratio-lower", rstr(rho));
        b.skip("ratio-upper", rstr(rho));
        b.skip("ratio-gap", rstr(rho));
        b.skip("order-cubic-bound", istr(v));
        b.skip("order-quadratic-bound", istr(v));
    }

    // x >= y is forced to coincide with v >= 4*lambda-1; e2 > e1 should only
    // happen on that side.  At x == y the e1/e2 comparison is recorded, not
    // judged.
    b.iff("balance-equivalence", x >= y, v >= 4 * lam - 1);
    b.implies("balance-monotone", e2 > e1, x >= y);
    if (x == y)
        b.skip("balance-boundary", istr(e1), istr(e2));
    else
        b.skip("balance-boundary");

    bool has_small = false, has_large = false;
    int non_average = 0;
    for (const auto& p : profiles) {
        if (p.size_class == SizeClass::Small) has_small = true;
        if (p.size_class == SizeClass::Large) has_large = true;
        if (p.size_class != SizeClass::Average) ++non_average;
    }
    b.implies("no-small-blocks-deficit", !has_small, D <= -1);
    b.implies("no-large-blocks-deficit", !has_large, D >= 0);

    // The three Type-1 detectors must agree, and the sign case of D must
    // match the x/y relations.
    bool arith_type1 = type1_test(inv);
    b.iff("type1-deficit-product", arith_type1, e1 * e2 == lam * (v - 1));
    b.iff("type1-triple", arith_type1, type1_witness(s).has_value());
    {
        int from_xy = 0;
        if (y * c == lam && x * d == lam - 1) from_xy = 1;
        else if (x * d == lam && y * c == lam - 1) from_xy = 2;
        else if (y * c > lam && x * d < lam - 1) from_xy = 3;
        else if (x * d > lam && y * c < lam - 1) from_xy = 4;
        int from_d = deficit_case(inv);
        b.eq("deficit-case-table", Int(from_d), Int(from_xy));
    }
    b.implies("few-nonaverage-type1", non_average < 2, arith_type1);

    // Per-block families, grouped by check id, block index ascending.
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        b.eq("block-replication-count[" + i + "]",
             (r1 - 1) * p.tau1 + (r2 - 1) * p.tau2, lam * (v - 1));
    }
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        if (p.t_exact)
            b.eq("block-tau1[" + i + "]", p.tau1, lam - p.t * d);
        else
            b.line("block-tau1[" + i + "]", istr(p.tau1), "t-not-integral", CheckStatus::Fail);
    }
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        if (p.t_exact)
            b.eq("block-tau2[" + i + "]", p.tau2, lam + p.t * c);
        else
            b.line("block-tau2[" + i + "]", istr(p.tau2), "t-not-integral", CheckStatus::Fail);
    }
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        if (p.t_exact)
            b.eq("block-size-form[" + i + "]", p.size, 2 * lam + p.t * a);
        else
            b.line("block-size-form[" + i + "]", istr(p.size), "t-not-integral",
                   CheckStatus::Fail);
    }
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        if (!p.t_exact) {
            b.line("block-size-class[" + i + "]", size_class_name(p.size_class),
                   "t-not-integral", CheckStatus::Fail);
            continue;
        }
        SizeClass from_t = p.t < 0   ? SizeClass::Small
                           : p.t == 0 ? SizeClass::Average
                                      : SizeClass::Large;
        b.line("block-size-class[" + i + "]", size_class_name(p.size_class),
               size_class_name(from_t),
               p.size_class == from_t ? CheckStatus::Pass : CheckStatus::Fail);
    }
    for (const auto& p : profiles) {
        std::string i = std::to_string(p.block_index);
        bool ok = r2 <= p.size && p.size <= r1;
        b.line("block-size-bounds[" + i + "]", istr(p.size),
               "[" + istr(r2) + "," + istr(r1) + "]",
               ok ? CheckStatus::Pass : CheckStatus::Fail);
    }

    b.rep.overall = true;
    for (const auto& ln : b.rep.lines)
        if (ln.status == CheckStatus::Fail) b.rep.overall = false;
    return b.rep;
}

std::string serialize_report(const EquationReport& rep) {
    std::string out;
    for (const auto& ln : rep.lines) {
        out += ln.id;
        out += '\t';
        out += ln.lhs;
        out += '\t';
        out += ln.rhs;
        out += '\t';
        out += ln.status == CheckStatus::Pass   ? "PASS"
               : ln.status == CheckStatus::Fail ? "FAIL"
                                                : "SKIP";
        out += '\n';
    }
    out += rep.overall ? "OVERALL PASS\n" : "OVERALL FAIL\n";
    return out;
}

} // namespace ryserlab
