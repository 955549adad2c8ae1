#include <algorithm>

#include "prmforge/bounds.hpp"
#include "prmforge/combinatorics.hpp"
#include "prmforge/error.hpp"
#include "prmforge/extremal.hpp"
#include "prmforge/hweights.hpp"

namespace prmforge {

namespace {

template <class F>
BoundReport evaluate_entry(std::string name, F&& compute, std::string reason_ok) {
    BoundReport rep{std::move(name), std::nullopt, false, {}};
    try {
        rep.value = compute();
        rep.applicable = true;
        rep.reason = std::move(reason_ok);
    } catch (const HypothesisViolated& e) {
        rep.reason = e.what();
    } catch (const RankOutOfRange& e) {
        rep.reason = e.what();
    } catch (const DegreeTooLarge& e) {
        rep.reason = e.what();
    } catch (const SizeOverflow& e) {
        rep.reason = e.what();
    }
    return rep;
}

BoundReport not_applicable(std::string name, std::string reason) {
    return {std::move(name), std::nullopt, false, std::move(reason)};
}

std::string triple(unsigned d, unsigned m, unsigned r) {
    return "(d,m,r)=(" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
}

}  // namespace

std::vector<BoundReport> compare_report(std::int64_t q, unsigned d, unsigned m, unsigned r,
                                        const ReportOptions& options) {
    const Field field = Field::of_order(static_cast<std::uint64_t>(q));
    const std::int64_t k = binomial(m + d, d);
    const bool tbc_ok = tbc_hypothesis(q, d) && d >= 1;
    std::vector<BoundReport> out;

    // Upper bounds valid for e_r, exact values and lower bounds, for the verdict.
    std::optional<std::int64_t> exact;
    std::optional<std::int64_t> upper;
    std::optional<std::int64_t> lower;
    auto tighten_upper = [&](std::int64_t v) { upper = upper ? std::min(*upper, v) : v; };
    auto raise_lower = [&](std::int64_t v) { lower = lower ? std::max(*lower, v) : v; };

    BoundReport tbc = tbc_ok ? evaluate_entry("tbc", [&] { return tbc_bound(q, d, m, r); }, "T_r(d,m)")
                             : not_applicable("tbc", "conjecture requires d < q-1");
    out.push_back(tbc);

    out.push_back(evaluate_entry("tbc_simplified", [&] { return tbc_simplified(q, d, m, r); }, "closed form for r <= m+1"));

    if (d == 2) {
        auto z = evaluate_entry("zanella", [&] { return zanella_bound(q, m, r); }, "upper bound for quadrics");
        if (z.value) tighten_upper(*z.value);
        out.push_back(z);
    } else {
        out.push_back(not_applicable("zanella", "quadrics only (d = 2)"));
    }

    if (r == 1) {
        auto s = evaluate_entry("serre", [&] { return serre_bound(q, d, m); }, "single form upper bound");
        if (s.value) tighten_upper(*s.value);
        out.push_back(s);
        out.push_back(evaluate_entry("ore", [&] { return ore_bound(q, d, m); }, "affine single polynomial bound"));
    } else {
        out.push_back(not_applicable("serre", "single polynomial only (r = 1)"));
        out.push_back(not_applicable("ore", "single polynomial only (r = 1)"));
    }

    out.push_back(evaluate_entry("hp_affine", [&] { return hp_value(q, d, m, r); }, "affine maximum, r <= m+1"));
    out.push_back(evaluate_entry("affine_monotone", [&] { return affine_monotone_bound(q, d, m, r); },
                                 "affine upper bound"));

    {
        const std::int64_t s = k - static_cast<std::int64_t>(r);
        BoundReport t = (s >= 0 && s <= static_cast<std::int64_t>(d))
                            ? evaluate_entry("terminal", [&] { return terminal_er(q, d, m, static_cast<unsigned>(s)); },
                                             "exact for r = k - s, s <= d")
                            : not_applicable("terminal", "only for the last d+1 values of r");
        if (t.value) exact = *t.value;
        out.push_back(t);
    }

    {
        auto f = evaluate_entry("er_upto3", [&] { return er_upto3_formula(q, d, m, r); }, "exact for r <= 3");
        if (f.value) exact = *f.value;
        out.push_back(f);
    }

    {
        SearchOptions so;
        so.threads = options.threads;
        so.cost_cap = options.search_cost_cap;
        auto e = evaluate_entry("exhaustive",
                                [&] { return er_exhaustive(field, d, m, r, Space::projective, so).value; },
                                "exact by subspace enumeration");
        if (e.value) exact = *e.value;
        out.push_back(e);
    }

    {
        BoundReport w = not_applicable("witness", "no explicit construction for these parameters");
        if (d == 2 && m == 3 && r == 5) {
            w = evaluate_entry("witness", [&] { return build_five_quadrics_witness(field).claimed_count; },
                               "five quadrics through two meeting lines, verified by count");
        } else if (d >= 2 && m >= 2 && r <= m + 1) {
            w = evaluate_entry("witness", [&] { return build_pencil_witness(field, d, m, r).claimed_count; },
                               "pencil construction, verified by count");
        }
        if (w.value) raise_lower(*w.value);
        out.push_back(w);
    }

    BoundReport status{"tbc_status", std::nullopt, tbc.applicable, {}};
    if (exact) {
        upper = exact;
        lower = exact;
    }
    if (lower && upper && *lower == *upper) status.value = *lower;
    if (!tbc.applicable) {
        status.reason = "TBC not applicable: " + tbc.reason;
        status.value.reset();
    } else if (upper && *upper < *tbc.value) {
        status.reason = "TBC refuted at " + triple(d, m, r) + ": e_r <= " + std::to_string(*upper) + " < T_r = " +
                        std::to_string(*tbc.value);
    } else if (lower && *lower > *tbc.value) {
        status.reason = "TBC refuted at " + triple(d, m, r) + ": e_r >= " + std::to_string(*lower) + " > T_r = " +
                        std::to_string(*tbc.value);
    } else if (exact && *exact == *tbc.value) {
        status.reason = "consistent: e_r = T_r = " + std::to_string(*exact);
    } else {
        status.reason = "undetermined";
    }
    out.push_back(status);
    return out;
}

}  // namespace prmforge
