#include "aperylab/serialize.hpp"

#include "aperylab/factorization.hpp"

namespace aperylab {

using nlohmann::json;

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json semigroup_json(const NumericalSemigroup& s) {
    return json{{"generators", s.generators()},
                {"multiplicity", s.multiplicity()},
                {"embedding_dimension", s.embedding_dimension()},
                {"frobenius", s.frobenius()},
                {"genus", s.genus()},
                {"apery_set", s.apery_set()}};
}

json element_json(const NumericalSemigroup& s, Int n) {
    return json{{"n", n}, {"length_set", length_set(s, n)}, {"elasticity", to_json(elasticity(s, n))}};
}

json apery_invariants_json(const NumericalSemigroup& s) {
    json rows = json::array();
    std::vector<Rational> distinct;
    for (const auto& row : apery_elasticity_table(s)) {
        rows.push_back({{"n", row.element}, {"length_set", row.lengths}, {"elasticity", to_json(row.elasticity)}});
        distinct.push_back(row.elasticity);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    json set = json::array();
    for (const auto& r : distinct) set.push_back(to_json(r));
    return json{{"ahf", is_ahf(s)},
                {"ahff", to_json(ahff(s))},
                {"mae", to_json(mae(s))},
                {"max_elasticity", to_json(distinct.back())},
                {"elasticity_set", set},
                {"apery_elasticities", rows}};
}

json poset_json(const AperyPoset& p) {
    json covers = json::array();
    for (const auto& [from, to] : p.covers()) covers.push_back({p.elements()[from], p.elements()[to]});
    return json{{"elements", p.elements()}, {"covers", covers}};
}

json census_json(const CensusTable& table, int multiplicity_filter) {
    json per_genus = json::array();
    json per_cell = json::array();
    for (int g = 0; g <= table.max_genus(); ++g) {
        per_genus.push_back({{"g", g}, {"n", table.total(g)}, {"h", table.ahf_total(g)}});
        for (int m = 1; m <= g + 1; ++m) {
            if (multiplicity_filter && m != multiplicity_filter) continue;
            const auto& c = table.cell(g, m);
            if (c.count == 0) continue;
            per_cell.push_back({{"g", g}, {"m", m}, {"n", c.count}, {"h", c.ahf}});
        }
    }
    json out{{"max_genus", table.max_genus()},
             {"complete", table.complete},
             {"per_genus", per_genus},
             {"per_cell", per_cell},
             {"cumulative", {{"n", table.cumulative_total()}, {"h", table.cumulative_ahf()}}}};
    if (!table.complete) out["complete_through_genus"] = table.complete_through;
    return out;
}

json family_json(const FamilyInstance& instance, const std::vector<PredictionResult>* results) {
    json predictions = json::array();
    if (results) {
        for (const auto& r : *results) {
            predictions.push_back(
                {{"invariant", r.invariant}, {"expected", r.expected}, {"computed", r.computed}, {"holds", r.holds}});
        }
    } else {
        for (const auto& p : instance.predictions) {
            predictions.push_back({{"invariant", p.invariant}, {"expected", p.expected}});
        }
    }
    json out{{"family", instance.family},
             {"parameters", instance.parameters},
             {"semigroup", semigroup_json(instance.semigroup)},
             {"predictions", predictions},
             {"notes", instance.notes}};
    if (!instance.subset.empty()) out["T"] = instance.subset;
    return out;
}

json report_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back(
            {{"description", c.description}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    }
    return json{{"title", report.title}, {"passed", report.passed()}, {"checks", checks}};
}

}  // namespace aperylab
