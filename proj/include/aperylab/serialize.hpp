#pragma once

#include <json.hpp>

#include "aperylab/census.hpp"
#include "aperylab/families.hpp"
#include "aperylab/poset.hpp"
#include "aperylab/rational.hpp"
#include "aperylab/semigroup.hpp"
#include "aperylab/verify.hpp"

namespace aperylab {

nlohmann::json to_json(const Rational& r);

/// {generators, multiplicity, embedding_dimension, frobenius, genus, apery_set}
nlohmann::json semigroup_json(const NumericalSemigroup& s);

/// {n, length_set, elasticity: {num, den}}
nlohmann::json element_json(const NumericalSemigroup& s, Int n);

/// {ahf, ahff, mae, max_elasticity, elasticity_set, apery_elasticities: [...]}
nlohmann::json apery_invariants_json(const NumericalSemigroup& s);

/// {elements, covers: [[x, y], ...]} by value.
nlohmann::json poset_json(const AperyPoset& p);

/// {max_genus, complete, per_genus: [{g, n, h}], per_cell: [...], cumulative: {n, h}}
nlohmann::json census_json(const CensusTable& table, int multiplicity_filter = 0);

nlohmann::json family_json(const FamilyInstance& instance, const std::vector<PredictionResult>* results);

nlohmann::json report_json(const VerificationReport& report);

}  // namespace aperylab
