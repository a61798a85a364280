#pragma once

// JSON views of the library's result types.

#include <string>
#include <vector>

#include "json.hpp"
#include "oddprism/graph.hpp"
#include "oddprism/patterns.hpp"
#include "oddprism/search.hpp"
#include "oddprism/spectral.hpp"
#include "oddprism/turan.hpp"
#include "oddprism/words.hpp"

namespace oddprism {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kVectorOmitAbove = 10'000;

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json to_json(const SpectralResult& r) {
  Json j;
  j["radius"] = r.radius;
  j["residual"] = r.residual;
  j["iterations"] = r.iterations;
  if (r.vector.size() <= kVectorOmitAbove) j["vector"] = r.vector;
  return j;
}

inline Json to_json(const Embedding& e) { return Json(e); }

inline Json to_json(const WordLemmaReport& r) {
  Json j;
  j["k"] = r.k;
  j["total"] = r.total;
  j["misses"] = r.misses;
  j["least_rotations_only"] = r.least_rotations_only;
  Json hits = Json::object();
  for (auto p : kForbiddenFactors) hits[std::string(p)] = r.hits_by_pattern.at(std::string(p));
  j["hits_by_pattern"] = hits;
  if (!r.counterexamples.empty()) j["counterexamples"] = r.counterexamples;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(const ColouringReport& r) {
  Json j;
  j["k"] = r.k;
  j["total"] = r.total;
  j["structural_misses"] = r.structural_misses;
  j["word_misses"] = r.word_misses;
  j["case_split"] = r.case_split;
  j["case_split_failures"] = r.case_split_failures;
  Json tab = Json::object();
  for (const auto& [pattern, row] : r.cross_tab) tab[pattern] = row;
  j["cross_tab"] = tab;
  j["verified"] = r.verified();
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline Json to_json(std::size_t n, const ExFormulaResult& r, const Graph& construction) {
  Json j;
  j["n"] = n;
  j["value"] = r.value;
  j["n_a"] = r.n_a;
  j["j"] = r.j;
  j["construction_graph6"] = graph6_encode(construction);
  j["note"] = kAsymptoticNote;
  return j;
}

inline Json to_json(const SpexClosedForm& c) {
  Json j;
  j["n"] = c.n;
  j["n1"] = c.n1;
  j["n2"] = c.n2;
  j["value"] = c.value;
  j["quotient_polynomial"] = c.quotient_polynomial.to_string();
  j["as_printed_value"] = c.as_printed_value;
  j["as_printed_polynomial"] = c.as_printed_polynomial.to_string();
  j["gap"] = c.gap;
  return j;
}

inline Json to_json(const ApexFactorisationReport& r) {
  Json j;
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["quartic"] = r.quartic.to_string();
  j["as_printed_factorisation"] = r.as_printed_factorisation.to_string();
  j["as_printed_identity_holds"] = r.as_printed_identity_holds;
  j["derived_factorisation"] = r.derived_factorisation.to_string();
  j["derived_identity_holds"] = r.derived_identity_holds;
  j["dense_radius"] = r.dense_radius;
  j["as_printed_cubic_residual"] = r.as_printed_cubic_residual;
  j["derived_cubic_residual"] = r.derived_cubic_residual;
  j["as_printed_root"] = r.as_printed_root;
  j["derived_root"] = r.derived_root;
  j["gap"] = r.gap;
  return j;
}

inline Json to_json(const SearchStatistics& s) {
  Json j;
  j["nodes_expanded"] = s.nodes_expanded;
  j["graphs_tested"] = s.graphs_tested;
  j["maximal_graphs"] = s.maximal_graphs;
  j["elapsed_ms"] = s.elapsed_ms;
  return j;
}

inline Json to_json(const ExtremalCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["mode"] = to_string(c.mode);
  if (c.mode == Objective::kEdges)
    j["optimum"] = static_cast<long long>(c.optimum);
  else
    j["optimum"] = c.optimum;
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(w.graph6);
  j["witnesses"] = witnesses;
  Json cmp;
  cmp["formula_value"] = optional_json(c.formula_value);
  cmp["agrees"] = c.agrees;
  cmp["construction_isomorphic"] = optional_json(c.construction_isomorphic);
  if (c.formula_gap) cmp["gap"] = *c.formula_gap;
  j["formula_comparison"] = cmp;
  j["provenance"] = c.provenance;
  if (c.assumption) j["assumption"] = *c.assumption;
  j["notes"] = c.notes;
  j["statistics"] = to_json(c.stats);
  return j;
}

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["k"] = r.k;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["n"] = row.n;
    x["ex_brute"] = static_cast<long long>(row.ex_brute);
    x["ex_formula"] = optional_json(row.ex_formula_value);
    x["ex_agrees"] = row.ex_agrees;
    x["ex_construction_isomorphic"] = optional_json(row.ex_construction_isomorphic);
    x["spex_brute"] = row.spex_brute;
    x["spex_closed_form"] = optional_json(row.spex_closed_form_value);
    x["spex_gap"] = optional_json(row.spex_gap);
    x["spex_candidate_unique"] = optional_json(row.spex_candidate_unique);
    x["spex_agrees"] = row.spex_agrees;
    x["note"] = row.note;
    rows.push_back(std::move(x));
  }
  j["rows"] = rows;
  j["agreement_from"] = optional_json(r.agreement_from);
  return j;
}

}  // namespace oddprism
