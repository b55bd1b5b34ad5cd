#include "antipodal/report_json.hpp"

namespace antipodal {

using nlohmann::json;

namespace {

json set_json(IndexSet s) { return s.elements(); }

json pair_json(const std::optional<std::pair<SignedVector, SignedVector>> &pair) {
  if (!pair)
    return nullptr;
  return json::array({format_vector(pair->first), format_vector(pair->second)});
}

} // namespace

json to_json(const Params &p) { return {{"n", p.n}, {"k", p.k}, {"l", p.l}}; }

json to_json(const BoundTable &t) {
  json entries = json::array();
  for (const BoundEntry &e : t.entries) {
    json j{{"name", e.name}, {"applicable", e.value.has_value()}};
    j["value"] = e.value ? json(*e.value) : json(nullptr);
    if (!e.condition.empty())
      j["condition"] = e.condition;
    entries.push_back(std::move(j));
  }
  return {{"params", to_json(t.params)}, {"bounds", std::move(entries)}};
}

json to_json(const Prop1Report &r) {
  return {{"m", r.m},
          {"a", r.a},
          {"b", r.b},
          {"cap_a", r.cap_a},
          {"cap_b", r.cap_b},
          {"a_families", r.a_families},
          {"pruned", r.pruned},
          {"cross_intersecting_pairs", r.cross_intersecting_pairs},
          {"counterexamples", r.counterexamples},
          {"passed", r.counterexamples == 0}};
}

json to_json(const TraceReport &r) {
  json j{{"params", to_json(r.params)},
         {"input_size", r.input_size},
         {"antipodal_free", r.antipodal_free},
         {"antipodal_pair", pair_json(r.antipodal_pair)},
         {"passed", r.passed()},
         {"violations", r.violations}};
  if (r.lemma1_ran) {
    json violations = json::array();
    for (const Lemma1Violation &v : r.lemma1_violations)
      violations.push_back({{"A", set_json(v.a)},
                            {"B", set_json(v.b)},
                            {"C", set_json(v.c)},
                            {"D", set_json(v.d)},
                            {"v", format_vector(v.v)},
                            {"w", format_vector(v.w)},
                            {"product", v.product}});
    j["lemma1"] = {{"pairs_checked", r.lemma1_pairs_checked},
                   {"violations", std::move(violations)}};
  }
  if (r.deletion_ran) {
    json pairs = json::array();
    for (const PairTrace &t : r.pairs)
      pairs.push_back({{"A", set_json(t.a)},
                       {"B", set_json(t.b)},
                       {"size", t.subfamily_size},
                       {"triggered", t.triggered},
                       {"deleted", t.newly_deleted}});
    j["deletion"] = {{"rule", kDeletionRule},
                     {"threshold", r.threshold},
                     {"pair_count", r.pair_count},
                     {"deleted", r.deleted},
                     {"fprime_size", r.fprime_size},
                     {"lower_bound", r.deletion_lower_bound},
                     {"survivor_property", r.survivor_property},
                     {"pairs", std::move(pairs)}};
  }
  if (r.lemma2_ran) {
    json tsets = json::array();
    for (const TSetTrace &t : r.t_sets)
      tsets.push_back({{"T", set_json(t.t)},
                       {"size", t.family_b_size},
                       {"intersecting", t.intersecting}});
    j["lemma2"] = {{"family_b_cap", r.family_b_cap},
                   {"fprime_cap", r.fprime_cap},
                   {"t_sets", std::move(tsets)}};
  }
  j["bound"] = r.bound;
  return j;
}

json to_json(const CircleReport &r) {
  json j{{"params", to_json(r.params)},
         {"family_size", r.family_size},
         {"exhaustive", r.exhaustive},
         {"permutations", r.permutations},
         {"max_count", r.max_count},
         {"histogram", r.histogram},
         {"passed", r.passed()},
         {"violations", r.violations}};
  if (!r.exhaustive)
    j["seed"] = r.seed;
  j["argmax"] = r.argmax ? json(r.argmax->images()) : json(nullptr);
  if (r.identity_checked) {
    j["sum"] = r.sum;
    j["expected_sum"] = r.expected_sum;
    j["mean"] = r.mean;
    j["expected_mean"] = r.expected_mean;
    if (!r.exhaustive)
      j["tolerance"] = r.tolerance;
  }
  if (r.bound)
    j["bound"] = *r.bound;
  if (r.antipodal_pair)
    j["antipodal_pair"] = pair_json(r.antipodal_pair);
  return j;
}

json to_json(const SearchResult &r, bool include_elapsed) {
  json j{{"optimum", r.optimum},
         {"proof_of_optimality", r.proof_of_optimality},
         {"nodes_explored", r.nodes_explored},
         {"witness", r.witness_labels.empty() ? json(r.witness) : json(r.witness_labels)}};
  if (include_elapsed)
    j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

json to_json(const std::vector<TableRow> &rows) {
  json out = json::array();
  for (const TableRow &r : rows) {
    json j = to_json(r.bounds);
    j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
    j["proven"] = r.proven;
    j["nodes_explored"] = r.nodes;
    j["tight"] = r.tight;
    if (!r.note.empty())
      j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out;
}

} // namespace antipodal
