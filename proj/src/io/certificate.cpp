#include "gswitch/io/certificate.hpp"

#include "gswitch/io/format.hpp"

namespace gswitch {

namespace {

Json target_json(const RamseyTarget& t) {
  Json a = Json::array();
  for (int x : t.a) a.push_back(x);
  return a;
}

Json colouring_lines(const EdgeColouring& g) {
  Json lines = Json::array();
  std::string text = emit_colouring(g);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

}  // namespace

Json to_json(const BoundCertificate& c) {
  Json j;
  j["group"] = c.group;
  j["target"] = target_json(c.target);
  j["lo"] = c.lo;
  j["hi"] = c.hi ? Json(*c.hi) : Json(nullptr);
  j["exact"] = c.exact();
  j["table"] = c.table_version;
  const auto* lr = c.lower_rule();
  const auto* ur = c.upper_rule();
  j["lower_from"] = lr ? Json(lr->rule) : Json(nullptr);
  j["upper_from"] = ur ? Json(ur->rule) : Json(nullptr);
  Json rules = Json::array();
  for (const auto& r : c.rules) {
    Json x;
    x["rule"] = r.rule;
    x["side"] = to_string(r.side);
    x["value"] = r.value;
    x["statement"] = r.statement;
    if (!r.constants.empty()) x["constants"] = r.constants;
    if (r.witness) x["witness"] = *r.witness;
    if (!r.premises.empty()) {
      Json p = Json::array();
      for (const auto& sub : r.premises) p.push_back(to_json(*sub));
      x["premises"] = std::move(p);
    }
    rules.push_back(std::move(x));
  }
  j["rules"] = std::move(rules);
  return j;
}

Json to_json(const CliqueWitness& w) {
  Json j;
  Json v = Json::array();
  for (int x : w.vertices) v.push_back(x + 1);
  j["vertices"] = std::move(v);
  j["colour"] = w.colour + 1;
  j["sequence"] = format_sequence(w.sequence);
  return j;
}

Json to_json(const LowerCheck& c, const EdgeColouring& g, const ColourGroup& group,
             const RamseyTarget& target) {
  Json j;
  j["kind"] = "lower-bound";
  j["verdict"] = to_string(c.verdict);
  j["group"] = group.name();
  j["target"] = target_json(target);
  j["n"] = g.n();
  j["bound"] = c.verdict == Verdict::verified ? Json(g.n() + 1) : Json(nullptr);
  j["method"] = c.method;
  j["candidates"] = c.stats.candidates;
  j["orbit_members"] = c.stats.orbit_members;
  if (c.apex_clique_free) j["apex_clique_free"] = *c.apex_clique_free;
  if (c.clique) j["witness"] = to_json(*c.clique);
  if (c.certificate && !c.certificate->source.empty()) j["source"] = c.certificate->source;
  j["colouring"] = colouring_lines(g);
  return j;
}

Json to_json(const ExhaustiveCheck& c, int n, const ColourGroup& group,
             const RamseyTarget& target) {
  Json j;
  j["kind"] = "exhaustive";
  j["verdict"] = to_string(c.verdict);
  j["group"] = group.name();
  j["target"] = target_json(target);
  j["n"] = n;
  j["representatives"] = c.items;
  j["checked"] = c.checked;
  if (c.counterexample) {
    j["counterexample_index"] = c.counterexample_index;
    j["counterexample"] = colouring_lines(*c.counterexample);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gswitch
