#include "herd/report.hpp"

#include <sstream>
#include <string>

#include "json.hpp"

#include "herd/errors.hpp"
#include "herd/positivity.hpp"

namespace herd {

namespace {

using nlohmann::json;

json rational_vector_json(const RationalVector& v) {
  json out = json::array();
  for (const Rational& x : v) out.push_back(x.str());
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

json verdict_json(const HerdabilityVerdict& v) {
  json out;
  out["herdable"] = v.herdable;
  out["method"] = v.method;
  if (v.primal_certificate) out["primal_certificate"] = rational_vector_json(*v.primal_certificate);
  if (v.dual_certificate) out["dual_certificate"] = rational_vector_json(*v.dual_certificate);
  return out;
}

json partition_json(const ClusterPartition& p) {
  json clusters = json::array();
  for (const auto& cluster : p.clusters) {
    json nodes = json::array();
    for (int v : cluster) nodes.push_back(v + 1);
    clusters.push_back(std::move(nodes));
  }
  json out;
  out["kind"] = p.kind == PartitionKind::clustering ? "clustering" : "structural";
  out["clusters"] = std::move(clusters);
  return out;
}

json criterion_json(const CriterionReport& r) {
  json out;
  out["criterion"] = r.criterion;
  out["strength"] = to_string(r.strength);
  out["hypotheses_hold"] = r.hypotheses_hold;
  if (r.implied_herdable) out["implied_herdable"] = *r.implied_herdable;
  json evidence = json::array();
  for (const auto& [key, value] : r.evidence) evidence.push_back(json::array({key, value}));
  out["evidence"] = std::move(evidence);
  return out;
}

json step_json(const ReductionStep& s) {
  json out;
  out["name"] = s.name;
  out["input_shape"] = json::array({s.input_shape.first, s.input_shape.second});
  out["output_shape"] = json::array({s.output_shape.first, s.output_shape.second});
  if (s.input_transform) out["input_transform"] = matrix_json(*s.input_transform);
  if (s.row_permutation) {
    json perm = json::array();
    for (int v : *s.row_permutation) perm.push_back(v + 1);
    out["row_permutation"] = std::move(perm);
  }
  if (s.block_split) out["block_split"] = *s.block_split;
  return out;
}

json tree_json(const TreeLayers& t) {
  json layers = json::array();
  for (const auto& layer : t.layers) {
    json nodes = json::array();
    for (int v : layer) nodes.push_back(v + 1);
    layers.push_back(std::move(nodes));
  }
  json parents = json::array();
  for (int p : t.parent) {
    if (p == kUnreachable) {
      parents.push_back(nullptr);
    } else {
      parents.push_back(p + 1);
    }
  }
  json out;
  out["leader"] = t.leader + 1;
  out["layers"] = std::move(layers);
  out["parents"] = std::move(parents);
  return out;
}

std::optional<Rational> rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational::parse(j.dump());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  return std::nullopt;
}

std::optional<RationalVector> rational_vector_from_json(const json& j) {
  if (!j.is_array()) return std::nullopt;
  RationalVector out;
  out.reserve(j.size());
  for (const json& entry : j) {
    const auto x = rational_from_json(entry);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return out;
}

void verify_verdict_block(const json& v, const SystemPair& pair, const std::string& where,
                          std::vector<std::string>& problems) {
  if (!v.is_object() || !v.contains("herdable") || !v["herdable"].is_boolean()) {
    problems.push_back(where + ": malformed verdict");
    return;
  }
  const bool herdable = v["herdable"].get<bool>();
  const RationalMatrix r = controllability_matrix(pair);
  if (herdable) {
    if (pair.state_dim() == 0) return;  // empty pair: herdable by convention, no certificate
    if (!v.contains("primal_certificate")) {
      problems.push_back(where + ": herdable verdict lacks a primal certificate");
      return;
    }
    const auto u = rational_vector_from_json(v["primal_certificate"]);
    if (!u || static_cast<int>(u->size()) != r.cols()) {
      problems.push_back(where + ": primal certificate malformed or of wrong length");
      return;
    }
    if (!verify_primal_certificate(r, *u)) {
      problems.push_back(where + ": primal certificate fails R u >= 1");
    }
  } else {
    if (!v.contains("dual_certificate")) {
      problems.push_back(where + ": non-herdable verdict lacks a dual certificate");
      return;
    }
    const auto y = rational_vector_from_json(v["dual_certificate"]);
    if (!y || static_cast<int>(y->size()) != r.rows()) {
      problems.push_back(where + ": dual certificate malformed or of wrong length");
      return;
    }
    if (!verify_dual_certificate(r, *y)) {
      problems.push_back(where + ": dual certificate fails y >= 0, y != 0, y^T R = 0");
    }
  }
}

}  // namespace

std::string report_to_json(const Report& report) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["command"] = report.command;
  if (!report.model_name.empty()) doc["model_name"] = report.model_name;
  if (report.verdict) doc["verdict"] = verdict_json(*report.verdict);
  if (report.criteria) {
    json block;
    json reports = json::array();
    for (const CriterionReport& r : report.criteria->reports) reports.push_back(criterion_json(r));
    block["reports"] = std::move(reports);
    json steps = json::array();
    for (const ReductionStep& s : report.criteria->trace.steps) steps.push_back(step_json(s));
    block["reductions"] = std::move(steps);
    block["consistency_failures"] = report.criteria->consistency_failures;
    doc["criteria"] = std::move(block);
  }
  if (report.balance_requested) {
    json block;
    block["clustering"] = report.clustering ? partition_json(*report.clustering) : json(nullptr);
    block["structural"] = report.structural ? partition_json(*report.structural) : json(nullptr);
    doc["balance"] = std::move(block);
  }
  if (report.tree) doc["tree"] = tree_json(*report.tree);
  if (report.x0) doc["x0"] = rational_vector_json(*report.x0);
  if (report.plan) {
    json block;
    block["horizon"] = report.plan->horizon;
    block["threshold"] = report.plan->threshold.str();
    json inputs = json::array();
    for (const RationalVector& u : report.plan->inputs) inputs.push_back(rational_vector_json(u));
    block["inputs"] = std::move(inputs);
    block["predicted_final_state"] = rational_vector_json(report.plan->predicted_final_state);
    doc["plan"] = std::move(block);
  }
  if (report.design) {
    json block;
    block["budget"] = report.design->budget;
    block["explored"] = report.design->explored;
    json sets = json::array();
    for (const LeaderSetVerdict& s : report.design->minimal_sets) {
      json entry;
      json leaders = json::array();
      for (int v : s.leaders) leaders.push_back(v + 1);
      entry["leaders"] = std::move(leaders);
      entry["verdict"] = verdict_json(s.verdict);
      sets.push_back(std::move(entry));
    }
    block["minimal_sets"] = std::move(sets);
    doc["design"] = std::move(block);
  }
  doc["timing_ms"] = report.timing_ms;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  if (!report.model_name.empty()) out << "model: " << report.model_name << "\n";
  if (report.verdict) {
    out << "verdict: " << (report.verdict->herdable ? "herdable" : "not herdable") << " ("
        << report.verdict->method << ")\n";
    if (report.verdict->primal_certificate) {
      out << "primal certificate: " << vector_str(*report.verdict->primal_certificate) << "\n";
    }
    if (report.verdict->dual_certificate) {
      out << "dual certificate: " << vector_str(*report.verdict->dual_certificate) << "\n";
    }
  }
  if (report.criteria) {
    out << "criteria:\n";
    if (report.criteria->reports.empty()) out << "  (none applicable)\n";
    for (const CriterionReport& r : report.criteria->reports) {
      out << "  " << r.criterion << " (" << to_string(r.strength) << "): ";
      if (!r.hypotheses_hold) {
        out << "hypotheses do not hold\n";
      } else {
        out << "hypotheses hold -> " << (*r.implied_herdable ? "herdable" : "not herdable")
            << "\n";
      }
      for (const auto& [key, value] : r.evidence) {
        out << "    " << key << ": " << value << "\n";
      }
    }
    if (!report.criteria->trace.steps.empty()) {
      out << "reductions:";
      for (const ReductionStep& s : report.criteria->trace.steps) {
        out << " " << s.name << " (" << s.input_shape.first << "x" << s.input_shape.second
            << " -> " << s.output_shape.first << "x" << s.output_shape.second << ")";
      }
      out << "\n";
    }
    if (!report.criteria->consistency_failures.empty()) {
      out << "consistency failures:\n";
      for (const std::string& f : report.criteria->consistency_failures) {
        out << "  " << f << "\n";
      }
    }
  }
  auto partition_text = [](const ClusterPartition& p) {
    std::string s;
    for (size_t c = 0; c < p.clusters.size(); ++c) {
      if (c > 0) s += " | ";
      s += "{";
      for (size_t i = 0; i < p.clusters[c].size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(p.clusters[c][i] + 1);
      }
      s += "}";
    }
    return s;
  };
  if (report.balance_requested) {
    out << "clustering balance: "
        << (report.clustering ? partition_text(*report.clustering) : "absent") << "\n";
    out << "structural balance: "
        << (report.structural ? partition_text(*report.structural) : "absent") << "\n";
  }
  if (report.tree) {
    out << "tree: leader " << report.tree->leader + 1 << ", depth " << report.tree->depth()
        << "\n";
    for (size_t d = 0; d < report.tree->layers.size(); ++d) {
      out << "  layer " << d + 1 << ":";
      for (int v : report.tree->layers[d]) out << " " << v + 1;
      out << "\n";
    }
  }
  if (report.x0) out << "x0: " << vector_str(*report.x0) << "\n";
  if (report.plan) {
    out << "plan: horizon " << report.plan->horizon << ", threshold "
        << report.plan->threshold.str() << "\n";
    for (size_t t = 0; t < report.plan->inputs.size(); ++t) {
      out << "  u(" << t << ") = " << vector_str(report.plan->inputs[t]) << "\n";
    }
    out << "  final state = " << vector_str(report.plan->predicted_final_state) << "\n";
  }
  if (report.design) {
    out << "design: budget " << report.design->budget << ", explored " << report.design->explored
        << "\n";
    for (const LeaderSetVerdict& s : report.design->minimal_sets) {
      out << "  minimal set {";
      for (size_t i = 0; i < s.leaders.size(); ++i) {
        if (i > 0) out << ",";
        out << s.leaders[i] + 1;
      }
      out << "}\n";
    }
  }
  out << "timing: " << report.timing_ms << " ms\n";
  return out.str();
}

std::vector<std::string> verify_report(const SystemPair& pair, const std::string& report_json) {
  std::vector<std::string> problems;
  json doc;
  try {
    doc = json::parse(report_json);
  } catch (const json::parse_error& e) {
    problems.push_back(std::string("report: invalid JSON: ") + e.what());
    return problems;
  }
  if (!doc.is_object()) {
    problems.push_back("report: top level must be an object");
    return problems;
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kReportSchemaVersion) {
    problems.push_back("report: missing or unsupported schema_version");
  }

  if (doc.contains("verdict")) {
    verify_verdict_block(doc["verdict"], pair, "verdict", problems);
  }

  if (doc.contains("plan")) {
    const json& plan = doc["plan"];
    if (!doc.contains("x0")) {
      problems.push_back("plan: report lacks the x0 it was computed for");
    } else {
      const auto x0 = rational_vector_from_json(doc["x0"]);
      const auto h = plan.contains("threshold") ? rational_from_json(plan["threshold"])
                                                : std::nullopt;
      std::optional<std::vector<RationalVector>> inputs;
      if (plan.contains("inputs") && plan["inputs"].is_array()) {
        inputs.emplace();
        for (const json& u : plan["inputs"]) {
          const auto parsed = rational_vector_from_json(u);
          if (!parsed) {
            inputs.reset();
            break;
          }
          inputs->push_back(*parsed);
        }
      }
      const auto predicted = plan.contains("predicted_final_state")
                                 ? rational_vector_from_json(plan["predicted_final_state"])
                                 : std::nullopt;
      if (!x0 || !h || !inputs || !predicted) {
        problems.push_back("plan: malformed fields");
      } else if (h->sign() <= 0) {
        problems.push_back("plan: threshold must be positive");
      } else if (!plan.contains("horizon") ||
                 plan["horizon"] != static_cast<int>(inputs->size())) {
        problems.push_back("plan: horizon does not match the input count");
      } else {
        try {
          const auto trajectory = simulate(pair, *x0, *inputs);
          const RationalVector& final_state = trajectory.back();
          if (final_state != *predicted) {
            problems.push_back("plan: simulation does not reproduce predicted_final_state");
          }
          for (const Rational& x : final_state) {
            if (x < *h) {
              problems.push_back("plan: final state drops below the threshold");
              break;
            }
          }
        } catch (const InvalidInputError& e) {
          problems.push_back(std::string("plan: ") + e.what());
        }
      }
    }
  }

  if (doc.contains("design")) {
    const json& design = doc["design"];
    if (!design.is_object() || !design.contains("minimal_sets") ||
        !design["minimal_sets"].is_array()) {
      problems.push_back("design: malformed block");
    } else {
      int index = 0;
      for (const json& entry : design["minimal_sets"]) {
        const std::string where = "design.minimal_sets[" + std::to_string(index++) + "]";
        if (!entry.is_object() || !entry.contains("leaders") || !entry["leaders"].is_array() ||
            !entry.contains("verdict")) {
          problems.push_back(where + ": malformed entry");
          continue;
        }
        std::vector<int> leaders;
        bool ok = true;
        for (const json& v : entry["leaders"]) {
          if (!v.is_number_integer()) {
            ok = false;
            break;
          }
          leaders.push_back(v.get<int>() - 1);
        }
        if (!ok) {
          problems.push_back(where + ": leaders must be integers");
          continue;
        }
        try {
          const SystemPair selection = SystemPair::from_leaders(pair.A, leaders);
          if (!entry["verdict"].contains("herdable") || entry["verdict"]["herdable"] != true) {
            problems.push_back(where + ": minimal set not marked herdable");
            continue;
          }
          verify_verdict_block(entry["verdict"], selection, where, problems);
        } catch (const InvalidInputError& e) {
          problems.push_back(where + ": " + e.what());
        }
      }
    }
  }

  return problems;
}

}  // namespace herd
