#include "hnstrata/json_io.hpp"

namespace hnstrata {

ordered_json blocks_to_json(const AdmissibleSequence& mu) {
  ordered_json arr = ordered_json::array();
  for (const Block& b : mu.blocks()) arr.push_back(ordered_json::array({b.rank, b.degree}));
  return arr;
}

ordered_json path_to_json(const ConvexPath& path) {
  ordered_json arr = ordered_json::array();
  for (const LatticePoint& v : path.vertices()) arr.push_back(ordered_json::array({v.x, v.y}));
  return arr;
}

AdmissibleSequence sequence_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) fail(errc::parse_error, "sequence must be a nonempty array of [n,k] pairs");
  std::vector<Block> blocks;
  blocks.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      fail(errc::parse_error, "each block must be an integer pair [n,k]");
    blocks.push_back({entry[0].get<i64>(), entry[1].get<i64>()});
  }
  return AdmissibleSequence::make(std::move(blocks));
}

AdmissibleSequence sequence_from_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "invalid JSON for sequence");
  return sequence_from_json(j);
}

std::string status_name(ConnStatus status) {
  switch (status) {
    case ConnStatus::exact: return "exact";
    case ConnStatus::lower_bound_only: return "lower_bound_only";
    case ConnStatus::no_stratum: return "no_stratum";
  }
  return "unknown";
}

ordered_json connectivity_to_json(const ConnectivityResult& result) {
  ordered_json j;
  if (result.status == ConnStatus::no_stratum) {
    j["status"] = status_name(result.status);
    return j;
  }
  j["d"] = result.min_codim;
  j["connectivity"] = result.connectivity;
  j["witness"] = result.witness ? blocks_to_json(*result.witness) : ordered_json(nullptr);
  j["status"] = status_name(result.status);
  return j;
}

ordered_json report_to_json(const VerifyReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["pass"] = report.pass;
  j["checked"] = report.checked;
  j["counterexamples"] = report.counterexamples;
  ordered_json notes = ordered_json::object();
  for (const auto& [key, value] : report.notes) notes[key] = value;
  j["notes"] = std::move(notes);
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace hnstrata
