#include "fractal/json_io.hpp"

#include <algorithm>

#include "fractal/error.hpp"

namespace fractal {

namespace {

Json sets_to_json(const std::vector<Mask>& sets) {
  std::vector<std::vector<int>> lists;
  for (Mask s : sets) lists.push_back(elements_of(s));
  std::sort(lists.begin(), lists.end());
  Json out = Json::array();
  for (const auto& l : lists) out.push_back(l);
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) fail(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

std::vector<Mask> sets_from_json(const Json& v, int n, const char* name) {
  if (!v.is_array()) fail(ErrorCode::ParseError, std::string("field \"") + name + "\" must be an array");
  std::vector<Mask> out;
  for (const auto& set : v) {
    if (!set.is_array()) fail(ErrorCode::ParseError, "each set must be an array of elements");
    Mask m = 0;
    for (const auto& e : set) {
      if (!e.is_number_integer()) fail(ErrorCode::ParseError, "elements must be integers");
      const int x = e.get<int>();
      if (x < 0 || x >= n) fail(ErrorCode::OutOfRange, "element " + std::to_string(x) + " outside the ground set");
      m |= Mask{1} << x;
    }
    out.push_back(m);
  }
  return out;
}

int size_field(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 0) fail(ErrorCode::OutOfRange, "negative ground set size");
  if (n > kMaxGroundSize) fail(ErrorCode::SizeOverflow, "ground set larger than 24");
  return n;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["n"] = m.size();
  j["rank"] = m.rank();
  j["bases"] = sets_to_json(m.bases());
  return j;
}

Matroid matroid_from_json(const Json& j) {
  const int n = size_field(j);
  const int rank = int_field(j, "rank");
  Matroid m = make_matroid(n, make_set_family(n, sets_from_json(field(j, "bases"), n, "bases")));
  if (m.rank() != rank) fail(ErrorCode::ParseError, "field \"rank\" does not match the bases");
  return m;
}

Json chfamily_to_json(const CHFamily& f) {
  Json j;
  j["n"] = f.n;
  j["rank"] = f.r;
  j["chs"] = sets_to_json(f.chs);
  return j;
}

CHFamily chfamily_from_json(const Json& j) {
  const int n = size_field(j);
  CHFamily f{n, int_field(j, "rank"), sets_from_json(field(j, "chs"), n, "chs")};
  return validate_chfamily(f);
}

Json spike_to_json(const SpikeSpec& s) {
  Json j;
  j["t"] = s.t;
  Json picks = Json::array();
  for (std::uint32_t p : s.picks) picks.push_back(pick_string(p, s.t));
  j["picks"] = picks;
  return j;
}

SpikeSpec spike_from_json(const Json& j) {
  const int t = int_field(j, "t");
  const Json& v = field(j, "picks");
  if (!v.is_array()) fail(ErrorCode::ParseError, "field \"picks\" must be an array");
  std::vector<std::uint32_t> picks;
  for (const auto& p : v) {
    if (!p.is_string()) fail(ErrorCode::ParseError, "picks must be 0/1 strings");
    const auto text = p.get<std::string>();
    if (static_cast<int>(text.size()) != t) fail(ErrorCode::ParseError, "pick length differs from t");
    picks.push_back(parse_pick(text));
  }
  return make_spike_spec(t, std::move(picks));
}

Json ggraph_to_json(const GGraph& g) {
  Json j;
  j["kind"] = to_string(g.kind);
  j["t"] = g.t;
  j["s"] = g.s;
  j["p"] = g.p;
  return j;
}

GGraph ggraph_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail(ErrorCode::ParseError, "field \"kind\" must be a string");
  GGraph g;
  const auto text = kind.get<std::string>();
  if (text == "single") {
    g.kind = GraphKind::SingleVertex;
  } else if (text == "two") {
    g.kind = GraphKind::TwoVertex;
  } else if (text == "cycle") {
    g.kind = GraphKind::Cycle;
  } else {
    fail(ErrorCode::ParseError, "unknown graph kind \"" + text + "\"");
  }
  g.t = int_field(j, "t");
  g.s = int_field(j, "s");
  g.p = int_field(j, "p");
  return validate_ggraph(g);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fractal
