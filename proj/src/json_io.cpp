#include "wordrep/json_io.hpp"

#include <algorithm>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

Json edges_json(const std::vector<Edge>& es) {
  Json a = Json::array();
  for (auto [u, v] : es) a.push_back({u, v});
  return a;
}

}  // namespace

const char* to_string(UniformSearchStatus s) {
  switch (s) {
    case UniformSearchStatus::Found: return "Found";
    case UniformSearchStatus::NotFound: return "NotFound";
    case UniformSearchStatus::Undecided: return "Undecided";
  }
  return "?";
}

Json to_json(const ShortcutWitness& w) {
  return Json{{"path", w.path},
              {"shortcutting_edge", {w.shortcutting_edge.first, w.shortcutting_edge.second}},
              {"missing_pair", {w.missing_pair.first, w.missing_pair.second}}};
}

Json to_json(const ColoringCertificate& c) {
  Json j{{"scheme", to_string(c.scheme)},
         {"n", c.spec.n_vertices() / 2},
         {"n_vertices", c.spec.n_vertices()},
         {"jumps", c.spec.jumps()},
         {"colors", c.colors},
         {"color_dag", {{"color_count", c.color_dag.color_count},
                        {"edges", edges_json(c.color_dag.arcs)}}},
         {"verified", c.verified}};
  if (c.scheme == Scheme::GeneratorBlocks) {
    j["generator"] = c.generator;
    j["block"] = c.block;
  }
  return j;
}

Json to_json(const UniformSearchResult& r) {
  Json j{{"k", nullptr}, {"witness", r.witness}, {"nodes_explored", r.nodes_explored},
         {"status", to_string(r.status)}};
  if (r.k) j["k"] = *r.k;
  return j;
}

Json to_json(const Orientation& o) {
  std::vector<Edge> arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  return Json{{"vertex_count", o.graph().vertex_count()}, {"arcs", edges_json(arcs)}};
}

Json to_json(const Factorization& f) {
  return Json{{"p", f.p}, {"q", f.q}, {"R", f.R}, {"S", f.S}, {"d", f.d},
              {"map", f.map.image}};
}

Json to_json(const Certificate& c) {
  Json j{{"type", certificate_kind(c)}};
  switch (c.index()) {
    case 1: j["word"] = std::get<Word>(c); break;
    case 2: j["coloring"] = to_json(std::get<ColoringCertificate>(c)); break;
    case 3: j["orientation"] = to_json(std::get<Orientation>(c)); break;
    case 4: {
      const auto& pc = std::get<ProductCertificate>(c);
      j["left"] = {{"n_vertices", pc.left.n_vertices()}, {"jumps", pc.left.jumps()},
                   {"orientation", to_json(pc.left_orientation)}};
      j["right"] = {{"n_vertices", pc.right.n_vertices()}, {"jumps", pc.right.jumps()},
                    {"orientation", to_json(pc.right_orientation)}};
      j["map"] = pc.map.image;
      if (pc.factorization) j["factorization"] = to_json(*pc.factorization);
      break;
    }
    case 5: {
      const auto& f = std::get<FamilyCondition>(c);
      j["order"] = f.order;
      j["r"] = f.r;
      break;
    }
    default: break;
  }
  return j;
}

Json to_json(const ClassificationResult& r, bool with_timing) {
  const auto& jumps = r.spec.jumps();
  const std::int64_t N = r.spec.n_vertices();
  Json j;
  if (N % 2 == 0 && jumps.size() == 3 && 2 * jumps[2] == N) {
    j["n"] = N / 2;
    j["a"] = jumps[0];
    j["b"] = jumps[1];
  } else {
    j["n"] = N;
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  j["jumps"] = jumps;
  j["verdict"] = to_string(r.verdict);
  j["theorem_tag"] = r.theorem_tag;
  j["rep_number_upper"] = r.rep_number_upper ? Json(*r.rep_number_upper) : Json(nullptr);
  j["certificate"] = to_json(r.certificate);
  if (!(r.certified_spec == r.spec)) {
    j["certificate"]["spec"] = {{"n_vertices", r.certified_spec.n_vertices()},
                                {"jumps", r.certified_spec.jumps()}};
  }
  j["verify_ok"] = r.verify_ok;
  j["search_nodes"] = r.search_nodes;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void validate_result_json(const Json& j) {
  auto need = [&](const char* key, bool ok) {
    if (!j.contains(key)) throw UsageError(std::string("missing field ") + key);
    if (!ok) throw UsageError(std::string("mistyped field ") + key);
  };
  if (!j.is_object()) throw UsageError("result must be an object");
  need("n", j.contains("n") && j["n"].is_number_integer());
  need("a", j.contains("a") && (j["a"].is_number_integer() || j["a"].is_null()));
  need("b", j.contains("b") && (j["b"].is_number_integer() || j["b"].is_null()));
  need("verdict", j.contains("verdict") && j["verdict"].is_string());
  const std::string v = j["verdict"];
  if (v != "Representable" && v != "NotRepresentable" && v != "Unknown") {
    throw UsageError("unknown verdict " + v);
  }
  need("theorem_tag", j.contains("theorem_tag") && j["theorem_tag"].is_string());
  need("rep_number_upper", j.contains("rep_number_upper") &&
                               (j["rep_number_upper"].is_null() ||
                                (j["rep_number_upper"].is_number_integer() &&
                                 j["rep_number_upper"].get<std::int64_t>() > 0)));
  need("certificate", j.contains("certificate") && j["certificate"].is_object() &&
                          j["certificate"].contains("type"));
  need("verify_ok", j.contains("verify_ok") && j["verify_ok"].is_boolean());
  if (v == "Representable" && j["certificate"]["type"] == "none") {
    throw UsageError("Representable result without certificate");
  }
}

}  // namespace wordrep
