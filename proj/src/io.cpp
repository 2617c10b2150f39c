#include "bmq/io.hpp"

#include <fstream>
#include <sstream>

namespace bmq {

namespace {

using nlohmann::json;

json word_to_json(const Word& w) {
  json out = json::array();
  for (int letter : w) out.push_back(label_name(letter));
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw io_error("word must be an array of vertex names");
  Word w;
  for (const auto& item : j) w.push_back(parse_label(item.get<std::string>()));
  return w;
}

}  // namespace

json quiver_to_json(const Quiver& q) {
  json j;
  j["family"] = std::string(1, q.family());
  json verts = json::array();
  for (int label : q.labels()) verts.push_back(label_name(label));
  j["vertices"] = verts;
  j["b"] = q.b();
  j["d"] = q.d();
  return j;
}

Quiver quiver_from_json(const json& j) {
  try {
    std::string fam = j.at("family").get<std::string>();
    if (fam.size() != 1) throw io_error("family must be a single letter");
    std::vector<int> labels;
    for (const auto& item : j.at("vertices"))
      labels.push_back(parse_label(item.get<std::string>()));
    auto b = j.at("b").get<std::vector<std::vector<int>>>();
    auto d = j.at("d").get<std::vector<int>>();
    return Quiver(fam[0], labels, b, d);
  } catch (const json::exception& e) {
    throw io_error(std::string("bad quiver json: ") + e.what());
  }
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["kind"] = p.kind;
  json gens = json::array();
  for (int g : p.generators) gens.push_back(label_name(g));
  j["generators"] = gens;
  json rels = json::array();
  for (const Relation& r : p.relations) {
    json rel;
    rel["tag"] = r.tag;
    rel["lhs"] = word_to_json(r.lhs);
    rel["rhs"] = word_to_json(r.rhs);
    rels.push_back(rel);
  }
  j["relations"] = rels;
  return j;
}

Presentation presentation_from_json(const json& j) {
  try {
    Presentation p;
    p.kind = j.at("kind").get<std::string>();
    for (const auto& item : j.at("generators"))
      p.generators.push_back(parse_label(item.get<std::string>()));
    for (const auto& item : j.at("relations")) {
      Relation r;
      r.tag = item.at("tag").get<std::string>();
      r.lhs = word_from_json(item.at("lhs"));
      r.rhs = word_from_json(item.at("rhs"));
      p.relations.push_back(std::move(r));
    }
    return p;
  } catch (const json::exception& e) {
    throw io_error(std::string("bad presentation json: ") + e.what());
  }
}

json catalog_to_json(const ClassCatalog& cat) {
  json j;
  j["family"] = std::string(1, cat.family);
  j["n"] = cat.n;
  j["size"] = cat.size();
  json members = json::array();
  for (int i = 0; i < cat.size(); ++i) {
    json entry;
    entry["quiver"] = quiver_to_json(cat.members[i]);
    json wit = json::array();
    for (int label : cat.witness[i]) wit.push_back(label_name(label));
    entry["witness"] = wit;
    members.push_back(entry);
  }
  j["members"] = members;
  return j;
}

json report_to_json(const VerificationReport& rep) {
  json j;
  j["id"] = rep.id;
  j["relations_checked"] = rep.relations_checked;
  j["closure_ok"] = rep.closure_ok;
  j["pass"] = rep.pass();
  json fails = json::array();
  for (const RelationFailure& f : rep.failures) {
    json entry;
    entry["tag"] = f.rel.tag;
    entry["lhs"] = word_text(f.rel.lhs);
    entry["rhs"] = word_text(f.rel.rhs);
    entry["lhs_value"] = element_text(f.lhs_value);
    entry["rhs_value"] = element_text(f.rhs_value);
    fails.push_back(entry);
  }
  j["failures"] = fails;
  return j;
}

json green_to_json(const GreenDecomposition& g, const EnumeratedMonoid& m) {
  json j;
  j["size"] = m.size();
  j["l_count"] = g.l_count;
  j["r_count"] = g.r_count;
  j["h_count"] = g.h_count;
  j["d_count"] = g.d_count;
  j["j_count"] = g.j_count;
  j["d_equals_j"] = g.d_equals_j;
  json classes = json::array();
  const std::vector<int>* order = g.chain.empty() ? nullptr : &g.chain;
  for (int t = 0; t < g.d_count; ++t) {
    int d = order ? (*order)[t] : t;
    json entry;
    entry["size"] = static_cast<int>(g.d_members[d].size());
    entry["rank"] = g.d_rank[d];
    entry["idempotents"] = static_cast<int>(g.d_idempotents[d].size());
    entry["subgroup_order"] = g.d_subgroup_order[d];
    classes.push_back(entry);
  }
  j["d_classes"] = classes;
  j["chain"] = !g.chain.empty();
  return j;
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int label : q.labels()) {
    out << "  \"" << label_name(label) << "\"";
    if (label == kEps) out << " [style=filled]";
    out << ";\n";
  }
  int m = q.vertex_count();
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      int bij = q.b()[i][k];
      if (bij <= 0) continue;
      int w = weight(q, q.labels()[i], q.labels()[k]);
      out << "  \"" << label_name(q.labels()[i]) << "\" -> \""
          << label_name(q.labels()[k]) << "\"";
      if (w >= 2) out << " [label=\"" << w << "\"]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw io_error("cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw io_error("write to " + path + " failed");
}

}  // namespace bmq
