#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bmq/automorphisms.hpp"
#include "bmq/green.hpp"
#include "bmq/io.hpp"
#include "bmq/mutation_class.hpp"
#include "bmq/presentation.hpp"
#include "bmq/psperm.hpp"
#include "bmq/quiver.hpp"
#include "bmq/verification.hpp"

namespace {

using bmq::Word;
using nlohmann::json;

struct RunConfig {
  std::string family = "A";
  int rank = 3;
  std::vector<std::string> pivots;
  std::string word;
  std::string input;
  std::string output;
  std::string format = "json";
  std::string kind = "monoid";
  int cap = 0;
  uint64_t seed = 1;
  bool full = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty())
    std::cout << text;
  else
    bmq::write_text_file(cfg.output, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Word parse_labels(const std::vector<std::string>& names) {
  Word w;
  for (const auto& name : names) w.push_back(bmq::parse_label(name));
  return w;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> names;
  std::string tok;
  while (in >> tok) names.push_back(tok);
  return parse_labels(names);
}

std::string quiver_text(const bmq::Quiver& q) {
  std::ostringstream out;
  out << q.family() << q.mutable_count() << " vertices:";
  for (int label : q.labels()) out << " " << bmq::label_name(label);
  out << "\n";
  int m = q.vertex_count();
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      if (q.b()[i][k] > 0)
        out << bmq::label_name(q.labels()[i]) << " -> "
            << bmq::label_name(q.labels()[k]) << " (weight "
            << bmq::weight(q, q.labels()[i], q.labels()[k]) << ")\n";
  return out.str();
}

std::string presentation_text(const bmq::Presentation& p) {
  std::ostringstream out;
  out << p.kind << " generators:";
  for (int g : p.generators) out << " " << bmq::label_name(g);
  out << "\n";
  for (const auto& r : p.relations)
    out << r.tag << ": " << bmq::word_text(r.lhs) << " = "
        << bmq::word_text(r.rhs) << "\n";
  return out.str();
}

bmq::Quiver starting_quiver(const RunConfig& cfg) {
  if (!cfg.input.empty())
    return bmq::quiver_from_json(bmq::read_json_file(cfg.input));
  return bmq::standard_quiver(cfg.family[0], cfg.rank);
}

void emit_quiver(const RunConfig& cfg, const bmq::Quiver& q) {
  if (cfg.format == "dot")
    emit(cfg, bmq::quiver_to_dot(q));
  else if (cfg.format == "text")
    emit(cfg, quiver_text(q));
  else
    emit(cfg, dump(bmq::quiver_to_json(q)));
}

int run_mutate(const RunConfig& cfg) {
  auto q = bmq::mutate_sequence(starting_quiver(cfg), parse_labels(cfg.pivots));
  emit_quiver(cfg, q);
  return 0;
}

int run_class(const RunConfig& cfg) {
  auto cat = bmq::enumerate_class(starting_quiver(cfg));
  emit(cfg, dump(bmq::catalog_to_json(cat)));
  return 0;
}

int run_present(const RunConfig& cfg) {
  auto q = bmq::mutate_sequence(starting_quiver(cfg), parse_labels(cfg.pivots));
  auto p = cfg.kind == "group" ? bmq::group_presentation(q) : bmq::present(q);
  if (cfg.format == "text")
    emit(cfg, presentation_text(p));
  else
    emit(cfg, dump(bmq::presentation_to_json(p)));
  return 0;
}

int run_verify(const RunConfig& cfg) {
  char family = cfg.family[0];
  json out;
  bool ok = true;
  if (cfg.full) {
    auto reports = bmq::verify_mutation_invariance(family, cfg.rank);
    json items = json::array();
    for (const auto& rep : reports) {
      items.push_back(bmq::report_to_json(rep));
      if (!rep.pass()) ok = false;
    }
    out["members"] = items;
  } else {
    auto q = bmq::standard_quiver(family, cfg.rank);
    auto base = bmq::realize_generators(family, cfg.rank);
    auto rep = bmq::check_relations(bmq::present(q), base, cfg.rank, "standard");
    out["standard"] = bmq::report_to_json(rep);
    if (!rep.pass()) ok = false;
  }
  if (cfg.cap > 0) {
    auto q = bmq::standard_quiver(family, cfg.rank);
    auto base = bmq::realize_generators(family, cfg.rank);
    auto cr = bmq::bounded_word_congruence(bmq::present(q), cfg.cap, base,
                                           cfg.rank);
    json c;
    c["length_bound"] = cr.length_bound;
    c["words"] = cr.words;
    c["classes"] = cr.classes;
    c["covered"] = cr.covered;
    c["monoid_size"] = cr.monoid_size;
    c["sound"] = cr.sound;
    c["bijective"] = cr.bijective;
    out["congruence"] = c;
    if (!cr.sound) ok = false;
  }
  out["pass"] = ok;
  emit(cfg, dump(out));
  return ok ? 0 : 1;
}

int run_autos(const RunConfig& cfg) {
  char family = cfg.family[0];
  Word g = cfg.word.empty() ? bmq::random_reduced_word(family, cfg.rank, cfg.seed)
                            : parse_word(cfg.word);
  auto q0 = bmq::standard_quiver(family, cfg.rank);
  auto base = bmq::realize_generators(family, cfg.rank);
  auto [tq, gens] = bmq::apply_inner(q0, g, base, cfg.rank);
  std::ostringstream out;
  out << "word: " << bmq::word_text(g) << "\n";
  out << "pivots:";
  for (int k : bmq::double_mutation_sequence(g))
    out << " " << bmq::label_name(k);
  out << "\n\n" << bmq::quiver_to_dot(tq.quiver) << "\n";
  for (const auto& [label, value] : gens.values)
    out << "s_" << bmq::label_name(label) << " -> "
        << bmq::word_text(gens.words.at(label)) << " : "
        << bmq::element_text(value) << "\n";
  emit(cfg, out.str());
  return 0;
}

int run_green(const RunConfig& cfg) {
  char family = cfg.family[0];
  auto m = bmq::generator_closure(bmq::realize_generators(family, cfg.rank),
                                  cfg.rank);
  auto g = bmq::green_decomposition(m);
  emit(cfg, dump(bmq::green_to_json(g, m)));
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  char family = cfg.family[0];
  auto m = bmq::generator_closure(bmq::realize_generators(family, cfg.rank),
                                  cfg.rank);
  json out;
  out["family"] = cfg.family;
  out["rank"] = cfg.rank;
  out["expected"] = bmq::expected_cardinality(family, cfg.rank);
  out["closure"] = m.size();
  out["match"] = bmq::expected_cardinality(family, cfg.rank) == m.size();
  emit(cfg, dump(out));
  return out["match"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean reflection monoids from mutation classes of quivers"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool needs_rank = true) {
    sub->add_option("--family", cfg.family, "A, B or D")
        ->check(CLI::IsMember({"A", "B", "D"}));
    if (needs_rank) sub->add_option("--rank", cfg.rank, "Dynkin rank n");
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  auto* mutate = app.add_subcommand("mutate", "apply pivots and emit the quiver");
  add_common(mutate);
  mutate->add_option("--pivots", cfg.pivots, "pivot vertex names in order");
  mutate->add_option("--input", cfg.input, "starting quiver json");

  auto* cls = app.add_subcommand("class", "emit the mutation class catalog");
  add_common(cls);
  cls->add_option("--input", cfg.input, "seed quiver json");

  auto* present = app.add_subcommand("present", "emit the presentation");
  add_common(present);
  present->add_option("--pivots", cfg.pivots, "pivots applied before presenting");
  present->add_option("--input", cfg.input, "starting quiver json");
  present->add_option("--kind", cfg.kind, "monoid or group")
      ->check(CLI::IsMember({"monoid", "group"}));

  auto* verify = app.add_subcommand("verify", "check relations concretely");
  add_common(verify);
  verify->add_flag("--full", cfg.full, "verify every mutation class member");
  verify->add_option("--congruence-cap", cfg.cap,
                     "also run the bounded word congruence up to this length");

  auto* autos = app.add_subcommand("autos", "double-mutation conjugation replay");
  add_common(autos);
  autos->add_option("--word", cfg.word, "space separated mutable vertex names");
  autos->add_option("--seed", cfg.seed, "seed for a random reduced word");

  auto* green = app.add_subcommand("green", "emit the Green decomposition");
  add_common(green);

  auto* oracle = app.add_subcommand("oracle", "expected vs enumerated cardinality");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mutate->parsed()) return run_mutate(cfg);
    if (cls->parsed()) return run_class(cfg);
    if (present->parsed()) return run_present(cfg);
    if (verify->parsed()) return run_verify(cfg);
    if (autos->parsed()) return run_autos(cfg);
    if (green->parsed()) return run_green(cfg);
    if (oracle->parsed()) return run_oracle(cfg);
  } catch (const bmq::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
