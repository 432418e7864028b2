#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cgt/errors.hpp"
#include "cgt/navarro.hpp"
#include "cli_common.hpp"

using namespace cgt;

namespace {

void print_verdict(const Verdict& v) {
  std::cout << v.name << ": |G| = " << v.order << ", |P| = " << v.sylow2_order
            << ", classes = " << v.num_classes << "\n"
            << "  self-normalizing Sylow 2: " << (v.group_side ? "yes" : "no") << "\n"
            << "  odd-degree rows sigma-fixed: " << (v.table_side ? "yes" : "no") << "\n";
  for (const auto& w : v.witnesses)
    std::cout << "  witness: row " << w.row << " (degree " << w.degree << ") at class "
              << w.class_index << ": " << w.value << " -> " << w.sigma_value << "\n";
  if (v.table_check) std::cout << "  table checks: " << (v.table_check->ok() ? "ok" : "FAILED") << "\n";
  std::cout << "  " << (v.agree() ? "agree" : "DISAGREE") << " (" << v.elapsed_ms << " ms)\n";
}

std::vector<GroupSpec> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  if (j.is_object() && j.contains("groups")) j = j["groups"];
  if (!j.is_array()) throw InputError("corpus file must hold an array of group specs");
  std::vector<GroupSpec> out;
  for (const auto& g : j) out.push_back(parse_group_spec(g));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow 2-normalizer versus sigma-fixed odd-degree characters"};
  app.require_subcommand(1);

  std::string group_file, json_out, corpus_file, table_out = "-";
  std::uint64_t max_order = kDefaultMaxOrder;
  unsigned threads = 1;
  bool builtin = false, no_sp4 = false;

  auto* check = app.add_subcommand("check", "check one group given as a JSON file");
  check->add_option("--group", group_file, "group spec file")->required();
  check->add_option("--max-order", max_order, "size guard on |G|");
  check->add_option("--json", json_out, "write the verdict as JSON ('-' for stdout)");

  auto* corpus = app.add_subcommand("corpus", "check a corpus of groups");
  corpus->add_flag("--builtin", builtin, "use the builtin corpus (default without --file)");
  corpus->add_option("--file", corpus_file, "JSON array of group specs");
  corpus->add_option("--json", json_out, "write the report as JSON ('-' for stdout)");
  corpus->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  corpus->add_option("--max-order", max_order, "size guard on |G|");
  corpus->add_flag("--no-sp4", no_sp4, "leave Sp4(3) out of the builtin corpus");

  auto* table = app.add_subcommand("table", "dump the character table of a group as JSON");
  table->add_option("--group", group_file, "group spec file")->required();
  table->add_option("--max-order", max_order, "size guard on |G|");
  table->add_option("--json", table_out, "output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cli::quiet_text_if_json_stdout(json_out);
  return cli::guarded([&] {
    if (check->parsed()) {
      const GroupSpec spec = load_group_file(group_file);
      const Verdict v = check_group(spec.build(max_order), spec.name);
      print_verdict(v);
      if (!json_out.empty()) cli::write_json(json_out, verdict_to_json(v));
      return v.agree() && (!v.table_check || v.table_check->ok()) ? 0 : 1;
    }
    if (corpus->parsed()) {
      std::vector<GroupSpec> specs;
      if (!corpus_file.empty()) specs = load_corpus_file(corpus_file);
      if (builtin || corpus_file.empty()) {
        auto b = builtin_corpus({.include_sp4 = !no_sp4});
        specs.insert(specs.end(), b.begin(), b.end());
      }
      const CorpusReport r = run_corpus(specs, threads, max_order);
      for (const auto& e : r.entries) {
        std::cout << (e.verdict ? (e.verdict->agree() ? "agree    " : "DISAGREE ") : "error    ")
                  << e.name;
        if (e.verdict)
          std::cout << "  group=" << e.verdict->group_side << " table=" << e.verdict->table_side
                    << "  " << e.verdict->elapsed_ms << " ms";
        else
          std::cout << "  " << e.error;
        std::cout << "\n";
      }
      std::cout << r.agreements() << "/" << r.entries.size() << " agree, " << r.elapsed_ms
                << " ms\n";
      if (!json_out.empty()) cli::write_json(json_out, report_to_json(r));
      return r.exit_code();
    }
    const GroupSpec spec = load_group_file(group_file);
    cli::write_json(table_out, table_to_json(character_table(spec.build(max_order))));
    return 0;
  });
}
