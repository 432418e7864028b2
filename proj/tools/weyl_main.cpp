#include <iostream>

#include "CLI11.hpp"
#include "cgt/weyl.hpp"
#include "cli_common.hpp"

using namespace cgt;

int main(int argc, char** argv) {
  CLI::App app{"Relative Weyl groups W(lambda) = C(lambda) R(lambda)"};
  app.require_subcommand(1);

  std::string type, json_out;
  int rank = 3;
  std::uint32_t q = 3;

  auto* survey = app.add_subcommand("survey", "all lambda with [W:W(lambda)] odd");
  survey->add_option("--type", type, "B, C or D")->required();
  survey->add_option("--rank", rank, "rank n")->required();
  survey->add_option("--q", q, "odd prime power")->required();
  survey->add_option("--json", json_out, "write the survey as JSON ('-' for stdout)");

  auto* witness = app.add_subcommand("witness", "type C character with an odd-length C(lambda) element");
  witness->add_option("--rank", rank, "rank n >= 3")->required();
  witness->add_option("--q", q, "q = 5 mod 8")->required();
  witness->add_option("--json", json_out, "write the data as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cli::quiet_text_if_json_stdout(json_out);
  return cli::guarded([&] {
    if (survey->parsed()) {
      const RootKind kind = parse_root_kind(type);
      const SurveyReport s = survey_odd_index(kind, rank, q);
      std::cout << kind_letter(kind) << rank << " q=" << q << ": " << s.num_characters
                << " characters, " << s.num_orbits << " orbits, " << s.records.size()
                << " of odd index\n";
      for (const auto& r : s.records)
        std::cout << "  " << r.lambda.to_string() << "  index " << r.index << "  R " << r.r_type
                  << " (" << r.r_order << ")  |C| " << r.c_order << "  odd-length C elements "
                  << r.c_odd_length << "\n";
      std::cout << "odd-length C(lambda) occurs for " << s.odd_length_count << " characters; structure "
                << (s.all_structure_ok ? "ok" : "FAILED") << "\n";
      if (!json_out.empty()) cli::write_json(json_out, survey_to_json(s));
      if (!s.all_structure_ok) return 1;
      if (kind != RootKind::C && s.odd_length_count != 0) return 1;
      return 0;
    }
    const TorusCharacter l = witness_lambda_type_C(rank, q);
    const WeylGroup W{RootSystem(RootKind::C, rank)};
    const RelativeWeylData d = relative_weyl(W, l);
    std::size_t odd = 0;
    for (std::size_t c : d.c) odd += W.length(c) % 2;
    const int k = witness_k(rank);
    std::cout << "C" << rank << " q=" << q << " lambda " << l.to_string() << "\n"
              << "  |W(lambda)| " << d.w_lambda.size() << "  R " << d.r_type << " (" << d.r.size()
              << ", expected D" << k << "xB" << rank - k << ")  |C| " << d.c.size()
              << "  odd-length C elements " << odd << "\n";
    if (!json_out.empty())
      cli::write_json(json_out, {{"rank", rank},
                                 {"q", q},
                                 {"lambda", l.to_string()},
                                 {"w_lambda_order", d.w_lambda.size()},
                                 {"r_type", d.r_type},
                                 {"r_order", d.r.size()},
                                 {"c_order", d.c.size()},
                                 {"k", k},
                                 {"c_odd_length", odd}});
    return odd > 0 && d.structure_ok() ? 0 : 1;
  });
}
