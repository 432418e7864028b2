#include <iostream>

#include "CLI11.hpp"
#include "cgt/errors.hpp"
#include "cgt/hecke.hpp"
#include "cli_common.hpp"

using namespace cgt;

int main(int argc, char** argv) {
  CLI::App app{"Principal series modules and the sigma-action on their constituents"};
  app.require_subcommand(1);

  std::string family, lambda = "quadratic", json_out;
  std::uint32_t q = 5;

  auto* verify = app.add_subcommand("verify", "build Ind_B^G(lambda) and its endomorphism algebra");
  verify->add_option("--family", family, "sl2, gl2 or sp4")->required();
  verify->add_option("--q", q, "odd prime power")->required();
  verify->add_option("--lambda", lambda, "trivial or quadratic");
  verify->add_option("--json", json_out, "write the report as JSON ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  cli::quiet_text_if_json_stdout(json_out);
  return cli::guarded([&] {
    const Family f = parse_family(family);
    if ((f == Family::SL2 && q > 13) || (f != Family::SL2 && q != 3))
      throw SizeGuardError("instances are limited to SL2(q), q <= 13, and GL2(3), Sp4(3)");
    const LieInstance inst(f, q);
    const CharacterTable table = character_table(inst.G());
    const HeckeModule h(inst, instance_character(inst, lambda), table);

    std::cout << inst.name() << ", lambda " << h.lambda().to_string() << ": [G:B] = " << h.dim()
              << ", |W(lambda)| = " << h.w_lambda().size() << ", R = " << h.relative().r_type
              << ", |C| = " << h.relative().c.size() << "\n";
    std::cout << "  intertwiners commute: " << (h.intertwiners_commute() ? "yes" : "NO")
              << ", commutant dimension " << h.commutant_dim() << "\n";
    for (const auto& qd : h.quadratic()) {
      if (!qd.relevant) continue;
      std::cout << "  alpha (";
      for (std::size_t i = 0; i < qd.alpha.size(); ++i) std::cout << (i ? "," : "") << qd.alpha[i];
      std::cout << "): Ind " << qd.ind_relation << " (count " << qd.ind_count << "), p " << qd.p
                << ", eps ";
      if (qd.epsilon == 0) std::cout << "n/a";
      else std::cout << qd.epsilon;
      std::cout << (qd.relation_holds ? "" : "  RELATION FAILS") << "\n";
    }
    std::cout << "  T-basis rational: " << (h.t_rational() ? "yes" : "NO")
              << ", braid relations: " << (h.braid_ok() ? "yes" : "NO") << "\n";
    for (const auto& c : h.constituents())
      std::cout << "  constituent row " << c.row << " degree " << c.degree << " mult "
                << c.multiplicity << ": sigma -> row " << c.sigma_row << ", predicted row "
                << c.predicted_sigma_row << "\n";
    std::cout << (h.ok() ? "ok" : "FAILED") << "\n";
    if (!json_out.empty()) cli::write_json(json_out, hecke_to_json(h));
    return h.ok() ? 0 : 1;
  });
}
