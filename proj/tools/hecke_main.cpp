#include <iostream>

#include "CLI11.hpp"
#include "cgt/errors.hpp"
#include "cgt/generic_hecke.hpp"
#include "cli_common.hpp"

using namespace cgt;

int main(int argc, char** argv) {
  CLI::App app{"Generic Iwahori-Hecke algebras of rank at most 2"};
  app.require_subcommand(1);

  std::string type;
  std::uint32_t q = 3;
  auto* check = app.add_subcommand("check", "specializations u -> 1 and u -> q");
  check->add_option("--type", type, "A1, A1xA1 or B2")->required();
  check->add_option("--q", q, "parameter value")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  return cli::guarded([&] {
    if (q < 2) throw InputError("q must be at least 2");
    const GenericHecke h(type);
    const std::vector<Rational> u(h.num_params(), Rational(static_cast<long>(q)));
    bool ok = true;
    const bool grp = h.specializes_to_group_algebra();
    ok &= grp;
    std::cout << type << ": |W| = " << h.size() << "\n  u -> 1 gives the group algebra: "
              << (grp ? "yes" : "NO") << "\n";
    const std::size_t s = h.index_of_word({0});
    std::cout << "  a_s a_s =";
    for (std::size_t z = 0; z < h.size(); ++z)
      if (!h.coeff(s, s, z).is_zero()) std::cout << " (" << h.coeff(s, s, z).to_string() << ") a_" << z;
    std::cout << "\n";
    const auto deg = h.irreducible_degrees(u);
    std::cout << "  u -> " << q << ": center dimension " << h.center_dimension(u)
              << ", linear characters " << h.num_linear_characters(u) << ", degrees";
    for (auto d : deg) std::cout << " " << d;
    std::cout << "\n";
    const std::vector<std::uint64_t> expect =
        type == "B2" ? std::vector<std::uint64_t>{1, 1, 1, 1, 2} : std::vector<std::uint64_t>(h.size(), 1);
    ok &= deg == expect;

    std::optional<LieInstance> inst;
    if (type == "A1" && q % 2 == 1 && q >= 3 && q <= 13) inst.emplace(Family::SL2, q);
    // R(lambda) of Sp4(3) is A1xA1 for the quadratic lambda
    const char* kind = type == "A1xA1" ? "quadratic" : "trivial";
    if ((type == "B2" || type == "A1xA1") && q == 3) inst.emplace(Family::SP4, q);
    if (inst) {
      const CharacterTable table = character_table(inst->G());
      const HeckeModule m(*inst, instance_character(*inst, kind), table);
      std::string why;
      const bool match = matches_module(h, m, &why);
      std::cout << "  u -> " << q << " matches the T-basis of " << inst->name()
                << ", lambda " << m.lambda().to_string() << ": " << (match ? "yes" : "NO " + why) << "\n";
      ok &= match;
    } else {
      std::cout << "  no built instance with these parameters\n";
    }
    std::cout << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
  });
}
