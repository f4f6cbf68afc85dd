// Command-line front end: build, check, random, enumerate, oracle, intersect.
//
// Exit codes: 0 analysis done, 2 malformed input, 3 structurally invalid
// subgroup data, 4 oracle size guard tripped.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl2z/congruence.hpp"
#include "sl2z/error.hpp"
#include "sl2z/gen.hpp"
#include "sl2z/json_io.hpp"
#include "sl2z/sl2zmod.hpp"
#include "sl2z/subgroup.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitInvalidSubgroup = 3;
constexpr int kExitOracleTooLarge = 4;

int exit_code_for(const sl2z::Error &e) {
  if (e.is_validation())
    return kExitInvalidSubgroup;
  if (e.code() == sl2z::errc::oracle_too_large)
    return kExitOracleTooLarge;
  return kExitMalformed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"congruence testing for finite-index subgroups of SL2(Z)"};
  app.require_subcommand(1);

  std::string kind, in_path, in_path2, out_path;
  long long n = 0;
  int degree = 0, max_degree = 0;
  std::uint64_t seed = 0;

  auto *build = app.add_subcommand("build", "construct gamma0/gamma1/gamma of level n");
  build->add_option("kind", kind, "gamma0, gamma1 or gamma")->required();
  build->add_option("n", n, "level")->required();
  build->add_option("out", out_path, "output file")->required();

  auto *check = app.add_subcommand("check", "run the congruence test on a subgroup file");
  check->add_option("in", in_path)->required();

  auto *random = app.add_subcommand("random", "sample a seeded random subgroup");
  random->add_option("degree", degree)->required();
  random->add_option("seed", seed)->required();

  auto *enumerate = app.add_subcommand("enumerate", "all subgroups of index <= max_degree");
  enumerate->add_option("max_degree", max_degree)->required();

  auto *oracle = app.add_subcommand("oracle", "brute-force factorization check mod n");
  oracle->add_option("in", in_path)->required();
  oracle->add_option("n", n)->required();

  auto *intersect = app.add_subcommand("intersect", "intersection of two subgroups");
  intersect->add_option("in1", in_path)->required();
  intersect->add_option("in2", in_path2)->required();
  intersect->add_option("out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << e.what() << '\n';
    return kExitMalformed;
  }

  try {
    if (build->parsed()) {
      sl2z::SubgroupRep g = kind == "gamma0"   ? sl2z::gamma0(n)
                            : kind == "gamma1" ? sl2z::gamma1(n)
                            : kind == "gamma"
                                ? sl2z::gamma_full(n)
                                : throw sl2z::Error(sl2z::errc::invalid_argument,
                                                    "unknown kind: " + kind);
      sl2z::write_subgroup_file(out_path, g);
    } else if (check->parsed()) {
      std::cout << sl2z::verdict_report(sl2z::read_subgroup_file(in_path)).dump() << '\n';
    } else if (random->parsed()) {
      std::cout << sl2z::subgroup_to_json(sl2z::random_subgroup(degree, seed)).dump()
                << '\n';
    } else if (enumerate->parsed()) {
      for (const auto &g : sl2z::enumerate_subgroups(max_degree)) {
        nlohmann::json line = sl2z::subgroup_to_json(g);
        line["verdict"] = sl2z::verdict_report(g);
        std::cout << line.dump() << '\n';
      }
    } else if (oracle->parsed()) {
      bool factors = sl2z::oracle_factors_through(sl2z::read_subgroup_file(in_path), n);
      std::cout << nlohmann::json{{"factors", factors}}.dump() << '\n';
    } else if (intersect->parsed()) {
      sl2z::write_subgroup_file(out_path,
                                sl2z::intersect(sl2z::read_subgroup_file(in_path),
                                                sl2z::read_subgroup_file(in_path2)));
    }
  } catch (const sl2z::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return 0;
}
