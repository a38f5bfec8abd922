// Command-line front end for the 2-closure toolkit.
//
//   twoclosure decide FILE [--oracle-check]   exit 0: 2-closed, 1: not, 2: error
//   twoclosure closure FILE | zel FILE | orbits FILE | orb2 FILE
//   twoclosure example1 P | example2 P
//   twoclosure random --seed S --max-degree N

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "twoclosure/decider.hpp"
#include "twoclosure/errors.hpp"
#include "twoclosure/fixtures.hpp"
#include "twoclosure/group_io.hpp"
#include "twoclosure/oracle.hpp"
#include "twoclosure/reduction.hpp"
#include "twoclosure/two_orbit.hpp"

namespace {

using namespace twoclosure;

PermGroup load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_group(text);
}

void print_group(const PermGroup& group) {
  std::cout << "# order " << group.order() << '\n' << serialize_group(group);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide 2-closedness of abelian permutation groups"};
  app.require_subcommand(1);

  std::string file;
  bool oracle_check = false;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t max_degree = 10;
  SearchLimits limits;

  auto* decide = app.add_subcommand("decide", "run the inductive criterion and print its trace");
  decide->add_option("FILE", file, "group file ('-' for stdin)")->required();
  decide->add_flag("--oracle-check", oracle_check, "also run the brute-force oracle");
  decide->add_option("--max-nodes", limits.max_nodes, "oracle search budget");

  auto* closure = app.add_subcommand("closure", "compute the 2-closure by brute force");
  closure->add_option("FILE", file, "group file ('-' for stdin)")->required();
  closure->add_option("--max-nodes", limits.max_nodes, "oracle search budget");
  closure->add_option("--oracle-degree", limits.max_degree, "largest degree the oracle accepts");

  auto* zel_cmd = app.add_subcommand("zel", "print zel(G)");
  zel_cmd->add_option("FILE", file, "group file ('-' for stdin)")->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "print the orbits, one per line");
  orbits_cmd->add_option("FILE", file, "group file ('-' for stdin)")->required();

  auto* orb2_cmd = app.add_subcommand("orb2", "print the 2-orbit color matrix");
  orb2_cmd->add_option("FILE", file, "group file ('-' for stdin)")->required();

  auto* ex1 = app.add_subcommand("example1", "print the three-orbit group of order p^2");
  ex1->add_option("P", prime, "prime")->required();
  auto* ex2 = app.add_subcommand("example2", "print two diagonal copies of example1");
  ex2->add_option("P", prime, "prime")->required();

  auto* random = app.add_subcommand("random", "print a random abelian group with cyclic constituents");
  random->add_option("--seed", seed, "generator seed")->required();
  random->add_option("--max-degree", max_degree, "largest degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decide->parsed()) {
      const PermGroup group = load(file);
      if (oracle_check) {
        const OracleReport report = decide_with_oracle_check(group, limits);
        std::cout << render(report.trace);
        std::cout << "oracle: " << (report.oracle ? "2-closed" : "not 2-closed")
                  << " group-order=" << report.group_order
                  << " closure-order=" << report.closure_order << '\n';
        std::cout << "agreement: " << (report.mismatch ? "MISMATCH" : "yes") << '\n';
        if (report.mismatch) return 2;
        return report.criterion ? 0 : 1;
      }
      const ReductionTrace trace = decide_2_closed(group);
      std::cout << render(trace);
      return trace.verdict ? 0 : 1;
    }
    if (closure->parsed()) {
      print_group(two_closure(load(file), limits));
    } else if (zel_cmd->parsed()) {
      print_group(zel(load(file)));
    } else if (orbits_cmd->parsed()) {
      for (const auto& orbit : orbits(load(file)).classes) {
        for (std::size_t k = 0; k < orbit.size(); ++k) {
          std::cout << (k ? " " : "") << orbit[k];
        }
        std::cout << '\n';
      }
    } else if (orb2_cmd->parsed()) {
      const TwoOrbitColoring coloring = orb2(load(file));
      std::cout << "# colors " << coloring.num_colors() << '\n' << coloring.to_text();
    } else if (ex1->parsed()) {
      std::cout << serialize_group(fixtures::example1(prime));
    } else if (ex2->parsed()) {
      std::cout << serialize_group(fixtures::example2(prime));
    } else if (random->parsed()) {
      std::cout << serialize_group(fixtures::random_abelian_cyclic(seed, max_degree));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
