// blocklab: exact verification toolkit for finite-dimensional algebras over
// prime fields. Subcommands:
//   verify        run the S1..S12 pipeline and print a report
//   quiver build  build a quiver presentation and print its invariants
//   comm build    likewise for a commutative presentation
//   orbits        orbit count of a candidate inertial quotient on GF(3)^2
//
// Exit codes: 0 overall pass, 1 any failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "blocklab/algcore.hpp"
#include "blocklab/groups.hpp"
#include "blocklab/pipeline.hpp"
#include "blocklab/quiverlab.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw blocklab::error(blocklab::errc::parse_error, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string layers_string(const std::vector<std::size_t>& layers) {
  std::string out;
  for (std::size_t d : layers) {
    if (!out.empty()) out += ",";
    out += std::to_string(d);
  }
  return out;
}

int run_verify(bool json_mode, std::uint32_t p, const std::string& specs_dir) {
  blocklab::PipelineOptions opt;
  opt.p = p;
  if (!specs_dir.empty()) opt.specs_dir = specs_dir;
  blocklab::Report report = blocklab::run_pipeline(opt);
  std::cout << (json_mode ? blocklab::render_json(report) : blocklab::render_text(report));
  return report.overall_pass() ? 0 : 1;
}

int run_quiver_build(const std::string& file, bool info) {
  blocklab::QuiverSpec spec = blocklab::parse_quiver(read_file(file));
  blocklab::BuiltQuiver built = blocklab::build_path_algebra(spec);
  if (!info) {
    std::cout << "dim " << built.alg.dim << "\n";
    return 0;
  }
  std::vector<blocklab::FpVector> arrows = built.arrow_elements;
  blocklab::Subspace arrow_span =
      blocklab::span(arrows.empty() ? std::vector<blocklab::FpVector>{built.alg.zero()} : arrows, built.alg.dim,
                     built.alg.p);
  blocklab::Subspace j = blocklab::radical(
      built.alg, blocklab::RadicalStrategy::ArrowIdeal(blocklab::ideal_closure(built.alg, arrow_span)));
  std::cout << "dim " << built.alg.dim << ", center " << blocklab::center(built.alg).dim() << ", radical layers "
            << layers_string(blocklab::loewy_layers(built.alg, j)) << "\n";
  return 0;
}

int run_comm_build(const std::string& file, bool info) {
  blocklab::PresentedAlgebra built = blocklab::build_comm_presented(blocklab::parse_comm(read_file(file)));
  if (!info) {
    std::cout << "dim " << built.alg.dim << "\n";
    return 0;
  }
  std::cout << "dim " << built.alg.dim << ", center " << blocklab::center(built.alg).dim();
  try {
    blocklab::Subspace j = blocklab::radical(built.alg, blocklab::RadicalStrategy::SplitLocal());
    std::cout << ", radical layers " << layers_string(blocklab::loewy_layers(built.alg, j));
  } catch (const blocklab::error&) {
    // not split local; no canonical radical filtration to print
  }
  std::cout << "\n";
  return 0;
}

int run_orbits(const std::string& group) {
  blocklab::MatGroup g = blocklab::mat_closure(blocklab::inertial_quotient_generators(group), 3);
  std::cout << blocklab::orbit_count(g) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for finite-dimensional algebras over prime fields"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
  bool json_mode = false;
  bool text_mode = false;
  std::uint32_t p = 3;
  std::string specs_dir;
  auto* json_flag = verify->add_flag("--json", json_mode, "emit the machine-readable JSON report");
  verify->add_flag("--text", text_mode, "emit the human-readable table (default)")->excludes(json_flag);
  verify->add_option("--p", p, "field characteristic (default 3)");
  verify->add_option("--specs", specs_dir, "directory with the presentation files (embedded copies by default)");

  auto* quiver = app.add_subcommand("quiver", "quiver presentation tools");
  auto* quiver_build = quiver->add_subcommand("build", "build the path algebra of a presentation");
  std::string quiver_file;
  bool quiver_info = false;
  quiver_build->add_option("file", quiver_file, "presentation file")->required();
  quiver_build->add_flag("--info", quiver_info, "also print center dimension and radical layers");

  auto* comm = app.add_subcommand("comm", "commutative presentation tools");
  auto* comm_build = comm->add_subcommand("build", "build a presented commutative algebra");
  std::string comm_file;
  bool comm_info = false;
  comm_build->add_option("file", comm_file, "presentation file")->required();
  comm_build->add_flag("--info", comm_info, "also print center dimension and radical layers");

  auto* orbits = app.add_subcommand("orbits", "orbit count of a candidate inertial quotient on GF(3)^2");
  std::string group;
  orbits->add_option("--group", group, "one of C2free, C2fix, C4, V4, C8, D8, Q8, SD16")
      ->required()
      ->check(CLI::IsMember({"C2free", "C2fix", "C4", "V4", "C8", "D8", "Q8", "SD16"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(json_mode, p, specs_dir);
    if (quiver_build->parsed()) return run_quiver_build(quiver_file, quiver_info);
    if (comm_build->parsed()) return run_comm_build(comm_file, comm_info);
    if (orbits->parsed()) return run_orbits(group);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
