// kdirac: command-line driver for the diagram pipeline.
//
//   hasse       relative Hasse diagram (text, json, dot, tikz)
//   bgg         relative BGG diagram for a seed weight (text, json, dot, tikz)
//   pushdown    direct images of every vertex weight (text, json)
//   complex     the pushed-down complex with dimensions (text, json)
//   dims        dimension table of the complex terms (text, json)
//   check-dirac randomized exact verification of the first operator
//
// Exit codes: 0 success, 2 invalid parameters, 3 dominance violation,
// 4 structural/internal failure (including failed check-dirac properties).

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdirac/batch.hpp"
#include "kdirac/bgg.hpp"
#include "kdirac/dirac4.hpp"
#include "kdirac/errors.hpp"
#include "kdirac/hasse.hpp"
#include "kdirac/pushdown.hpp"
#include "kdirac/render.hpp"
#include "kdirac/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidParameter = 2;
constexpr int kExitDominance = 3;
constexpr int kExitStructural = 4;

kdirac::Weight parse_seed(int k, const std::string& text) {
  std::vector<kdirac::Coord2> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw kdirac::InvalidParameter("seed entry '" + piece + "' is not an integer (doubled "
                                     "coordinates, e.g. -3 for -3/2)");
    }
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return kdirac::Weight(k, std::move(coords));
}

struct CommonArgs {
  int k = 0;
  std::string format = "text";
  bool half = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_half) {
  cmd->add_option("--k", args.k, "number of variables (rank parameter)")->required();
  cmd->add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot", "tikz"}));
  if (with_half) {
    cmd->add_flag("--half", args.half, "print true half-integer coordinates instead of doubled");
  }
}

int run_check_dirac(int k, int degree, int terms, int trials, std::uint64_t seedrng,
                    const std::string& mode) {
  kdirac::DiracBatchParams p;
  p.k = k;
  p.max_degree = degree;
  p.n_terms = terms;
  p.trials = trials;
  p.seed = seedrng;
  const kdirac::BatchMode bm =
      (mode == "serial") ? kdirac::BatchMode::Serial : kdirac::BatchMode::Parallel;
  const kdirac::DiracBatchReport r = kdirac::dirac_property_batch(p, bm);

  std::cout << "check-dirac  k=" << k << "  degree=" << degree << "  terms=" << terms
            << "  trials=" << trials << "  seedrng=" << seedrng << "  mode=" << mode << "\n";
  std::cout << "target fiber: first operator of the complex, dim " << kdirac::dirac_target_dim(k)
            << "\n";
  std::cout << r.factorization_pass << "/" << r.factorization_total
            << " factorization checks passed\n";
  if (k >= 2) {
    std::cout << r.polarization_pass << "/" << r.polarization_total
              << " polarization checks passed\n";
  } else {
    std::cout << "polarization skipped (single variable)\n";
  }
  std::cout << r.annihilation_pass << "/" << r.annihilation_total
            << " annihilation checks passed\n";
  if (r.trial_errors != 0) {
    std::cout << r.trial_errors << " trials aborted by arithmetic guards\n";
  }
  if (!r.all_passed()) {
    std::cout << "PROPERTY FAILURE\n";
    return kExitStructural;
  }
  std::cout << "all properties hold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the k-variable Dirac pushdown pipeline"};
  app.require_subcommand(1);

  CommonArgs hasse_args;
  CLI::App* cmd_hasse = app.add_subcommand("hasse", "relative Hasse diagram");
  add_common(cmd_hasse, hasse_args, false);

  CommonArgs bgg_args;
  std::string bgg_seed;
  CLI::App* cmd_bgg = app.add_subcommand("bgg", "relative BGG diagram");
  add_common(cmd_bgg, bgg_args, true);
  cmd_bgg->add_option("--seed", bgg_seed,
                      "seed weight as comma-separated doubled coordinates "
                      "(default: the spinor seed)");

  CommonArgs push_args;
  CLI::App* cmd_push = app.add_subcommand("pushdown", "direct images of the diagram");
  add_common(cmd_push, push_args, true);

  CommonArgs complex_args;
  CLI::App* cmd_complex = app.add_subcommand("complex", "the pushed-down complex");
  add_common(cmd_complex, complex_args, false);

  CommonArgs dims_args;
  CLI::App* cmd_dims = app.add_subcommand("dims", "dimension table of the complex");
  add_common(cmd_dims, dims_args, false);

  int cd_k = 0, cd_degree = 4, cd_terms = 6, cd_trials = 100;
  std::uint64_t cd_seed = 1;
  std::string cd_mode = "parallel";
  CLI::App* cmd_check = app.add_subcommand("check-dirac", "verify first-operator identities");
  cmd_check->add_option("--k", cd_k, "number of variables")->required();
  cmd_check->add_option("--degree", cd_degree, "maximum degree of random fields");
  cmd_check->add_option("--terms", cd_terms, "monomials per random field");
  cmd_check->add_option("--trials", cd_trials, "number of random trials");
  cmd_check->add_option("--seedrng", cd_seed, "RNG seed");
  cmd_check->add_option("--mode", cd_mode, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidParameter;
  }

  try {
    if (*cmd_hasse) {
      const kdirac::HasseDiagram hd(hasse_args.k);
      std::cout << kdirac::render_hasse(hd, kdirac::parse_format(hasse_args.format));
      return kExitOk;
    }
    if (*cmd_bgg) {
      const kdirac::Weight seed = bgg_seed.empty() ? kdirac::canonical_seed(bgg_args.k)
                                                   : parse_seed(bgg_args.k, bgg_seed);
      const kdirac::BggDiagram bgg = kdirac::build_bgg(bgg_args.k, seed);
      std::cout << kdirac::render_bgg(bgg, kdirac::parse_format(bgg_args.format), bgg_args.half);
      return kExitOk;
    }
    if (*cmd_push) {
      const kdirac::BggDiagram bgg =
          kdirac::build_bgg(push_args.k, kdirac::canonical_seed(push_args.k));
      std::cout << kdirac::render_pushdown(bgg, kdirac::parse_format(push_args.format),
                                           push_args.half);
      return kExitOk;
    }
    if (*cmd_complex) {
      const kdirac::BggDiagram bgg =
          kdirac::build_bgg(complex_args.k, kdirac::canonical_seed(complex_args.k));
      const kdirac::ComplexDescriptor c = kdirac::build_complex(complex_args.k);
      std::cout << kdirac::render_complex(bgg, c, kdirac::parse_format(complex_args.format));
      return kExitOk;
    }
    if (*cmd_dims) {
      const kdirac::ComplexDescriptor c = kdirac::build_complex(dims_args.k);
      std::cout << kdirac::render_dims(c, kdirac::parse_format(dims_args.format));
      return kExitOk;
    }
    if (*cmd_check) {
      return run_check_dirac(cd_k, cd_degree, cd_terms, cd_trials, cd_seed, cd_mode);
    }
  } catch (const kdirac::InvalidParameter& e) {
    std::cerr << "error (invalid parameter): " << e.what() << "\n";
    return kExitInvalidParameter;
  } catch (const kdirac::DominanceViolation& e) {
    std::cerr << "error (dominance violation): " << e.what() << "\n";
    return kExitDominance;
  } catch (const kdirac::StructuralError& e) {
    std::cerr << "error (structural): " << e.what() << "\n";
    return kExitStructural;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  }
  return kExitInvalidParameter;  // no subcommand matched (unreachable)
}
