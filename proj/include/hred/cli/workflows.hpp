#pragma once

// Workflows behind the hred subcommands. Each takes input text (as read from
// disk) and returns the report; file handling and exit codes live in the tool.

#include <cstdint>
#include <optional>
#include <string>

#include "hred/cli/report.hpp"
#include "hred/gadget/compiler.hpp"

namespace hred::cli {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct CompileArgs {
  double precision = gadget::kNoPrecision;
  std::size_t depth = 3;
  bool verify = true;
  double tolerance_factor = 10;
};

struct CompileOutcome {
  gadget::GadgetPlan plan;
  std::string plan_text;
  VerificationReport report;
};

CompileOutcome run_compile(const std::string& name, const std::string& source_text, const CompileArgs& args);

VerificationReport run_verify(const std::string& name, const std::string& plan_text, double tolerance_factor,
                              std::size_t max_spins = 13);

VerificationReport run_hubbard_check(const std::string& name, const std::string& model_text,
                                     double tolerance_factor);

struct ScfArgs {
  std::size_t particles = 1;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  double damping = 0.5;
  double tolerance = 1e-8;
  std::size_t max_iterations = 500;
};

VerificationReport run_scf(const std::string& name, const std::string& hamiltonian_text, const ScfArgs& args);

struct IsingArgs {
  bool oracle = true;
  bool scf = false;
  std::optional<double> penalty;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
};

VerificationReport run_ising(const std::string& name, const std::string& instance_text, const IsingArgs& args);

}  // namespace hred::cli
