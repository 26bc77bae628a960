// hred: compile spin Hamiltonians into gadget plans and run the verification
// workflows. Exit status: 0 pass / converged, 1 verification failure, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hred/cli/workflows.hpp"
#include "hred/errors.hpp"

namespace {

using namespace hred::cli;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hred::ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hred::ValidationError("cannot write " + path);
  out << text;
}

int emit(const VerificationReport& r, const std::string& report_path) {
  const auto text = format_report(r);
  if (report_path.empty())
    std::cout << text;
  else
    write_file(report_path, text);
  return r.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian reduction toolkit: gadget compilation, exchange and mean-field checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path;
  app.add_option("--report", report_path, "Write the report here instead of stdout");

  auto* compile = app.add_subcommand("compile", "Compile a 2-local spin Hamiltonian into a gadget plan");
  std::string compile_in, compile_out;
  CompileArgs cargs;
  bool no_verify = false;
  compile->add_option("input", compile_in, "Spin Hamiltonian file")->required()->check(CLI::ExistingFile);
  compile->add_option("--precision", cargs.precision, "Target precision delta (default: none)")
      ->check(CLI::PositiveNumber);
  compile->add_option("--depth", cargs.depth, "Layers of the gadget chain")->check(CLI::Range(1, 3));
  compile->add_option("--tolerance-factor", cargs.tolerance_factor, "Verification tolerance factor")
      ->check(CLI::PositiveNumber);
  compile->add_flag("--no-verify", no_verify, "Skip the exact-diagonalization check");
  compile->add_option("-o,--output", compile_out, "Plan file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Verify a compiled plan against its source");
  std::string verify_in;
  double verify_tf = 10;
  std::size_t verify_max = 13;
  verify->add_option("plan", verify_in, "Plan file")->required()->check(CLI::ExistingFile);
  verify->add_option("--tolerance-factor", verify_tf, "Pass iff measured <= factor * budget")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-spins", verify_max, "Skip the spectral check above this size");

  auto* hubbard = app.add_subcommand("hubbard-check", "Check the Hubbard exchange limit of a lattice model");
  std::string hubbard_in;
  double hubbard_tf = 10;
  hubbard->add_option("model", hubbard_in, "Hubbard model file")->required()->check(CLI::ExistingFile);
  hubbard->add_option("--tolerance-factor", hubbard_tf, "Pass iff measured <= factor * budget")
      ->check(CLI::PositiveNumber);

  auto* scf = app.add_subcommand("scf", "Self-consistent mean-field minimization");
  std::string scf_in;
  ScfArgs sargs;
  scf->add_option("hamiltonian", scf_in, "Second-quantized Hamiltonian file")->required()->check(CLI::ExistingFile);
  scf->add_option("--particles", sargs.particles, "Particle number N")->required();
  scf->add_option("--restarts", sargs.restarts, "Random restarts");
  scf->add_option("--seed", sargs.seed, "Seed for the random restarts");
  scf->add_option("--damping", sargs.damping, "Density damping in [0, 1)")->check(CLI::Range(0.0, 0.999999));
  scf->add_option("--tolerance", sargs.tolerance, "Fixed-point tolerance")->check(CLI::PositiveNumber);
  scf->add_option("--max-iterations", sargs.max_iterations, "Iteration cap per run");

  auto* ising = app.add_subcommand("ising", "Ising spin glass: exhaustive oracle and/or mean-field embedding");
  std::string ising_in;
  IsingArgs iargs;
  bool want_oracle = false, want_scf = false;
  double penalty = 0;
  ising->add_option("instance", ising_in, "Ising instance file")->required()->check(CLI::ExistingFile);
  ising->add_flag("--oracle", want_oracle, "Exhaustive ground state");
  ising->add_flag("--scf", want_scf, "Mean-field run on the fermionic embedding");
  auto* penalty_opt = ising->add_option("--penalty", penalty, "On-site penalty U (default 10 * edges)")
                          ->check(CLI::PositiveNumber);
  ising->add_option("--restarts", iargs.restarts, "Random restarts");
  ising->add_option("--seed", iargs.seed, "Seed for the random restarts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compile) {
      cargs.verify = !no_verify;
      auto out = run_compile(compile_in, read_file(compile_in), cargs);
      if (compile_out.empty()) {
        std::cout << out.plan_text;
        if (!report_path.empty()) write_file(report_path, format_report(out.report));
        return out.report.passed() ? kExitPass : kExitFail;
      }
      write_file(compile_out, out.plan_text);
      return emit(out.report, report_path);
    }
    if (*verify) return emit(run_verify(verify_in, read_file(verify_in), verify_tf, verify_max), report_path);
    if (*hubbard) return emit(run_hubbard_check(hubbard_in, read_file(hubbard_in), hubbard_tf), report_path);
    if (*scf) return emit(run_scf(scf_in, read_file(scf_in), sargs), report_path);
    if (*ising) {
      iargs.oracle = want_oracle || !want_scf;
      iargs.scf = want_scf;
      if (penalty_opt->count()) iargs.penalty = penalty;
      return emit(run_ising(ising_in, read_file(ising_in), iargs), report_path);
    }
  } catch (const hred::VerificationError& e) {
    std::cerr << "hred: verification failed: " << e.what() << '\n';
    return kExitFail;
  } catch (const hred::Error& e) {
    std::cerr << "hred: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
