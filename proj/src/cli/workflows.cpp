#include "hred/cli/workflows.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "hred/errors.hpp"
#include "hred/gadget/mediator.hpp"
#include "hred/gadget/plan_io.hpp"
#include "hred/lattice/hubbard.hpp"
#include "hred/lattice/hubbard_io.hpp"
#include "hred/ops/realize.hpp"
#include "hred/ops/spectrum.hpp"
#include "hred/ops/text_format.hpp"
#include "hred/scf/ising.hpp"
#include "hred/scf/scf.hpp"

namespace hred::cli {

using ops::format_real;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<double> excerpt(const Eigen::VectorXd& v, std::size_t n = 8) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(v.size(), static_cast<Eigen::Index>(n)); ++i)
    out.push_back(v(i));
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

double frozen_axis_defect(const gadget::GadgetPlan& plan) {
  double worst = 0;
  for (const auto& g : plan.gadgets)
    if (g.frozen != ops::Pauli::I) worst = std::max(worst, std::abs(gadget::offdiag_element(g.frozen, g.theta, g.phi)));
  return worst;
}

void describe_plan(VerificationReport& r, const gadget::GadgetPlan& plan) {
  r.value("source_spins", std::to_string(plan.source.num_spins()));
  r.value("compiled_spins", std::to_string(plan.compiled.num_spins()));
  r.value("mediators", std::to_string(plan.num_mediators()));
  r.value("heisenberg_couplings", std::to_string(gadget::count_heisenberg_couplings(plan.compiled)));
  r.value("total_error_budget", format_real(plan.total_error_budget));
  r.value("offset", format_real(plan.offset));
  if (!plan.layers.empty()) r.value("top_delta", format_real(plan.layers.back().scale.delta));
}

}  // namespace

CompileOutcome run_compile(const std::string& name, const std::string& source_text, const CompileArgs& args) {
  CompileOutcome out;
  auto& r = out.report;
  r.workflow = "compile";
  r.inputs.push_back({name, source_text});
  r.param("precision", std::isinf(args.precision) ? "inf" : format_real(args.precision));
  r.param("depth", std::to_string(args.depth));
  r.param("verify", yes_no(args.verify));
  r.param("tolerance_factor", format_real(args.tolerance_factor));

  const auto source = ops::parse_spin_hamiltonian(source_text);
  gadget::CompileOptions opt;
  opt.depth = args.depth;
  opt.verify = args.verify;
  opt.tolerance_factor = args.tolerance_factor;
  Stopwatch sw;
  out.plan = gadget::compile(source, args.precision, opt);
  const double wall = sw.seconds();
  out.plan_text = gadget::format_plan(out.plan);
  describe_plan(r, out.plan);
  r.value("verification", gadget::verification_status_name(out.plan.verification.status));
  if (out.plan.verification.status == gadget::VerificationStatus::Passed ||
      out.plan.verification.status == gadget::VerificationStatus::Failed)
    r.stages.push_back({"low-spectrum", out.plan.total_error_budget, out.plan.verification.measured,
                        args.tolerance_factor, wall, {}, gadget::verification_floor(out.plan)});
  if (!out.plan.verification.note.empty()) r.notes.push_back(out.plan.verification.note);
  return out;
}

VerificationReport run_verify(const std::string& name, const std::string& plan_text, double tolerance_factor,
                              std::size_t max_spins) {
  VerificationReport r;
  r.workflow = "verify";
  r.inputs.push_back({name, plan_text});
  r.param("tolerance_factor", format_real(tolerance_factor));
  r.param("max_spins", std::to_string(max_spins));

  const auto plan = gadget::parse_plan(plan_text);
  describe_plan(r, plan);

  Stopwatch fz;
  r.stages.push_back({"frozen-axis", 1e-12, frozen_axis_defect(plan), 1, fz.seconds(), {}});

  Stopwatch sw;
  const auto v = gadget::verify_plan(plan, tolerance_factor, max_spins);
  r.value("verification", gadget::verification_status_name(v.status));
  if (v.status == gadget::VerificationStatus::Skipped) {
    r.notes.push_back("spectral check skipped: " + v.note);
    return r;
  }
  StageRecord st{"low-spectrum", plan.total_error_budget, v.measured, tolerance_factor, sw.seconds(), {}};
  st.floor = gadget::verification_floor(plan);
  st.spectrum = excerpt(ops::eigenvalues_hermitian(ops::realize_spin(plan.source)));
  r.stages.push_back(st);
  return r;
}

VerificationReport run_hubbard_check(const std::string& name, const std::string& model_text,
                                     double tolerance_factor) {
  VerificationReport r;
  r.workflow = "hubbard-check";
  r.inputs.push_back({name, model_text});
  r.param("tolerance_factor", format_real(tolerance_factor));

  const auto m = lattice::parse_hubbard(model_text);
  const auto model = lattice::heisenberg_from_hubbard(m);
  r.value("sites", std::to_string(m.sites));
  r.value("edges", std::to_string(m.edges.size()));
  r.value("error_budget", format_real(model.error_budget));

  Stopwatch sw;
  const auto rep = lattice::exchange_report(m, tolerance_factor * model.error_budget);
  const double wall = sw.seconds();
  r.stages.push_back({"v0", 0, rep.v0_norm, 1, wall, {}});
  const double floor = 1e-12 * std::max(1.0, m.U);
  r.stages.push_back({"exchange", model.error_budget, rep.max_deviation, tolerance_factor, wall, {}, floor});
  for (const auto& w : rep.warnings) r.notes.push_back(w);

  Stopwatch sp;
  const auto hf = lattice::half_filling(m.sites);
  const std::size_t k = hf.singly_occupied.size();
  const Eigen::VectorXd exact = ops::lowest_eigenvalues(ops::realize_fermion(lattice::build_hubbard(m), hf.sector), k);
  const Eigen::VectorXd eff = ops::eigenvalues_hermitian(rep.model);
  StageRecord st{"low-spectrum", model.error_budget, (exact - eff).cwiseAbs().maxCoeff(), tolerance_factor,
                 sp.seconds(), excerpt(exact), floor};
  r.stages.push_back(st);
  return r;
}

VerificationReport run_scf(const std::string& name, const std::string& hamiltonian_text, const ScfArgs& args) {
  VerificationReport r;
  r.workflow = "scf";
  r.inputs.push_back({name, hamiltonian_text});
  r.param("particles", std::to_string(args.particles));
  r.param("restarts", std::to_string(args.restarts));
  r.param("seed", std::to_string(args.seed));
  r.param("damping", format_real(args.damping));
  r.param("tolerance", format_real(args.tolerance));
  r.param("max_iterations", std::to_string(args.max_iterations));

  const auto h = scf::parse_second_quantized(hamiltonian_text);
  if (args.particles == 0 || args.particles > h.modes)
    throw ValidationError(fmt::format("particle count must be 1..{}", h.modes));
  scf::ScfOptions opt;
  opt.damping = args.damping;
  opt.tolerance = args.tolerance;
  opt.max_iterations = args.max_iterations;
  opt.restarts = args.restarts;
  opt.seed = args.seed;

  Stopwatch sw;
  const auto res = scf::scf_solve(h, args.particles, opt);
  r.stages.push_back({"scf-convergence", args.tolerance, res.residual, 1, sw.seconds(), {}});
  r.value("energy", format_real(res.energy));
  r.value("converged", yes_no(res.converged));
  r.value("iterations", std::to_string(res.iterations));
  r.value("best_run", std::to_string(res.best_run));

  Stopwatch ex;
  try {
    const double exact = scf::exact_ground_energy(h, args.particles);
    r.value("exact_energy", format_real(exact));
    r.stages.push_back({"variational", 1e-9 * std::max(1.0, std::abs(exact)), std::max(0.0, exact - res.energy), 1,
                        ex.seconds(), {}});
  } catch (const ResourceError& e) {
    r.notes.push_back(std::string("variational check skipped: ") + e.what());
  }
  return r;
}

VerificationReport run_ising(const std::string& name, const std::string& instance_text, const IsingArgs& args) {
  VerificationReport r;
  r.workflow = "ising";
  r.inputs.push_back({name, instance_text});
  r.param("oracle", yes_no(args.oracle));
  r.param("scf", yes_no(args.scf));

  const auto inst = scf::parse_ising(instance_text);
  const std::size_t n = inst.num_sites();
  r.value("sites", std::to_string(n));
  r.value("edges", std::to_string(inst.edges.size()));

  std::optional<scf::IsingGround> ground;
  if (args.oracle) {
    ground = scf::ising_oracle(inst);
    r.value("oracle_energy", format_real(ground->energy));
    r.value("oracle_config", scf::config_string(ground->config, n));
  }
  if (args.scf) {
    const double U = args.penalty.value_or(scf::default_penalty(inst));
    r.param("penalty", format_real(U));
    r.param("restarts", std::to_string(args.restarts));
    r.param("seed", std::to_string(args.seed));
    const auto h = scf::embed_ising(inst, U);
    if (ground) {
      Stopwatch sw;
      const double e = scf::energy(h, scf::classical_state(n, ground->config));
      r.stages.push_back({"embedding-exactness", 0, std::abs(e - ground->energy), 1, sw.seconds(), {}});
    }
    scf::ScfOptions opt;
    opt.restarts = args.restarts;
    opt.seed = args.seed;
    Stopwatch sw;
    const auto res = scf::scf_solve(h, n, scf::classical_state(n, 0), opt);
    r.stages.push_back({"scf-convergence", opt.tolerance, res.residual, 1, sw.seconds(), {}});
    r.value("scf_energy", format_real(res.energy));
    r.value("scf_converged", yes_no(res.converged));
    const auto cfg = scf::classical_config(res.state);
    r.value("scf_config", cfg ? scf::config_string(*cfg, n) : std::string("non-classical"));
    if (ground) r.value("scf_minus_oracle", format_real(res.energy - ground->energy));
  }
  return r;
}

}  // namespace hred::cli
