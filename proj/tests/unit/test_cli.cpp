#include <doctest.h>

#include <string>

#include "hred/cli/report.hpp"
#include "hred/cli/workflows.hpp"
#include "hred/errors.hpp"

using namespace hred;
using namespace hred::cli;

namespace {

const std::string kXY = "spins 2\n0.5 X@0 Y@1\n";
const std::string kChain = "hubbard 1\nsites 3\nt 1\nU 40\nedge 0 1\nedge 1 2\n";
const std::string kScf = "modes 4\n1 0 0 -1\n1 1 1 -0.5\n1 2 2 0.25\n1 3 3 1\n1 0 1 0.3\n1 1 0 0.3\n"
                         "2 0 1 1 0 2\n2 1 0 0 1 2\n";

std::string stage_line(const std::string& body, const std::string& name) {
  const auto p = body.find("stage " + name + " ");
  REQUIRE(p != std::string::npos);
  return body.substr(p, body.find('\n', p) - p);
}

}  // namespace

TEST_CASE("sha256 digests") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("report layout and body") {
  VerificationReport r;
  r.workflow = "demo";
  r.param("alpha", "1");
  r.stages.push_back({"first", 0.5, 0.25, 2, 0.01, {1, 2}, 0});
  r.value("count", "3");
  r.notes.push_back("something");
  r.inputs.push_back({"in.txt", "line a\nline b\n"});
  CHECK(r.passed());
  const auto full = format_report(r);
  const auto body = format_report(r, false);
  CHECK(full.rfind("# hred report\n", 0) == 0);
  CHECK(full.find("# generated ") != std::string::npos);
  CHECK(full.find("# wall first") != std::string::npos);
  CHECK(body.find('#') == std::string::npos);
  CHECK(report_body(full) == body);
  CHECK(body.find("workflow demo\n") != std::string::npos);
  CHECK(body.find("param alpha 1\n") != std::string::npos);
  CHECK(body.find("value count 3\n") != std::string::npos);
  CHECK(body.find("result pass\n") != std::string::npos);
  CHECK(body.find("input in.txt 2\n> line a\n> line b\n") != std::string::npos);
  CHECK(body.find("input_digest sha256:" + r.digest()) != std::string::npos);

  r.stages.push_back({"second", 1.0, 3.0, 2, 0, {}, 0.5});
  CHECK(!r.stages.back().passed());
  CHECK(!r.passed());
  CHECK(format_report(r, false).find("result fail\n") != std::string::npos);
  r.stages.back().floor = 1.0;
  CHECK(r.passed());
}

TEST_CASE("compile workflow") {
  CompileArgs args;
  args.precision = 0.25;
  const auto out = run_compile("xy.spin", kXY, args);
  CHECK(out.report.passed());
  CHECK(out.report.workflow == "compile");
  CHECK(!out.plan_text.empty());
  const auto body = report_body(format_report(out.report));
  CHECK(body.find("stage low-spectrum") != std::string::npos);
  CHECK(body.find("> 0.5 X@0 Y@1") != std::string::npos);

  // deterministic body across runs
  CHECK(report_body(format_report(run_compile("xy.spin", kXY, args).report)) == body);

  CHECK_THROWS_AS(run_compile("x", "spins 2\n1.5 X@0 Y@1\n", args), RescalingRequiredError);
  CHECK_THROWS_AS(run_compile("x", "spins 2\n0.5 X@0 Q@1\n", args), ParseError);
}

TEST_CASE("verify workflow on a compiled plan") {
  CompileArgs args;
  args.precision = 0.25;
  const auto plan = run_compile("xy.spin", kXY, args).plan_text;
  const auto r = run_verify("plan.txt", plan, 10);
  CHECK(r.passed());
  const auto body = format_report(r, false);
  CHECK(stage_line(body, "frozen-axis").find(" pass") != std::string::npos);
  CHECK(stage_line(body, "low-spectrum").find(" pass") != std::string::npos);

  // an impossible tolerance fails the spectral stage without throwing
  const auto tight = run_verify("plan.txt", plan, 1e-6);
  CHECK(!tight.passed());

  const auto skipped = run_verify("plan.txt", plan, 10, 4);
  CHECK(skipped.notes.size() >= 1);
}

TEST_CASE("hubbard-check workflow") {
  const auto r = run_hubbard_check("chain3.hubbard", kChain, 10);
  CHECK(r.passed());
  const auto body = format_report(r, false);
  CHECK(stage_line(body, "v0").find(" pass") != std::string::npos);
  CHECK(stage_line(body, "exchange").find(" pass") != std::string::npos);
  CHECK(format_report(run_hubbard_check("chain3.hubbard", kChain, 10), false) == body);
  CHECK_THROWS_AS(run_hubbard_check("bad", "hubbard 1\nsites 3\nt 1\nU 5\nedge 0 1\nedge 1 2\n", 10),
                  PerturbationRegimeError);
}

TEST_CASE("scf workflow") {
  ScfArgs args;
  args.particles = 2;
  args.restarts = 4;
  const auto r = run_scf("small.scf", kScf, args);
  CHECK(r.passed());
  const auto body = format_report(r, false);
  CHECK(stage_line(body, "scf-convergence").find(" pass") != std::string::npos);
  CHECK(stage_line(body, "variational").find(" pass") != std::string::npos);
  CHECK(format_report(run_scf("small.scf", kScf, args), false) == body);
  args.particles = 7;
  CHECK_THROWS_AS(run_scf("small.scf", kScf, args), ValidationError);
}

TEST_CASE("ising workflow") {
  IsingArgs args;
  args.scf = true;
  args.restarts = 2;
  const auto r = run_ising("edge.ising", "ising 1\n0 1 1\n", args);
  CHECK(r.passed());
  const auto body = format_report(r, false);
  CHECK(body.find("value oracle_energy -1") != std::string::npos);
  CHECK(body.find("value oracle_config ud") != std::string::npos);
  CHECK(format_report(run_ising("edge.ising", "ising 1\n0 1 1\n", args), false) == body);
  args.penalty = 1.0;
  CHECK_THROWS_AS(run_ising("edge.ising", "ising 1\n0 1 1\n", args), ValidationError);
}
