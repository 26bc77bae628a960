#include "hred/cli/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "hred/errors.hpp"
#include "hred/ops/text_format.hpp"

namespace hred::cli {

using ops::format_real;

bool VerificationReport::passed() const {
  for (const auto& s : stages)
    if (!s.passed()) return false;
  return true;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string VerificationReport::digest() const {
  std::string all;
  for (const auto& in : inputs) all += in.name + '\n' + std::to_string(in.text.size()) + '\n' + in.text;
  return sha256_hex(all);
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

std::string format_report(const VerificationReport& r, bool timestamps) {
  std::string out;
  if (timestamps) out += "# hred report\n# generated " + utc_now() + "\n";
  out += "report 1\n";
  out += "workflow " + r.workflow + "\n";
  out += "input_digest sha256:" + r.digest() + "\n";
  for (const auto& [k, v] : r.params) out += fmt::format("param {} {}\n", k, v);
  for (const auto& s : r.stages) {
    out += fmt::format("stage {} budget {} measured {} tolerance_factor {} floor {} {}\n", s.name,
                       format_real(s.budget), format_real(s.measured), format_real(s.tolerance_factor),
                       format_real(s.floor), s.passed() ? "pass" : "fail");
    if (timestamps) out += fmt::format("# wall {} {:.6f}\n", s.name, s.wall_seconds);
    if (!s.spectrum.empty()) {
      out += "spectrum " + s.name;
      for (double e : s.spectrum) out += " " + format_real(e);
      out += '\n';
    }
  }
  for (const auto& [k, v] : r.values) out += fmt::format("value {} {}\n", k, v);
  if (timestamps)
    for (const auto& n : r.notes) out += "# note " + n + "\n";
  out += fmt::format("result {}\n", r.passed() ? "pass" : "fail");
  for (const auto& in : r.inputs) {
    const auto lines = split_lines(in.text);
    out += fmt::format("input {} {}\n", in.name, lines.size());
    for (const auto& l : lines) out += "> " + l + "\n";
  }
  return out;
}

std::string report_body(const std::string& formatted) {
  std::string out;
  for (const auto& l : split_lines(formatted))
    if (l.empty() || l[0] != '#') out += l + '\n';
  return out;
}

}  // namespace hred::cli
