// Copyright 2026 The TSI Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tsi/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "tsi/errors.hpp"

namespace tsi::io {
namespace {

using nlohmann::json;

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

void add_meta(json& j, const OutputOptions& options) {
  if (options.include_meta) j["meta"] = {{"tool", "tsi_lab"}, {"generated", timestamp()}};
}

double round_to(double v, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // no "-0"
}

json polar3(Complex z) { return json::array({round_to(std::abs(z), 3), round_to(std::arg(z), 3)}); }

std::string optional_field(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  return std::string(buf, res.ptr);
}

std::string state_csv(const FockVector& state, const OutputOptions& options) {
  std::string out = options.polar ? "n,abs,phase,P_n\n" : "n,re,im,P_n\n";
  for (std::size_t n = 0; n < state.size(); ++n) {
    const Complex c = state[n];
    const double a = options.polar ? std::abs(c) : c.real();
    const double b = options.polar ? std::arg(c) : c.imag();
    out += std::to_string(n) + "," + format_double(a) + "," + format_double(b) + "," +
           format_double(std::norm(c)) + "\n";
  }
  return out;
}

std::string state_json(const FockVector& state, const OutputOptions& options) {
  json j;
  j["dim"] = state.dim();
  json amps = json::array();
  for (const Complex& c : state.amplitudes()) {
    amps.push_back(options.polar ? json::array({std::abs(c), std::arg(c)})
                                 : json::array({c.real(), c.imag()}));
  }
  j[options.polar ? "amplitudes_polar" : "amplitudes"] = std::move(amps);
  add_meta(j, options);
  return j.dump(2) + "\n";
}

FockVector parse_state_json(const std::string& text) {
  const json j = json::parse(text);
  std::vector<Complex> amps;
  if (j.contains("amplitudes")) {
    for (const auto& pair : j.at("amplitudes")) amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  } else {
    for (const auto& pair : j.at("amplitudes_polar")) {
      amps.push_back(std::polar(pair.at(0).get<double>(), pair.at(1).get<double>()));
    }
  }
  return FockVector(std::move(amps));
}

std::string sweep_csv(std::span<const StatsReport> reports) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const StatsReport& r : reports) {
    out += std::to_string(r.n) + "," + format_double(r.p_even) + "," + format_double(r.p_odd) + "," +
           format_double(r.mean_n) + "," + format_double(r.delta_n) + "," + optional_field(r.mandel_q) +
           "," + optional_field(r.g2) + "," + format_double(r.dx1) + "," + format_double(r.dx2) + "\n";
  }
  return out;
}

std::string husimi_csv(const HusimiGrid& grid) {
  std::string out = "re,im,q\n";
  for (std::size_t i = 0; i < grid.im_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.re_axis.size(); ++j) {
      out += format_double(grid.re_axis[j]) + "," + format_double(grid.im_axis[i]) + "," +
             format_double(grid.at(i, j)) + "\n";
    }
  }
  return out;
}

std::string plan_json(const EngineeringPlan& plan, const OutputOptions& options) {
  json j;
  json coeffs = json::array();
  for (const Complex& c : plan.coefficients) coeffs.push_back(json::array({c.real(), c.imag()}));
  j["coefficients"] = std::move(coeffs);
  json betas = json::array();
  for (const Complex& b : plan.betas) betas.push_back(polar3(b));
  j["betas"] = std::move(betas);
  j["T"] = plan.transmittance;
  json alphas = json::array();
  for (const Complex& a : plan.alphas) alphas.push_back(polar3(a));
  j["alphas"] = std::move(alphas);
  j["success_prob"] = plan.success_prob;
  j["cutoff_used"] = plan.cutoff_used;
  add_meta(j, options);
  return j.dump(2) + "\n";
}

std::string plan_table(const EngineeringPlan& plan) {
  std::ostringstream os;
  os << "k     |beta_k|   phi_beta   |alpha_k|  phi_alpha\n";
  for (std::size_t k = 0; k < plan.alphas.size(); ++k) {
    std::string line = std::to_string(k + 1);
    line.resize(6, ' ');
    auto col = [](const std::string& s) {
      std::string c = s;
      c.resize(11, ' ');
      return c;
    };
    if (k < plan.betas.size()) {
      line += col(format_fixed(std::abs(plan.betas[k]), 3)) + col(format_fixed(std::arg(plan.betas[k]), 3));
    } else {
      line += col("") + col("");
    }
    line += col(format_fixed(std::abs(plan.alphas[k]), 3)) + format_fixed(std::arg(plan.alphas[k]), 3);
    os << line << "\n";
  }
  os << "T = " << format_fixed(plan.transmittance, 3) << ", success probability = "
     << format_fixed(100.0 * plan.success_prob, 3) << "%\n";
  return os.str();
}

std::string fidelity_csv(std::span<const FidelityReport> reports) {
  std::string out = "eta,fidelity\n";
  for (const FidelityReport& r : reports) out += format_double(r.eta) + "," + format_double(r.fidelity) + "\n";
  return out;
}

std::string fidelity_json(std::span<const FidelityReport> reports, const OutputOptions& options) {
  json j;
  json arr = json::array();
  for (const FidelityReport& r : reports) {
    arr.push_back({{"eta", r.eta},
                   {"fidelity", r.fidelity},
                   {"branch_norms", r.branch_norms},
                   {"branch_overlaps", r.branch_overlaps},
                   {"outside_model_regime", r.outside_model_regime}});
  }
  j["reports"] = std::move(arr);
  add_meta(j, options);
  return j.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename to " + path.string() + " failed: " + ec.message());
  }
}

}  // namespace tsi::io
