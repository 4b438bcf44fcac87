#include <cstdio>
#include <string>

#include "adelic/polya.hpp"
#include "json.hpp"

namespace adelic::polya {
namespace {

constexpr int kSchemaVersion = 1;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string zeros_csv(const ZeroList& zeros) {
  std::string out = "index,rho,refined_tol,mult_assumed,simple_verified\n";
  for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
    const Zero& z = zeros.zeros[i];
    out += std::to_string(i + 1) + "," + fmt(z.rho) + "," + fmt(z.refined_tol) + "," +
           std::to_string(z.mult_assumed) + "," + (z.simple_verified ? "true" : "false") + "\n";
  }
  return out;
}

std::string zeros_json(const ZeroList& zeros) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = to_string(zeros.kind);
  doc["zeros"] = nlohmann::json::array();
  for (const Zero& z : zeros.zeros) {
    doc["zeros"].push_back({{"rho", z.rho},
                            {"refined_tol", z.refined_tol},
                            {"mult_assumed", z.mult_assumed},
                            {"simple_verified", z.simple_verified}});
  }
  return doc.dump(2) + "\n";
}

std::string spectrum_csv(const PolyaSpectrum& spectrum) {
  std::string out = "rho,mult,n_rho,eig_mult,is_eigenvalue,rule_variant\n";
  const std::string variant = to_string(spectrum.variant);
  for (const SpectrumEntry& e : spectrum.entries) {
    out += fmt(e.rho) + "," + std::to_string(e.mult) + "," + std::to_string(e.n_rho) + "," +
           std::to_string(e.eig_mult) + "," + (e.is_eigenvalue() ? "true" : "false") + "," + variant + "\n";
  }
  return out;
}

std::string spectrum_json(const PolyaSpectrum& spectrum) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["delta"] = spectrum.delta;
  doc["m_pi"] = spectrum.m_pi;
  doc["rule_variant"] = to_string(spectrum.variant);
  doc["entries"] = nlohmann::json::array();
  for (const SpectrumEntry& e : spectrum.entries) {
    doc["entries"].push_back({{"rho", e.rho},
                              {"mult", e.mult},
                              {"n_rho", e.n_rho},
                              {"eig_mult", e.eig_mult},
                              {"is_eigenvalue", e.is_eigenvalue()}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace adelic::polya
