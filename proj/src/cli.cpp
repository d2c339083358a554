#include "pancyc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "pancyc/graph.hpp"
#include "pancyc/paley_cert.hpp"
#include "pancyc/verify.hpp"

namespace pancyc::cli {

namespace {

int to_exit_code(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return 2;
}

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& j) {
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  file << j.dump(2) << '\n';
}

std::string certificate_filename(std::int64_t q, std::int64_t k) {
  return "paley_q" + std::to_string(q) + "_k" + std::to_string(k) + ".json";
}

}  // namespace

int run_certify(const CertifyOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    const std::int64_t q = options.spec.order();
    if (options.k && (*options.k < 3 || *options.k > q)) {
      err << "error: k must lie in [3, " << q << "]\n";
      return 2;
    }
    const auto certs = paley::paley_pancyclic(options.spec);
    std::filesystem::create_directories(options.out_dir);
    // One descriptor-reconstructed host checks every certificate of this run.
    const auto host =
        verify::GraphDescriptor::paley(options.spec).reconstruct();
    bool all_ok = true;
    std::int64_t written = 0;
    for (const auto& cert : certs) {
      if (options.k && cert.k != *options.k) continue;
      const auto path =
          std::filesystem::path(options.out_dir) / certificate_filename(q, cert.k);
      write_json_file(path, cert.to_json());
      ++written;
      const auto report = verify::check_cycle(host, cert.vertices, cert.k);
      if (report.ok) {
        out << "k=" << cert.k << " ok " << path.string() << '\n';
      } else {
        out << "k=" << cert.k << " FAIL " << report.message << '\n';
        all_ok = false;
      }
    }
    err << "wrote " << written << " certificate(s) for P(" << q << ") to "
        << options.out_dir << '\n';
    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream file(path);
    if (!file) {
      err << "error: cannot read " << path << '\n';
      return 2;
    }
    nlohmann::json j;
    try {
      file >> j;
    } catch (const nlohmann::json::exception& e) {
      err << "error: invalid JSON in " << path << ": " << e.what() << '\n';
      return 2;
    }
    const auto cert = verify::CycleCertificate::from_json(j);
    const auto report = verify::check_cycle(cert);
    if (report.ok) {
      out << "ok k=" << cert.k << '\n';
      return 0;
    }
    out << "fail " << verify::failure_name(*report.failure)
        << " index=" << report.index << '\n';
    err << report.message << '\n';
    return 1;
  } catch (const verify::MalformedInput& e) {
    return to_exit_code(e, err);
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

int run_index(std::int64_t n, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
  try {
    const auto result = paley::paley_index_of_cycle(n);
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) /
                      ("index_n" + std::to_string(n) + "_witness.json");
    write_json_file(path, result.witness.to_json());
    out << "rho=" << result.rho << '\n';
    err << "witness C_" << n << " in P(" << result.rho << ") written to "
        << path.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

int run_srg(const ff::FieldSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const auto result = graph::verify_srg(graph::paley(spec));
    if (const auto* params = std::get_if<graph::SrgParams>(&result)) {
      out << params->v << ' ' << params->k << ' ' << params->lambda << ' '
          << params->mu << '\n';
      return 0;
    }
    const auto& violation = std::get<graph::SrgViolation>(result);
    out << "not-srg\n";
    err << "pair (" << violation.u << ", " << violation.v
        << "): " << violation.reason << '\n';
    return 1;
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

int run_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    const auto g = graph::paley(options.spec);
    const std::int64_t max_len = options.max_len.value_or(g.order());
    const auto spectrum =
        verify::cycle_spectrum_bruteforce(g, max_len, options.budget);
    const auto print = [&](const std::vector<std::int64_t>& lengths) {
      for (auto len : lengths) out << ' ' << len;
    };
    out << "present:";
    print(spectrum.lengths(verify::Presence::present));
    out << "; absent:";
    print(spectrum.lengths(verify::Presence::absent));
    const auto unknown = spectrum.lengths(verify::Presence::unknown);
    if (!unknown.empty()) {
      out << "; unknown:";
      print(unknown);
      err << "budget of " << options.budget
          << " nodes exhausted for some lengths\n";
    }
    out << '\n';
    return 0;
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

int run_export(const ff::FieldSpec& spec, const std::string& format,
               std::ostream& out, std::ostream& err) {
  try {
    const auto g = graph::paley(spec);
    if (format == "edgelist") {
      graph::write_edge_list(g, out);
      return 0;
    }
    if (format == "json") {
      const nlohmann::json j = {
          {"group",
           {{"type", "field"},
            {"p", spec.p},
            {"n", spec.n},
            {"modulus", spec.modulus}}},
          {"connection_set", g.connection_set()},
          {"label", g.label()}};
      out << j.dump(2) << '\n';
      return 0;
    }
    err << "error: unknown format '" << format << "' (json or edgelist)\n";
    return 2;
  } catch (const std::exception& e) {
    return to_exit_code(e, err);
  }
}

}  // namespace pancyc::cli
