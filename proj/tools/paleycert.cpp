#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pancyc/cli.hpp"
#include "pancyc/ff.hpp"

namespace {

// Shared graph-selection flags: a positional prime power q, --q, or --p with
// --n (canonical modulus).
struct GraphArgs {
  std::int64_t q = 0;
  std::int64_t q_flag = 0;
  std::int64_t p = 0;
  int n = 1;

  void attach(CLI::App* cmd, bool positional_required = true) {
    auto* pos =
        cmd->add_option("order", q, "order of the field, a prime power");
    auto* qf = cmd->add_option("--q", q_flag, "order of the field");
    auto* pf = cmd->add_option("--p", p, "prime characteristic");
    cmd->add_option("--n", n, "extension degree (with --p)")->needs(pf);
    pos->excludes(qf)->excludes(pf);
    qf->excludes(pf);
    if (positional_required) {
      cmd->callback([this, pos, qf, pf]() {
        if (pos->count() == 0 && qf->count() == 0 && pf->count() == 0) {
          throw CLI::RequiredError("q (or --q / --p)");
        }
      });
    }
  }

  pancyc::ff::FieldSpec resolve() const {
    if (p != 0) return pancyc::ff::FieldSpec::make(p, n);
    const std::int64_t order = q != 0 ? q : q_flag;
    return pancyc::ff::FieldSpec::from_order(order);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cycle certificates for Paley graphs: construction, verification, "
      "brute-force oracle, and exports"};
  app.require_subcommand(1);

  // certify
  auto* certify = app.add_subcommand(
      "certify", "emit verified k-cycle certificates for P(q)");
  GraphArgs certify_args;
  certify_args.attach(certify);
  std::int64_t certify_k = 0;
  bool certify_all = false;
  std::string certify_out = ".";
  auto* k_opt = certify->add_option("--k", certify_k, "single cycle length");
  auto* all_opt =
      certify->add_flag("--all", certify_all, "every length 3..q");
  k_opt->excludes(all_opt);
  certify->add_option("--out", certify_out, "output directory");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "check a certificate file independently");
  std::string verify_path;
  verify_cmd->add_option("path", verify_path, "certificate JSON file")
      ->required();

  // index
  auto* index_cmd = app.add_subcommand(
      "index", "Paley index of the n-cycle, with a witness certificate");
  std::int64_t index_n = 0;
  std::string index_out = ".";
  index_cmd->add_option("n", index_n, "cycle length")->required();
  index_cmd->add_option("--out", index_out, "output directory");

  // srg
  auto* srg_cmd = app.add_subcommand(
      "srg", "strongly regular parameters of P(q) by exhaustive counting");
  GraphArgs srg_args;
  srg_args.attach(srg_cmd);

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force cycle spectrum of P(q)");
  GraphArgs oracle_args;
  oracle_args.attach(oracle_cmd);
  std::int64_t oracle_max_len = 0;
  std::uint64_t oracle_budget = 10'000'000;
  oracle_cmd->add_option("--max-len", oracle_max_len,
                         "largest length to search (default: q)");
  oracle_cmd->add_option("--budget", oracle_budget,
                         "search-node budget per length");

  // export
  auto* export_cmd = app.add_subcommand("export", "write the graph itself");
  GraphArgs export_args;
  export_args.attach(export_cmd);
  std::string export_format = "edgelist";
  export_cmd->add_option("--format", export_format, "json or edgelist")
      ->check(CLI::IsMember({"json", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (certify->parsed()) {
      pancyc::cli::CertifyOptions options;
      options.spec = certify_args.resolve();
      if (k_opt->count() > 0) {
        options.k = certify_k;
      } else if (!certify_all) {
        std::cerr << "error: pass --k K or --all\n";
        return 2;
      }
      options.out_dir = certify_out;
      return pancyc::cli::run_certify(options, std::cout, std::cerr);
    }
    if (verify_cmd->parsed()) {
      return pancyc::cli::run_verify(verify_path, std::cout, std::cerr);
    }
    if (index_cmd->parsed()) {
      return pancyc::cli::run_index(index_n, index_out, std::cout, std::cerr);
    }
    if (srg_cmd->parsed()) {
      return pancyc::cli::run_srg(srg_args.resolve(), std::cout, std::cerr);
    }
    if (oracle_cmd->parsed()) {
      pancyc::cli::OracleOptions options;
      options.spec = oracle_args.resolve();
      if (oracle_max_len > 0) options.max_len = oracle_max_len;
      options.budget = oracle_budget;
      return pancyc::cli::run_oracle(options, std::cout, std::cerr);
    }
    if (export_cmd->parsed()) {
      return pancyc::cli::run_export(export_args.resolve(), export_format,
                                     std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
