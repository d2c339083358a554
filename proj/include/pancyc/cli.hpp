#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pancyc/ff.hpp"

// Subcommand implementations behind the command-line front end. Machine
// readable results go to `out`, prose to `err`. Exit codes: 0 ok,
// 1 verification failure, 2 malformed input or invalid parameters.

namespace pancyc::cli {

struct CertifyOptions {
  ff::FieldSpec spec;
  std::optional<std::int64_t> k;  // one length, or every length when empty
  std::string out_dir = ".";
};

int run_certify(const CertifyOptions& options, std::ostream& out,
                std::ostream& err);

int run_verify(const std::string& path, std::ostream& out, std::ostream& err);

int run_index(std::int64_t n, const std::string& out_dir, std::ostream& out,
              std::ostream& err);

int run_srg(const ff::FieldSpec& spec, std::ostream& out, std::ostream& err);

struct OracleOptions {
  ff::FieldSpec spec;
  std::optional<std::int64_t> max_len;  // defaults to the graph order
  std::uint64_t budget = 10'000'000;
};

int run_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err);

int run_export(const ff::FieldSpec& spec, const std::string& format,
               std::ostream& out, std::ostream& err);

}  // namespace pancyc::cli
