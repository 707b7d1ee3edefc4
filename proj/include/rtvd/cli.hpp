#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rtvd::cli {

// Exit codes shared by every command.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitCap = 4;

struct SolveOptions {
  std::string path;
  std::string engine = "auto";  // auto | oracle | tournament | alpha | alt | hitting
  std::optional<int> alpha;
  std::optional<int> ell;
  std::optional<int> k;
  int oracle_cap = 14;
};

/// Prints `key: value` lines ending with `deleted: ...` (1-based ids).
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string path;
  std::string solution;  // comma separated 1-based ids, possibly empty
  std::optional<int> ell;
  std::optional<int> k;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct KernelizeOptions {
  std::string path;
  std::string provider = "trivial";  // trivial | flow
};

/// Writes the kernel as an instance file with statistics in comments, or
/// `status: NO` when the packing already rules the instance out.
int cmd_kernelize(const KernelizeOptions& opts, std::ostream& out, std::ostream& err);

struct ReduceOptions {
  std::string from;  // vc | multicut
  std::string path;
  int k = 0;
  int ell = 0;
};

int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::string graph_class;  // tournament | alt | in | out | dag
  int n = 0;
  std::uint64_t seed = 1;
  double p = 0.5;
  std::string reach;         // alt: comma separated 1-based r values
  int width = 4;             // alt / structured: maximum reach width
  std::string mode = "structured";  // in / out: rejection | structured | thinned
  int k = 0;
  int ell = 0;
};

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err);

int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace rtvd::cli
