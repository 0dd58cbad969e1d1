#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace singlets::cli {

enum class Command { dim, table, components, sequence, verify };
enum class OutputFormat { text, json, csv, bfile };
enum class RepKind { adjoint, fundamental, weights_file };

struct RunConfig {
  Command command = Command::dim;
  int group_n = 2;
  RepKind rep = RepKind::adjoint;
  std::filesystem::path weights_path;
  std::optional<int> n;
  std::optional<int> max_n;
  std::vector<int> groups;
  std::vector<int> powers;
  std::string name;  // sequence name or check name
  OutputFormat format = OutputFormat::text;
  std::optional<int> order;
  unsigned threads = 1;
};

/// Environment variable holding the default worker count for `table`.
inline constexpr const char* kThreadsEnv = "SINGLETS_THREADS";

/// Parses "2..7", "2,3,5" or "4". Throws FormatError.
std::vector<int> parse_int_list(const std::string& text);

/// Runs one command. `args` excludes the program name. Returns the exit status:
/// 0 on success, 1 on a failed check or runtime error, other nonzero codes for
/// usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace singlets::cli
