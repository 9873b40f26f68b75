#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/field.hpp"
#include "permpoly/words.hpp"

namespace permpoly::cli {

enum class Command { kTransposition, kDecompose, kCompile, kVerify, kSimplify, kExceptional, kTable };
enum class OutputFormat { kText, kJson };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

struct FieldParams {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> n;
  std::optional<std::vector<std::uint32_t>> modulus;
};

struct CommandRequest {
  Command command = Command::kTransposition;
  FieldParams field;
  OutputFormat format = OutputFormat::kText;
  bool show_coeffs = false;

  ElementIndex a = 1;
  Gadget gadget = Gadget::kZieve;
  bool simplify = false;
  std::string perm;
  /// "-" reads standard input.
  std::string word_path;
  std::uint64_t max_k = 1;
};

/// Result of argument parsing: either a request, or an exit code with the
/// text already written (help, usage errors).
struct ParseOutcome {
  std::optional<CommandRequest> request;
  int exit_code = kExitOk;
};

/// Parses arguments (without the program name). Help goes to `out`, usage
/// errors to `err`.
ParseOutcome parse_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Field named by --q or --p/--n[/--modulus]. Throws std::invalid_argument.
Field resolve_field(const FieldParams& params);

/// Exit status: 0 success, 1 verification mismatch, 2 invalid input.
int execute(const CommandRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace permpoly::cli
