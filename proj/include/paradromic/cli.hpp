#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "paradromic/int_matrix.hpp"
#include "paradromic/paradrome.hpp"

namespace paradromic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kMaxTableCells = 10'000;

/// One classified paradromic ring as printed by `classify` and `table`.
struct OutputRecord {
  std::size_t m = 0;
  std::size_t n = 1;
  std::string type;
  std::size_t components = 0;
  std::string cls;
  std::optional<std::uint64_t> modulus;
  std::string determinant;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const Classification& c);

nlohmann::ordered_json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

inline constexpr const char* kCsvHeader = "m,n,type,components,class,modulus,determinant";
std::string to_csv_row(const OutputRecord& r);
std::string to_text_line(const OutputRecord& r);

/// Inclusive "a..b" or a single integer.
struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};
Range parse_range(const std::string& text);

struct Hooks {
  /// Replaces transfer_S for `verify` and `charpoly`.
  std::function<IntMatrix(std::size_t)> transfer_s;
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace paradromic::cli
