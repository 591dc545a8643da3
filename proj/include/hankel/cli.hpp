#ifndef HANKEL_CLI_HPP
#define HANKEL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hankel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ExampleItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  std::vector<ExampleItem> items;
  /// Claims from the worked examples that the computation contradicts.
  std::vector<std::string> discrepancies;

  bool all_passed() const;
};

/// Reruns the worked examples for the order-4, dimension-2 counterexample
/// tensor and its Hadamard partner.
ExampleReport worked_examples();

/// Parses comma-separated decimal literals; throws InputError on junk.
std::vector<double> parse_vector(const std::string& text, const std::string& flag);

}  // namespace hankel::cli

#endif  // HANKEL_CLI_HPP
