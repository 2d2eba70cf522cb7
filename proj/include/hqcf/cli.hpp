#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hqcf {

// Command-line front end, callable in-process for testing. Exit codes:
//   0  success / verified
//   1  a mathematical verification failed (divisibility, pattern, ...)
//   2  usage or parse error
// JSON mode writes exactly one document to `out`; progress goes to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ExampleResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

// Golden worked examples; runs all when `only` is empty. Unknown ids throw
// std::invalid_argument.
std::vector<ExampleResult> run_examples(const std::string& only = "");

}  // namespace hqcf
