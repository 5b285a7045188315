#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eacp/algebra.hpp"

namespace eacp::cli {

/// Malformed input document. `location()` is "line L, column C" for syntax
/// errors and a JSON pointer such as "/A/0/1" for field errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message),
        location_(std::move(location)) {}
  [[nodiscard]] const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// {"n": 2, "A": [["1", "1/2"], ["0", "-3"]], "b": ["1", "0"], "label": "x"}
/// Entries are rational strings ("p" or "p/q") or JSON integers.
struct AlgebraDocument {
  std::size_t n = 0;
  std::vector<Vector> a;
  Vector b;
  std::optional<std::string> label;

  [[nodiscard]] Algebra to_algebra() const;
  [[nodiscard]] nlohmann::json to_json() const;
  /// "fnv1a64:<16 hex digits>" over the canonical n, A, b serialization.
  [[nodiscard]] std::string digest() const;
};

/// Accepts one algebra document, a report produced by `--format machine`
/// (its "algebra" member is used), or an array of either.
std::vector<AlgebraDocument> parse_algebras(std::string_view text);
/// Same, but the input must describe exactly one algebra.
AlgebraDocument parse_algebra(std::string_view text);

/// Exit code for an exception escaping a command: 2 for results that
/// contradict proven properties, 1 for everything else.
int exit_code_for(const std::exception& e);

/// Full command line without the program name, e.g.
/// {"classify", "--input", "alg.json", "--format", "machine"}.
/// Reads the document from `in` when --input is absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace eacp::cli
