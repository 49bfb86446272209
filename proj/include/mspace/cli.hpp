#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mspace::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// Malformed input text or a document of the wrong shape. Maps to exit
/// status 2, like command-line usage errors.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Text };

struct RunOptions {
  // default output format when --format is not given
  Format default_format = Format::Json;
};

/// Runs one command line (args excludes the program name). Exit status:
/// 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const RunOptions& options = {});

/// FNV-1a 64-bit digest rendered as "fnv1a64:<16 hex digits>".
std::string digest(std::string_view bytes);

}  // namespace mspace::cli
