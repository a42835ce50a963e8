#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gentlekit/linalg.hpp"

namespace gentlekit::cli {

  enum class ExitStatus : int { Ok = 0, Refused = 1, Usage = 2, Internal = 3 };

  enum class OutputFormat { Json, Text };

  struct RunConfig {
    std::string                command;
    std::string                input_path;  // "-" reads the input stream
    std::string                inline_quiver;
    OutputFormat               format = OutputFormat::Json;
    FieldSpec                  field;
    std::optional<std::size_t> max_len;
    std::size_t                family_size = 4;
    std::string                hom_c, hom_d;
    std::vector<std::string>   kill;
    std::string                vertex;
  };

  // Bound on string length for `strings`: --max-len, else GENTLEKIT_MAX_LEN,
  // else 2 |Q_1|.
  std::size_t enumeration_bound(RunConfig const& config, std::size_t arrow_count);

  // args excludes the program name.
  int run(std::span<std::string const> args,
          std::istream&                in,
          std::ostream&                out,
          std::ostream&                err);

}  // namespace gentlekit::cli
