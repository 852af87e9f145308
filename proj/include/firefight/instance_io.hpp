#pragma once

#include <string>
#include <string_view>

#include "firefight/game.hpp"

namespace firefight {

inline constexpr int kInstanceFormatVersion = 1;

// Text format, one directive per line, '#' starts a comment:
//
//   firefight 1
//   name tadpole-3          (optional, rest of line)
//   n 14
//   root 0
//   sequence 1 1
//   edges
//   0 1
//   ...
//
// Throws ParseError (with line/column) or Error(UnknownVersion).
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

Instance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const Instance& instance);

}  // namespace firefight
