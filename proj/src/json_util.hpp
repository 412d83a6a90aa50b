#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "json.hpp"
#include "reflekt/errors.hpp"

namespace reflekt::detail {

/// Parses JSON, reporting failures as "source:line:column: message".
inline nlohmann::json parse_json(std::string_view text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

}  // namespace reflekt::detail
