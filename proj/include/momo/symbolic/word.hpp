#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "momo/error.hpp"

namespace momo::symbolic {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

/// "0110" -> {0,1,1,0}; only digits 0-9 are accepted.
inline Word word_from_digits(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    require(c >= '0' && c <= '9', ErrorCode::invalid_argument,
            "expected a digit word, got '" + std::string(digits) + "'");
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

inline std::string to_digits(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

inline bool is_binary(const Word& w) {
  for (Symbol c : w) {
    if (c > 1) return false;
  }
  return true;
}

}  // namespace momo::symbolic
