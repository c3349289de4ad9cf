#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/tableau.hpp"

namespace testing {

// "t1 u1 t2 / u1 t2 / t3" -> rows; "" is the empty tableau.
inline srsk::Tableau tab(const std::string& text) {
  std::vector<std::vector<srsk::Letter>> rows;
  std::stringstream in(text);
  for (std::string line; std::getline(in, line, '/');) {
    std::stringstream cells(line);
    std::vector<srsk::Letter> row;
    for (std::string cell; cells >> cell;) row.push_back(srsk::parse_letter(cell));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return srsk::Tableau(std::move(rows));
}

inline srsk::RecordingTableau rec(std::vector<std::vector<int>> rows) {
  return srsk::RecordingTableau(std::move(rows));
}

inline srsk::Shuffle shuf(const std::string& text, int k, int l) {
  return srsk::parse_shuffle(text, srsk::Alphabet(k, l));
}

inline srsk::Word word(const std::string& text, int k, int l) {
  return srsk::parse_word(text, srsk::Alphabet(k, l));
}

}  // namespace testing
