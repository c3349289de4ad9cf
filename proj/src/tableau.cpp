#include "superrsk/tableau.hpp"

#include <numeric>
#include <stdexcept>

namespace srsk {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] < 1) throw std::invalid_argument("shape rows must be positive");
    if (r > 0 && rows_[r] > rows_[r - 1])
      throw std::invalid_argument("shape rows must weakly decrease");
  }
}

int Shape::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

int Shape::row_length(int r) const {
  return r >= 1 && r <= num_rows() ? rows_[r - 1] : 0;
}

int Shape::column_length(int c) const {
  int len = 0;
  while (len < num_rows() && rows_[len] >= c) ++len;
  return len;
}

bool Shape::contains(const Shape& inner) const {
  if (inner.num_rows() > num_rows()) return false;
  for (int r = 1; r <= inner.num_rows(); ++r)
    if (inner.row_length(r) > row_length(r)) return false;
  return true;
}

std::string format_shape(const Shape& s) {
  std::string out;
  for (const int r : s.rows()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(r);
  }
  return out;
}

namespace {

// x must precede y along an axis; equal letters are allowed only when the
// letter's kind is weak along that axis.
bool ordered_along(Letter x, Letter y, Axis axis, const Shuffle& s,
                   const StrictnessProfile& profile) {
  if (x == y) {
    const Axis strict = x.is_t() ? profile.t_strict_in : profile.u_strict_in;
    return strict != axis;
  }
  return s.less(x, y);
}

}  // namespace

bool is_valid(const Tableau& t, const Shuffle& s, const StrictnessProfile& profile) {
  const Alphabet& alphabet = s.alphabet();
  for (const Cell c : t.cells())
    if (!alphabet.contains(t[c])) return false;
  for (const Cell c : t.cells()) {
    const Cell right{c.row, c.col + 1};
    if (t.contains(right) && !ordered_along(t[c], t[right], Axis::Rows, s, profile))
      return false;
    const Cell below{c.row + 1, c.col};
    if (t.contains(below) &&
        !ordered_along(t[c], t[below], Axis::Columns, s, profile))
      return false;
  }
  return true;
}

bool is_standard(const RecordingTableau& q) {
  const int n = q.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const Cell c : q.cells()) {
    const int v = q[c];
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
    const Cell right{c.row, c.col + 1};
    if (q.contains(right) && q[right] <= v) return false;
    const Cell below{c.row + 1, c.col};
    if (q.contains(below) && q[below] <= v) return false;
  }
  return true;
}

namespace {

template <class Range>
TypeVector count_letters(const Range& letters, const Alphabet& alphabet) {
  TypeVector out{std::vector<int>(static_cast<std::size_t>(alphabet.k()), 0),
                 std::vector<int>(static_cast<std::size_t>(alphabet.l()), 0)};
  for (const Letter x : letters) {
    if (!alphabet.contains(x))
      throw std::invalid_argument("letter " + format_letter(x) +
                                  " is outside the alphabet");
    ++(x.is_t() ? out.alpha : out.beta)[x.index - 1];
  }
  return out;
}

}  // namespace

TypeVector content_type(const Tableau& t, const Alphabet& alphabet) {
  Word flat;
  for (const auto& row : t.rows()) flat.insert(flat.end(), row.begin(), row.end());
  return count_letters(flat, alphabet);
}

TypeVector word_type(const Word& v, const Alphabet& alphabet) {
  return count_letters(v, alphabet);
}

Monomial weight_monomial(const Tableau& t, const Alphabet& alphabet) {
  TypeVector type = content_type(t, alphabet);
  return Monomial(std::move(type.alpha), std::move(type.beta));
}

namespace {

void require_pair(const Shuffle& s, Transposition pair) {
  if (!pair.t.is_t() || !pair.u.is_u())
    throw std::invalid_argument("region pair must be (t_i, u_j)");
  if (!order_adjacent(s, pair.t, pair.u))
    throw std::invalid_argument(format_letter(pair.t) + " and " +
                                format_letter(pair.u) +
                                " are not neighbours in " + format_shuffle(s));
}

Region region_of(Letter x, const Shuffle& s, Transposition pair) {
  if (x == pair.t || x == pair.u) return Region::Pair;
  // The pair is contiguous in s, so comparing with either member suffices.
  return s.less(x, pair.t) ? Region::Lower : Region::Upper;
}

}  // namespace

RegionMap classify_regions(const Tableau& t, const Shuffle& s, Transposition pair) {
  require_pair(s, pair);
  RegionMap out;
  for (const Cell c : t.cells()) out.emplace(c, region_of(t[c], s, pair));
  return out;
}

std::vector<Component> region2_components(const RegionMap& regions) {
  std::vector<Component> out;
  Component visited;
  for (const auto& [start, label] : regions) {
    if (label != Region::Pair || visited.contains(start)) continue;
    Component comp;
    std::vector<Cell> stack{start};
    visited.insert(start);
    while (!stack.empty()) {
      const Cell c = stack.back();
      stack.pop_back();
      comp.insert(c);
      const Cell around[] = {{c.row - 1, c.col}, {c.row + 1, c.col},
                             {c.row, c.col - 1}, {c.row, c.col + 1}};
      for (const Cell nb : around) {
        const auto it = regions.find(nb);
        if (it == regions.end() || it->second != Region::Pair) continue;
        if (visited.insert(nb).second) stack.push_back(nb);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool region2_shape_ok(const Tableau& t, const Shuffle& s, Transposition pair) {
  require_pair(s, pair);
  const bool t_first = s.less(pair.t, pair.u);
  auto in_pair = [&](Cell c) { return t[c] == pair.t || t[c] == pair.u; };

  for (int r = 1; r <= t.num_rows(); ++r) {
    std::vector<Letter> line;
    for (int c = 1; c <= t.row_length(r); ++c)
      if (in_pair({r, c})) line.push_back(t[{r, c}]);
    // t_i everywhere except the rightmost (t_i < u_j) or leftmost (u_j < t_i).
    for (std::size_t p = 0; p < line.size(); ++p) {
      const bool exempt = t_first ? p + 1 == line.size() : p == 0;
      if (!exempt && line[p] != pair.t) return false;
    }
  }
  const int width = t.row_length(1);
  for (int c = 1; c <= width; ++c) {
    std::vector<Letter> line;
    for (int r = 1; r <= t.column_length(c); ++r)
      if (in_pair({r, c})) line.push_back(t[{r, c}]);
    // u_j everywhere except the top (t_i < u_j) or bottom (u_j < t_i).
    for (std::size_t p = 0; p < line.size(); ++p) {
      const bool exempt = t_first ? p == 0 : p + 1 == line.size();
      if (!exempt && line[p] != pair.u) return false;
    }
  }
  return true;
}

bool is_subtableau(const Tableau& inner, const Tableau& outer) {
  if (!outer.shape().contains(inner.shape())) return false;
  for (const Cell c : inner.cells())
    if (inner[c] != outer[c]) return false;
  return true;
}

std::string format_tableau(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out.push_back(' ');
      out += format_letter(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_recording(const RecordingTableau& q) {
  std::string out;
  for (const auto& row : q.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out.push_back(' ');
      out += std::to_string(row[c]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_word(const Word& v) {
  std::string out;
  for (const Letter x : v) {
    if (!out.empty()) out.push_back(',');
    out += format_letter(x);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::string compact;
  for (const char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') compact.push_back(ch);
  Word out;
  if (compact.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto stop = compact.find(',', start);
    out.push_back(parse_letter(
        std::string_view(compact).substr(start, stop - start), alphabet));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

}  // namespace srsk
