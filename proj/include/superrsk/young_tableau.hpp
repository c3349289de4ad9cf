#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace srsk {

/// A partition as weakly decreasing positive row lengths. Empty is allowed.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;  // n = sum of row lengths
  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  int row_length(int r) const;     // 1-based; 0 past the last row
  int column_length(int c) const;  // 1-based
  bool contains(const Shape& inner) const;

  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

std::string format_shape(const Shape& s);

/// 1-based (row, column).
struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A Young diagram filled with entries of type E. Rows are stored top to
/// bottom; the row lengths always form a partition.
template <class E>
class YoungTableau {
 public:
  using Entry = E;

  YoungTableau() = default;
  explicit YoungTableau(std::vector<std::vector<E>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty())
        throw std::invalid_argument("tableau rows must be non-empty");
      if (r > 0 && rows_[r].size() > rows_[r - 1].size())
        throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
  }

  const std::vector<std::vector<E>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  int row_length(int r) const {
    return r >= 1 && r <= num_rows() ? static_cast<int>(rows_[r - 1].size()) : 0;
  }
  int column_length(int c) const {
    int len = 0;
    while (len < num_rows() && row_length(len + 1) >= c) ++len;
    return len;
  }

  int size() const {
    int n = 0;
    for (const auto& row : rows_) n += static_cast<int>(row.size());
    return n;
  }

  Shape shape() const {
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
    return Shape(std::move(lengths));
  }

  bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
  }

  const E& at(Cell c) const {
    if (!contains(c)) throw std::out_of_range("cell outside the tableau");
    return rows_[c.row - 1][c.col - 1];
  }
  const E& operator[](Cell c) const { return rows_[c.row - 1][c.col - 1]; }

  /// Overwrite an existing cell.
  void set(Cell c, E value) {
    if (!contains(c)) throw std::out_of_range("cell outside the tableau");
    rows_[c.row - 1][c.col - 1] = std::move(value);
  }

  /// Whether a new cell may be added at c without breaking the shape.
  bool addable(Cell c) const {
    if (c.row < 1 || c.row > num_rows() + 1) return false;
    if (c.col != row_length(c.row) + 1) return false;
    return c.row == 1 || row_length(c.row - 1) >= c.col;
  }

  void add(Cell c, E value) {
    if (!addable(c)) throw std::logic_error("cell is not an outer corner");
    if (c.row == num_rows() + 1) rows_.emplace_back();
    rows_[c.row - 1].push_back(std::move(value));
  }

  /// Remove an inner corner and return its entry.
  E remove(Cell c) {
    if (!contains(c) || c.col != row_length(c.row) ||
        row_length(c.row + 1) >= c.col)
      throw std::logic_error("cell is not an inner corner");
    E value = std::move(rows_[c.row - 1].back());
    rows_[c.row - 1].pop_back();
    if (rows_[c.row - 1].empty()) rows_.pop_back();
    return value;
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= num_rows(); ++r)
      for (int c = 1; c <= row_length(r); ++c) out.push_back({r, c});
    return out;
  }

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  std::vector<std::vector<E>> rows_;
};

}  // namespace srsk
