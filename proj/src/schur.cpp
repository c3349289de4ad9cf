#include "superrsk/schur.hpp"

#include <functional>
#include <stdexcept>

namespace srsk {

std::vector<Shape> partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  std::vector<Shape> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Tableau> enumerate_ssyt(const Shape& shape, const Alphabet& alphabet,
                                    const Shuffle& s, Variant var) {
  if (!(s.alphabet() == alphabet))
    throw std::invalid_argument("shuffle is over a different alphabet");
  const StrictnessProfile profile = variant_profile(var);
  std::vector<Cell> cells;
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c <= shape.row_length(r); ++c) cells.push_back({r, c});

  std::vector<std::vector<Letter>> grid;
  for (const int len : shape.rows()) grid.emplace_back(static_cast<std::size_t>(len));

  // Compatible with the profile when `after` follows `before` along `axis`.
  auto follows = [&](Letter before, Letter after, Axis axis) {
    if (before == after)
      return (before.is_t() ? profile.t_strict_in : profile.u_strict_in) != axis;
    return s.less(before, after);
  };

  std::vector<Tableau> out;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.emplace_back(grid);
      return;
    }
    const Cell c = cells[idx];
    for (const Letter x : s.order()) {
      if (c.col > 1 && !follows(grid[c.row - 1][c.col - 2], x, Axis::Rows)) continue;
      if (c.row > 1 && !follows(grid[c.row - 2][c.col - 1], x, Axis::Columns)) continue;
      grid[c.row - 1][c.col - 1] = x;
      fill(idx + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<RecordingTableau> standard_tableaux(const Shape& shape) {
  const int n = shape.size();
  std::vector<RecordingTableau> out;
  RecordingTableau current;
  std::function<void(int)> grow = [&](int next) {
    if (next > n) {
      out.push_back(current);
      return;
    }
    for (int r = 1; r <= shape.num_rows(); ++r) {
      const Cell c{r, current.row_length(r) + 1};
      if (c.col > shape.row_length(r) || !current.addable(c)) continue;
      current.add(c, next);
      grow(next + 1);
      current.remove(c);
    }
  };
  grow(1);
  return out;
}

mpz_class count_syt(const Shape& shape) {
  mpz_class numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(shape.size()));
  mpz_class hooks = 1;
  for (int r = 1; r <= shape.num_rows(); ++r)
    for (int c = 1; c <= shape.row_length(r); ++c)
      hooks *= (shape.row_length(r) - c) + (shape.column_length(c) - r) + 1;
  return numerator / hooks;
}

Polynomial hook_schur(const Shape& shape, const Alphabet& alphabet, const Shuffle& s) {
  Polynomial out;
  for (const Tableau& t :
       enumerate_ssyt(shape, alphabet, s, Variant::regular_regular()))
    out.add_term(weight_monomial(t, alphabet), 1);
  return out;
}

CountingIdentity rsk_counting_identity(const Alphabet& alphabet, int n,
                                       const Shuffle& s, Variant var) {
  CountingIdentity out;
  out.lhs = 0;
  for (const Shape& lambda : partitions(n))
    out.lhs += mpz_class(static_cast<unsigned long>(
                   enumerate_ssyt(lambda, alphabet, s, var).size())) *
               count_syt(lambda);
  mpz_ui_pow_ui(out.rhs.get_mpz_t(), static_cast<unsigned long>(alphabet.size()),
                static_cast<unsigned long>(n));
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace srsk
