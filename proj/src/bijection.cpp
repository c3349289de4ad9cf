#include "superrsk/bijection.hpp"

#include <stdexcept>

namespace srsk {

namespace {

void require_pair(const Tableau& p, const RecordingTableau& q, const Shuffle& s,
                  Variant var) {
  if (p.shape() != q.shape())
    throw std::invalid_argument("P has shape (" + format_shape(p.shape()) +
                                ") but Q has shape (" + format_shape(q.shape()) + ")");
  if (!is_standard(q)) throw std::invalid_argument("Q is not a standard tableau");
  if (!is_valid(p, s, variant_profile(var)))
    throw std::invalid_argument("P is not valid for " + format_shuffle(s) + " under " +
                                format_variant(var));
}

// Whether `y`, sitting one line before `e`, is where e was bumped from.
bool admits(const Shuffle& s, Variant var, Letter y, Letter e) {
  return var.rule_for(e) == Rule::Regular ? s.less(y, e) : s.less_equal(y, e);
}

[[noreturn]] void irreducible(int m) {
  throw std::logic_error("no reverse step available while ejecting label " +
                         std::to_string(m) + "; P is not in the image of insertion");
}

}  // namespace

Word reverse_word(const Tableau& p, const RecordingTableau& q, const Shuffle& s,
                  Variant var) {
  require_pair(p, q, s, var);
  const int n = q.size();
  std::vector<Cell> where(static_cast<std::size_t>(n) + 1);
  for (const Cell c : q.cells()) where[q[c]] = c;

  Tableau work = p;
  Word out(static_cast<std::size_t>(n));
  for (int m = n; m >= 1; --m) {
    const Cell corner = where[m];
    Letter e = work.remove(corner);
    // The row (for t) or column (for u) that e was inserted into.
    Axis axis = e.is_t() ? Axis::Rows : Axis::Columns;
    int line = e.is_t() ? corner.row : corner.col;
    while (line > 1) {
      Cell from{};
      if (axis == Axis::Rows) {
        const int r = line - 1;
        int c = work.row_length(r);
        while (c >= 1 && !admits(s, var, work[{r, c}], e)) --c;
        if (c < 1) irreducible(m);
        from = {r, c};
      } else {
        const int c = line - 1;
        int r = work.column_length(c);
        while (r >= 1 && !admits(s, var, work[{r, c}], e)) --r;
        if (r < 1) irreducible(m);
        from = {r, c};
      }
      const Letter displaced = work[from];
      work.set(from, e);
      e = displaced;
      axis = e.is_t() ? Axis::Rows : Axis::Columns;
      line = e.is_t() ? from.row : from.col;
    }
    if ((axis == Axis::Rows) != e.is_t()) irreducible(m);
    out[m - 1] = e;
  }
  return out;
}

Tableau phi(const Tableau& p, const RecordingTableau& q, const Shuffle& a,
            const Shuffle& b, Variant var) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("shuffles are over different alphabets");
  return insert_word(reverse_word(p, q, a, var), b, var, TraceDetail::Lengths).p;
}

namespace {

// Shared by both sides: relabel every occurrence of the letters of `kind`
// with fresh, distinct letters of the same kind, sweeping right to left
// (or left to right) within each original letter's block.
Standardization standardize(const Word& v, const Shuffle& a, Kind kind,
                            Sweep sweep) {
  const Alphabet& old = a.alphabet();
  for (const Letter x : v)
    if (!old.contains(x))
      throw std::invalid_argument("letter " + format_letter(x) +
                                  " is outside the alphabet");
  const int chain = kind == Kind::T ? old.k() : old.l();
  std::vector<int> count(static_cast<std::size_t>(chain) + 1, 0);
  for (const Letter x : v)
    if (x.kind == kind) ++count[x.index];
  std::vector<int> offset(static_cast<std::size_t>(chain) + 2, 0);
  for (int j = 1; j <= chain; ++j) offset[j + 1] = offset[j] + count[j];
  const int fresh = offset[chain + 1];

  const int new_k = kind == Kind::T ? fresh : old.k();
  const int new_l = kind == Kind::U ? fresh : old.l();
  if (new_k + new_l == 0)
    throw std::invalid_argument("standardization of an empty word over a single chain");
  const Alphabet alphabet(new_k, new_l);

  const int n = static_cast<int>(v.size());
  Word w = v;
  std::map<Letter, Letter> source;
  std::vector<int> used(static_cast<std::size_t>(chain) + 1, 0);
  for (int step = 0; step < n; ++step) {
    const int m = sweep == Sweep::RightToLeft ? n - 1 - step : step;
    const Letter x = v[m];
    if (x.kind != kind) continue;
    const Letter y{kind, offset[x.index] + (++used[x.index])};
    w[m] = y;
    source.emplace(y, x);
  }
  for (const Letter x : v)
    if (x.kind != kind) source.emplace(x, x);

  std::vector<Letter> order;
  for (const Letter x : a.order()) {
    if (x.kind != kind) {
      order.push_back(x);
      continue;
    }
    for (int f = offset[x.index] + 1; f <= offset[x.index + 1]; ++f)
      order.push_back(Letter{kind, f});
  }
  Shuffle derived(alphabet, std::move(order));
  std::vector<Letter> letter_map = w;
  return {alphabet, std::move(w), std::move(derived), std::move(letter_map),
          std::move(source)};
}

}  // namespace

Standardization standardize_u(const Word& v, const Shuffle& a) {
  return standardize(v, a, Kind::U, Sweep::RightToLeft);
}

Standardization standardize_t(const Word& v, const Shuffle& a, Sweep sweep) {
  return standardize(v, a, Kind::T, sweep);
}

Tableau relabel(const Tableau& p, const YoungTableau<int>& origins,
                const std::vector<Letter>& letter_map) {
  if (p.shape() != origins.shape())
    throw std::invalid_argument("origin tableau does not match P");
  std::vector<std::vector<Letter>> rows;
  for (int r = 1; r <= p.num_rows(); ++r) {
    auto& row = rows.emplace_back();
    for (int c = 1; c <= p.row_length(r); ++c)
      row.push_back(letter_map.at(static_cast<std::size_t>(origins[{r, c}] - 1)));
  }
  return Tableau(std::move(rows));
}

}  // namespace srsk
