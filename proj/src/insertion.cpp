#include "superrsk/insertion.hpp"

#include <stdexcept>

namespace srsk {

std::vector<Variant> all_variants() {
  return {Variant::regular_regular(), Variant::regular_dual(),
          Variant::dual_regular(), Variant::dual_dual()};
}

std::string format_variant(Variant v) {
  auto name = [](Rule r) { return r == Rule::Regular ? "reg" : "dual"; };
  return std::string(name(v.t_rule)) + "-" + name(v.u_rule);
}

Variant parse_variant(std::string_view text) {
  for (const Variant v : all_variants())
    if (format_variant(v) == text) return v;
  throw std::invalid_argument("unknown variant '" + std::string(text) +
                              "' (expected reg-reg, reg-dual, dual-reg or dual-dual)");
}

StrictnessProfile variant_profile(Variant v) {
  return {v.t_rule == Rule::Regular ? Axis::Columns : Axis::Rows,
          v.u_rule == Rule::Regular ? Axis::Rows : Axis::Columns};
}

std::string format_action(const PendingAction& a) {
  return format_letter(a.element) + (a.axis == Axis::Rows ? " -> row " : " -> column ") +
         std::to_string(a.target);
}

namespace {

struct Tagged {
  Letter letter;
  int origin = 0;
  friend bool operator==(const Tagged&, const Tagged&) = default;
};

Tableau project_letters(const YoungTableau<Tagged>& t) {
  std::vector<std::vector<Letter>> rows;
  rows.reserve(t.rows().size());
  for (const auto& row : t.rows()) {
    auto& out = rows.emplace_back();
    out.reserve(row.size());
    for (const Tagged& e : row) out.push_back(e.letter);
  }
  return Tableau(std::move(rows));
}

YoungTableau<int> project_origins(const YoungTableau<Tagged>& t) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : t.rows()) {
    auto& out = rows.emplace_back();
    for (const Tagged& e : row) out.push_back(e.origin);
  }
  return YoungTableau<int>(std::move(rows));
}

YoungTableau<Tagged> tag(const Tableau& p) {
  std::vector<std::vector<Tagged>> rows;
  for (const auto& row : p.rows()) {
    auto& out = rows.emplace_back();
    for (const Letter x : row) out.push_back({x, 0});
  }
  return YoungTableau<Tagged>(std::move(rows));
}

class Inserter {
 public:
  Inserter(const Shuffle& s, Variant var) : s_(s), var_(var) {}

  // Inserts `x`; appends one Step per placement when `steps` is non-null.
  // Returns the new cell and the number of steps taken.
  std::pair<Cell, int> insert(YoungTableau<Tagged>& p, Tagged x, int ordinal,
                              int first_index, std::vector<Step>* steps) const {
    PendingAction action = entry_action(x.letter);
    Tagged moving = x;
    int taken = 0;
    while (true) {
      ++taken;
      const auto [cell, displaced] = place(p, moving, action);
      std::optional<PendingAction> bumped;
      if (displaced) {
        const Letter y = displaced->letter;
        bumped = y.is_t() ? PendingAction{y, Axis::Rows, cell.row + 1}
                          : PendingAction{y, Axis::Columns, cell.col + 1};
      }
      if (steps)
        steps->push_back(Step{first_index + taken - 1, ordinal, moving.letter, cell,
                              bumped, project_letters(p)});
      if (!displaced) return {cell, taken};
      moving = *displaced;
      action = *bumped;
    }
  }

 private:
  bool bumps(Letter occupant, Letter incoming) const {
    return var_.rule_for(incoming) == Rule::Regular
               ? s_.less(incoming, occupant)
               : s_.less_equal(incoming, occupant);
  }

  // Put `e` into the row or column named by `action`. Returns the cell it
  // occupies and whatever it displaced.
  std::pair<Cell, std::optional<Tagged>> place(YoungTableau<Tagged>& p, const Tagged& e,
                                               const PendingAction& action) const {
    if (action.axis == Axis::Rows) {
      const int r = action.target;
      const int len = p.row_length(r);
      for (int c = 1; c <= len; ++c) {
        if (bumps(p[{r, c}].letter, e.letter)) {
          Tagged old = p[{r, c}];
          p.set({r, c}, e);
          return {{r, c}, old};
        }
      }
      return {append(p, {r, len + 1}, e), std::nullopt};
    }
    const int c = action.target;
    const int len = p.column_length(c);
    for (int r = 1; r <= len; ++r) {
      if (bumps(p[{r, c}].letter, e.letter)) {
        Tagged old = p[{r, c}];
        p.set({r, c}, e);
        return {{r, c}, old};
      }
    }
    return {append(p, {len + 1, c}, e), std::nullopt};
  }

  static Cell append(YoungTableau<Tagged>& p, Cell c, const Tagged& e) {
    if (!p.addable(c))
      throw std::logic_error(
          "insertion path left the diagram; the tableau is not valid for this "
          "shuffle and variant");
    p.add(c, e);
    return c;
  }

  const Shuffle& s_;
  Variant var_;
};

void require_letter(const Shuffle& s, Letter x) {
  if (!s.alphabet().contains(x))
    throw std::invalid_argument("letter " + format_letter(x) +
                                " is outside the alphabet");
}

}  // namespace

std::pair<Tableau, std::vector<Step>> insert_letter(const Tableau& p, Letter x,
                                                    const Shuffle& s, Variant var) {
  require_letter(s, x);
  if (!is_valid(p, s, variant_profile(var)))
    throw std::invalid_argument("tableau is not valid for " + format_shuffle(s) +
                                " under " + format_variant(var));
  YoungTableau<Tagged> work = tag(p);
  std::vector<Step> steps;
  Inserter(s, var).insert(work, {x, 1}, 1, 1, &steps);
  return {project_letters(work), std::move(steps)};
}

InsertionResult insert_word(const Word& v, const Shuffle& s, Variant var,
                            TraceDetail detail) {
  for (const Letter x : v) require_letter(s, x);
  const Inserter inserter(s, var);
  YoungTableau<Tagged> work;
  RecordingTableau q;
  InsertionTrace trace;
  trace.path_lengths.reserve(v.size());
  std::vector<Step>* steps = detail == TraceDetail::Full ? &trace.steps : nullptr;
  for (std::size_t m = 0; m < v.size(); ++m) {
    const int ordinal = static_cast<int>(m) + 1;
    const auto [cell, taken] =
        inserter.insert(work, {v[m], ordinal}, ordinal, trace.total + 1, steps);
    q.add(cell, ordinal);
    trace.path_lengths.push_back(taken);
    trace.total += taken;
  }
  return {project_letters(work), std::move(q), project_origins(work), std::move(trace)};
}

const Tableau& state_after(const InsertionTrace& trace, int r) {
  if (r < 1 || r > static_cast<int>(trace.steps.size()))
    throw std::out_of_range("step index " + std::to_string(r) + " outside 1.." +
                            std::to_string(trace.steps.size()));
  return trace.steps[r - 1].state;
}

std::optional<PendingAction> action_after(const InsertionTrace& trace, int r) {
  const int total = static_cast<int>(trace.steps.size());
  if (r < 0 || r > total)
    throw std::out_of_range("step index " + std::to_string(r) + " outside 0.." +
                            std::to_string(total));
  if (r == total) return std::nullopt;
  if (r >= 1 && trace.steps[r - 1].bumped) return trace.steps[r - 1].bumped;
  return entry_action(trace.steps[r].element);
}

}  // namespace srsk
