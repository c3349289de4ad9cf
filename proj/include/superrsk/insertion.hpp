#pragma once

// Shuffle-parameterized super-RSK insertion. A t-letter enters row 1 and a
// u-letter enters column 1; a displaced t moves on to the next row and a
// displaced u to the next column. Each kind bumps the first entry that is
// strictly greater (regular rule) or greater-or-equal (dual rule).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/tableau.hpp"

namespace srsk {

enum class Rule : unsigned char { Regular, Dual };

struct Variant {
  Rule t_rule = Rule::Regular;
  Rule u_rule = Rule::Regular;

  static constexpr Variant regular_regular() { return {Rule::Regular, Rule::Regular}; }
  static constexpr Variant regular_dual() { return {Rule::Regular, Rule::Dual}; }
  static constexpr Variant dual_regular() { return {Rule::Dual, Rule::Regular}; }
  static constexpr Variant dual_dual() { return {Rule::Dual, Rule::Dual}; }

  Rule rule_for(Letter x) const { return x.is_t() ? t_rule : u_rule; }

  friend bool operator==(const Variant&, const Variant&) = default;
};

/// The four variants in the order reg-reg, reg-dual, dual-reg, dual-dual.
std::vector<Variant> all_variants();
std::string format_variant(Variant v);  // "reg-dual"
Variant parse_variant(std::string_view text);

StrictnessProfile variant_profile(Variant v);

/// An element waiting to be inserted into row `target` (axis Rows) or
/// column `target` (axis Columns).
struct PendingAction {
  Letter element;
  Axis axis = Axis::Rows;
  int target = 1;
  friend bool operator==(const PendingAction&, const PendingAction&) = default;
};

/// One settle-or-bump placement.
struct Step {
  int index = 0;           // 1-based position in the whole trace
  int letter_ordinal = 0;  // m such that this step serves v_m
  Letter element;          // the element placed at settled_cell
  Cell settled_cell;
  std::optional<PendingAction> bumped;
  Tableau state;  // P^index, without the bumped element
};

struct InsertionTrace {
  std::vector<Step> steps;        // empty under TraceDetail::Lengths
  std::vector<int> path_lengths;  // l_1..l_n
  int total = 0;                  // s = sum of path_lengths
};

struct InsertionResult {
  Tableau p;
  RecordingTableau q;
  /// Position m in the word of the letter occupying each cell of p.
  YoungTableau<int> origins;
  InsertionTrace trace;
};

enum class TraceDetail : unsigned char { Full, Lengths };

/// Insert one letter into a tableau that is valid for (s, var). Throws
/// std::invalid_argument for a foreign letter or an invalid tableau.
std::pair<Tableau, std::vector<Step>> insert_letter(const Tableau& p, Letter x,
                                                    const Shuffle& s, Variant var);

InsertionResult insert_word(const Word& v, const Shuffle& s, Variant var,
                            TraceDetail detail = TraceDetail::Full);

inline const std::vector<int>& path_lengths(const InsertionResult& r) {
  return r.trace.path_lengths;
}

/// P^r, 1 <= r <= total. Throws std::out_of_range otherwise.
const Tableau& state_after(const InsertionTrace& trace, int r);

/// The action performed by step r + 1, or nullopt when r is the last step.
/// r = 0 gives the entry of the first letter.
std::optional<PendingAction> action_after(const InsertionTrace& trace, int r);

/// Where a letter enters the tableau: t's into row 1, u's into column 1.
inline PendingAction entry_action(Letter x) {
  return {x, x.is_t() ? Axis::Rows : Axis::Columns, 1};
}

std::string format_action(const PendingAction& a);

}  // namespace srsk
