#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/polynomial.hpp"
#include "superrsk/young_tableau.hpp"

namespace srsk {

using Tableau = YoungTableau<Letter>;
using RecordingTableau = YoungTableau<int>;
using Word = std::vector<Letter>;

enum class Axis : unsigned char { Rows, Columns };

/// Which axis each letter kind must strictly increase along. Every row and
/// column is weakly increasing in the shuffle order regardless.
struct StrictnessProfile {
  Axis t_strict_in = Axis::Columns;
  Axis u_strict_in = Axis::Rows;
  friend bool operator==(const StrictnessProfile&, const StrictnessProfile&) = default;
};

/// Letter multiplicities (alpha_1..alpha_k; beta_1..beta_l).
struct TypeVector {
  std::vector<int> alpha;
  std::vector<int> beta;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;
};

enum class Region : int { Lower = 1, Pair = 2, Upper = 3 };

using RegionMap = std::map<Cell, Region>;
using Component = std::set<Cell>;

inline Shape shape_of(const Tableau& t) { return t.shape(); }

bool is_valid(const Tableau& t, const Shuffle& s, const StrictnessProfile& profile);
bool is_standard(const RecordingTableau& q);

TypeVector content_type(const Tableau& t, const Alphabet& alphabet);
TypeVector word_type(const Word& v, const Alphabet& alphabet);

/// w(T): x_i^{alpha_i} y_j^{beta_j}.
Monomial weight_monomial(const Tableau& t, const Alphabet& alphabet);

/// Label each cell 1/2/3 for entries below / equal to / above the pair.
/// Throws std::invalid_argument unless pair.t and pair.u are neighbours in s.
RegionMap classify_regions(const Tableau& t, const Shuffle& s, Transposition pair);

/// Side-connected components of the label-2 cells, ordered by first cell.
std::vector<Component> region2_components(const RegionMap& regions);

/// Rows of region 2 are t_i's except at one end, columns are u_j's except at
/// the other. This is the shape regular-regular tableaux always have.
bool region2_shape_ok(const Tableau& t, const Shuffle& s, Transposition pair);

/// shape(inner) fits in shape(outer) and entries agree on inner's cells.
bool is_subtableau(const Tableau& inner, const Tableau& outer);

std::string format_tableau(const Tableau& t);
std::string format_recording(const RecordingTableau& q);
std::string format_word(const Word& v);
/// Comma separated letters; whitespace is ignored, "" is the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace srsk
