#pragma once

#include <map>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/tableau.hpp"

namespace srsk {

/// Inverse of insert_word: recovers v with insert_word(v, s, var) = (p, q).
///
/// Labels are processed from n down to 1. The entry at the cell labelled m
/// is ejected and walks its insertion path backwards: a t-letter in row i
/// displaces the rightmost entry of row i-1 that is below it (or not above
/// it, under the dual t-rule); a u-letter in column j displaces the lowest
/// entry of column j-1 below it (or not above it, under the dual u-rule).
/// A t-letter leaving row 1 or a u-letter leaving column 1 is v_m.
///
/// Throws std::invalid_argument if the shapes differ, q is not standard or p
/// is not valid for (s, var).
Word reverse_word(const Tableau& p, const RecordingTableau& q, const Shuffle& s,
                  Variant var);

/// phi_Q: the B-insertion tableau of the word whose A-insertion is (p, q).
Tableau phi(const Tableau& p, const RecordingTableau& q, const Shuffle& a,
            const Shuffle& b, Variant var);

/// A word rewritten over a fresh alphabet so that one letter kind has no
/// repetitions, together with the shuffle that makes dual insertion of the
/// new word mirror dual insertion of the original.
struct Standardization {
  Alphabet alphabet;
  Word w;
  Shuffle derived_shuffle;
  /// letter_map[m - 1] is the letter replacing v_m (that is, w_m).
  std::vector<Letter> letter_map;
  /// Fresh letter -> the original letter it stands for.
  std::map<Letter, Letter> source;
};

/// Occurrences of u'_j are replaced right to left by the next block of
/// beta_j fresh u-letters; the block takes u'_j's place in the order.
/// Throws std::invalid_argument when the new alphabet would be empty.
Standardization standardize_u(const Word& v, const Shuffle& a);

enum class Sweep : unsigned char { RightToLeft, LeftToRight };

/// The t-side analogue: each t'_i block is relabelled with fresh t-letters
/// and u-letters are left alone. Only the right-to-left sweep makes the dual
/// t-rule on w mirror the dual t-rule on v; LeftToRight mirrors the regular
/// t-rule instead and is kept for comparison.
Standardization standardize_t(const Word& v, const Shuffle& a,
                              Sweep sweep = Sweep::RightToLeft);

/// Replace every letter of p by letter_map[origins(cell) - 1].
Tableau relabel(const Tableau& p, const YoungTableau<int>& origins,
                const std::vector<Letter>& letter_map);

}  // namespace srsk
