#pragma once

#include <gmpxx.h>

#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/polynomial.hpp"
#include "superrsk/tableau.hpp"

namespace srsk {

/// Partitions of n in reverse lexicographic order; n = 0 gives the empty shape.
std::vector<Shape> partitions(int n);

/// Every tableau of the given shape that is valid for (s, variant_profile(var)).
/// Cells are filled row by row, trying letters in s-order, so the result is
/// deterministic. Shapes outside the (k, l)-hook give an empty result.
std::vector<Tableau> enumerate_ssyt(const Shape& shape, const Alphabet& alphabet,
                                    const Shuffle& s, Variant var);

/// All standard Young tableaux of the shape, by backtracking.
std::vector<RecordingTableau> standard_tableaux(const Shape& shape);

/// d_lambda by the hook length formula.
mpz_class count_syt(const Shape& shape);

/// Sum of w(T) over the regular-regular tableaux of the shape under s.
Polynomial hook_schur(const Shape& shape, const Alphabet& alphabet, const Shuffle& s);

struct CountingIdentity {
  mpz_class lhs;  // sum over lambda |SSYT(lambda)| * d_lambda
  mpz_class rhs;  // (k + l)^n
  bool equal = false;
};

CountingIdentity rsk_counting_identity(const Alphabet& alphabet, int n,
                                       const Shuffle& s, Variant var);

}  // namespace srsk
