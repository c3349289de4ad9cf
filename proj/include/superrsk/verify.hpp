#pragma once

// Exhaustive and sampled checkers for the shape-invariance results and the
// lemmas behind them. Every checker returns a Report; an empty failure list
// means the property held on every case that was run.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superrsk/alphabet.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/tableau.hpp"

namespace srsk {

/// Enough to replay a failing case.
struct CaseFailure {
  std::string word;
  std::string shuffles;
  std::string variant;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string check_name;
  std::map<std::string, std::string> parameters;
  std::int64_t cases_run = 0;
  std::vector<CaseFailure> failures;
  /// Measured quantities that are reported but not asserted.
  std::map<std::string, std::int64_t> stats;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

struct Mode {
  enum class Kind : unsigned char { Exhaustive, Sample };
  Kind kind = Kind::Exhaustive;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  /// Worker threads; results are merged by case index, so the report does
  /// not depend on this.
  unsigned threads = 1;

  static Mode exhaustive() { return {}; }
  static Mode sample(std::int64_t count, std::uint64_t seed) {
    return {Kind::Sample, count, seed, 1};
  }
};

/// Words of length n: all (k+l)^n of them in lexicographic order, or
/// `samples` uniform draws from a generator seeded with `seed`.
std::vector<Word> words_for(const Alphabet& alphabet, int n, const Mode& mode);

/// P^r together with the action step r + 1 will perform (nullopt at the end).
struct TraceState {
  Tableau state;
  std::optional<PendingAction> next;
};

TraceState trace_state(const InsertionTrace& trace, int r);

/// Per region-2 component (in region2_components order): how many t_i's and
/// u_j's it holds.
struct RegionStats {
  std::vector<Component> components;
  std::vector<int> t_counts;
  std::vector<int> u_counts;
};

RegionStats region_stats(const Tableau& t, const Shuffle& s, Transposition pair);

/// The state equivalence between intermediate tableaux of insertions under
/// two (t_i, u_j)-adjacent shuffles: identical regions 1 and 3, identical
/// region-2 cells with matching t_i counts per component, and the same next
/// action (or both finished). Throws std::invalid_argument unless `pair` is
/// the transposition separating sa and sb.
bool sim_equivalent(const TraceState& a, const TraceState& b, const Shuffle& sa,
                    const Shuffle& sb, Transposition pair);

/// A chain of matched step indices (p, q), starting at (1, 1) and advancing
/// by (1,1), (1,2) or (2,1), with every matched pair equivalent.
struct Alignment {
  std::vector<std::pair<int, int>> pairs;
  bool complete = false;        // reached (s_A, s_B)
  std::uint64_t witnesses = 0;  // number of distinct complete alignments
};

Alignment align_traces(const InsertionTrace& ta, const InsertionTrace& tb,
                       const Shuffle& sa, const Shuffle& sb, Transposition pair);

// Single-case predicates.

/// Inserting the letters of v that are <= x gives a subtableau.
bool check_lemma2_6(const Word& v, const Shuffle& s, Letter x,
                    Variant var = Variant::regular_regular());
/// Entries below both pair letters sit identically in P_A and P_B.
bool check_corollary2_7(const Word& v, const Shuffle& a, const Shuffle& b,
                        Variant var = Variant::regular_regular());
/// Regular and dual u-rules agree on words without repeated u-letters.
/// Throws std::invalid_argument if v repeats a u-letter.
bool check_lemma3_2(const Word& v, const Shuffle& s);

/// Path monotonicity violations within one trace (0 when the property holds).
int lemma2_3_violations(const InsertionTrace& trace);
/// Cellwise monotonicity violations between consecutive states.
int lemma2_14_violations(const InsertionTrace& trace, const Shuffle& s);

// Grid checkers over all words of length n (or a seeded sample).

Report check_theorem2(const Alphabet& alphabet, int n, const Mode& mode);
Report check_theorem5(const Alphabet& alphabet, int n, Variant var, const Mode& mode);
/// reverse(insert(v)) = v for every word and shuffle; in exhaustive mode also
/// insert(reverse(P, Q)) = (P, Q) for every valid pair of size n.
Report check_theorem1(const Alphabet& alphabet, int n, Variant var, const Mode& mode);
/// Asserted for regular-regular; other variants only count violations.
Report check_lemma2_3(const Alphabet& alphabet, int n, Variant var, const Mode& mode);
Report check_lemma2_14(const Alphabet& alphabet, int n, Variant var, const Mode& mode);
Report check_lemma2_6_grid(const Alphabet& alphabet, int n, Variant var,
                           const Mode& mode);
Report check_corollary2_7_grid(const Alphabet& alphabet, int n, Variant var,
                               const Mode& mode);
Report check_lemma3_2_grid(const Alphabet& alphabet, int n, const Mode& mode);
/// Asserted for regular-regular; other variants only count words without an
/// alignment.
Report check_lemma2_15(const Alphabet& alphabet, int n, Variant var, const Mode& mode);
/// Region-2 shape of every regular-regular insertion tableau, for every pair
/// of neighbouring t_i, u_j in its shuffle.
Report check_region2_shapes(const Alphabet& alphabet, int n, const Mode& mode);
/// Standardization mirrors dual insertion, and the standardized word gives
/// the same shape under the matching regular rule. var must have a dual rule.
Report check_lemma3_3(const Alphabet& alphabet, int n, Variant var, const Mode& mode);

/// hook_schur is the same polynomial under every shuffle, for all shapes of n.
Report check_corollary4(const Alphabet& alphabet, int n);
/// sum |SSYT(lambda)| d_lambda = (k+l)^n for every shuffle and variant.
Report check_counting_identity(const Alphabet& alphabet, int n);

/// phi_q maps SSYT_A(shape) bijectively and type-preservingly onto
/// SSYT_B(shape).
Report check_theorem3(const Shape& shape, const Alphabet& alphabet, const Shuffle& a,
                      const Shuffle& b, const RecordingTableau& q,
                      Variant var = Variant::regular_regular());
/// check_theorem3 for every shape of n, ordered shuffle pair and standard q;
/// also counts the distinct maps phi_q per shape and pair.
Report check_theorem3_all(const Alphabet& alphabet, int n,
                          Variant var = Variant::regular_regular());

}  // namespace srsk
