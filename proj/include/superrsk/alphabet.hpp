#pragma once

// Letters t_1..t_k, u_1..u_l and the shuffle orders on them.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srsk {

enum class Kind : unsigned char { T, U };

struct Letter {
  Kind kind = Kind::T;
  int index = 1;

  static constexpr Letter t(int i) { return {Kind::T, i}; }
  static constexpr Letter u(int j) { return {Kind::U, j}; }

  constexpr bool is_t() const { return kind == Kind::T; }
  constexpr bool is_u() const { return kind == Kind::U; }

  // Structural order (all t's before all u's); used for containers only,
  // never as the combinatorial order. That one lives in Shuffle.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// The two chain sizes (k, l). At least one letter must exist.
class Alphabet {
 public:
  Alphabet(int k, int l);

  int k() const { return k_; }
  int l() const { return l_; }
  int size() const { return k_ + l_; }
  bool contains(Letter x) const;

  /// t_1..t_k followed by u_1..u_l.
  std::vector<Letter> letters() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int k_;
  int l_;
};

enum class Ordering { Less, Equal, Greater };

/// A total order on the letters of an alphabet that extends both chains
/// t_1 < ... < t_k and u_1 < ... < u_l. Stored as its rank sequence.
class Shuffle {
 public:
  /// Throws std::invalid_argument unless `order` lists every letter exactly
  /// once with both chains increasing.
  Shuffle(Alphabet alphabet, std::vector<Letter> order);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& order() const { return order_; }

  /// 0-based position of x. Throws std::out_of_range for foreign letters.
  int rank(Letter x) const;

  /// rank() without the membership check; callers guarantee membership.
  int rank_unchecked(Letter x) const {
    return x.is_t() ? t_rank_[x.index - 1] : u_rank_[x.index - 1];
  }

  bool less(Letter a, Letter b) const {
    return rank_unchecked(a) < rank_unchecked(b);
  }
  bool less_equal(Letter a, Letter b) const {
    return rank_unchecked(a) <= rank_unchecked(b);
  }

  /// T/U pattern, e.g. "TUTUT" for t1<u1<t2<u2<t3.
  std::string pattern() const;

  friend bool operator==(const Shuffle& a, const Shuffle& b) {
    return a.alphabet_ == b.alphabet_ && a.order_ == b.order_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> order_;
  std::vector<int> t_rank_;
  std::vector<int> u_rank_;
};

/// The (t_i, u_j) pair whose relative order two adjacent shuffles disagree on.
struct Transposition {
  Letter t;
  Letter u;
  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// All C(k+l, k) shuffles, ordered lexicographically by T/U pattern with T
/// before U.
std::vector<Shuffle> all_shuffles(const Alphabet& alphabet);

/// t_1 < ... < t_k < u_1 < ... < u_l.
Shuffle kl_shuffle(const Alphabet& alphabet);

Ordering compare(const Shuffle& s, Letter a, Letter b);

/// The unique discordant (t_i, u_j) pair, or nullopt when the shuffles are
/// equal or disagree on more than one pair. Symmetric in its arguments.
std::optional<Transposition> adjacent_transposition(const Shuffle& a,
                                                    const Shuffle& b);

/// Number of (t_i, u_j) pairs ordered differently by a and b.
int discordance(const Shuffle& a, const Shuffle& b);

/// Shortest chain a = A_0, ..., A_n = b of pairwise adjacent shuffles.
std::vector<Shuffle> adjacency_chain(const Shuffle& a, const Shuffle& b);

/// True iff no letter of s lies strictly between x and y.
bool order_adjacent(const Shuffle& s, Letter x, Letter y);

std::string format_letter(Letter x);
/// Accepts "t3" / "u1" with surrounding whitespace.
Letter parse_letter(std::string_view text);
Letter parse_letter(std::string_view text, const Alphabet& alphabet);

std::string format_shuffle(const Shuffle& s);
/// "t1<u1<t2<u2<t3". Throws std::invalid_argument on unknown or duplicate
/// letters, missing letters, or chain violations.
Shuffle parse_shuffle(std::string_view text, const Alphabet& alphabet);

}  // namespace srsk
