#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/verify.hpp"

using namespace srsk;
using testing::rec;
using testing::shuf;
using testing::tab;
using testing::word;

namespace {

// Oracle: a direct transcription of the bumping rules on plain vectors.
struct Naive {
  std::vector<std::vector<Letter>> p;
  std::vector<std::vector<int>> q;
};

Naive naive_insert(const Word& v, const Shuffle& s, Variant var) {
  Naive out;
  auto& rows = out.p;
  int label = 0;
  for (const Letter x : v) {
    ++label;
    Letter e = x;
    bool into_row = e.is_t();
    int target = 1;
    while (true) {
      auto bumps = [&](Letter y) {
        return var.rule_for(e) == Rule::Regular ? s.less(e, y) : s.less_equal(e, y);
      };
      int r = 0;
      int c = 0;
      bool displaced = false;
      if (into_row) {
        r = target;
        if (r > static_cast<int>(rows.size())) rows.emplace_back();
        auto& row = rows[r - 1];
        c = static_cast<int>(row.size()) + 1;
        for (int j = 1; j <= static_cast<int>(row.size()); ++j)
          if (bumps(row[j - 1])) {
            c = j;
            break;
          }
        displaced = c <= static_cast<int>(row.size());
        if (!displaced) row.push_back(e);
      } else {
        c = target;
        r = 1;
        while (r <= static_cast<int>(rows.size()) &&
               static_cast<int>(rows[r - 1].size()) >= c && !bumps(rows[r - 1][c - 1]))
          ++r;
        displaced = r <= static_cast<int>(rows.size()) &&
                    static_cast<int>(rows[r - 1].size()) >= c;
        if (!displaced) {
          if (r > static_cast<int>(rows.size())) rows.emplace_back();
          rows[r - 1].push_back(e);
        }
      }
      if (!displaced) {
        if (r > static_cast<int>(out.q.size())) out.q.emplace_back();
        out.q[r - 1].push_back(label);
        break;
      }
      std::swap(e, rows[r - 1][c - 1]);
      into_row = e.is_t();
      target = into_row ? r + 1 : c + 1;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("variant names and profiles") {
  CHECK(format_variant(Variant::regular_dual()) == "reg-dual");
  CHECK(parse_variant("dual-dual") == Variant::dual_dual());
  CHECK_THROWS_AS(parse_variant("dual"), std::invalid_argument);
  CHECK(all_variants().size() == 4);

  CHECK(variant_profile(Variant::regular_regular()) ==
        StrictnessProfile{Axis::Columns, Axis::Rows});
  CHECK(variant_profile(Variant::regular_dual()) ==
        StrictnessProfile{Axis::Columns, Axis::Columns});
  CHECK(variant_profile(Variant::dual_regular()) == StrictnessProfile{Axis::Rows, Axis::Rows});
  CHECK(variant_profile(Variant::dual_dual()) == StrictnessProfile{Axis::Rows, Axis::Columns});
}

TEST_CASE("introductory example under both shuffles") {
  const Word v = word("u2,t1,t2,u1", 2, 2);
  const InsertionResult a = insert_word(v, shuf("t1<t2<u1<u2", 2, 2), Variant::regular_regular());
  CHECK(a.p == tab("t1 t2 u2 / u1"));
  CHECK(a.q == rec({{1, 2, 3}, {4}}));

  const InsertionResult b = insert_word(v, shuf("u1<u2<t1<t2", 2, 2), Variant::regular_regular());
  CHECK(b.p == tab("u1 u2 t2 / t1"));
  CHECK(b.q == rec({{1, 2, 3}, {4}}));
}

TEST_CASE("single letter insertion frames") {
  const Shuffle a = shuf("t1<u1<t2<u2<t3", 3, 2);
  const auto [p, steps] = insert_letter(tab("u1 t2 t2 / u1 u2 / t3"), Letter::t(1), a,
                                        Variant::regular_regular());
  CHECK(p == tab("t1 u1 t2 / u1 t2 u2 / t3"));
  REQUIRE(steps.size() == 4);
  CHECK(steps[0].state == tab("t1 t2 t2 / u1 u2 / t3"));
  CHECK(steps[1].state == tab("t1 u1 t2 / u1 u2 / t3"));
  CHECK(steps[2].state == tab("t1 u1 t2 / u1 t2 / t3"));
  CHECK(steps[3].state == tab("t1 u1 t2 / u1 t2 u2 / t3"));
  CHECK(steps[3].settled_cell == Cell{2, 3});
  CHECK_FALSE(steps[3].bumped.has_value());
  REQUIRE(steps[0].bumped.has_value());
  CHECK(*steps[0].bumped == PendingAction{Letter::u(1), Axis::Columns, 2});
  CHECK(*steps[1].bumped == PendingAction{Letter::t(2), Axis::Rows, 2});
  CHECK(*steps[2].bumped == PendingAction{Letter::u(2), Axis::Columns, 3});

  const auto [single, one] =
      insert_letter(Tableau{}, Letter::u(2), shuf("t1<t2<u1<u2", 2, 2), Variant::dual_dual());
  CHECK(single == tab("u2"));
  CHECK(one.size() == 1);

  const auto [grown, two] = insert_letter(tab("t1 u2"), Letter::t(2), shuf("t1<t2<u1<u2", 2, 2),
                                          Variant::regular_regular());
  CHECK(grown == tab("t1 t2 u2"));
  REQUIRE(two.size() == 2);
  CHECK(*two[0].bumped == PendingAction{Letter::u(2), Axis::Columns, 3});

  CHECK_THROWS_AS(insert_letter(Tableau{}, Letter::t(3), shuf("t1<u1", 1, 1),
                                Variant::regular_regular()),
                  std::invalid_argument);
  CHECK_THROWS_AS(insert_letter(tab("u1 u1"), Letter::t(1), shuf("t1<u1", 1, 1),
                                Variant::regular_regular()),
                  std::invalid_argument);
}

TEST_CASE("adjacent-shuffle example tableaux") {
  const Word v = word("u1,t3,t2,u2,t2,u1,t1", 3, 2);
  CHECK(insert_word(v, shuf("t1<u1<t2<u2<t3", 3, 2), Variant::regular_regular()).p ==
        tab("t1 u1 t2 / u1 t2 u2 / t3"));
  CHECK(insert_word(v, shuf("t1<u1<u2<t2<t3", 3, 2), Variant::regular_regular()).p ==
        tab("t1 u1 u2 / u1 t2 t2 / t3"));
}

TEST_CASE("insertion paths and intermediate states") {
  const Word v = word("u1,t3,t2,u2,t2,u1,t1", 3, 2);
  const InsertionResult r =
      insert_word(v, shuf("t1<u1<t2<u2<t3", 3, 2), Variant::regular_regular());
  CHECK(path_lengths(r) == std::vector<int>{1, 1, 2, 2, 1, 2, 4});
  CHECK(r.trace.total == 13);
  CHECK(r.trace.steps.size() == 13);
  CHECK(state_after(r.trace, 7) == tab("u1 t2 t2 / u2 / t3"));
  CHECK(state_after(r.trace, 8) == tab("u1 t2 t2 / u1 / t3"));
  CHECK(state_after(r.trace, 1) == tab("u1"));
  CHECK(state_after(r.trace, 13) == r.p);
  CHECK_THROWS_AS(state_after(r.trace, 0), std::out_of_range);
  CHECK_THROWS_AS(state_after(r.trace, 14), std::out_of_range);

  // The action after P^7 starts letter 6; after P^8 the displaced u2 moves on.
  CHECK(action_after(r.trace, 7) == PendingAction{Letter::u(1), Axis::Columns, 1});
  CHECK(action_after(r.trace, 8) == PendingAction{Letter::u(2), Axis::Columns, 2});
  CHECK(action_after(r.trace, 0) == entry_action(Letter::u(1)));
  CHECK_FALSE(action_after(r.trace, 13).has_value());

  // Each letter's steps, in order, carry its ordinal.
  int expected_ordinal = 1;
  int used = 0;
  for (const Step& s : r.trace.steps) {
    if (used == r.trace.path_lengths[expected_ordinal - 1]) {
      ++expected_ordinal;
      used = 0;
    }
    CHECK(s.letter_ordinal == expected_ordinal);
    ++used;
  }
}

TEST_CASE("two-letter traces under opposite shuffles") {
  const Word v = word("t1,u1", 1, 1);
  const InsertionResult a = insert_word(v, shuf("t1<u1", 1, 1), Variant::regular_regular());
  CHECK(path_lengths(a) == std::vector<int>{1, 1});
  CHECK(state_after(a.trace, 1) == tab("t1"));
  CHECK(state_after(a.trace, 2) == tab("t1 / u1"));

  const InsertionResult b = insert_word(v, shuf("u1<t1", 1, 1), Variant::regular_regular());
  CHECK(path_lengths(b) == std::vector<int>{1, 2});
  CHECK(state_after(b.trace, 1) == tab("t1"));
  CHECK(state_after(b.trace, 2) == tab("u1"));
  CHECK(state_after(b.trace, 3) == tab("u1 / t1"));
}

TEST_CASE("dual u-rule example") {
  const InsertionResult r = insert_word(word("u1,t1,t2,u1", 2, 1), shuf("u1<t1<t2", 2, 1),
                                        Variant::regular_dual());
  CHECK(r.p == tab("u1 u1 t2 / t1"));
  CHECK(r.q == rec({{1, 2, 3}, {4}}));
}

TEST_CASE("empty word") {
  const InsertionResult r =
      insert_word({}, shuf("t1<u1", 1, 1), Variant::regular_regular());
  CHECK(r.p.empty());
  CHECK(r.q.empty());
  CHECK(r.trace.steps.empty());
  CHECK(r.trace.total == 0);
}

TEST_CASE("origins record which letter sits where") {
  const Word v = word("u2,t1,t2,u1", 2, 2);
  const InsertionResult r = insert_word(v, shuf("t1<t2<u1<u2", 2, 2), Variant::regular_regular());
  for (const Cell c : r.p.cells()) CHECK(v[r.origins[c] - 1] == r.p[c]);
}

TEST_CASE("agrees with the naive oracle on every short word") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {1, 2}, {3, 1}}) {
    const Alphabet alphabet(k, l);
    for (int n = 0; n <= 4; ++n)
      for (const Word& v : words_for(alphabet, n, Mode::exhaustive()))
        for (const Shuffle& s : all_shuffles(alphabet))
          for (const Variant var : all_variants()) {
            const InsertionResult r = insert_word(v, s, var, TraceDetail::Lengths);
            const Naive o = naive_insert(v, s, var);
            CHECK(r.p.rows() == o.p);
            CHECK(r.q.rows() == o.q);
            CHECK(is_valid(r.p, s, variant_profile(var)));
            CHECK(is_standard(r.q));
          }
  }
}

TEST_CASE("full and lengths-only traces agree") {
  const Alphabet alphabet(2, 2);
  for (const Word& v : words_for(alphabet, 4, Mode::sample(50, 7)))
    for (const Variant var : all_variants()) {
      const Shuffle s = kl_shuffle(alphabet);
      const InsertionResult full = insert_word(v, s, var);
      const InsertionResult light = insert_word(v, s, var, TraceDetail::Lengths);
      CHECK(full.p == light.p);
      CHECK(full.trace.path_lengths == light.trace.path_lengths);
      CHECK(static_cast<int>(full.trace.steps.size()) == full.trace.total);
      CHECK(light.trace.steps.empty());
    }
}
