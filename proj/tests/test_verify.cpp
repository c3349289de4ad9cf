#include <doctest.h>

#include <stdexcept>

#include "support.hpp"
#include "superrsk/verify.hpp"

using namespace srsk;
using testing::rec;
using testing::shuf;
using testing::tab;
using testing::word;

namespace {

const Variant kRR = Variant::regular_regular();

}  // namespace

TEST_CASE("words_for") {
  const Alphabet a(1, 1);
  const auto all = words_for(a, 2, Mode::exhaustive());
  REQUIRE(all.size() == 4);
  CHECK(format_word(all[0]) == "t1,t1");
  CHECK(format_word(all[1]) == "t1,u1");
  CHECK(format_word(all[3]) == "u1,u1");
  CHECK(words_for(a, 0, Mode::exhaustive()).size() == 1);

  const auto s1 = words_for(Alphabet(2, 2), 5, Mode::sample(20, 42));
  const auto s2 = words_for(Alphabet(2, 2), 5, Mode::sample(20, 42));
  const auto s3 = words_for(Alphabet(2, 2), 5, Mode::sample(20, 43));
  CHECK(s1.size() == 20);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
}

TEST_CASE("state equivalence on the adjacent-shuffle example") {
  const Shuffle a = shuf("t1<u1<t2<u2<t3", 3, 2);
  const Shuffle b = shuf("t1<u1<u2<t2<t3", 3, 2);
  const Transposition pair{Letter::t(2), Letter::u(2)};
  const TraceState pa{tab("t1 u1 t2 / u1 t2 u2 / t3"), std::nullopt};
  const TraceState pb{tab("t1 u1 u2 / u1 t2 t2 / t3"), std::nullopt};
  CHECK(sim_equivalent(pa, pb, a, b, pair));
  CHECK(sim_equivalent(pb, pa, b, a, pair));

  // Region 1 changed.
  const TraceState changed{tab("t1 t1 t2 / u1 t2 u2 / t3"), std::nullopt};
  CHECK_FALSE(sim_equivalent(changed, pb, a, b, pair));
  // One finished, one not.
  const TraceState pending{pb.state, PendingAction{Letter::t(1), Axis::Rows, 1}};
  CHECK_FALSE(sim_equivalent(pa, pending, a, b, pair));

  const RegionStats stats = region_stats(pa.state, a, pair);
  REQUIRE(stats.components.size() == 1);
  CHECK(stats.t_counts == std::vector<int>{2});
  CHECK(stats.u_counts == std::vector<int>{1});

  CHECK_THROWS_AS(sim_equivalent(pa, pa, a, a, pair), std::invalid_argument);
  CHECK_THROWS_AS(sim_equivalent(pa, pb, a, b, {Letter::t(1), Letter::u(1)}),
                  std::invalid_argument);
}

TEST_CASE("first states agree") {
  const Word v = word("u1,t3,t2,u2,t2,u1,t1", 3, 2);
  const Shuffle a = shuf("t1<u1<t2<u2<t3", 3, 2);
  const Shuffle b = shuf("t1<u1<u2<t2<t3", 3, 2);
  const auto ta = insert_word(v, a, kRR).trace;
  const auto tb = insert_word(v, b, kRR).trace;
  CHECK(state_after(ta, 1) == state_after(tb, 1));
  CHECK(sim_equivalent(trace_state(ta, 1), trace_state(tb, 1), a, b,
                       {Letter::t(2), Letter::u(2)}));
}

TEST_CASE("alignment of the two-letter example") {
  const Shuffle a = shuf("t1<u1", 1, 1);
  const Shuffle b = shuf("u1<t1", 1, 1);
  const Word v = word("t1,u1", 1, 1);
  const Transposition pair{Letter::t(1), Letter::u(1)};
  const Alignment al =
      align_traces(insert_word(v, a, kRR).trace, insert_word(v, b, kRR).trace, a, b, pair);
  CHECK(al.complete);
  CHECK(al.witnesses == 1);
  CHECK(al.pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 3}});

  CHECK_THROWS_AS(align_traces(insert_word(v, a, kRR).trace, insert_word(v, a, kRR).trace, a,
                               a, pair),
                  std::invalid_argument);
}

TEST_CASE("alignments are chains of equivalent states ending at the totals") {
  const Alphabet alphabet(2, 2);
  const auto shuffles = all_shuffles(alphabet);
  for (const Word& v : words_for(alphabet, 4, Mode::sample(40, 5)))
    for (std::size_t i = 0; i < shuffles.size(); ++i)
      for (std::size_t j = 0; j < shuffles.size(); ++j) {
        const auto tr = adjacent_transposition(shuffles[i], shuffles[j]);
        if (!tr) continue;
        const auto ta = insert_word(v, shuffles[i], kRR).trace;
        const auto tb = insert_word(v, shuffles[j], kRR).trace;
        const Alignment al = align_traces(ta, tb, shuffles[i], shuffles[j], *tr);
        REQUIRE(al.complete);
        CHECK(al.pairs.front() == std::pair<int, int>{1, 1});
        CHECK(al.pairs.back() == std::pair<int, int>{ta.total, tb.total});
        for (std::size_t m = 0; m < al.pairs.size(); ++m) {
          const auto [p, q] = al.pairs[m];
          CHECK(sim_equivalent(trace_state(ta, p), trace_state(tb, q), shuffles[i],
                               shuffles[j], *tr));
          CHECK(sim_equivalent(trace_state(tb, q), trace_state(ta, p), shuffles[j],
                               shuffles[i], *tr));
          if (m == 0) continue;
          const int dp = p - al.pairs[m - 1].first;
          const int dq = q - al.pairs[m - 1].second;
          CHECK(((dp == 1 && dq == 1) || (dp == 1 && dq == 2) || (dp == 2 && dq == 1)));
        }
      }
}

TEST_CASE("single-case checks") {
  const Word v = word("u2,t1,t2,u1", 2, 2);
  const Shuffle a = shuf("t1<t2<u1<u2", 2, 2);
  CHECK(check_lemma2_6(v, a, Letter::t(2)));
  CHECK(check_lemma2_6(v, a, Letter::u(2)));
  for (const Shuffle& s : all_shuffles(Alphabet(2, 2))) CHECK(check_lemma3_2(v, s));
  CHECK_THROWS_AS(check_lemma3_2(word("u1,u1", 2, 2), a), std::invalid_argument);

  const Word v8 = word("u1,t3,t2,u2,t2,u1,t1", 3, 2);
  CHECK(check_corollary2_7(v8, shuf("t1<u1<t2<u2<t3", 3, 2), shuf("t1<u1<u2<t2<t3", 3, 2)));
  CHECK(check_corollary2_7(word("t2,u2,t2", 3, 2), shuf("t1<u1<t2<u2<t3", 3, 2),
                           shuf("t1<u1<u2<t2<t3", 3, 2)));
  CHECK_THROWS_AS(check_corollary2_7(v, a, a), std::invalid_argument);
}

TEST_CASE("path and monotonicity counters") {
  const Word v = word("u1,t3,t2,u2,t2,u1,t1", 3, 2);
  const Shuffle a = shuf("t1<u1<t2<u2<t3", 3, 2);
  const auto trace = insert_word(v, a, kRR).trace;
  CHECK(lemma2_3_violations(trace) == 0);
  CHECK(lemma2_14_violations(trace, a) == 0);
}

TEST_CASE("grid reports") {
  const Alphabet a(2, 2);
  const Report t2 = check_theorem2(a, 4, Mode::exhaustive());
  CHECK(t2.passed());
  CHECK(t2.cases_run == 256 * 15);
  CHECK(t2.check_name == "theorem2");
  CHECK(t2.parameters.at("mode") == "exhaustive");
  CHECK(check_theorem2(a, 1, Mode::exhaustive()).passed());

  const Report t5 = check_theorem5(Alphabet(2, 1), 4, Variant::regular_dual(), Mode::exhaustive());
  CHECK(t5.passed());
  const Report same = check_theorem5(a, 3, kRR, Mode::exhaustive());
  const Report base = check_theorem2(a, 3, Mode::exhaustive());
  CHECK(same.cases_run == base.cases_run);
  CHECK(same.failures.empty());

  const Report lemma = check_lemma3_2_grid(a, 4, Mode::exhaustive());
  CHECK(lemma.passed());
  CHECK(lemma.stats.at("words") > 0);
}

TEST_CASE("threads and seeds do not change reports") {
  const Alphabet a(2, 2);
  Mode one = Mode::sample(200, 9);
  Mode four = Mode::sample(200, 9);
  four.threads = 4;
  for (const Variant var : all_variants()) {
    const Report r1 = check_lemma2_15(a, 5, var, one);
    const Report r4 = check_lemma2_15(a, 5, var, four);
    CHECK(r1.cases_run == r4.cases_run);
    CHECK(r1.stats == r4.stats);
    CHECK(r1.failures.size() == r4.failures.size());
    for (std::size_t i = 0; i < r1.failures.size(); ++i)
      CHECK(r1.failures[i].word == r4.failures[i].word);
  }
}

TEST_CASE("dual variants break the alignment but it is only counted") {
  const Report r = check_lemma2_15(Alphabet(2, 2), 4, Variant::regular_dual(), Mode::exhaustive());
  CHECK(r.passed());
  CHECK(r.parameters.at("asserted") == "false");
  CHECK(r.stats.at("violations") > 0);
}

TEST_CASE("phi bijection reports") {
  const Alphabet a(2, 2);
  const Report one = check_theorem3(Shape({3, 1}), a, kl_shuffle(a), shuf("u1<u2<t1<t2", 2, 2),
                                    rec({{1, 2, 3}, {4}}));
  CHECK(one.passed());
  CHECK(one.cases_run > 0);
  const Report identity =
      check_theorem3(Shape({2, 1}), a, kl_shuffle(a), kl_shuffle(a), rec({{1, 2}, {3}}));
  CHECK(identity.passed());
  CHECK_THROWS_AS(check_theorem3(Shape({2, 1}), a, kl_shuffle(a), kl_shuffle(a),
                                 rec({{1, 2, 3}})),
                  std::invalid_argument);

  const Report all = check_theorem3_all(Alphabet(1, 1), 3);
  CHECK(all.passed());
  CHECK(all.stats.at("syt(2,1)") == 2);
  CHECK(all.stats.count("distinct_phi_min(2,1)") == 1);
}

TEST_CASE("polynomial and counting reports") {
  CHECK(check_corollary4(Alphabet(2, 2), 4).passed());
  CHECK(check_counting_identity(Alphabet(1, 2), 4).passed());
  CHECK(check_region2_shapes(Alphabet(2, 2), 4, Mode::exhaustive()).passed());
  CHECK(check_lemma3_3(Alphabet(2, 2), 3, Variant::dual_dual(), Mode::exhaustive()).passed());
  CHECK_THROWS_AS(check_lemma3_3(Alphabet(2, 2), 3, kRR, Mode::exhaustive()),
                  std::invalid_argument);
}
