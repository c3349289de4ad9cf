#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "superrsk/schur.hpp"

using namespace srsk;
using testing::shuf;
using testing::tab;

namespace {

// Oracle: every filling of the shape by alphabet letters, filtered by is_valid.
std::set<std::vector<std::vector<Letter>>> brute_ssyt(const Shape& shape, const Shuffle& s,
                                                      Variant var) {
  const std::vector<Letter> letters = s.alphabet().letters();
  const int n = shape.size();
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::set<std::vector<std::vector<Letter>>> out;
  while (true) {
    std::vector<std::vector<Letter>> rows;
    std::size_t next = 0;
    for (const int len : shape.rows()) {
      auto& row = rows.emplace_back();
      for (int c = 0; c < len; ++c) row.push_back(letters[digits[next++]]);
    }
    const Tableau t(rows);
    if (is_valid(t, s, variant_profile(var))) out.insert(rows);
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] == letters.size()) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

// Oracle: count permutations of 1..n that fill the shape row by row as an SYT.
long brute_syt(const Shape& shape) {
  std::vector<int> labels(static_cast<std::size_t>(shape.size()));
  std::iota(labels.begin(), labels.end(), 1);
  long count = 0;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t next = 0;
    for (const int len : shape.rows()) {
      auto& row = rows.emplace_back();
      for (int c = 0; c < len; ++c) row.push_back(labels[next++]);
    }
    count += is_standard(RecordingTableau(rows));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

Monomial mono(std::vector<int> x, std::vector<int> y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front().empty());
  const auto three = partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Shape({3}));
  CHECK(three[1] == Shape({2, 1}));
  CHECK(three[2] == Shape({1, 1, 1}));
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions(n).size() == expected[n]);
}

TEST_CASE("enumerate_ssyt small cases") {
  const Alphabet a(1, 1);
  const Shuffle s = shuf("t1<u1", 1, 1);
  const auto rr = Variant::regular_regular();
  CHECK(enumerate_ssyt(Shape({1}), a, s, rr) == std::vector<Tableau>{tab("t1"), tab("u1")});
  CHECK(enumerate_ssyt(Shape({2}), a, s, rr) ==
        std::vector<Tableau>{tab("t1 t1"), tab("t1 u1")});
  CHECK(enumerate_ssyt(Shape({1, 1}), a, s, rr) ==
        std::vector<Tableau>{tab("t1 / u1"), tab("u1 / u1")});
  // Outside the (1,1)-hook nothing fits.
  CHECK(enumerate_ssyt(Shape({2, 2}), a, s, rr).empty());
  CHECK(enumerate_ssyt(Shape{}, a, s, rr).size() == 1);
}

TEST_CASE("enumerate_ssyt matches brute force") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {1, 2}, {3, 1}})
    for (const Shuffle& s : all_shuffles(Alphabet(k, l)))
      for (const Variant var : all_variants())
        for (int n = 1; n <= 4; ++n)
          for (const Shape& lambda : partitions(n)) {
            std::set<std::vector<std::vector<Letter>>> mine;
            for (const Tableau& t : enumerate_ssyt(lambda, s.alphabet(), s, var))
              mine.insert(t.rows());
            CHECK(mine == brute_ssyt(lambda, s, var));
          }
}

TEST_CASE("standard tableaux and the hook length formula") {
  CHECK(count_syt(Shape({1})) == 1);
  CHECK(count_syt(Shape({2, 1})) == 2);
  CHECK(count_syt(Shape({2, 2})) == 2);
  CHECK(count_syt(Shape{}) == 1);
  CHECK(standard_tableaux(Shape({2, 1})).size() == 2);
  for (int n = 1; n <= 6; ++n)
    for (const Shape& lambda : partitions(n)) {
      const auto all = standard_tableaux(lambda);
      CHECK(count_syt(lambda) == static_cast<long>(all.size()));
      CHECK(count_syt(lambda) == brute_syt(lambda));
      for (const RecordingTableau& q : all) CHECK(is_standard(q));
    }
  // Two equal rows give the Catalan numbers.
  CHECK(count_syt(Shape({10, 10})) == 16796);
  CHECK(count_syt(Shape({30, 30})) == mpz_class("3814986502092304"));
}

TEST_CASE("hook Schur spot values") {
  const Alphabet a11(1, 1);
  for (const Shuffle& s : all_shuffles(a11))
    CHECK(format_polynomial(hook_schur(Shape({1}), a11, s)) == "x1 + y1");
  CHECK(format_polynomial(hook_schur(Shape({2}), a11, shuf("t1<u1", 1, 1))) == "x1^2 + x1*y1");
  for (const Shuffle& s : all_shuffles(a11))
    CHECK(format_polynomial(hook_schur(Shape({1, 1}), a11, s)) == "x1*y1 + y1^2");

  // k = 2, l = 0: ordinary Schur polynomial s_(2,1)(x1, x2) = x1^2 x2 + x1 x2^2.
  const Alphabet a20(2, 0);
  const Polynomial s21 = hook_schur(Shape({2, 1}), a20, kl_shuffle(a20));
  Polynomial expected(mono({2, 1}, {}));
  expected += Polynomial(mono({1, 2}, {}));
  CHECK(s21 == expected);
}

TEST_CASE("counting identity") {
  const CountingIdentity two = rsk_counting_identity(Alphabet(1, 1), 2, shuf("t1<u1", 1, 1),
                                                     Variant::regular_regular());
  CHECK(two.lhs == 4);
  CHECK(two.rhs == 4);
  CHECK(two.equal);
  const CountingIdentity three = rsk_counting_identity(
      Alphabet(2, 1), 3, kl_shuffle(Alphabet(2, 1)), Variant::regular_regular());
  CHECK(three.lhs == 27);
  CHECK(three.equal);
  for (int k = 0; k <= 3; ++k) {
    const Alphabet a(k, 3 - k);
    CHECK(rsk_counting_identity(a, 1, kl_shuffle(a), Variant::dual_dual()).lhs == 3);
  }
}
