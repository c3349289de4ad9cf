#include "superrsk/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace srsk {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Alphabet::Alphabet(int k, int l) : k_(k), l_(l) {
  if (k < 0 || l < 0)
    throw std::invalid_argument("alphabet sizes must be non-negative");
  if (k + l == 0) throw std::invalid_argument("alphabet must not be empty");
}

bool Alphabet::contains(Letter x) const {
  const int bound = x.is_t() ? k_ : l_;
  return x.index >= 1 && x.index <= bound;
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= k_; ++i) out.push_back(Letter::t(i));
  for (int j = 1; j <= l_; ++j) out.push_back(Letter::u(j));
  return out;
}

Shuffle::Shuffle(Alphabet alphabet, std::vector<Letter> order)
    : alphabet_(alphabet),
      order_(std::move(order)),
      t_rank_(static_cast<std::size_t>(alphabet.k()), -1),
      u_rank_(static_cast<std::size_t>(alphabet.l()), -1) {
  if (static_cast<int>(order_.size()) != alphabet_.size())
    throw std::invalid_argument("shuffle must list each of the " +
                                std::to_string(alphabet_.size()) +
                                " letters exactly once");
  int last_t = 0;
  int last_u = 0;
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const Letter x = order_[pos];
    if (!alphabet_.contains(x))
      throw std::invalid_argument("letter " + format_letter(x) +
                                  " is outside the alphabet");
    auto& slot = x.is_t() ? t_rank_[x.index - 1] : u_rank_[x.index - 1];
    if (slot != -1)
      throw std::invalid_argument("duplicate letter " + format_letter(x));
    slot = static_cast<int>(pos);
    int& last = x.is_t() ? last_t : last_u;
    if (x.index != last + 1)
      throw std::invalid_argument("chain violated at " + format_letter(x));
    last = x.index;
  }
}

int Shuffle::rank(Letter x) const {
  if (!alphabet_.contains(x))
    throw std::out_of_range("letter " + format_letter(x) +
                            " is outside the alphabet");
  return rank_unchecked(x);
}

std::string Shuffle::pattern() const {
  std::string p;
  p.reserve(order_.size());
  for (const Letter x : order_) p.push_back(x.is_t() ? 'T' : 'U');
  return p;
}

std::vector<Shuffle> all_shuffles(const Alphabet& alphabet) {
  std::string pattern(static_cast<std::size_t>(alphabet.k()), 'T');
  pattern.append(static_cast<std::size_t>(alphabet.l()), 'U');
  std::vector<Shuffle> out;
  do {
    std::vector<Letter> order;
    order.reserve(pattern.size());
    int ti = 0;
    int uj = 0;
    for (const char c : pattern)
      order.push_back(c == 'T' ? Letter::t(++ti) : Letter::u(++uj));
    out.emplace_back(alphabet, std::move(order));
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return out;
}

Shuffle kl_shuffle(const Alphabet& alphabet) {
  return Shuffle(alphabet, alphabet.letters());
}

Ordering compare(const Shuffle& s, Letter a, Letter b) {
  const int ra = s.rank(a);
  const int rb = s.rank(b);
  if (ra < rb) return Ordering::Less;
  if (ra > rb) return Ordering::Greater;
  return Ordering::Equal;
}

namespace {

void require_same_alphabet(const Shuffle& a, const Shuffle& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("shuffles are over different alphabets");
}

}  // namespace

std::optional<Transposition> adjacent_transposition(const Shuffle& a,
                                                    const Shuffle& b) {
  require_same_alphabet(a, b);
  std::optional<Transposition> found;
  const Alphabet& alpha = a.alphabet();
  for (int i = 1; i <= alpha.k(); ++i) {
    for (int j = 1; j <= alpha.l(); ++j) {
      const Letter t = Letter::t(i);
      const Letter u = Letter::u(j);
      if (a.less(t, u) == b.less(t, u)) continue;
      if (found) return std::nullopt;
      found = Transposition{t, u};
    }
  }
  return found;
}

int discordance(const Shuffle& a, const Shuffle& b) {
  require_same_alphabet(a, b);
  int count = 0;
  const Alphabet& alpha = a.alphabet();
  for (int i = 1; i <= alpha.k(); ++i)
    for (int j = 1; j <= alpha.l(); ++j)
      if (a.less(Letter::t(i), Letter::u(j)) !=
          b.less(Letter::t(i), Letter::u(j)))
        ++count;
  return count;
}

std::vector<Shuffle> adjacency_chain(const Shuffle& a, const Shuffle& b) {
  require_same_alphabet(a, b);
  std::vector<Shuffle> chain{a};
  std::vector<Letter> order = a.order();
  // Bubble sort towards b's ranks; every swap of a neighbouring t/u pair
  // flips exactly one discordant pair, so the chain is as short as possible.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
      if (b.rank_unchecked(order[p]) > b.rank_unchecked(order[p + 1])) {
        std::swap(order[p], order[p + 1]);
        chain.emplace_back(a.alphabet(), order);
        swapped = true;
      }
    }
  }
  return chain;
}

bool order_adjacent(const Shuffle& s, Letter x, Letter y) {
  const int d = s.rank(x) - s.rank(y);
  return d == 1 || d == -1;
}

std::string format_letter(Letter x) {
  return (x.is_t() ? "t" : "u") + std::to_string(x.index);
}

Letter parse_letter(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || (s[0] != 't' && s[0] != 'u'))
    throw std::invalid_argument("unknown letter '" + std::string(s) + "'");
  int index = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data() + 1, end, index);
  if (ec != std::errc{} || ptr != end || index < 1)
    throw std::invalid_argument("unknown letter '" + std::string(s) + "'");
  return s[0] == 't' ? Letter::t(index) : Letter::u(index);
}

Letter parse_letter(std::string_view text, const Alphabet& alphabet) {
  const Letter x = parse_letter(text);
  if (!alphabet.contains(x))
    throw std::invalid_argument("letter " + format_letter(x) +
                                " is outside the alphabet");
  return x;
}

std::string format_shuffle(const Shuffle& s) {
  std::string out;
  for (const Letter x : s.order()) {
    if (!out.empty()) out.push_back('<');
    out += format_letter(x);
  }
  return out;
}

Shuffle parse_shuffle(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> order;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find('<', start);
    order.push_back(parse_letter(text.substr(start, stop - start), alphabet));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return Shuffle(alphabet, std::move(order));
}

}  // namespace srsk
