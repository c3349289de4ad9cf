#include "superrsk/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "superrsk/bijection.hpp"
#include "superrsk/schur.hpp"

namespace srsk {

std::vector<Word> words_for(const Alphabet& alphabet, int n, const Mode& mode) {
  if (n < 0) throw std::invalid_argument("word length must be non-negative");
  const std::vector<Letter> letters = alphabet.letters();
  const std::size_t base = letters.size();
  std::vector<Word> out;
  if (mode.kind == Mode::Kind::Sample) {
    if (mode.samples < 0) throw std::invalid_argument("sample count must be non-negative");
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, base - 1);
    out.reserve(static_cast<std::size_t>(mode.samples));
    for (std::int64_t i = 0; i < mode.samples; ++i) {
      Word w(static_cast<std::size_t>(n));
      for (Letter& x : w) x = letters[pick(rng)];
      out.push_back(std::move(w));
    }
    return out;
  }
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    Word w;
    w.reserve(digits.size());
    for (const std::size_t d : digits) w.push_back(letters[d]);
    out.push_back(std::move(w));
    int pos = n - 1;
    while (pos >= 0 && ++digits[pos] == base) digits[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

TraceState trace_state(const InsertionTrace& trace, int r) {
  return {state_after(trace, r), action_after(trace, r)};
}

RegionStats region_stats(const Tableau& t, const Shuffle& s, Transposition pair) {
  RegionStats out;
  out.components = region2_components(classify_regions(t, s, pair));
  for (const Component& comp : out.components) {
    int ts = 0;
    int us = 0;
    for (const Cell c : comp) (t[c] == pair.t ? ts : us) += 1;
    out.t_counts.push_back(ts);
    out.u_counts.push_back(us);
  }
  return out;
}

namespace {

void require_adjacent(const Shuffle& sa, const Shuffle& sb, Transposition pair) {
  const auto tr = adjacent_transposition(sa, sb);
  if (!tr)
    throw std::invalid_argument(format_shuffle(sa) + " and " + format_shuffle(sb) +
                                " are not adjacent");
  if (!(*tr == pair))
    throw std::invalid_argument("pair (" + format_letter(pair.t) + "," +
                                format_letter(pair.u) +
                                ") does not separate the two shuffles");
}

bool sim_unchecked(const TraceState& a, const TraceState& b, const Shuffle& sa,
                   const Shuffle& sb, Transposition pair) {
  if (a.next.has_value() != b.next.has_value()) return false;
  if (a.next && !(*a.next == *b.next)) return false;
  const RegionMap ra = classify_regions(a.state, sa, pair);
  const RegionMap rb = classify_regions(b.state, sb, pair);
  if (ra.size() != rb.size()) return false;
  for (auto ia = ra.begin(), ib = rb.begin(); ia != ra.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
    if (ia->second != Region::Pair && a.state[ia->first] != b.state[ib->first])
      return false;
  }
  // Same region-2 cells, hence the same components.
  for (const Component& comp : region2_components(ra)) {
    int ta = 0;
    int tb = 0;
    for (const Cell c : comp) {
      ta += a.state[c] == pair.t;
      tb += b.state[c] == pair.t;
    }
    if (ta != tb) return false;
  }
  return true;
}

}  // namespace

bool sim_equivalent(const TraceState& a, const TraceState& b, const Shuffle& sa,
                    const Shuffle& sb, Transposition pair) {
  require_adjacent(sa, sb, pair);
  return sim_unchecked(a, b, sa, sb, pair);
}

Alignment align_traces(const InsertionTrace& ta, const InsertionTrace& tb,
                       const Shuffle& sa, const Shuffle& sb, Transposition pair) {
  require_adjacent(sa, sb, pair);
  const int na = static_cast<int>(ta.steps.size());
  const int nb = static_cast<int>(tb.steps.size());
  Alignment out;
  if (na == 0 || nb == 0) {
    out.complete = na == nb;
    out.witnesses = out.complete ? 1 : 0;
    return out;
  }

  // good: -1 unknown, 0 not equivalent, 1 equivalent. Indices are 1-based.
  const auto width = static_cast<std::size_t>(nb) + 1;
  std::vector<signed char> good((static_cast<std::size_t>(na) + 1) * width, -1);
  auto at = [&](int p, int q) -> signed char& {
    return good[static_cast<std::size_t>(p) * width + static_cast<std::size_t>(q)];
  };
  auto equivalent = [&](int p, int q) {
    signed char& g = at(p, q);
    if (g < 0) g = sim_unchecked(trace_state(ta, p), trace_state(tb, q), sa, sb, pair);
    return g == 1;
  };

  constexpr std::pair<int, int> kIncrements[] = {{1, 1}, {1, 2}, {2, 1}};
  std::vector<std::uint64_t> ways(good.size(), 0);
  std::vector<std::pair<int, int>> parent(good.size(), {0, 0});
  auto idx = [&](int p, int q) {
    return static_cast<std::size_t>(p) * width + static_cast<std::size_t>(q);
  };
  if (!equivalent(1, 1)) return out;
  ways[idx(1, 1)] = 1;
  // Every increment raises p + q, so sweeping anti-diagonals in order visits
  // each node after all of its predecessors.
  for (int sum = 2; sum < na + nb; ++sum) {
    for (int p = std::max(1, sum - nb); p <= std::min(na, sum - 1); ++p) {
      const int q = sum - p;
      const std::uint64_t w = ways[idx(p, q)];
      if (w == 0) continue;
      for (const auto& [dp, dq] : kIncrements) {
        const int np = p + dp;
        const int nq = q + dq;
        if (np > na || nq > nb || !equivalent(np, nq)) continue;
        std::uint64_t& target = ways[idx(np, nq)];
        if (target == 0) parent[idx(np, nq)] = {p, q};
        target = target > UINT64_MAX - w ? UINT64_MAX : target + w;
      }
    }
  }
  out.witnesses = ways[idx(na, nb)];
  out.complete = out.witnesses > 0;
  if (!out.complete) {
    // Report the furthest prefix that was reached.
    int bp = 1;
    int bq = 1;
    for (int p = 1; p <= na; ++p)
      for (int q = 1; q <= nb; ++q)
        if (ways[idx(p, q)] > 0 && p + q > bp + bq) bp = p, bq = q;
    for (std::pair<int, int> c{bp, bq}; c.first != 0; c = parent[idx(c.first, c.second)])
      out.pairs.push_back(c);
  } else {
    for (std::pair<int, int> c{na, nb}; c.first != 0; c = parent[idx(c.first, c.second)])
      out.pairs.push_back(c);
  }
  std::reverse(out.pairs.begin(), out.pairs.end());
  return out;
}

bool check_lemma2_6(const Word& v, const Shuffle& s, Letter x, Variant var) {
  Word restricted;
  for (const Letter y : v)
    if (s.less_equal(y, x)) restricted.push_back(y);
  return is_subtableau(insert_word(restricted, s, var, TraceDetail::Lengths).p,
                       insert_word(v, s, var, TraceDetail::Lengths).p);
}

bool check_corollary2_7(const Word& v, const Shuffle& a, const Shuffle& b, Variant var) {
  const auto pair = adjacent_transposition(a, b);
  if (!pair) throw std::invalid_argument("shuffles are not adjacent");
  const Tableau pa = insert_word(v, a, var, TraceDetail::Lengths).p;
  const Tableau pb = insert_word(v, b, var, TraceDetail::Lengths).p;
  auto lower = [&](const Tableau& t, const Shuffle& s) {
    std::map<Cell, Letter> out;
    for (const auto& [cell, label] : classify_regions(t, s, *pair))
      if (label == Region::Lower) out.emplace(cell, t[cell]);
    return out;
  };
  return lower(pa, a) == lower(pb, b);
}

bool check_lemma3_2(const Word& v, const Shuffle& s) {
  std::set<Letter> seen;
  for (const Letter x : v)
    if (x.is_u() && !seen.insert(x).second)
      throw std::invalid_argument("word repeats " + format_letter(x));
  const InsertionResult regular =
      insert_word(v, s, Variant::regular_regular(), TraceDetail::Lengths);
  const InsertionResult dual = insert_word(v, s, Variant::regular_dual(), TraceDetail::Lengths);
  return regular.p == dual.p && regular.q == dual.q;
}

int lemma2_3_violations(const InsertionTrace& trace) {
  int bad = 0;
  for (std::size_t k = 0; k + 1 < trace.steps.size(); ++k) {
    const Step& cur = trace.steps[k];
    const Step& nxt = trace.steps[k + 1];
    if (!cur.bumped || nxt.letter_ordinal != cur.letter_ordinal) continue;
    const Cell from = cur.settled_cell;
    const Cell to = nxt.settled_cell;
    const bool ok = cur.bumped->element.is_t()
                        ? to.row == from.row + 1 && to.col <= from.col
                        : to.col == from.col + 1 && to.row <= from.row;
    bad += !ok;
  }
  return bad;
}

int lemma2_14_violations(const InsertionTrace& trace, const Shuffle& s) {
  int bad = 0;
  for (std::size_t p = 1; p < trace.steps.size(); ++p) {
    const Tableau& before = trace.steps[p - 1].state;
    const Tableau& after = trace.steps[p].state;
    for (const Cell c : before.cells())
      if (!after.contains(c) || !s.less_equal(after[c], before[c])) ++bad;
    for (const Cell c : after.cells())
      if (before.contains(c) && !s.less_equal(after[c], before[c])) ++bad;
  }
  return bad;
}

namespace {

struct Partial {
  std::int64_t cases = 0;
  std::vector<CaseFailure> failures;
  std::map<std::string, std::int64_t> stats;

  void fail(CaseFailure f) { failures.push_back(std::move(f)); }
  void add(const std::string& key, std::int64_t v) { stats[key] += v; }
  void note_max(const std::string& key, std::int64_t v) {
    auto [it, fresh] = stats.try_emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
};

void merge_into(Partial& total, Partial&& part) {
  total.cases += part.cases;
  for (auto& f : part.failures) total.failures.push_back(std::move(f));
  for (const auto& [key, v] : part.stats) {
    if (key.ends_with("_max"))
      total.note_max(key, v);
    else
      total.add(key, v);
  }
}

template <class Fn>
void fan_out(std::size_t count, unsigned threads, Fn&& fn) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
}

std::map<std::string, std::string> grid_params(const Alphabet& alphabet, int n,
                                               const Mode& mode) {
  std::map<std::string, std::string> p{{"k", std::to_string(alphabet.k())},
                                       {"l", std::to_string(alphabet.l())},
                                       {"n", std::to_string(n)}};
  if (mode.kind == Mode::Kind::Exhaustive) {
    p["mode"] = "exhaustive";
  } else {
    p["mode"] = "sample";
    p["samples"] = std::to_string(mode.samples);
    p["seed"] = std::to_string(mode.seed);
  }
  return p;
}

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report finish(std::string name, std::map<std::string, std::string> params, Partial&& total,
              const Stopwatch& clock) {
  Report r;
  r.check_name = std::move(name);
  r.parameters = std::move(params);
  r.cases_run = total.cases;
  r.failures = std::move(total.failures);
  r.stats = std::move(total.stats);
  r.elapsed = clock.elapsed();
  return r;
}

// Runs `per_word` over the word grid and merges the partial results in word
// order.
template <class Fn>
Report run_words(std::string name, std::map<std::string, std::string> params,
                 const Alphabet& alphabet, int n, const Mode& mode, Fn&& per_word) {
  const Stopwatch clock;
  const std::vector<Word> words = words_for(alphabet, n, mode);
  std::vector<Partial> parts(words.size());
  fan_out(words.size(), mode.threads, [&](std::size_t i) { parts[i] = per_word(words[i]); });
  Partial total;
  for (auto& part : parts) merge_into(total, std::move(part));
  return finish(std::move(name), std::move(params), std::move(total), clock);
}

std::string join_shuffles(const Shuffle& a, const Shuffle& b) {
  return format_shuffle(a) + " | " + format_shuffle(b);
}

std::string describe(const InsertionResult& r) {
  return "P=" + format_tableau(r.p) + "Q=" + format_recording(r.q);
}

// Ordered (A, B) with A holding t_i < u_j, for every adjacent pair of shuffles.
struct AdjacentPair {
  Shuffle a;
  Shuffle b;
  Transposition pair;
};

std::vector<AdjacentPair> adjacent_pairs(const Alphabet& alphabet) {
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  std::vector<AdjacentPair> out;
  for (std::size_t i = 0; i < shuffles.size(); ++i)
    for (std::size_t j = i + 1; j < shuffles.size(); ++j)
      if (const auto tr = adjacent_transposition(shuffles[i], shuffles[j])) {
        if (shuffles[i].less(tr->t, tr->u))
          out.push_back({shuffles[i], shuffles[j], *tr});
        else
          out.push_back({shuffles[j], shuffles[i], *tr});
      }
  return out;
}

Report shape_invariance(std::string name, const Alphabet& alphabet, int n, Variant var,
                        const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words(std::move(name), std::move(params), alphabet, n, mode,
                   [&](const Word& v) {
                     Partial part;
                     std::vector<RecordingTableau> qs;
                     qs.reserve(shuffles.size());
                     for (const Shuffle& s : shuffles)
                       qs.push_back(insert_word(v, s, var, TraceDetail::Lengths).q);
                     for (std::size_t i = 0; i < shuffles.size(); ++i)
                       for (std::size_t j = i + 1; j < shuffles.size(); ++j) {
                         ++part.cases;
                         if (qs[i] == qs[j]) continue;
                         part.fail({format_word(v), join_shuffles(shuffles[i], shuffles[j]),
                                    format_variant(var), format_recording(qs[i]),
                                    format_recording(qs[j])});
                       }
                     return part;
                   });
}

}  // namespace

Report check_theorem2(const Alphabet& alphabet, int n, const Mode& mode) {
  return shape_invariance("theorem2", alphabet, n, Variant::regular_regular(), mode);
}

Report check_theorem5(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  return shape_invariance("theorem5", alphabet, n, var, mode);
}

Report check_theorem1(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  const Stopwatch clock;
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  Report words = run_words("theorem1", params, alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const Shuffle& s : shuffles) {
      ++part.cases;
      const InsertionResult r = insert_word(v, s, var, TraceDetail::Lengths);
      Word back;
      try {
        back = reverse_word(r.p, r.q, s, var);
      } catch (const std::exception& e) {
        part.fail({format_word(v), format_shuffle(s), format_variant(var), format_word(v),
                   e.what()});
        continue;
      }
      if (back != v)
        part.fail({format_word(v), format_shuffle(s), format_variant(var), format_word(v),
                   format_word(back)});
    }
    return part;
  });

  Partial total;
  total.cases = words.cases_run;
  total.failures = std::move(words.failures);
  if (mode.kind == Mode::Kind::Exhaustive) {
    for (const Shuffle& s : shuffles)
      for (const Shape& lambda : partitions(n)) {
        const auto syts = standard_tableaux(lambda);
        for (const Tableau& p : enumerate_ssyt(lambda, alphabet, s, var))
          for (const RecordingTableau& q : syts) {
            ++total.cases;
            ++total.stats["pairs"];
            const std::string expected = "P=" + format_tableau(p) + "Q=" + format_recording(q);
            try {
              const InsertionResult r =
                  insert_word(reverse_word(p, q, s, var), s, var, TraceDetail::Lengths);
              if (r.p != p || r.q != q)
                total.fail({"", format_shuffle(s), format_variant(var), expected, describe(r)});
            } catch (const std::exception& e) {
              total.fail({"", format_shuffle(s), format_variant(var), expected, e.what()});
            }
          }
      }
  }
  return finish("theorem1", std::move(params), std::move(total), clock);
}

Report check_lemma2_3(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const bool asserted = var == Variant::regular_regular();
  params["asserted"] = asserted ? "true" : "false";
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words("lemma2.3", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const Shuffle& s : shuffles) {
      ++part.cases;
      const InsertionResult r = insert_word(v, s, var);
      const int bad = lemma2_3_violations(r.trace);
      if (bad == 0) continue;
      part.add("violations", bad);
      if (asserted)
        part.fail({format_word(v), format_shuffle(s), format_variant(var),
                   "monotone insertion path", std::to_string(bad) + " violating steps"});
    }
    return part;
  });
}

Report check_lemma2_14(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const bool asserted = var == Variant::regular_regular();
  params["asserted"] = asserted ? "true" : "false";
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words("lemma2.14", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const Shuffle& s : shuffles) {
      ++part.cases;
      const InsertionResult r = insert_word(v, s, var);
      const int bad = lemma2_14_violations(r.trace, s);
      if (bad == 0) continue;
      part.add("violations", bad);
      if (asserted)
        part.fail({format_word(v), format_shuffle(s), format_variant(var),
                   "cellwise non-increasing states", std::to_string(bad) + " violations"});
    }
    return part;
  });
}

Report check_lemma2_6_grid(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  const std::vector<Letter> letters = alphabet.letters();
  return run_words("lemma2.6", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const Shuffle& s : shuffles)
      for (const Letter x : letters) {
        ++part.cases;
        if (!check_lemma2_6(v, s, x, var))
          part.fail({format_word(v), format_shuffle(s), format_variant(var),
                     "subtableau for threshold " + format_letter(x), "not a subtableau"});
      }
    return part;
  });
}

Report check_corollary2_7_grid(const Alphabet& alphabet, int n, Variant var,
                               const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const std::vector<AdjacentPair> pairs = adjacent_pairs(alphabet);
  return run_words("corollary2.7", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const AdjacentPair& ap : pairs) {
      ++part.cases;
      if (!check_corollary2_7(v, ap.a, ap.b, var))
        part.fail({format_word(v), join_shuffles(ap.a, ap.b), format_variant(var),
                   "identical region 1", "region 1 differs"});
    }
    return part;
  });
}

Report check_lemma3_2_grid(const Alphabet& alphabet, int n, const Mode& mode) {
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words("lemma3.2", grid_params(alphabet, n, mode), alphabet, n, mode,
                   [&](const Word& v) {
                     Partial part;
                     std::set<Letter> us;
                     for (const Letter x : v)
                       if (x.is_u() && !us.insert(x).second) return part;
                     part.add("words", 1);
                     for (const Shuffle& s : shuffles) {
                       ++part.cases;
                       if (!check_lemma3_2(v, s))
                         part.fail({format_word(v), format_shuffle(s), "reg-reg | reg-dual",
                                    "identical (P, Q)", "outputs differ"});
                     }
                     return part;
                   });
}

Report check_lemma2_15(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const bool asserted = var == Variant::regular_regular();
  params["asserted"] = asserted ? "true" : "false";
  const std::vector<AdjacentPair> pairs = adjacent_pairs(alphabet);
  return run_words("lemma2.15", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const AdjacentPair& ap : pairs) {
      ++part.cases;
      const InsertionResult ra = insert_word(v, ap.a, var);
      const InsertionResult rb = insert_word(v, ap.b, var);
      const Alignment al = align_traces(ra.trace, rb.trace, ap.a, ap.b, ap.pair);
      if (!al.complete) {
        part.add("violations", 1);
        if (!asserted) continue;
        const auto last = al.pairs.empty() ? std::pair<int, int>{0, 0} : al.pairs.back();
        part.fail({format_word(v), join_shuffles(ap.a, ap.b), format_variant(var),
                   "alignment to (" + std::to_string(ra.trace.total) + "," +
                       std::to_string(rb.trace.total) + ")",
                   "stuck at (" + std::to_string(last.first) + "," +
                       std::to_string(last.second) + ")"});
        continue;
      }
      part.note_max("witnesses_max", static_cast<std::int64_t>(al.witnesses));
      if (al.witnesses > 1) part.add("ambiguous_alignments", 1);
    }
    return part;
  });
}

Report check_region2_shapes(const Alphabet& alphabet, int n, const Mode& mode) {
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words("region2", grid_params(alphabet, n, mode), alphabet, n, mode,
                   [&](const Word& v) {
                     Partial part;
                     for (const Shuffle& s : shuffles) {
                       const Tableau p =
                           insert_word(v, s, Variant::regular_regular(), TraceDetail::Lengths).p;
                       const auto& order = s.order();
                       for (std::size_t r = 0; r + 1 < order.size(); ++r) {
                         if (order[r].kind == order[r + 1].kind) continue;
                         const Transposition pair = order[r].is_t()
                                                        ? Transposition{order[r], order[r + 1]}
                                                        : Transposition{order[r + 1], order[r]};
                         ++part.cases;
                         if (!region2_shape_ok(p, s, pair))
                           part.fail({format_word(v), format_shuffle(s), "reg-reg",
                                      "region 2 of (" + format_letter(pair.t) + "," +
                                          format_letter(pair.u) + ") well formed",
                                      format_tableau(p)});
                       }
                     }
                     return part;
                   });
}

Report check_lemma3_3(const Alphabet& alphabet, int n, Variant var, const Mode& mode) {
  if (var == Variant::regular_regular())
    throw std::invalid_argument("standardization needs a variant with a dual rule");
  auto params = grid_params(alphabet, n, mode);
  params["variant"] = format_variant(var);
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  return run_words("lemma3.3", std::move(params), alphabet, n, mode, [&](const Word& v) {
    Partial part;
    for (const Shuffle& s : shuffles) {
      if (v.empty()) break;
      ++part.cases;
      // Standardize the t-side first (if dual), then the u-side of the result.
      Word w = v;
      Shuffle derived = s;
      if (var.t_rule == Rule::Dual) {
        Standardization st = standardize_t(w, derived);
        w = std::move(st.w);
        derived = std::move(st.derived_shuffle);
      }
      if (var.u_rule == Rule::Dual) {
        Standardization su = standardize_u(w, derived);
        w = std::move(su.w);
        derived = std::move(su.derived_shuffle);
      }
      const InsertionResult rv = insert_word(v, s, var, TraceDetail::Lengths);
      const InsertionResult rw = insert_word(w, derived, var, TraceDetail::Lengths);
      const Tableau expected = relabel(rv.p, rv.origins, w);
      const std::string shuffles_text = format_shuffle(s) + " -> " + format_shuffle(derived);
      if (rw.p != expected || rw.q != rv.q) {
        part.fail({format_word(v), shuffles_text, format_variant(var),
                   "P_w=" + format_tableau(expected), "P_w=" + format_tableau(rw.p)});
        continue;
      }
      // w has no repeated letters on the dual sides, so the regular rule agrees.
      const InsertionResult rr =
          insert_word(w, derived, Variant::regular_regular(), TraceDetail::Lengths);
      if (rr.p != rw.p || rr.q != rw.q)
        part.fail({format_word(v), shuffles_text, "reg-reg on w",
                   describe(rw), describe(rr)});
    }
    return part;
  });
}

Report check_corollary4(const Alphabet& alphabet, int n) {
  const Stopwatch clock;
  Partial total;
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  const Shuffle base = kl_shuffle(alphabet);
  for (const Shape& lambda : partitions(n)) {
    const Polynomial reference = hook_schur(lambda, alphabet, base);
    for (const auto& [m, c] : reference.terms()) {
      if (c < 0 || m.degree() != n)
        total.fail({"", format_shuffle(base), "reg-reg", "non-negative terms of degree " +
                    std::to_string(n), format_polynomial(reference)});
    }
    for (const Shuffle& s : shuffles) {
      ++total.cases;
      const Polynomial hs = hook_schur(lambda, alphabet, s);
      if (hs != reference)
        total.fail({"shape " + format_shape(lambda), format_shuffle(s), "reg-reg",
                    format_polynomial(reference), format_polynomial(hs)});
    }
  }
  return finish("corollary4", grid_params(alphabet, n, Mode::exhaustive()), std::move(total),
                clock);
}

Report check_counting_identity(const Alphabet& alphabet, int n) {
  const Stopwatch clock;
  Partial total;
  for (const Shuffle& s : all_shuffles(alphabet))
    for (const Variant var : all_variants()) {
      ++total.cases;
      const CountingIdentity id = rsk_counting_identity(alphabet, n, s, var);
      if (!id.equal)
        total.fail({"", format_shuffle(s), format_variant(var), id.rhs.get_str(),
                    id.lhs.get_str()});
    }
  return finish("identity", grid_params(alphabet, n, Mode::exhaustive()), std::move(total),
                clock);
}

namespace {

using TableauSet = std::set<std::vector<std::vector<Letter>>>;

// Images of phi_q in src order; failures are appended to `part`.
std::vector<Tableau> run_phi(const std::vector<Tableau>& src, const TableauSet& dst,
                             const Alphabet& alphabet, const Shuffle& a, const Shuffle& b,
                             const RecordingTableau& q, Variant var, Partial& part) {
  std::vector<Tableau> images;
  images.reserve(src.size());
  TableauSet seen;
  const std::string shuffles = join_shuffles(a, b);
  for (const Tableau& t : src) {
    ++part.cases;
    Tableau image;
    try {
      image = phi(t, q, a, b, var);
    } catch (const std::exception& e) {
      part.fail({"", shuffles, format_variant(var), format_tableau(t), e.what()});
      images.push_back(t);
      continue;
    }
    images.push_back(image);
    if (!dst.contains(image.rows()))
      part.fail({"", shuffles, format_variant(var), "image in the target set",
                 format_tableau(image)});
    if (content_type(image, alphabet) != content_type(t, alphabet))
      part.fail({"", shuffles, format_variant(var), "type preserved",
                 format_tableau(t) + "->" + format_tableau(image)});
    if (!seen.insert(image.rows()).second)
      part.fail({"", shuffles, format_variant(var), "injective",
                 "repeated image " + format_tableau(image)});
  }
  if (src.size() != dst.size())
    part.fail({"", shuffles, format_variant(var), std::to_string(dst.size()) + " targets",
               std::to_string(src.size()) + " sources"});
  return images;
}

TableauSet as_set(const std::vector<Tableau>& ts) {
  TableauSet out;
  for (const Tableau& t : ts) out.insert(t.rows());
  return out;
}

}  // namespace

Report check_theorem3(const Shape& shape, const Alphabet& alphabet, const Shuffle& a,
                      const Shuffle& b, const RecordingTableau& q, Variant var) {
  const Stopwatch clock;
  if (q.shape() != shape || !is_standard(q))
    throw std::invalid_argument("q must be a standard tableau of shape (" +
                                format_shape(shape) + ")");
  if (!(a.alphabet() == alphabet) || !(b.alphabet() == alphabet))
    throw std::invalid_argument("shuffles are over a different alphabet");
  Partial part;
  const std::vector<Tableau> src = enumerate_ssyt(shape, alphabet, a, var);
  run_phi(src, as_set(enumerate_ssyt(shape, alphabet, b, var)), alphabet, a, b, q, var, part);
  std::map<std::string, std::string> params{{"k", std::to_string(alphabet.k())},
                                            {"l", std::to_string(alphabet.l())},
                                            {"shape", format_shape(shape)},
                                            {"a", format_shuffle(a)},
                                            {"b", format_shuffle(b)},
                                            {"q", format_recording(q)},
                                            {"variant", format_variant(var)}};
  return finish("theorem3", std::move(params), std::move(part), clock);
}

Report check_theorem3_all(const Alphabet& alphabet, int n, Variant var) {
  const Stopwatch clock;
  Partial total;
  const std::vector<Shuffle> shuffles = all_shuffles(alphabet);
  for (const Shape& lambda : partitions(n)) {
    const auto syts = standard_tableaux(lambda);
    std::vector<std::vector<Tableau>> sets;
    for (const Shuffle& s : shuffles) sets.push_back(enumerate_ssyt(lambda, alphabet, s, var));
    std::int64_t fewest = -1;
    std::int64_t most = 0;
    for (std::size_t i = 0; i < shuffles.size(); ++i)
      for (std::size_t j = 0; j < shuffles.size(); ++j) {
        if (i == j) continue;
        const TableauSet dst = as_set(sets[j]);
        std::set<std::vector<std::vector<std::vector<Letter>>>> maps;
        for (const RecordingTableau& q : syts) {
          const auto images =
              run_phi(sets[i], dst, alphabet, shuffles[i], shuffles[j], q, var, total);
          std::vector<std::vector<std::vector<Letter>>> key;
          for (const Tableau& t : images) key.push_back(t.rows());
          maps.insert(std::move(key));
        }
        const auto distinct = static_cast<std::int64_t>(maps.size());
        fewest = fewest < 0 ? distinct : std::min(fewest, distinct);
        most = std::max(most, distinct);
      }
    if (fewest >= 0) {
      total.stats["distinct_phi_min(" + format_shape(lambda) + ")"] = fewest;
      total.stats["distinct_phi_max(" + format_shape(lambda) + ")"] = most;
    }
    total.stats["syt(" + format_shape(lambda) + ")"] = static_cast<std::int64_t>(syts.size());
  }
  auto params = grid_params(alphabet, n, Mode::exhaustive());
  params["variant"] = format_variant(var);
  return finish("theorem3", std::move(params), std::move(total), clock);
}

}  // namespace srsk
