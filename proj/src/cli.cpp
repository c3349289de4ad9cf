#include "superrsk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "superrsk/bijection.hpp"
#include "superrsk/io.hpp"
#include "superrsk/schur.hpp"
#include "superrsk/verify.hpp"

namespace srsk::cli {

namespace {

using io::json;

// Argument problems detected after CLI11 is done; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int k = 2;
  int l = 2;
  std::string shuffle;
  std::string variant = "reg-reg";
  std::string format = "text";

  std::string word;
  std::string shape;
  int n = 4;
  std::string mode = "exhaustive";
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
  std::string theorem;
  std::string target;
  std::string input;
  std::string p;
  std::string q;
  std::string side = "u";
  bool trace = false;
};

struct Context {
  Alphabet alphabet;
  Shuffle shuffle;
  Variant variant;
  bool json;
};

Context context(const Options& o) {
  const Alphabet alphabet(o.k, o.l);
  Shuffle s = o.shuffle.empty() ? kl_shuffle(alphabet) : parse_shuffle(o.shuffle, alphabet);
  return {alphabet, std::move(s), parse_variant(o.variant), o.format == "json"};
}

Shape parse_shape(const std::string& text) {
  std::vector<int> rows;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) continue;
    std::size_t used = 0;
    const int len = std::stoi(part, &used);
    if (used != part.size()) throw UsageError("bad shape '" + text + "'");
    rows.push_back(len);
  }
  return Shape(std::move(rows));
}

json read_json(const std::string& text_or_path) {
  std::ifstream file(text_or_path);
  if (file) return json::parse(file);
  return json::parse(text_or_path);
}

// (P, Q) from --input (one object with "p" and "q") or from --p and --q.
std::pair<Tableau, RecordingTableau> read_pair(const Options& o, const Alphabet& alphabet) {
  if (!o.input.empty()) {
    const json j = read_json(o.input);
    if (!j.contains("p") || !j.contains("q"))
      throw UsageError("--input needs an object with \"p\" and \"q\"");
    return {io::tableau_from_json(j.at("p"), alphabet), io::recording_from_json(j.at("q"))};
  }
  if (o.p.empty() || o.q.empty()) throw UsageError("give --input or both --p and --q");
  return {io::tableau_from_json(read_json(o.p), alphabet),
          io::recording_from_json(read_json(o.q))};
}

Shuffle target_shuffle(const Options& o, const Alphabet& alphabet) {
  if (o.target.empty()) throw UsageError("--target is required");
  return parse_shuffle(o.target, alphabet);
}

std::string lengths_text(const std::vector<int>& lengths) {
  std::string out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(lengths[i]);
  }
  return out;
}

std::string inline_rows(const Tableau& t) {
  std::string text = format_tableau(t);
  if (!text.empty()) text.pop_back();
  std::replace(text.begin(), text.end(), '\n', '/');
  return text.empty() ? "(empty)" : text;
}

int cmd_insert(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Word v = parse_word(o.word, c.alphabet);
  const InsertionResult r =
      insert_word(v, c.shuffle, c.variant, o.trace ? TraceDetail::Full : TraceDetail::Lengths);
  if (c.json) {
    json j{{"shuffle", io::to_json(c.shuffle)},
           {"variant", format_variant(c.variant)},
           {"word", io::to_json(v)},
           {"p", io::to_json(r.p)},
           {"q", io::to_json(r.q)},
           {"path_lengths", r.trace.path_lengths}};
    if (o.trace) j["trace"] = io::to_json(r.trace);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "P\n" << format_tableau(r.p) << "Q\n" << format_recording(r.q);
  out << "path lengths: " << lengths_text(r.trace.path_lengths) << '\n';
  if (o.trace)
    for (const Step& s : r.trace.steps) {
      out << "step " << s.index << " (v_" << s.letter_ordinal << "): "
          << format_letter(s.element) << " at (" << s.settled_cell.row << ","
          << s.settled_cell.col << ")";
      if (s.bumped) out << ", bumps " << format_action(*s.bumped);
      out << "  " << inline_rows(s.state) << '\n';
    }
  return 0;
}

int cmd_reverse(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const auto [p, q] = read_pair(o, c.alphabet);
  const Word v = reverse_word(p, q, c.shuffle, c.variant);
  if (c.json)
    out << json{{"word", io::to_json(v)}}.dump(2) << '\n';
  else
    out << format_word(v) << '\n';
  return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Shuffle b = target_shuffle(o, c.alphabet);
  const auto [p, q] = read_pair(o, c.alphabet);
  const Tableau image = phi(p, q, c.shuffle, b, c.variant);
  if (c.json)
    out << json{{"p", io::to_json(image)}}.dump(2) << '\n';
  else
    out << format_tableau(image);
  return 0;
}

int cmd_standardize(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Word v = parse_word(o.word, c.alphabet);
  if (o.side != "u" && o.side != "t" && o.side != "both")
    throw UsageError("--side must be u, t or both");
  Word w = v;
  Shuffle s = c.shuffle;
  if (o.side != "u") {
    Standardization st = standardize_t(w, s);
    w = std::move(st.w);
    s = std::move(st.derived_shuffle);
  }
  if (o.side != "t") {
    Standardization su = standardize_u(w, s);
    w = std::move(su.w);
    s = std::move(su.derived_shuffle);
  }
  if (c.json) {
    out << json{{"k", s.alphabet().k()},
                {"l", s.alphabet().l()},
                {"word", io::to_json(w)},
                {"shuffle", io::to_json(s)}}
               .dump(2)
        << '\n';
  } else {
    out << "k=" << s.alphabet().k() << " l=" << s.alphabet().l() << '\n'
        << "word: " << format_word(w) << '\n'
        << "shuffle: " << format_shuffle(s) << '\n';
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Shape shape = parse_shape(o.shape);
  const std::vector<Tableau> all = enumerate_ssyt(shape, c.alphabet, c.shuffle, c.variant);
  if (c.json) {
    json list = json::array();
    for (const Tableau& t : all) list.push_back(io::to_json(t));
    out << json{{"shape", shape.rows()}, {"count", all.size()}, {"tableaux", list}}.dump(2)
        << '\n';
    return 0;
  }
  out << "count: " << all.size() << '\n';
  for (const Tableau& t : all) out << '\n' << format_tableau(t);
  return 0;
}

int cmd_hook_schur(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Polynomial hs = hook_schur(parse_shape(o.shape), c.alphabet, c.shuffle);
  if (c.json)
    out << io::to_json(hs).dump() << '\n';
  else
    out << format_polynomial(hs) << '\n';
  return 0;
}

void absorb(Report& total, Report&& part) {
  total.cases_run += part.cases_run;
  for (CaseFailure& f : part.failures) total.failures.push_back(std::move(f));
  for (const auto& [key, v] : part.stats) {
    auto [it, fresh] = total.stats.try_emplace(key, v);
    if (fresh) continue;
    if (key.ends_with("_max"))
      it->second = std::max(it->second, v);
    else if (key.find("_min") != std::string::npos)
      it->second = std::min(it->second, v);
    else if (key.find('(') == std::string::npos)
      it->second += v;
  }
  total.elapsed += part.elapsed;
}

Report run_verify(const Options& o, const Context& c) {
  Mode mode = Mode::exhaustive();
  if (o.mode == "sample")
    mode = Mode::sample(o.samples, o.seed);
  else if (o.mode != "exhaustive")
    throw UsageError("--mode must be exhaustive or sample");
  mode.threads = std::max(1u, o.threads);
  const Alphabet& a = c.alphabet;
  const Variant var = c.variant;

  using Check = std::function<Report(int)>;
  const std::map<std::string, Check> checks{
      {"2", [&](int n) { return check_theorem2(a, n, mode); }},
      {"5", [&](int n) { return check_theorem5(a, n, var, mode); }},
      {"theorem1", [&](int n) { return check_theorem1(a, n, var, mode); }},
      {"lemma2.3", [&](int n) { return check_lemma2_3(a, n, var, mode); }},
      {"lemma2.6", [&](int n) { return check_lemma2_6_grid(a, n, var, mode); }},
      {"lemma2.14", [&](int n) { return check_lemma2_14(a, n, var, mode); }},
      {"lemma2.15", [&](int n) { return check_lemma2_15(a, n, var, mode); }},
      {"cor2.7", [&](int n) { return check_corollary2_7_grid(a, n, var, mode); }},
      {"lemma3.2", [&](int n) { return check_lemma3_2_grid(a, n, mode); }},
      {"lemma3.3", [&](int n) { return check_lemma3_3(a, n, var, mode); }},
      {"region2", [&](int n) { return check_region2_shapes(a, n, mode); }},
      {"cor4", [&](int n) { return check_corollary4(a, n); }},
      {"identity", [&](int n) { return check_counting_identity(a, n); }},
      {"theorem3", [&](int n) { return check_theorem3_all(a, n, var); }},
  };

  if (o.theorem == "theorem3" && !o.shape.empty()) {
    const Shape shape = parse_shape(o.shape);
    const RecordingTableau q = o.q.empty() ? standard_tableaux(shape).front()
                                           : io::recording_from_json(read_json(o.q));
    return check_theorem3(shape, a, c.shuffle, target_shuffle(o, a), q, var);
  }
  const auto it = checks.find(o.theorem);
  if (it == checks.end()) throw UsageError("unknown --theorem '" + o.theorem + "'");
  if (o.n < 0) throw UsageError("--n must be non-negative");

  // --n is an upper bound: every word length 0..n is covered.
  Report total = it->second(0);
  for (int n = 1; n <= o.n; ++n) absorb(total, it->second(n));
  total.parameters["n"] = std::to_string(o.n);
  return total;
}

void write_report_text(const Report& r, std::ostream& out) {
  out << "check: " << r.check_name << '\n';
  out << "params:";
  for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
  out << "\ncases: " << r.cases_run << "\nfailures: " << r.failures.size() << '\n';
  for (const auto& [k, v] : r.stats) out << "stat " << k << ": " << v << '\n';
  for (const CaseFailure& f : r.failures) {
    out << "FAIL word=" << f.word << " shuffles=" << f.shuffles << " variant=" << f.variant
        << "\n  expected: " << f.expected << "\n  actual:   " << f.actual << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Report r = run_verify(o, c);
  std::ostringstream text;
  if (c.json)
    text << io::to_json(r).dump(2) << '\n';
  else
    write_report_text(r, text);
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!file) throw UsageError("cannot write " + o.out);
    file << text.str();
  }
  return r.passed() ? 0 : 1;
}

int cmd_trace(const Options& o, std::ostream& out) {
  const Context c = context(o);
  const Shuffle b = target_shuffle(o, c.alphabet);
  const auto pair = adjacent_transposition(c.shuffle, b);
  if (!pair) throw UsageError("--shuffle and --target must be adjacent shuffles");
  const Word v = parse_word(o.word, c.alphabet);
  const InsertionResult ra = insert_word(v, c.shuffle, c.variant);
  const InsertionResult rb = insert_word(v, b, c.variant);
  const Alignment al = align_traces(ra.trace, rb.trace, c.shuffle, b, *pair);

  if (c.json) {
    json matched = json::array();
    for (const auto& [p, q] : al.pairs)
      matched.push_back(
          {{"a", p},
           {"b", q},
           {"equivalent", sim_equivalent(trace_state(ra.trace, p), trace_state(rb.trace, q),
                                         c.shuffle, b, *pair)}});
    out << json{{"word", io::to_json(v)},
                {"a", {{"shuffle", io::to_json(c.shuffle)}, {"trace", io::to_json(ra.trace)}}},
                {"b", {{"shuffle", io::to_json(b)}, {"trace", io::to_json(rb.trace)}}},
                {"pair", {io::to_json(pair->t), io::to_json(pair->u)}},
                {"alignment", matched},
                {"complete", al.complete},
                {"witnesses", al.witnesses}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "A: " << format_shuffle(c.shuffle) << "  path lengths "
      << lengths_text(ra.trace.path_lengths) << "  s=" << ra.trace.total << '\n';
  out << "B: " << format_shuffle(b) << "  path lengths " << lengths_text(rb.trace.path_lengths)
      << "  s=" << rb.trace.total << '\n';
  out << "pair: (" << format_letter(pair->t) << "," << format_letter(pair->u) << ")\n";
  for (const auto& [p, q] : al.pairs) {
    const bool eq = sim_equivalent(trace_state(ra.trace, p), trace_state(rb.trace, q),
                                   c.shuffle, b, *pair);
    out << '(' << p << ',' << q << ") " << (eq ? "~" : "not ~") << "  A: "
        << inline_rows(state_after(ra.trace, p)) << "  B: "
        << inline_rows(state_after(rb.trace, q)) << '\n';
  }
  out << "alignment: " << (al.complete ? "complete" : "incomplete") << ", witnesses "
      << al.witnesses << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Shuffle-parameterized super-RSK insertion", "superrsk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--k", o.k, "number of t-letters")->capture_default_str();
  app.add_option("--l", o.l, "number of u-letters")->capture_default_str();
  app.add_option("--shuffle", o.shuffle, "order such as \"t1<u1<t2<u2\" (default t's first)");
  app.add_option("--variant", o.variant, "reg-reg, reg-dual, dual-reg or dual-dual")
      ->capture_default_str();
  app.add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  using Handler = int (*)(const Options&, std::ostream&);
  Handler handler = nullptr;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&handler, h] { handler = h; });
    return s;
  };

  CLI::App* insert = sub("insert", "insert a word, print P, Q and path lengths", cmd_insert);
  insert->add_option("--word", o.word, "comma separated letters")->required();
  insert->add_flag("--trace", o.trace, "also print every step");

  CLI::App* reverse = sub("reverse", "recover the word of a (P, Q) pair", cmd_reverse);
  CLI::App* phi_cmd = sub("phi", "map P from --shuffle to --target through Q", cmd_phi);
  for (CLI::App* s : {reverse, phi_cmd}) {
    s->add_option("--input", o.input, "JSON object {\"p\":..., \"q\":...} or a file");
    s->add_option("--p", o.p, "insertion tableau as JSON (or a file)");
    s->add_option("--q", o.q, "recording tableau as JSON (or a file)");
  }
  phi_cmd->add_option("--target", o.target, "the second shuffle")->required();

  CLI::App* standardize =
      sub("standardize", "relabel repeated letters and derive the shuffle", cmd_standardize);
  standardize->add_option("--word", o.word)->required();
  standardize->add_option("--side", o.side, "u, t or both")->capture_default_str();

  CLI::App* enumerate = sub("enumerate", "list the valid tableaux of a shape", cmd_enumerate);
  CLI::App* hs = sub("hook-schur", "the hook Schur polynomial of a shape", cmd_hook_schur);
  for (CLI::App* s : {enumerate, hs}) s->add_option("--shape", o.shape, "e.g. 3,1")->required();

  CLI::App* verify = sub("verify", "run a property check and print a report", cmd_verify);
  verify->add_option("--theorem", o.theorem,
                     "2, 5, theorem1, theorem3, cor4, cor2.7, identity, lemma2.3, lemma2.6, "
                     "lemma2.14, lemma2.15, lemma3.2, lemma3.3 or region2")
      ->required();
  verify->add_option("--n", o.n, "largest word length (or n for shapes)")
      ->capture_default_str();
  verify->add_option("--mode", o.mode, "exhaustive or sample")->capture_default_str();
  verify->add_option("--samples", o.samples, "words per length in sample mode")
      ->capture_default_str();
  verify->add_option("--seed", o.seed)->capture_default_str();
  verify->add_option("--threads", o.threads)->capture_default_str();
  verify->add_option("--out", o.out, "write the report here instead of stdout");
  verify->add_option("--shape", o.shape, "theorem3: a single shape");
  verify->add_option("--target", o.target, "theorem3: the second shuffle");
  verify->add_option("--q", o.q, "theorem3: recording tableau JSON");

  CLI::App* trace = sub("trace", "align the traces of two adjacent shuffles", cmd_trace);
  trace->add_option("--word", o.word)->required();
  trace->add_option("--target", o.target, "the adjacent shuffle")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return handler(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range from the library: bad input values.
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: bad JSON: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace srsk::cli
