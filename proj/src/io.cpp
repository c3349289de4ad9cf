#include "superrsk/io.hpp"

#include <limits>
#include <stdexcept>

namespace srsk::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing \"") + key + "\"");
  return j.at(key);
}

const json& array_of(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  return j;
}

Letter letter_from_json(const json& j, const Alphabet& alphabet) {
  if (!j.is_string()) throw std::invalid_argument("letters are strings like \"t1\"");
  return parse_letter(j.get<std::string>(), alphabet);
}

json coeff_to_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

mpz_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class c;
    if (c.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad coefficient " + j.get<std::string>());
    return c;
  }
  throw std::invalid_argument("coefficients are integers");
}

std::vector<int> exponents(const json& j) {
  std::vector<int> out;
  for (const json& e : array_of(j, "exponents")) {
    if (!e.is_number_integer() || e.get<int>() < 0)
      throw std::invalid_argument("exponents are non-negative integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

json to_json(Letter x) { return format_letter(x); }

json to_json(const Shuffle& s) {
  json out = json::array();
  for (const Letter x : s.order()) out.push_back(format_letter(x));
  return out;
}

json to_json(const Word& v) {
  json out = json::array();
  for (const Letter x : v) out.push_back(format_letter(x));
  return out;
}

json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(to_json(row));
  return {{"rows", rows}};
}

json to_json(const RecordingTableau& q) { return {{"rows", q.rows()}}; }

json to_json(const PendingAction& a) {
  return {{"letter", format_letter(a.element)},
          {"axis", a.axis == Axis::Rows ? "row" : "column"},
          {"target", a.target}};
}

json to_json(const Step& s) {
  return {{"index", s.index},
          {"letter", s.letter_ordinal},
          {"element", format_letter(s.element)},
          {"settled_cell", {s.settled_cell.row, s.settled_cell.col}},
          {"bumped", s.bumped ? to_json(*s.bumped) : json(nullptr)},
          {"state", to_json(s.state)}};
}

json to_json(const InsertionTrace& trace) {
  json steps = json::array();
  for (const Step& s : trace.steps) steps.push_back(to_json(s));
  return {{"steps", steps}, {"path_lengths", trace.path_lengths}, {"total", trace.total}};
}

json to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"x", m.x}, {"y", m.y}, {"coeff", coeff_to_json(c)}});
  return out;
}

json to_json(const Report& r) {
  json failures = json::array();
  for (const CaseFailure& f : r.failures)
    failures.push_back({{"word", f.word},
                        {"shuffles", f.shuffles},
                        {"variant", f.variant},
                        {"expected", f.expected},
                        {"actual", f.actual}});
  return {{"check", r.check_name},
          {"params", r.parameters},
          {"cases", r.cases_run},
          {"failures", failures},
          {"stats", r.stats},
          {"passed", r.passed()},
          {"elapsed_ms", r.elapsed.count()}};
}

Shuffle shuffle_from_json(const json& j, const Alphabet& alphabet) {
  std::vector<Letter> order;
  for (const json& x : array_of(j, "shuffle")) order.push_back(letter_from_json(x, alphabet));
  return Shuffle(alphabet, std::move(order));
}

Word word_from_json(const json& j, const Alphabet& alphabet) {
  if (j.is_string()) return parse_word(j.get<std::string>(), alphabet);
  Word out;
  for (const json& x : array_of(j, "word")) out.push_back(letter_from_json(x, alphabet));
  return out;
}

Tableau tableau_from_json(const json& j, const Alphabet& alphabet) {
  std::vector<std::vector<Letter>> rows;
  for (const json& row : array_of(field(j, "rows"), "rows")) {
    auto& out = rows.emplace_back();
    for (const json& x : array_of(row, "row")) out.push_back(letter_from_json(x, alphabet));
  }
  return Tableau(std::move(rows));
}

RecordingTableau recording_from_json(const json& j) {
  std::vector<std::vector<int>> rows;
  for (const json& row : array_of(field(j, "rows"), "rows")) {
    auto& out = rows.emplace_back();
    for (const json& x : array_of(row, "row")) {
      if (!x.is_number_integer()) throw std::invalid_argument("labels are integers");
      out.push_back(x.get<int>());
    }
  }
  return RecordingTableau(std::move(rows));
}

Polynomial polynomial_from_json(const json& j) {
  Polynomial out;
  std::size_t k = 0;
  std::size_t l = 0;
  bool first = true;
  for (const json& term : array_of(j, "polynomial")) {
    Monomial m(exponents(field(term, "x")), exponents(field(term, "y")));
    if (first) {
      k = m.x.size();
      l = m.y.size();
      first = false;
    } else if (m.x.size() != k || m.y.size() != l) {
      throw std::invalid_argument("terms disagree on the number of variables");
    }
    out.add_term(m, coeff_from_json(field(term, "coeff")));
  }
  return out;
}

}  // namespace srsk::io
