#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "superrsk/bijection.hpp"
#include "superrsk/cli.hpp"
#include "superrsk/insertion.hpp"
#include "superrsk/schur.hpp"

namespace py = pybind11;
using namespace srsk;

namespace {

using Rows = std::vector<std::vector<std::string>>;
using IntRows = std::vector<std::vector<int>>;

Shuffle shuffle_arg(const Alphabet& a, const std::string& text) {
  return text.empty() || text == "kl" ? kl_shuffle(a) : parse_shuffle(text, a);
}

Rows rows_of(const Tableau& t) {
  Rows out;
  for (const auto& row : t.rows()) {
    auto& r = out.emplace_back();
    for (const Letter x : row) r.push_back(format_letter(x));
  }
  return out;
}

Tableau tableau_of(const Rows& rows, const Alphabet& a) {
  std::vector<std::vector<Letter>> out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& x : row) r.push_back(parse_letter(x, a));
  }
  return Tableau(std::move(out));
}

py::dict insert(const std::string& word, int k, int l, const std::string& shuffle,
                const std::string& variant) {
  const Alphabet a(k, l);
  const InsertionResult r =
      insert_word(parse_word(word, a), shuffle_arg(a, shuffle), parse_variant(variant));
  py::dict d;
  d["p"] = rows_of(r.p);
  d["q"] = r.q.rows();
  d["path_lengths"] = r.trace.path_lengths;
  return d;
}

std::string reverse(const Rows& p, const IntRows& q, int k, int l, const std::string& shuffle,
                    const std::string& variant) {
  const Alphabet a(k, l);
  return format_word(reverse_word(tableau_of(p, a), RecordingTableau(q), shuffle_arg(a, shuffle),
                                  parse_variant(variant)));
}

Rows phi_map(const Rows& p, const IntRows& q, const std::string& target, int k, int l,
             const std::string& shuffle, const std::string& variant) {
  const Alphabet a(k, l);
  return rows_of(phi(tableau_of(p, a), RecordingTableau(q), shuffle_arg(a, shuffle),
                     parse_shuffle(target, a), parse_variant(variant)));
}

py::dict standardize(const std::string& word, int k, int l, const std::string& shuffle,
                     const std::string& side) {
  const Alphabet a(k, l);
  const Word v = parse_word(word, a);
  const Shuffle s = shuffle_arg(a, shuffle);
  const Standardization st = [&] {
    if (side == "u") return standardize_u(v, s);
    if (side == "t") return standardize_t(v, s);
    if (side != "both") throw std::invalid_argument("side must be u, t or both");
    const Standardization first = standardize_t(v, s);
    return standardize_u(first.w, first.derived_shuffle);
  }();
  py::dict d;
  d["k"] = st.alphabet.k();
  d["l"] = st.alphabet.l();
  d["word"] = format_word(st.w);
  d["shuffle"] = format_shuffle(st.derived_shuffle);
  return d;
}

std::vector<Rows> enumerate(const std::vector<int>& shape, int k, int l,
                            const std::string& shuffle, const std::string& variant) {
  const Alphabet a(k, l);
  std::vector<Rows> out;
  for (const Tableau& t :
       enumerate_ssyt(Shape(shape), a, shuffle_arg(a, shuffle), parse_variant(variant)))
    out.push_back(rows_of(t));
  return out;
}

std::string hook_schur_text(const std::vector<int>& shape, int k, int l,
                            const std::string& shuffle) {
  const Alphabet a(k, l);
  return format_polynomial(hook_schur(Shape(shape), a, shuffle_arg(a, shuffle)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = cli::run(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shuffle-parameterized super-RSK insertion";

  m.def("insert", &insert, py::arg("word"), py::arg("k") = 2, py::arg("l") = 2,
        py::arg("shuffle") = "kl", py::arg("variant") = "reg-reg",
        "Insert a comma-separated word; returns P, Q and the path lengths.");
  m.def("reverse", &reverse, py::arg("p"), py::arg("q"), py::arg("k") = 2, py::arg("l") = 2,
        py::arg("shuffle") = "kl", py::arg("variant") = "reg-reg");
  m.def("phi", &phi_map, py::arg("p"), py::arg("q"), py::arg("target"), py::arg("k") = 2,
        py::arg("l") = 2, py::arg("shuffle") = "kl", py::arg("variant") = "reg-reg");
  m.def("standardize", &standardize, py::arg("word"), py::arg("k") = 2, py::arg("l") = 2,
        py::arg("shuffle") = "kl", py::arg("side") = "u");
  m.def("enumerate", &enumerate, py::arg("shape"), py::arg("k") = 2, py::arg("l") = 2,
        py::arg("shuffle") = "kl", py::arg("variant") = "reg-reg");
  m.def("hook_schur", &hook_schur_text, py::arg("shape"), py::arg("k") = 2, py::arg("l") = 2,
        py::arg("shuffle") = "kl");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line tool in-process; returns (exit code, stdout, stderr).");
}
