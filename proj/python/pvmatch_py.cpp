// Python bindings. Strings cross the boundary as UTF-8; reports as JSON text
// that the package wrapper turns into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pvmatch/edit.hpp"
#include "pvmatch/errors.hpp"
#include "pvmatch/hardness.hpp"
#include "pvmatch/median.hpp"
#include "pvmatch/pattern.hpp"
#include "pvmatch/report.hpp"

namespace py = pybind11;

namespace {

pvm::MatchRequest request(std::string pattern, std::string word, std::optional<std::size_t> delta,
                          const std::string& algo) {
  pvm::MatchRequest r;
  r.pattern_text = std::move(pattern);
  r.word_text = std::move(word);
  r.delta = delta;
  r.algo = pvm::parse_algo(algo);
  return r;
}

std::vector<pvm::Word> encode_all(const std::vector<std::string>& strings, pvm::Alphabet& a) {
  std::vector<pvm::Word> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.push_back(pvm::encode(s, a));
  return out;
}

}  // namespace

PYBIND11_MODULE(_pvmatch, m) {
  m.doc() = "Pattern matching with variables under edit distance";

  py::register_exception<pvm::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pvm::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<pvm::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def(
      "min_json",
      [](std::string pattern, std::string word, std::optional<std::size_t> delta, const std::string& algo) {
        py::gil_scoped_release release;
        return pvm::to_json(pvm::run_min(request(std::move(pattern), std::move(word), delta, algo))).dump();
      },
      py::arg("pattern"), py::arg("word"), py::arg("delta") = py::none(), py::arg("algo") = "auto");

  m.def(
      "match_json",
      [](std::string pattern, std::string word, std::size_t delta, const std::string& algo) {
        py::gil_scoped_release release;
        return pvm::to_json(pvm::run_match(request(std::move(pattern), std::move(word), delta, algo))).dump();
      },
      py::arg("pattern"), py::arg("word"), py::arg("delta"), py::arg("algo") = "auto");

  m.def(
      "classify",
      [](const std::string& pattern) {
        pvm::Alphabet a;
        return std::string(pvm::to_string(pvm::classify(pvm::parse_pattern(pattern, a))));
      },
      py::arg("pattern"));

  m.def(
      "edit_distance",
      [](const std::string& x, const std::string& y) {
        pvm::Alphabet a;
        return pvm::edit_distance(pvm::encode(x, a), pvm::encode(y, a));
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "median",
      [](const std::vector<std::string>& strings) {
        pvm::Alphabet a;
        const auto words = encode_all(strings, a);
        const pvm::MedianResult r = pvm::median(words);
        return py::make_tuple(pvm::decode(r.median, a), r.cost);
      },
      py::arg("strings"), "Median string and its total distance.");

  m.def(
      "lemma_check",
      [](std::size_t S, std::size_t g, std::size_t l, bool trailing) {
        const auto r =
            pvm::lemma1_check(S, g, l, trailing ? pvm::GadgetSide::kTrailing : pvm::GadgetSide::kLeading);
        return py::make_tuple(r.dp_value, r.formula_value, r.agree);
      },
      py::arg("S"), py::arg("g"), py::arg("l"), py::arg("trailing") = false,
      "Separator gadget distance: (dp value, closed form, agree).");

  m.def(
      "gen_hardness",
      [](const std::vector<std::string>& strings, std::size_t delta, std::optional<std::size_t> s_override) {
        pvm::ReductionParams p{strings, delta, s_override};
        const pvm::ReductionInstance inst = pvm::gen_instance(p);
        py::dict d;
        d["pattern"] = pvm::to_string(inst.pattern, inst.alphabet);
        d["word"] = pvm::decode(inst.word, inst.alphabet);
        d["delta"] = inst.delta;
        d["S"] = inst.separator;
        d["structural_only"] = inst.structural_only;
        return d;
      },
      py::arg("strings"), py::arg("delta"), py::arg("s_override") = py::none());
}
