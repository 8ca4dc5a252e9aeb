#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levired/commands.hpp"
#include "levired/errors.hpp"

namespace py = pybind11;
using namespace levired;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.str())); }

Weight weight(const std::vector<Coord>& coords) { return Weight(IntVec(coords.begin(), coords.end())); }

std::vector<WeylElement> elements(const SystemPtr& sys, const std::vector<std::string>& words) {
  std::vector<WeylElement> out;
  for (const auto& w : words) out.push_back(WeylElement::parse(sys, w));
  return out;
}

using Runner = CommandResult (*)(const ProblemDocument&, const CommandOptions&);

Runner runner(const std::string& name) {
  if (name == "mult") return cmd_mult;
  if (name == "check-face") return cmd_check_face;
  if (name == "reduce") return cmd_reduce;
  if (name == "gen-rules") return cmd_gen_rules;
  if (name == "schubert") return cmd_schubert;
  throw InputError("unknown command '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Levi reductions of tensor product multiplicities";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  m.def(
      "multiplicity",
      [](const std::string& group, const std::vector<std::vector<Coord>>& factors, const std::vector<Coord>& target) {
        MultiplicityProblem prob{RootSystem::build(group), {}, weight(target)};
        for (const auto& f : factors) prob.factors.push_back(weight(f));
        prob.validate();
        Integer v;
        {
          py::gil_scoped_release release;
          v = prob.multiplicity();
        }
        return to_py(v);
      },
      py::arg("group"), py::arg("factors"), py::arg("target"));

  m.def(
      "tensor_decompose",
      [](const std::string& group, const std::vector<Coord>& lam, const std::vector<Coord>& mu) {
        const SystemPtr sys = RootSystem::build(group);
        Character ch;
        {
          py::gil_scoped_release release;
          ch = tensor_decompose(sys, weight(lam), weight(mu));
        }
        py::dict out;
        for (const auto& [nu, c] : ch.entries()) out[py::tuple(py::cast(nu.coords()))] = to_py(c);
        return out;
      },
      py::arg("group"), py::arg("lam"), py::arg("mu"));

  m.def(
      "weyl_dimension",
      [](const std::string& group, const std::vector<Coord>& lam) {
        const SystemPtr sys = RootSystem::build(group);
        return to_py(weyl_dim(*sys, weight(lam)));
      },
      py::arg("group"), py::arg("lam"));

  m.def(
      "schubert_product",
      [](const std::string& group, const std::vector<std::string>& words, std::size_t max_weyl_size) {
        const SystemPtr sys = RootSystem::build(group);
        SchubertOptions opts;
        opts.max_weyl_size = max_weyl_size;
        const SchubertExpr prod = schubert_product(sys, elements(sys, words), opts);
        py::dict out;
        for (const auto& [v, c] : prod.terms()) out[py::str(v.str())] = to_py(numerator(c));
        return out;
      },
      py::arg("group"), py::arg("words"), py::arg("max_weyl_size") = SchubertOptions{}.max_weyl_size);

  m.def(
      "intersection_number",
      [](const std::string& group, const std::vector<std::string>& words, const std::string& w) {
        const SystemPtr sys = RootSystem::build(group);
        return to_py(intersection_number(sys, elements(sys, words), WeylElement::parse(sys, w)));
      },
      py::arg("group"), py::arg("words"), py::arg("w"));

  m.def(
      "gl_to_sl", [](const std::vector<Coord>& glw) { return gl_to_sl(IntVec(glw.begin(), glw.end())).coords(); },
      py::arg("glw"));

  m.def(
      "run_command",
      [](const std::string& name, const std::string& group, const std::string& mode,
         const std::vector<std::vector<Coord>>& factors, const std::optional<std::vector<Coord>>& target,
         const std::optional<std::vector<int>>& I, const std::vector<std::string>& words,
         const std::optional<std::string>& w, std::uint64_t seed, int samples, std::size_t max_weyl_size) {
        ProblemDocument doc;
        doc.group = group;
        doc.mode = parse_mode(mode);
        for (const auto& f : factors) doc.factors.emplace_back(f.begin(), f.end());
        if (target) doc.target = IntVec(target->begin(), target->end());
        doc.I = I;
        doc.words = words;
        doc.w = w;
        CommandOptions opts;
        opts.seed = seed;
        opts.samples = samples;
        opts.schubert.max_weyl_size = max_weyl_size;
        const Runner run = runner(name);
        CommandResult res;
        {
          py::gil_scoped_release release;
          res = run(doc, opts);
        }
        return py::make_tuple(res.report.dump(), res.exit_code);
      },
      py::arg("name"), py::arg("group"), py::arg("mode") = "sl", py::arg("factors") = std::vector<std::vector<Coord>>{},
      py::arg("target") = py::none(), py::arg("I") = py::none(), py::arg("words") = std::vector<std::string>{},
      py::arg("w") = py::none(), py::arg("seed") = 1, py::arg("samples") = 0,
      py::arg("max_weyl_size") = SchubertOptions{}.max_weyl_size);

  m.def(
      "replay_corpus",
      [](const std::string& path, const std::string& filter) {
        const auto docs = load_documents(path);
        CommandResult res;
        {
          py::gil_scoped_release release;
          res = replay_corpus(docs, filter);
        }
        return py::make_tuple(res.report.dump(), res.exit_code);
      },
      py::arg("path"), py::arg("filter") = "");

  m.attr("default_corpus_path") = default_corpus_path();
}
