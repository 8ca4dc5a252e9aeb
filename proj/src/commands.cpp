#include "levired/commands.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "levired/errors.hpp"

#ifndef LEVIRED_DATA_DIR
#define LEVIRED_DATA_DIR "data"
#endif

namespace levired {

namespace {

using Clock = std::chrono::steady_clock;

Report number(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Report words(const std::vector<WeylElement>& xs) {
  Report out = Report::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

Report one_based(const std::vector<int>& I) {
  Report out = Report::array();
  for (int i : I) out.push_back(i + 1);
  return out;
}

Report root_coords(const RootCoords& c) {
  Report out = Report::array();
  for (const auto& q : c.coords()) {
    if (denominator(q) == 1) {
      out.push_back(number(numerator(q)));
    } else {
      out.push_back(q.str());
    }
  }
  return out;
}

Report header(const std::string& command, const ProblemDocument& doc) {
  Report r;
  r["command"] = command;
  if (!doc.name.empty()) r["name"] = doc.name;
  r["group"] = doc.group;
  r["mode"] = to_string(doc.mode);
  if (doc.has_weights()) {
    Report in;
    in["factors"] = Report::array();
    for (const auto& f : doc.factors) in["factors"].push_back(join(f));
    if (doc.target) in["target"] = join(*doc.target);
    r["input"] = in;
  }
  return r;
}

Report face_json(const FaceDatum& fd) {
  Report f;
  f["I"] = one_based(fd.I);
  f["ws"] = words(fd.ws);
  f["w"] = fd.w.str();
  f["codimension"] = face_codimension(fd);
  return f;
}

Report verdicts_json(const FaceReport& rep) {
  Report v;
  v["cond_i"] = rep.cond_i;
  v["minimal"] = rep.minimal;
  v["cond_ii_length"] = rep.cond_ii_length;
  v["cond_ii_intersection"] = rep.cond_ii_intersection;
  v["intersection"] = number(rep.intersection);
  if (!rep.intersection_note.empty()) v["intersection_note"] = rep.intersection_note;
  v["disjoint_inversions"] = rep.disjoint_inversions;
  v["cond_iii"] = rep.cond_iii;
  v["cond_iii_root_coords"] = root_coords(rep.cond_iii_weight);
  return v;
}

// Runs body, converting library errors into exit codes and stamping timing.
CommandResult guarded(Report report, const std::function<int(Report&)>& body) {
  const auto start = Clock::now();
  CommandResult out;
  try {
    out.exit_code = body(report);
  } catch (const ResourceLimit& e) {
    report["error"] = {{"kind", "resource_limit"}, {"message", e.what()}};
    out.exit_code = kResourceLimit;
  } catch (const PreconditionFailed& e) {
    report["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const InputError& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const InternalError& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    out.exit_code = kMismatch;
  } catch (const std::overflow_error& e) {
    report["error"] = {{"kind", "overflow"}, {"message", e.what()}};
    out.exit_code = kResourceLimit;
  }
  report["status"] = out.exit_code == kOk ? "ok" : out.exit_code == kMismatch ? "mismatch" : "error";
  report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  out.report = std::move(report);
  return out;
}

// Checks the reduction on random on-face instances; returns false on any inequality.
bool sample_check(const FaceDatum& fd, const CommandOptions& opts, Report& out) {
  std::mt19937_64 rng(opts.seed);
  int equal = 0, nonzero = 0;
  for (int s = 0; s < opts.samples; ++s) {
    const auto prob = sample_on_face(fd, rng);
    const VerifyReport v = verify_reduction(fd, prob, opts.schubert);
    equal += v.equal;
    nonzero += v.mult_big != 0;
  }
  out["samples"] = {{"seed", opts.seed}, {"count", opts.samples}, {"equal", equal}, {"nonzero", nonzero}};
  return equal == opts.samples;
}

}  // namespace

CommandResult cmd_mult(const ProblemDocument& doc, const CommandOptions&) {
  return guarded(header("mult", doc), [&](Report& r) -> int {
    const MultiplicityProblem prob = doc.problem();
    const Integer m = prob.multiplicity();
    r["mult_big"] = number(m);
    if (doc.expect_mult) {
      r["expected"] = number(*doc.expect_mult);
      return m == *doc.expect_mult ? kOk : kMismatch;
    }
    return kOk;
  });
}

CommandResult cmd_check_face(const ProblemDocument& doc, const CommandOptions& opts) {
  return guarded(header("check-face", doc), [&](Report& r) -> int {
    const FaceDatum fd = doc.face();
    r["face"] = face_json(fd);
    const FaceReport rep = check_face_conditions(fd, opts.schubert);
    r["verdicts"] = verdicts_json(rep);
    bool ok = rep.all();
    if (doc.has_weights()) {
      const auto prob = doc.problem();
      const SpanCheck span = in_span_I(*fd.system, face_defect(fd, prob), fd.I);
      r["on_face"] = span.in_span;
      r["defect_root_coords"] = root_coords(span.coords);
    }
    if (opts.samples > 0 && rep.theorem_applies()) ok = sample_check(fd, opts, r) && ok;
    return ok ? kOk : kMismatch;
  });
}

CommandResult cmd_reduce(const ProblemDocument& doc, const CommandOptions& opts) {
  return guarded(header("reduce", doc), [&](Report& r) -> int {
    const FaceDatum fd = doc.face();
    const MultiplicityProblem prob = doc.problem();
    r["face"] = face_json(fd);
    const FaceReport rep = check_face_conditions(fd, opts.schubert);
    r["verdicts"] = verdicts_json(rep);
    const bool face_ok = on_face(fd, prob);
    r["on_face"] = face_ok;

    const ReducedProblem small = restrict_problem(fd, prob);
    Report red;
    red["levi"] = small.levi_system->label();
    red["factors"] = Report::array();
    std::vector<std::string> got;
    for (const auto& mu : small.factors) got.push_back(format_by_components(*small.levi_system, mu));
    got.push_back(format_by_components(*small.levi_system, small.target));
    for (std::size_t i = 0; i + 1 < got.size(); ++i) red["factors"].push_back(got[i]);
    red["target"] = got.back();
    std::vector<std::string> got_gl;
    if (doc.mode == Mode::GL) {
      for (std::size_t i = 0; i < fd.ws.size(); ++i) {
        got_gl.push_back(format_blocks(gl_restrict(fd.ws[i], doc.factors[i], fd.I)));
      }
      got_gl.push_back(format_blocks(gl_restrict(fd.w, *doc.target, fd.I)));
      red["gl"] = got_gl;
    }
    r["reduced"] = red;

    bool ok = true;
    Integer big, smallm;
    if (rep.theorem_applies()) {
      const VerifyReport v = verify_reduction(fd, prob, opts.schubert);
      r["relation"] = "=";
      big = v.mult_big;
      smallm = v.mult_small;
      ok = v.equal;
    } else {
      const BoundReport b = reduce_or_bound(fd, prob, opts.schubert);
      r["relation"] = "<=";
      big = b.mult_big;
      smallm = b.mult_small;
      ok = b.bound_holds;
    }
    r["mult_big"] = number(big);
    r["mult_small"] = number(smallm);

    if (doc.expect_mult || !doc.expect_reduced.empty() || !doc.expect_reduced_gl.empty()) {
      Report ex;
      if (doc.expect_mult) {
        ex["mult"] = number(*doc.expect_mult);
        ex["mult_match"] = big == *doc.expect_mult && smallm == *doc.expect_mult;
        ok = ok && ex["mult_match"].get<bool>();
      }
      if (!doc.expect_reduced.empty()) {
        ex["reduced_match"] = doc.expect_reduced == got;
        ok = ok && ex["reduced_match"].get<bool>();
      }
      if (!doc.expect_reduced_gl.empty()) {
        ex["reduced_gl_match"] = doc.expect_reduced_gl == got_gl;
        ok = ok && ex["reduced_gl_match"].get<bool>();
      }
      r["expectations"] = ex;
    }
    return ok ? kOk : kMismatch;
  });
}

CommandResult cmd_gen_rules(const ProblemDocument& doc, const CommandOptions& opts) {
  return guarded(header("gen-rules", doc), [&](Report& r) -> int {
    const SystemPtr sys = doc.system();
    const auto ws = doc.factor_elements();
    const WeylElement w = doc.target_element();
    r["partition"] = {{"ws", words(ws)}, {"w", w.str()}};
    bool ok = true;
    Report rules = Report::array();
    for (const FaceDatum& fd : generate_rules(sys, ws, w)) {
      Report entry = face_json(fd);
      const FaceReport rep = check_face_conditions(fd, opts.schubert);
      entry["verdicts"] = {{"cond_i", rep.cond_i},
                           {"cond_ii_length", rep.cond_ii_length},
                           {"cond_ii_intersection", rep.cond_ii_intersection},
                           {"cond_iii", rep.cond_iii}};
      ok = ok && rep.all();
      if (opts.samples > 0 && rep.theorem_applies()) ok = sample_check(fd, opts, entry) && ok;
      rules.push_back(std::move(entry));
    }
    r["rules"] = std::move(rules);
    r["all_conditions_hold"] = ok;
    return ok ? kOk : kMismatch;
  });
}

CommandResult cmd_schubert(const ProblemDocument& doc, const CommandOptions& opts) {
  return guarded(header("schubert", doc), [&](Report& r) -> int {
    const SystemPtr sys = doc.system();
    const auto ws = doc.factor_elements();
    r["factors"] = words(ws);
    const SchubertExpr prod = schubert_product(sys, ws, opts.schubert);
    r["product"] = prod.str();
    Report terms = Report::array();
    for (const auto& [v, c] : prod.terms()) {
      terms.push_back({{"class", v.str()}, {"coefficient", number(numerator(c))}});
    }
    r["terms"] = std::move(terms);
    if (doc.w) {
      const IntersectionResult ir = intersection(sys, ws, doc.target_element(), opts.schubert);
      r["intersection"] = number(ir.value);
      if (!ir.note.empty()) r["intersection_note"] = ir.note;
    }
    return kOk;
  });
}

CommandResult replay_corpus(const std::vector<ProblemDocument>& corpus, const std::string& filter,
                            const CommandOptions& opts) {
  Report head;
  head["command"] = "replay-corpus";
  head["filter"] = filter;
  return guarded(head, [&](Report& r) -> int {
    Report entries = Report::array();
    int selected = 0, passed = 0;
    Report mults = Report::array();
    for (const auto& doc : corpus) {
      if (doc.group.rfind(filter, 0) != 0) continue;
      ++selected;
      const CommandResult res = cmd_reduce(doc, opts);
      Report e;
      e["name"] = doc.name;
      e["group"] = doc.group;
      e["mode"] = to_string(doc.mode);
      if (doc.expect_mult) e["expected"] = number(*doc.expect_mult);
      if (res.report.contains("mult_big")) {
        e["mult_big"] = res.report["mult_big"];
        e["mult_small"] = res.report["mult_small"];
        mults.push_back(res.report["mult_big"]);
      }
      if (res.report.contains("error")) e["error"] = res.report["error"];
      e["status"] = res.report["status"];
      e["elapsed_ms"] = res.report["elapsed_ms"];
      passed += res.exit_code == kOk;
      entries.push_back(std::move(e));
    }
    r["fixtures"] = std::move(entries);
    r["selected"] = selected;
    r["passed"] = passed;
    r["multiplicities"] = std::move(mults);
    if (selected == 0) {
      r["summary"] = "no fixtures selected";
      return kInputError;
    }
    r["summary"] = std::to_string(passed) + "/" + std::to_string(selected);
    return passed == selected ? kOk : kMismatch;
  });
}

namespace {

void render(const Report& j, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Report& v = it.value();
    const bool nested_list = v.is_array() && !v.empty() && v.front().is_object();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, indent + 2, out);
    } else if (nested_list) {
      out << pad << it.key() << ":\n";
      for (const auto& item : v) {
        out << pad << "  -\n";
        render(item, indent + 4, out);
      }
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

std::string default_corpus_path() { return std::string(LEVIRED_DATA_DIR) + "/corpus.txt"; }

}  // namespace levired
