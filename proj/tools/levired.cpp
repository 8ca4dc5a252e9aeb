#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "levired/commands.hpp"
#include "levired/errors.hpp"

using namespace levired;

namespace {

struct Flags {
  std::string file;
  std::string type;
  std::string mode;
  std::string weights;
  std::string target;
  std::string I;
  bool I_given = false;
  std::string words;
  std::string w;
  std::uint64_t seed = 1;
  int samples = 0;
  std::size_t max_weyl_size = SchubertOptions{}.max_weyl_size;
  bool json = false;
};

void add_problem_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--file", f.file, "Problem document (key: value lines); flags override its fields");
  sub->add_option("--type", f.type, "Group type, e.g. A5, D5, A2xA2");
  sub->add_option("--mode", f.mode, "Weight coordinates: sl (fundamental) or gl (partitions)");
  sub->add_option("--weights", f.weights, "Factor weights separated by ';', e.g. \"4,2,10;1,0,3\"");
  sub->add_option("--target", f.target, "Target weight");
  sub->add_option("--I", f.I, "Simple roots of the Levi, 1-based, e.g. 1,2,4,5 (empty for none)");
  sub->add_option("--words", f.words, "Weyl words of the factors separated by ';', e.g. \"s3;s3\"");
  sub->add_option("--w", f.w, "Weyl word of the target, e.g. \"s4 s3\"");
  sub->add_option("--seed", f.seed, "Seed for random on-face samples");
  sub->add_option("--samples", f.samples, "Random on-face instances to verify")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-weyl-size", f.max_weyl_size, "Cap on Weyl elements enumerated for Schubert products");
  sub->add_flag("--json", f.json, "Print the report as JSON");
}

ProblemDocument build_document(const Flags& f) {
  ProblemDocument doc;
  if (!f.file.empty()) {
    auto docs = load_documents(f.file);
    if (docs.empty()) throw InputError(f.file + ": no problem document found");
    doc = docs.front();
  }
  if (!f.type.empty()) doc.group = f.type;
  if (!f.mode.empty()) doc.mode = parse_mode(f.mode);
  if (!f.weights.empty()) {
    doc.factors.clear();
    const auto items = split_items(f.weights);
    for (std::size_t i = 0; i < items.size(); ++i) {
      doc.factors.push_back(parse_int_list(items[i], "--weights factor " + std::to_string(i + 1)));
    }
  }
  if (!f.target.empty()) doc.target = parse_int_list(f.target, "--target");
  if (f.I_given) {
    std::vector<int> I;
    if (!f.I.empty()) {
      for (Coord i : parse_int_list(f.I, "--I")) I.push_back(static_cast<int>(i));
    }
    doc.I = I;
  }
  if (!f.words.empty()) doc.words = split_items(f.words);
  if (!f.w.empty()) doc.w = f.w;
  return doc;
}

int emit(const CommandResult& res, bool json) {
  if (json) {
    std::cout << res.report.dump(2) << "\n";
  } else {
    std::cout << render_text(res.report);
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levi reductions of tensor product multiplicities"};
  app.require_subcommand(1);

  Flags flags;
  struct Entry {
    const char* name;
    const char* help;
    CommandResult (*run)(const ProblemDocument&, const CommandOptions&);
  };
  const Entry entries[] = {
      {"mult", "Tensor product multiplicity", cmd_mult},
      {"check-face", "Evaluate the face conditions", cmd_check_face},
      {"reduce", "Restrict a problem to the Levi and compare multiplicities", cmd_reduce},
      {"gen-rules", "One reduction rule per subset of simple roots", cmd_gen_rules},
      {"schubert", "Product of Schubert classes", cmd_schubert},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_problem_flags(sub, flags);
    subs.emplace_back(sub, &e);
  }

  std::string corpus = default_corpus_path();
  std::string filter;
  bool replay_json = false;
  CLI::App* replay = app.add_subcommand("replay-corpus", "Run every bundled worked example");
  replay->add_option("--corpus", corpus, "Fixture file");
  replay->add_option("--filter", filter, "Keep fixtures whose group starts with this prefix");
  replay->add_option("--max-weyl-size", flags.max_weyl_size, "Cap on Weyl elements enumerated");
  replay->add_flag("--json", replay_json, "Print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  CommandOptions opts;
  opts.schubert.max_weyl_size = flags.max_weyl_size;
  opts.seed = flags.seed;
  opts.samples = flags.samples;

  try {
    if (replay->parsed()) return emit(replay_corpus(load_documents(corpus), filter, opts), replay_json);
    for (const auto& [sub, entry] : subs) {
      if (!sub->parsed()) continue;
      flags.I_given = sub->get_option("--I")->count() > 0;
      return emit(entry->run(build_document(flags), opts), flags.json);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
