#include "levired/document.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "levired/errors.hpp"

namespace levired {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Integer parse_integer(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin() + (t[0] == '-' ? 1 : 0), t.end(), ::isdigit) || t == "-") {
    throw InputError(what + ": '" + t + "' is not an integer");
  }
  return Integer(t);
}

void require_gl_group(const RootSystem& sys) {
  if (sys.components().size() != 1 || sys.components()[0].type.family != Family::A) {
    throw InputError("GL mode needs a single type A group, got " + sys.label());
  }
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::SL ? "sl" : "gl"; }

Mode parse_mode(const std::string& text) {
  std::string t = trim(text);
  std::transform(t.begin(), t.end(), t.begin(), ::tolower);
  if (t == "sl") return Mode::SL;
  if (t == "gl") return Mode::GL;
  throw InputError("mode must be 'sl' or 'gl', got '" + t + "'");
}

std::vector<std::string> split_items(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

IntVec parse_int_list(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::replace(t.begin(), t.end(), ',', ' ');
  std::stringstream ss(t);
  IntVec out;
  std::string tok;
  while (ss >> tok) {
    const std::string where = what + ", entry " + std::to_string(out.size() + 1);
    const Integer v = parse_integer(tok, where);
    if (v > std::numeric_limits<Coord>::max() / 4 || v < std::numeric_limits<Coord>::min() / 4) {
      throw InputError(where + ": " + tok + " is too large");
    }
    out.push_back(v.convert_to<Coord>());
  }
  if (out.empty()) throw InputError(what + ": empty list");
  return out;
}

Weight gl_to_sl(const IntVec& glw) {
  if (glw.empty()) throw InputError("GL weight must be non-empty");
  IntVec out;
  for (std::size_t i = 1; i < glw.size(); ++i) {
    if (glw[i - 1] < glw[i]) {
      throw InputError("GL weight (" + join(glw) + ") is not weakly decreasing at position " + std::to_string(i + 1));
    }
    out.push_back(glw[i - 1] - glw[i]);
  }
  return Weight(std::move(out));
}

std::vector<IntVec> gl_restrict(const WeylElement& x, const IntVec& glw, const std::vector<int>& I) {
  IntVec v = glw;
  for (int letter : x.word()) std::swap(v[letter], v[letter + 1]);
  std::vector<IntVec> blocks;
  IntVec cur{v[0]};
  for (std::size_t p = 1; p < v.size(); ++p) {
    if (std::binary_search(I.begin(), I.end(), static_cast<int>(p - 1))) {
      cur.push_back(v[p]);
    } else {
      if (cur.size() > 1) blocks.push_back(cur);
      cur = {v[p]};
    }
  }
  if (cur.size() > 1) blocks.push_back(cur);
  return blocks;
}

std::string format_blocks(const std::vector<IntVec>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) out += (b ? "|" : "") + join(blocks[b]);
  return out;
}

SystemPtr ProblemDocument::system() const {
  if (group.empty()) throw InputError("no group type given");
  return RootSystem::build(group);
}

MultiplicityProblem ProblemDocument::problem() const {
  const SystemPtr sys = system();
  if (factors.empty()) throw InputError("no factor weights given");
  if (!target) throw InputError("no target weight given");
  MultiplicityProblem prob{sys, {}, {}};
  const std::size_t n = static_cast<std::size_t>(sys->rank());
  if (mode == Mode::GL) {
    require_gl_group(*sys);
    Coord total = 0;
    auto convert = [&](const IntVec& g, const std::string& what) {
      if (g.size() != n + 1) {
        throw InputError(what + " has " + std::to_string(g.size()) + " entries; GL mode for " + sys->label() +
                         " needs " + std::to_string(n + 1));
      }
      try {
        return gl_to_sl(g);
      } catch (const InputError& e) {
        throw InputError(what + ": " + e.what());
      }
    };
    for (std::size_t i = 0; i < factors.size(); ++i) {
      prob.factors.push_back(convert(factors[i], "factor " + std::to_string(i + 1)));
      total += std::accumulate(factors[i].begin(), factors[i].end(), Coord{0});
    }
    prob.target = convert(*target, "target");
    const Coord tsum = std::accumulate(target->begin(), target->end(), Coord{0});
    if (tsum != total) {
      throw InputError("GL mode needs the target entries to sum to the factor total: " + std::to_string(tsum) +
                       " vs " + std::to_string(total));
    }
  } else {
    for (const auto& f : factors) prob.factors.emplace_back(f);
    prob.target = Weight(*target);
  }
  prob.validate();
  return prob;
}

std::vector<WeylElement> ProblemDocument::factor_elements() const {
  const SystemPtr sys = system();
  std::vector<WeylElement> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    try {
      out.push_back(WeylElement::parse(sys, words[i]));
    } catch (const InputError& e) {
      throw InputError("word " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

WeylElement ProblemDocument::target_element() const {
  if (!w) throw InputError("no target Weyl element given");
  try {
    return WeylElement::parse(system(), *w);
  } catch (const InputError& e) {
    throw InputError(std::string("target word: ") + e.what());
  }
}

FaceDatum ProblemDocument::face() const {
  if (!I) throw InputError("no simple-root set I given");
  std::vector<int> zero_based;
  for (int i : *I) zero_based.push_back(i - 1);
  return FaceDatum::make(system(), zero_based, factor_elements(), target_element());
}

std::vector<ProblemDocument> parse_documents(std::istream& in, const std::string& source) {
  std::vector<ProblemDocument> out;
  ProblemDocument cur;
  bool open = false;
  int line_no = 0;
  auto flush = [&] {
    if (open) out.push_back(std::move(cur));
    cur = ProblemDocument{};
    open = false;
  };
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no);
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line == "---") {
      flush();
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError(where + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    open = true;
    try {
      if (key == "name") {
        cur.name = value;
      } else if (key == "group") {
        cur.group = value;
      } else if (key == "mode") {
        cur.mode = parse_mode(value);
      } else if (key == "factors") {
        cur.factors.clear();
        const auto items = split_items(value);
        for (std::size_t i = 0; i < items.size(); ++i) {
          cur.factors.push_back(parse_int_list(items[i], "factor " + std::to_string(i + 1)));
        }
      } else if (key == "target") {
        cur.target = parse_int_list(value, "target");
      } else if (key == "I") {
        IntVec raw = value.empty() ? IntVec{} : parse_int_list(value, "I");
        cur.I = std::vector<int>(raw.begin(), raw.end());
      } else if (key == "words") {
        cur.words = split_items(value);
      } else if (key == "w") {
        cur.w = value;
      } else if (key == "expect_mult") {
        cur.expect_mult = parse_integer(value, "expect_mult");
      } else if (key == "expect_reduced") {
        cur.expect_reduced = split_items(value);
      } else if (key == "expect_reduced_gl") {
        cur.expect_reduced_gl = split_items(value);
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  flush();
  return out;
}

std::vector<ProblemDocument> load_documents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_documents(in, path);
}

}  // namespace levired
