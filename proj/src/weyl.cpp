#include "levired/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_set>

#include "levired/errors.hpp"

namespace levired {

namespace {

// Reduced word of the element whose rho-image is `image`: repeatedly reflect
// in the first negative coordinate until the image is rho again.
std::vector<int> word_from_image(const RootSystem& sys, IntVec image) {
  std::vector<int> word;
  while (true) {
    int i = 0;
    while (i < sys.rank() && image[i] > 0) ++i;
    if (i == sys.rank()) break;
    if (image[i] == 0) throw InternalError("rho-image lies on a wall");
    sys.reflect_weight(i, image);
    word.push_back(i);
  }
  return word;
}

}  // namespace

WeylElement::WeylElement(SystemPtr sys) : sys_(std::move(sys)), rho_image_(sys_->rho().coords()) {}

WeylElement WeylElement::from_rho_image(SystemPtr sys, IntVec image) {
  WeylElement w;
  w.word_ = word_from_image(*sys, image);
  w.rho_image_ = std::move(image);
  w.sys_ = std::move(sys);
  return w;
}

WeylElement WeylElement::from_word(SystemPtr sys, const std::vector<int>& word) {
  IntVec image = sys->rho().coords();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= sys->rank()) {
      throw InputError("simple reflection s" + std::to_string(*it + 1) + " out of range for " + sys->label());
    }
    sys->reflect_weight(*it, image);
  }
  return from_rho_image(std::move(sys), std::move(image));
}

WeylElement WeylElement::parse(SystemPtr sys, std::string_view text) {
  std::vector<int> word;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*' ||
                                 text[pos] == '.'))
      ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == 'e') {
    std::size_t end = pos + 1;
    while (end < text.size() && std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end == text.size()) return WeylElement(std::move(sys));
  }
  while (pos < text.size()) {
    if (text[pos] != 's') {
      throw InputError("Weyl word '" + std::string(text) + "': expected 's<i>' at position " + std::to_string(pos));
    }
    ++pos;
    if (pos < text.size() && text[pos] == '_') ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw InputError("Weyl word '" + std::string(text) + "': missing index at position " + std::to_string(start));
    }
    const int idx = std::stoi(std::string(text.substr(start, pos - start)));
    if (idx < 1 || idx > sys->rank()) {
      throw InputError("Weyl word '" + std::string(text) + "': s" + std::to_string(idx) + " out of range for " +
                       sys->label() + " at position " + std::to_string(start));
    }
    word.push_back(idx - 1);
    skip();
  }
  return from_word(std::move(sys), word);
}

WeylElement WeylElement::longest(SystemPtr sys) {
  IntVec image = sys->rho().coords();
  for (auto& c : image) c = -c;
  return from_rho_image(std::move(sys), std::move(image));
}

WeylElement WeylElement::reflection(SystemPtr sys, std::size_t root_index) {
  // s_beta(rho) = rho - <rho, beta^vee> beta
  IntVec image = sys->rho().coords();
  const Coord k = sys->coroot_pairing(image, root_index);
  const auto& beta = sys->positive_roots_weight().at(root_index);
  for (std::size_t j = 0; j < image.size(); ++j) image[j] -= k * beta[j];
  return from_rho_image(std::move(sys), std::move(image));
}

void WeylElement::act_in_place(IntVec& mu) const {
  if (mu.size() != static_cast<std::size_t>(sys_->rank())) throw InputError("weight dimension mismatch");
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) sys_->reflect_weight(*it, mu);
}

Weight WeylElement::act(const Weight& mu) const {
  IntVec v = mu.coords();
  act_in_place(v);
  return Weight(std::move(v));
}

IntVec WeylElement::act_on_root(IntVec root_coords) const {
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) sys_->reflect_root(*it, root_coords);
  return root_coords;
}

WeylElement WeylElement::inverse() const {
  std::vector<int> rev(word_.rbegin(), word_.rend());
  return from_word(sys_, rev);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (sys_->key() != o.sys_->key()) throw InputError("Weyl elements from different root systems");
  IntVec image = o.rho_image_;
  act_in_place(image);
  return from_rho_image(sys_, std::move(image));
}

std::string WeylElement::str() const {
  if (word_.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) out += " ";
    out += "s" + std::to_string(word_[k] + 1);
  }
  return out;
}

std::vector<std::size_t> inversion_set(const WeylElement& w) {
  const auto& sys = *w.system();
  std::vector<std::size_t> out;
  const auto& roots = sys.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const IntVec image = w.act_on_root(roots[r]);
    // Roots are either all >= 0 or all <= 0 in the simple-root basis.
    if (std::any_of(image.begin(), image.end(), [](Coord c) { return c < 0; })) out.push_back(r);
  }
  return out;
}

std::vector<IntVec> inversion_roots(const WeylElement& w) {
  std::vector<IntVec> out;
  for (std::size_t r : inversion_set(w)) out.push_back(w.system()->positive_roots()[r]);
  return out;
}

Weight affine_zero_action(const WeylElement& w) {
  const auto& sys = *w.system();
  IntVec sum(sys.rank(), 0);
  for (std::size_t r : inversion_set(w)) {
    const auto& beta = sys.positive_roots()[r];
    for (int j = 0; j < sys.rank(); ++j) sum[j] -= beta[j];
  }
  return sys.from_root_basis(sum);
}

std::vector<std::size_t> levi_positive_roots(const RootSystem& sys, const std::vector<int>& I) {
  std::vector<bool> in(sys.rank(), false);
  for (int i : I) in.at(i) = true;
  std::vector<std::size_t> out;
  const auto& roots = sys.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    bool supported = true;
    for (int j = 0; j < sys.rank(); ++j) {
      if (roots[r][j] != 0 && !in[j]) supported = false;
    }
    if (supported) out.push_back(r);
  }
  return out;
}

bool is_minimal_coset_rep(const WeylElement& w, const std::vector<int>& I) {
  const auto levi = levi_positive_roots(*w.system(), I);
  const auto inv = inversion_set(w);
  for (std::size_t r : inv) {
    if (std::binary_search(levi.begin(), levi.end(), r)) return false;
  }
  return true;
}

std::pair<WeylElement, WeylElement> min_coset_rep(const WeylElement& w, const std::vector<int>& I) {
  const auto& sys = w.system();
  WeylElement current = w;
  std::vector<int> u_word;  // letters of u, left to right
  while (true) {
    bool reduced = false;
    for (int i : I) {
      // l(current s_i) < l(current) iff current(alpha_i) < 0.
      IntVec e(sys->rank(), 0);
      e[i] = 1;
      const IntVec img = current.act_on_root(e);
      if (std::any_of(img.begin(), img.end(), [](Coord c) { return c < 0; })) {
        current = current * WeylElement::from_word(sys, {i});
        u_word.insert(u_word.begin(), i);
        reduced = true;
        break;
      }
    }
    if (!reduced) break;
  }
  WeylElement u = WeylElement::from_word(sys, u_word);
  if (current.length() + u.length() != w.length() || !(current * u == w)) {
    throw InternalError("coset factorisation failed");
  }
  return {current, u};
}

std::vector<WeylElement> enumerate_weyl_group(const SystemPtr& sys, std::size_t cap) {
  const Integer order = sys->weyl_group_order();
  if (order > Integer(cap)) {
    throw ResourceLimit("Weyl group of " + sys->label() + " has order " + order.str() + ", above the cap of " +
                        std::to_string(cap));
  }
  std::vector<IntVec> images{sys->rho().coords()};
  std::unordered_set<IntVec, IntVecHash> seen(images.begin(), images.end());
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (int i = 0; i < sys->rank(); ++i) {
      if (images[k][i] <= 0) continue;
      IntVec next = images[k];
      sys->reflect_weight(i, next);
      if (seen.insert(next).second) images.push_back(std::move(next));
    }
  }
  std::vector<WeylElement> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back(WeylElement::from_rho_image(sys, std::move(img)));
  return out;
}

}  // namespace levired
