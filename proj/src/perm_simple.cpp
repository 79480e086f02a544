#include "braids/perm_simple.hpp"

#include <algorithm>
#include <numeric>

namespace braids {

PermSimple::PermSimple(int n) : n_(n) {
  if (n < 2) throw index_error("strand count must be at least 2");
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 1);
}

PermSimple PermSimple::delta(int n) {
  PermSimple s(n);
  for (int i = 1; i <= n; ++i) s.img_[static_cast<size_t>(i - 1)] = n + 1 - i;
  return s;
}

PermSimple PermSimple::artin(int n, int i) {
  if (i < 1 || i > n - 1) throw index_error("artin index out of range");
  PermSimple s(n);
  std::swap(s.img_[static_cast<size_t>(i - 1)], s.img_[static_cast<size_t>(i)]);
  return s;
}

PermSimple PermSimple::from_image(std::vector<int> image) {
  PermSimple s(static_cast<int>(image.size()));
  std::vector<bool> seen(image.size(), false);
  for (int v : image) {
    if (v < 1 || v > static_cast<int>(image.size()) || seen[static_cast<size_t>(v - 1)])
      throw index_error("image is not a permutation");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  s.img_ = std::move(image);
  return s;
}

bool PermSimple::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (image(i) != i) return false;
  return true;
}

bool PermSimple::is_delta() const {
  for (int i = 1; i <= n_; ++i)
    if (image(i) != n_ + 1 - i) return false;
  return true;
}

int PermSimple::length() const {
  int inv = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (image(i) > image(j)) ++inv;
  return inv;
}

PermSimple compose(const PermSimple& a, const PermSimple& b) {
  if (a.n_ != b.n_) throw index_error("strand count mismatch");
  PermSimple r(a.n_);
  for (int i = 1; i <= a.n_; ++i)
    r.img_[static_cast<size_t>(i - 1)] = b.image(a.image(i));
  return r;
}

PermSimple PermSimple::inverse_permutation() const {
  PermSimple r(n_);
  for (int i = 1; i <= n_; ++i) r.img_[static_cast<size_t>(image(i) - 1)] = i;
  return r;
}

std::set<int> PermSimple::starting_set() const {
  std::set<int> s;
  for (int i = 1; i < n_; ++i)
    if (image(i) > image(i + 1)) s.insert(i);
  return s;
}

std::set<int> PermSimple::finishing_set() const {
  return inverse_permutation().starting_set();
}

bool PermSimple::left_divides(const PermSimple& t) const {
  // Inversion-set containment characterizes the prefix order on simples.
  if (n_ != t.n_) throw index_error("strand count mismatch");
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (image(i) > image(j) && t.image(i) < t.image(j)) return false;
  return true;
}

PermSimple meet_c(const PermSimple& a, const PermSimple& b) {
  if (a.n_ != b.n_) throw index_error("strand count mismatch");
  int n = a.n_;
  PermSimple g(n);
  int len = 0;
  bool extended = true;
  while (extended) {
    extended = false;
    for (int i = 1; i < n; ++i) {
      PermSimple cand = compose(g, PermSimple::artin(n, i));
      if (cand.length() != len + 1) continue;  // would undo a crossing
      if (cand.left_divides(a) && cand.left_divides(b)) {
        g = cand;
        ++len;
        extended = true;
        break;
      }
    }
  }
  return g;
}

PermSimple PermSimple::complement() const {
  // s . ds = Delta, so ds = s^{-1} Delta.
  return compose(inverse_permutation(), delta(n_));
}

PermSimple left_quotient(const PermSimple& u, const PermSimple& t) {
  return compose(u.inverse_permutation(), t);
}

PermSimple PermSimple::tau() const {
  PermSimple d = delta(n_);
  return compose(compose(d, *this), d);
}

BraidWord PermSimple::to_word() const {
  BraidWord w(n_);
  PermSimple cur = *this;
  while (true) {
    int descent = 0;
    for (int i = 1; i < n_; ++i)
      if (cur.image(i) > cur.image(i + 1)) {
        descent = i;
        break;
      }
    if (descent == 0) break;
    w.letters.push_back(GeneratorToken::artin(descent));
    // cur = sigma_descent . rest; peel the leading letter.
    cur = compose(PermSimple::artin(n_, descent), cur);
  }
  return w;
}

PermSimple PermSimple::from_positive_word(const BraidWord& w) {
  int n = w.n;
  std::vector<std::pair<int, bool>> letters = expand_to_artin_letters(w);
  std::vector<int> pos(static_cast<size_t>(n));  // pos[s-1] = current position
  std::iota(pos.begin(), pos.end(), 1);
  std::vector<int> at(static_cast<size_t>(n));  // at[p-1] = strand at position p
  std::iota(at.begin(), at.end(), 1);
  std::vector<std::vector<bool>> crossed(static_cast<size_t>(n),
                                         std::vector<bool>(static_cast<size_t>(n), false));
  for (auto [i, positive] : letters) {
    if (!positive)
      throw std::invalid_argument("simple_from_word requires a positive word");
    int u = at[static_cast<size_t>(i - 1)];
    int v = at[static_cast<size_t>(i)];
    int lo = std::min(u, v), hi = std::max(u, v);
    if (crossed[static_cast<size_t>(lo - 1)][static_cast<size_t>(hi - 1)])
      throw not_simple_error(lo, hi);
    crossed[static_cast<size_t>(lo - 1)][static_cast<size_t>(hi - 1)] = true;
    std::swap(at[static_cast<size_t>(i - 1)], at[static_cast<size_t>(i)]);
    std::swap(pos[static_cast<size_t>(u - 1)], pos[static_cast<size_t>(v - 1)]);
  }
  PermSimple s(n);
  s.img_ = std::move(pos);
  return s;
}

std::vector<PermSimple> PermSimple::enumerate(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<PermSimple> out;
  do {
    out.push_back(PermSimple::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool left_weighted_c(const PermSimple& s, const PermSimple& t) {
  if (s.n() != t.n()) throw index_error("strand count mismatch");
  std::set<int> f = s.finishing_set();
  for (int i : t.starting_set())
    if (!f.count(i)) return false;
  return true;
}

}  // namespace braids
