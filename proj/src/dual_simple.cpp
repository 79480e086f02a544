#include "braids/dual_simple.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace braids {

namespace {

// Do two ascending vertex sets interleave around the circle?
bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
  // Merge-scan the circle; crossing means the pattern alternates a,b,a,b.
  std::vector<char> owner;
  size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size() || (ia < a.size() && a[ia] < b[ib])) {
      owner.push_back('a');
      ++ia;
    } else {
      owner.push_back('b');
      ++ib;
    }
  }
  int switches = 0;
  for (size_t k = 1; k < owner.size(); ++k)
    if (owner[k] != owner[k - 1]) ++switches;
  // On a circle the sequence wraps; more than 2 runs means interleaving.
  if (owner.front() != owner.back()) ++switches;
  return switches > 2;
}

}  // namespace

DualSimple::DualSimple(int n) : n_(n) {
  if (n < 2) throw index_error("strand count must be at least 2");
  next_.resize(static_cast<size_t>(n));
  std::iota(next_.begin(), next_.end(), 1);
}

DualSimple DualSimple::delta(int n) {
  DualSimple d(n);
  for (int i = 1; i <= n; ++i) d.next_[static_cast<size_t>(i - 1)] = i % n + 1;
  return d;
}

DualSimple DualSimple::atom(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw index_error("band atom punctures out of range");
  DualSimple d(n);
  d.next_[static_cast<size_t>(i - 1)] = j;
  d.next_[static_cast<size_t>(j - 1)] = i;
  return d;
}

DualSimple DualSimple::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  DualSimple d(n);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> sorted;
  for (const std::vector<int>& b : blocks) {
    std::vector<int> v = b;
    std::sort(v.begin(), v.end());
    for (int x : v) {
      if (x < 1 || x > n || seen[static_cast<size_t>(x - 1)])
        throw index_error("blocks must partition {1..n}");
      seen[static_cast<size_t>(x - 1)] = true;
    }
    if (!v.empty()) sorted.push_back(std::move(v));
  }
  for (size_t a = 0; a < sorted.size(); ++a)
    for (size_t b = a + 1; b < sorted.size(); ++b)
      if (blocks_cross(sorted[a], sorted[b]))
        throw index_error("blocks cross in the circular order");
  for (const std::vector<int>& v : sorted)
    for (size_t k = 0; k < v.size(); ++k)
      d.next_[static_cast<size_t>(v[k] - 1)] = v[(k + 1) % v.size()];
  return d;
}

std::optional<DualSimple> DualSimple::from_permutation(int n, std::vector<int> next) {
  if (static_cast<int>(next.size()) != n) return std::nullopt;
  DualSimple d(n);
  d.next_ = std::move(next);
  std::vector<std::vector<int>> polys;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    // i is the minimum of its (unvisited) cycle; a clockwise cycle must walk
    // strictly upward before closing.
    std::vector<int> cycle{i};
    seen[static_cast<size_t>(i - 1)] = true;
    int cur = d.next_[static_cast<size_t>(i - 1)];
    while (cur != i) {
      if (cur < 1 || cur > n || cur < cycle.back()) return std::nullopt;
      if (seen[static_cast<size_t>(cur - 1)]) return std::nullopt;
      seen[static_cast<size_t>(cur - 1)] = true;
      cycle.push_back(cur);
      cur = d.next_[static_cast<size_t>(cur - 1)];
    }
    if (cycle.size() >= 2) polys.push_back(std::move(cycle));
  }
  for (size_t a = 0; a < polys.size(); ++a)
    for (size_t b = a + 1; b < polys.size(); ++b)
      if (blocks_cross(polys[a], polys[b])) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> DualSimple::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int i = 1; i <= n_; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    std::vector<int> cycle;
    int cur = i;
    do {
      seen[static_cast<size_t>(cur - 1)] = true;
      cycle.push_back(cur);
      cur = next(cur);
    } while (cur != i);
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::vector<int>> DualSimple::polygons() const {
  std::vector<std::vector<int>> out;
  for (std::vector<int>& b : blocks())
    if (b.size() >= 2) out.push_back(std::move(b));
  return out;
}

int DualSimple::block_count() const {
  int c = 0;
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int i = 1; i <= n_; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    ++c;
    int cur = i;
    do {
      seen[static_cast<size_t>(cur - 1)] = true;
      cur = next(cur);
    } while (cur != i);
  }
  return c;
}

bool DualSimple::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (next(i) != i) return false;
  return true;
}

bool DualSimple::is_delta() const {
  for (int i = 1; i <= n_; ++i)
    if (next(i) != i % n_ + 1) return false;
  return true;
}

std::optional<DualSimple> mult(const DualSimple& a, const DualSimple& b) {
  if (a.n_ != b.n_) throw index_error("strand count mismatch");
  std::vector<int> next(static_cast<size_t>(a.n_));
  for (int i = 1; i <= a.n_; ++i)
    next[static_cast<size_t>(i - 1)] = b.next(a.next(i));
  std::optional<DualSimple> d = DualSimple::from_permutation(a.n_, std::move(next));
  if (d && d->length() != a.length() + b.length()) return std::nullopt;
  return d;
}

bool DualSimple::left_divides(const DualSimple& d) const {
  if (n_ != d.n_) throw index_error("strand count mismatch");
  // Refinement order: every block sits inside a block of d.
  std::vector<int> id(static_cast<size_t>(n_));
  for (size_t b = 0; const std::vector<int>& blk : d.blocks()) {
    for (int x : blk) id[static_cast<size_t>(x - 1)] = static_cast<int>(b);
    ++b;
  }
  for (int i = 1; i <= n_; ++i)
    if (id[static_cast<size_t>(i - 1)] != id[static_cast<size_t>(next(i) - 1)])
      return false;
  return true;
}

DualSimple meet_d(const DualSimple& a, const DualSimple& b) {
  if (a.n_ != b.n_) throw index_error("strand count mismatch");
  int n = a.n_;
  std::vector<int> ida(static_cast<size_t>(n)), idb(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int m = i;
    for (int cur = a.next(i); cur != i; cur = a.next(cur)) m = std::min(m, cur);
    ida[static_cast<size_t>(i - 1)] = m;
  }
  for (int i = 1; i <= n; ++i) {
    int m = i;
    for (int cur = b.next(i); cur != i; cur = b.next(cur)) m = std::min(m, cur);
    idb[static_cast<size_t>(i - 1)] = m;
  }
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int i = 1; i <= n; ++i)
    groups[{ida[static_cast<size_t>(i - 1)], idb[static_cast<size_t>(i - 1)]}]
        .push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [key, blk] : groups) blocks.push_back(std::move(blk));
  return DualSimple::from_blocks(n, blocks);
}

DualSimple join_d(const DualSimple& a, const DualSimple& b) {
  if (a.n_ != b.n_) throw index_error("strand count mismatch");
  std::vector<std::vector<int>> blocks = a.blocks();
  for (std::vector<int>& blk : b.blocks()) blocks.push_back(std::move(blk));
  // Merge overlapping or crossing blocks until non-crossing and disjoint.
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t x = 0; x < blocks.size() && !merged; ++x)
      for (size_t y = x + 1; y < blocks.size() && !merged; ++y) {
        bool overlap = false;
        for (int v : blocks[y])
          if (std::binary_search(blocks[x].begin(), blocks[x].end(), v)) {
            overlap = true;
            break;
          }
        if (overlap || blocks_cross(blocks[x], blocks[y])) {
          std::vector<int> u;
          std::set_union(blocks[x].begin(), blocks[x].end(), blocks[y].begin(),
                         blocks[y].end(), std::back_inserter(u));
          blocks[x] = std::move(u);
          blocks.erase(blocks.begin() + static_cast<long>(y));
          merged = true;
        }
      }
  }
  return DualSimple::from_blocks(a.n_, blocks);
}

DualSimple complement_d(const DualSimple& s, const DualSimple& d) {
  if (!s.left_divides(d))
    throw index_error("complement_d requires s to divide d");
  std::vector<int> next(static_cast<size_t>(s.n_));
  // u = s^{-1} d: as functions, pi_u = pi_d o pi_s^{-1}.
  std::vector<int> sinv(static_cast<size_t>(s.n_));
  for (int i = 1; i <= s.n_; ++i) sinv[static_cast<size_t>(s.next(i) - 1)] = i;
  for (int i = 1; i <= s.n_; ++i)
    next[static_cast<size_t>(i - 1)] = d.next(sinv[static_cast<size_t>(i - 1)]);
  std::optional<DualSimple> u = DualSimple::from_permutation(s.n_, std::move(next));
  if (!u) throw index_error("complement_d produced a non-simple quotient");
  return *u;
}

DualSimple DualSimple::complement() const {
  // d . u = delta, so u = d^{-1} delta: pi_u = pi_delta o pi_d^{-1}.
  std::vector<int> next(static_cast<size_t>(n_));
  for (int i = 1; i <= n_; ++i)
    next[static_cast<size_t>(this->next(i) - 1)] = i % n_ + 1;
  std::optional<DualSimple> u = from_permutation(n_, std::move(next));
  if (!u) throw index_error("complement produced a non-simple quotient");
  return *u;
}

DualSimple left_quotient(const DualSimple& t, const DualSimple& b) {
  return complement_d(t, b);
}

DualSimple DualSimple::tau(int k) const {
  int n = n_;
  int shift = ((k % n) + n) % n;
  DualSimple d(n);
  for (int i = 1; i <= n; ++i) {
    int from = (i - 1 + shift) % n + 1;
    int to = (next(i) - 1 + shift) % n + 1;
    d.next_[static_cast<size_t>(from - 1)] = to;
  }
  return d;
}

std::vector<std::pair<int, int>> DualSimple::atoms() const {
  // Polygon {i1 < ... < ir} factors as a_{i1,ir} a_{i_{r-1},i_r} ... a_{i2,i3},
  // one of its cyclic edge words.
  std::vector<std::pair<int, int>> out;
  for (const std::vector<int>& poly : polygons()) {
    size_t r = poly.size();
    out.emplace_back(poly[0], poly[r - 1]);
    for (size_t k = r - 1; k >= 2; --k) out.emplace_back(poly[k - 1], poly[k]);
  }
  return out;
}

BraidWord DualSimple::to_word() const {
  BraidWord w(n_);
  for (auto [i, j] : atoms()) w.letters.push_back(GeneratorToken::band(i, j));
  return w;
}

namespace {

void enumerate_nc(int n, int from, std::vector<std::vector<int>>& blocks,
                  std::vector<int>& free_pts, std::vector<DualSimple>& out);

void enumerate_rec(int n, std::vector<std::vector<int>>& blocks,
                   std::vector<int>& free_pts, std::vector<DualSimple>& out) {
  if (free_pts.empty()) {
    out.push_back(DualSimple::from_blocks(n, blocks));
    return;
  }
  enumerate_nc(n, 0, blocks, free_pts, out);
}

// Builds the block containing the least free point by choosing any subset of
// the remaining free points, then recurses; non-crossing is checked at the end.
void enumerate_nc(int n, int /*from*/, std::vector<std::vector<int>>& blocks,
                  std::vector<int>& free_pts, std::vector<DualSimple>& out) {
  int least = free_pts.front();
  std::vector<int> rest(free_pts.begin() + 1, free_pts.end());
  size_t m = rest.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> blk{least}, remaining;
    for (size_t k = 0; k < m; ++k)
      (mask & (1ul << k) ? blk : remaining).push_back(rest[k]);
    bool ok = true;
    for (const std::vector<int>& other : blocks)
      if (blocks_cross(blk, other)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    blocks.push_back(blk);
    std::vector<int> rem = remaining;
    enumerate_rec(n, blocks, rem, out);
    blocks.pop_back();
  }
}

}  // namespace

const std::vector<DualSimple>& DualSimple::enumerate(int n) {
  if (n < 2 || n > 8) throw index_error("dual simple enumeration supports 2 <= n <= 8");
  static std::map<int, std::vector<DualSimple>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<DualSimple> out;
  std::vector<std::vector<int>> blocks;
  std::vector<int> free_pts(static_cast<size_t>(n));
  std::iota(free_pts.begin(), free_pts.end(), 1);
  enumerate_rec(n, blocks, free_pts, out);
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

DualSimple DualSimple::from_atom_word(const BraidWord& w) {
  DualSimple acc(w.n);
  for (const GeneratorToken& t : w.letters) {
    validate_token(t, w.n);
    if (t.power < 1 || (t.kind != GenKind::band && t.kind != GenKind::artin))
      throw index_error("expected a positive word of band atoms");
    int i = t.i;
    int j = t.kind == GenKind::artin ? t.i + 1 : t.j;
    for (long long k = 0; k < t.power; ++k) {
      std::optional<DualSimple> next = mult(acc, DualSimple::atom(w.n, i, j));
      if (!next) throw index_error("atom word is not a dual simple element");
      acc = *next;
    }
  }
  return acc;
}

namespace {

// Closed clockwise arc {a, a+1, ..., b} with wraparound.
bool in_arc(int n, int x, int a, int b) {
  auto norm = [n](int v) { return ((v - 1) % n + n) % n; };
  int len = (norm(b) - norm(a) + n) % n;
  int off = (norm(x) - norm(a) + n) % n;
  return off <= len;
}

}  // namespace

bool obstructs_ordered(int n, std::pair<int, int> kl, std::pair<int, int> ij) {
  auto [k, l] = kl;
  auto [i, j] = ij;
  return in_arc(n, k, j, i - 1) && in_arc(n, l, i, j - 1);
}

bool obstructs(int n, std::pair<int, int> kl, std::pair<int, int> ij) {
  auto [k, l] = kl;
  auto [i, j] = ij;
  return obstructs_ordered(n, {k, l}, {i, j}) ||
         obstructs_ordered(n, {l, k}, {i, j}) ||
         obstructs_ordered(n, {k, l}, {j, i}) ||
         obstructs_ordered(n, {l, k}, {j, i});
}

namespace {

bool polygon_obstructs_pair(int n, const std::vector<int>& p, int i, int j) {
  for (size_t a = 0; a < p.size(); ++a)
    for (size_t b = a + 1; b < p.size(); ++b)
      if (obstructs(n, {p[a], p[b]}, {i, j})) return true;
  return false;
}

bool polygon_obstructs_all(int n, const std::vector<int>& p,
                           const std::vector<int>& q) {
  for (size_t a = 0; a < q.size(); ++a)
    for (size_t b = a + 1; b < q.size(); ++b)
      if (!polygon_obstructs_pair(n, p, q[a], q[b])) return false;
  return true;
}

}  // namespace

bool left_weighted_d(const DualSimple& d, const DualSimple& dp) {
  if (d.n() != dp.n()) throw index_error("strand count mismatch");
  int n = d.n();
  std::vector<std::vector<int>> ps = d.polygons();
  for (const std::vector<int>& q : dp.polygons()) {
    for (size_t a = 0; a < q.size(); ++a)
      for (size_t b = a + 1; b < q.size(); ++b) {
        bool found = false;
        for (const std::vector<int>& p : ps)
          if (polygon_obstructs_pair(n, p, q[a], q[b])) {
            found = true;
            break;
          }
        if (!found) return false;
      }
  }
  return true;
}

bool simply_nested_pair(const DualSimple& d, const DualSimple& dp) {
  if (d.n() != dp.n()) throw index_error("strand count mismatch");
  int n = d.n();
  std::vector<std::vector<int>> ps = d.polygons();
  for (const std::vector<int>& q : dp.polygons()) {
    int count = 0;
    for (const std::vector<int>& p : ps)
      if (polygon_obstructs_all(n, p, q)) ++count;
    if (count != 1) return false;
  }
  return true;
}

}  // namespace braids
