#ifndef NCTRACE_PARTITIONS_HPP
#define NCTRACE_PARTITIONS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "nctrace/errors.hpp"
#include "nctrace/matrix.hpp"

namespace nctrace {

// Documented enumeration bounds. Bell(13) is already ~27M partitions.
inline constexpr int kMaxPartitionN = 12;
inline constexpr int kMaxPairingN = 14;

/// Partition of the ordered set [n] = {1, ..., n} into disjoint nonempty
/// blocks. Canonical form (each block ascending, blocks ordered by their
/// minimum) makes structural equality semantic equality.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    canonicalize();
  }

  /// All singletons.
  static SetPartition discrete(int n) {
    std::vector<std::vector<int>> b;
    b.reserve(n);
    for (int i = 1; i <= n; ++i) b.push_back({i});
    return SetPartition(n, std::move(b));
  }

  /// One block; the maximal element 1_n of the lattice.
  static SetPartition full(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 1);
    return SetPartition(n, {std::move(b)});
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Index (into blocks()) of the block containing element e (1-based).
  int block_index_of(int e) const {
    for (int b = 0; b < block_count(); ++b)
      if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), e)) return b;
    throw SizeError("block_index_of: element out of range");
  }

  bool is_pairing() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const auto& b) { return b.size() == 2; });
  }

  /// Blocks properly nest: no i < j < k < l with {i,k} and {j,l} separated.
  bool is_noncrossing() const {
    std::vector<int> block_of(n_ + 1), seen(block_count(), 0);
    for (int b = 0; b < block_count(); ++b)
      for (int e : blocks_[b]) block_of[e] = b;
    std::vector<int> stack;
    for (int e = 1; e <= n_; ++e) {
      int b = block_of[e];
      if (seen[b] == 0) stack.push_back(b);
      else if (stack.empty() || stack.back() != b) return false;
      if (++seen[b] == static_cast<int>(blocks_[b].size())) stack.pop_back();
    }
    return true;
  }

  /// Every block is a run of consecutive integers.
  bool is_interval() const {
    for (const auto& b : blocks_)
      if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
  }

  /// Restricted growth string: block id of each element, ids by first
  /// appearance. Used as the canonical ordering key of enumerations.
  std::vector<int> rgs() const {
    std::vector<int> r(n_);
    for (int b = 0; b < block_count(); ++b)
      for (int e : blocks_[b]) r[e - 1] = b;
    return r;
  }

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.rgs() < b.rgs();
  }

 private:
  void canonicalize() {
    if (n_ < 1) throw SizeError("SetPartition: n must be positive");
    std::vector<char> seen(n_ + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw SizeError("SetPartition: empty block");
      std::sort(b.begin(), b.end());
      for (int e : b) {
        if (e < 1 || e > n_) throw SizeError("SetPartition: element out of range");
        if (seen[e]) throw SizeError("SetPartition: blocks not disjoint");
        seen[e] = 1;
        ++covered;
      }
    }
    if (covered != n_) throw SizeError("SetPartition: blocks do not cover [n]");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
  }

  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Least upper bound in the refinement order: connected components of the
/// union of the two block structures.
inline SetPartition join(const SetPartition& p, const SetPartition& q) {
  if (p.n() != q.n()) throw SizeError("join: mismatched ground sets");
  int n = p.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* part : {&p, &q})
    for (const auto& b : part->blocks())
      for (size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  std::vector<std::vector<int>> groups(n + 1);
  for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(n, std::move(blocks));
}

/// Partition all of whose blocks are pairs.
class PairPartition {
 public:
  explicit PairPartition(SetPartition p) : part_(std::move(p)) {
    if (!part_.is_pairing()) throw SizeError("PairPartition: block of size != 2");
  }
  PairPartition(int n, const std::vector<std::pair<int, int>>& pairs)
      : part_(n, to_blocks(pairs)) {
    if (!part_.is_pairing()) throw SizeError("PairPartition: block of size != 2");
  }

  int n() const { return part_.n(); }
  const SetPartition& as_set_partition() const { return part_; }

  /// The other element of e's pair.
  int partner(int e) const {
    const auto& b = part_.blocks()[part_.block_index_of(e)];
    return b[0] == e ? b[1] : b[0];
  }

  /// Pairs (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> ps;
    ps.reserve(part_.blocks().size());
    for (const auto& b : part_.blocks()) ps.emplace_back(b[0], b[1]);
    return ps;
  }

  bool is_noncrossing() const { return part_.is_noncrossing(); }

  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return a.part_ == b.part_;
  }

 private:
  static std::vector<std::vector<int>> to_blocks(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::vector<int>> b;
    b.reserve(pairs.size());
    for (auto [x, y] : pairs) b.push_back({x, y});
    return b;
  }

  SetPartition part_;
};

/// Bijection of [n]; composition convention (s t)(k) = s(t(k)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > n() || seen[v]) throw SizeError("Permutation: not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// Builds from a cycle list; elements absent from every cycle are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()];
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }

  Permutation inverse() const {
    std::vector<int> img(n());
    for (int k = 1; k <= n(); ++k) img[images_[k - 1] - 1] = k;
    return Permutation(std::move(img));
  }

  /// Cycles ordered by minimum element, each starting at its minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> cs;
    std::vector<char> seen(n() + 1, 0);
    for (int s = 1; s <= n(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      for (int x = s; !seen[x]; x = images_[x - 1]) {
        seen[x] = 1;
        c.push_back(x);
      }
      cs.push_back(std::move(c));
    }
    return cs;
  }

  int cycle_count() const {
    int count = 0;
    std::vector<char> seen(n() + 1, 0);
    for (int s = 1; s <= n(); ++s) {
      if (seen[s]) continue;
      ++count;
      for (int x = s; !seen[x]; x = images_[x - 1]) seen[x] = 1;
    }
    return count;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw SizeError("compose: mismatched sizes");
  std::vector<int> img(s.n());
  for (int k = 1; k <= s.n(); ++k) img[k - 1] = s(t(k));
  return Permutation(std::move(img));
}

/// Pairing as the product of its transpositions.
inline Permutation as_permutation(const PairPartition& p) {
  std::vector<int> img(p.n());
  std::iota(img.begin(), img.end(), 1);
  for (auto [a, b] : p.pairs()) {
    img[a - 1] = b;
    img[b - 1] = a;
  }
  return Permutation(std::move(img));
}

/// Cycles of the permutation, as blocks. Orbits double as the equality
/// classes of a multi-index constraint j = j o sigma.
inline SetPartition as_partition(const Permutation& g) {
  return SetPartition(g.n(), g.cycles());
}

/// Equality classes imposed on index slots by a permutation constraint.
using MultiIndexConstraint = SetPartition;

inline MultiIndexConstraint orbit_partition(const Permutation& g) { return as_partition(g); }

// ---------------------------------------------------------------------------
// Enumerations. All lists are duplicate-free and ordered by restricted growth
// string (so a filtered sublist of enumerate_set_partitions appears in the
// same order as its direct enumeration).
// ---------------------------------------------------------------------------

namespace detail {

inline void check_partition_bound(int n) {
  if (n < 1 || n > kMaxPartitionN) throw SizeError("partition enumeration: n out of bounds [1, 12]");
}
inline void check_pairing_bound(int n) {
  if (n < 1 || n > kMaxPairingN) throw SizeError("pairing enumeration: n out of bounds [1, 14]");
}

// Pairings via partner arrays (1-based, partner[0] unused); emits in
// lexicographic order of the (min, partner) pair list.
template <class F>
void for_each_pairing_impl(std::vector<int>& partner, int n, bool noncrossing_only, F&& f) {
  int a = 0;
  for (int i = 1; i <= n; ++i)
    if (partner[i] == 0) {
      a = i;
      break;
    }
  if (a == 0) {
    f(const_cast<const std::vector<int>&>(partner));
    return;
  }
  for (int b = a + 1; b <= n; ++b) {
    if (partner[b] != 0) continue;
    if (noncrossing_only) {
      // Everything strictly inside (a, b) must pair within; that holds iff
      // the count of free elements inside is even and none is already paired
      // outside. With a = smallest free element, it suffices that the free
      // count inside is even and all partners of paired insiders are inside.
      int free_inside = 0;
      bool ok = true;
      for (int x = a + 1; x < b && ok; ++x) {
        if (partner[x] == 0) ++free_inside;
        else if (partner[x] < a || partner[x] > b) ok = false;
      }
      if (!ok || free_inside % 2 != 0) continue;
    }
    partner[a] = b;
    partner[b] = a;
    for_each_pairing_impl(partner, n, noncrossing_only, f);
    partner[a] = 0;
    partner[b] = 0;
  }
}

}  // namespace detail

/// Calls f(partner) for every pairing of [n]; partner is 1-based.
template <class F>
void for_each_pair_partition(int n, F&& f) {
  if (n % 2 != 0) return;
  std::vector<int> partner(n + 1, 0);
  detail::for_each_pairing_impl(partner, n, false, std::forward<F>(f));
}

/// Calls f(partner) for every non-crossing pairing of [n].
template <class F>
void for_each_noncrossing_pairing(int n, F&& f) {
  if (n % 2 != 0) return;
  std::vector<int> partner(n + 1, 0);
  detail::for_each_pairing_impl(partner, n, true, std::forward<F>(f));
}

/// Calls f(blocks) for every partition of [n] in RGS-lexicographic order.
/// Blocks are ascending, ordered by minimum. Streams without materializing.
template <class F>
void for_each_set_partition(int n, F&& f) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int e) -> void {
    if (e > n) {
      f(const_cast<const std::vector<std::vector<int>>&>(blocks));
      return;
    }
    for (auto& b : blocks) {
      b.push_back(e);
      self(self, e + 1);
      b.pop_back();
    }
    blocks.push_back({e});
    self(self, e + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
}

/// Calls f(blocks) for every non-crossing partition of [n], RGS-lex order.
template <class F>
void for_each_noncrossing_partition(int n, F&& f) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> open;  // indices of blocks that may still take elements
  auto rec = [&](auto&& self, int e) -> void {
    if (e > n) {
      f(const_cast<const std::vector<std::vector<int>>&>(blocks));
      return;
    }
    // join a visible block, which closes every block opened after it
    for (size_t d = 0; d < open.size(); ++d) {
      std::vector<int> closed(open.begin() + d + 1, open.end());
      open.resize(d + 1);
      blocks[open[d]].push_back(e);
      self(self, e + 1);
      blocks[open[d]].pop_back();
      open.insert(open.end(), closed.begin(), closed.end());
    }
    open.push_back(static_cast<int>(blocks.size()));
    blocks.push_back({e});
    self(self, e + 1);
    blocks.pop_back();
    open.pop_back();
  };
  rec(rec, 1);
}

/// Calls f(blocks) for every interval partition of [n], RGS-lex order.
template <class F>
void for_each_interval_partition(int n, F&& f) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      f(const_cast<const std::vector<std::vector<int>>&>(blocks));
      return;
    }
    for (int len = n - next + 1; len >= 1; --len) {  // longer first: RGS-lex
      std::vector<int> b(len);
      std::iota(b.begin(), b.end(), next);
      blocks.push_back(std::move(b));
      self(self, next + len);
      blocks.pop_back();
    }
  };
  rec(rec, 1);
}

/// All partitions of [n]; |result| = Bell(n).
inline std::vector<SetPartition> enumerate_set_partitions(int n) {
  detail::check_partition_bound(n);
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    out.emplace_back(n, blocks);
  });
  return out;
}

/// All pairings of [n]; (n-1)!! of them for even n, none for odd n.
inline std::vector<PairPartition> enumerate_pair_partitions(int n) {
  detail::check_pairing_bound(n);
  std::vector<PairPartition> out;
  for_each_pair_partition(n, [&](const std::vector<int>& partner) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= n; ++a)
      if (partner[a] > a) ps.emplace_back(a, partner[a]);
    out.emplace_back(n, ps);
  });
  return out;
}

/// All non-crossing partitions of [n]; |result| = Catalan(n). Generated
/// directly (visible-block DFS), not by filtering P(n).
inline std::vector<SetPartition> enumerate_noncrossing_partitions(int n) {
  detail::check_partition_bound(n);
  std::vector<SetPartition> out;
  for_each_noncrossing_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    out.emplace_back(n, blocks);
  });
  return out;
}

/// All non-crossing pairings; Catalan(n/2) of them for even n.
inline std::vector<PairPartition> enumerate_noncrossing_pairings(int n) {
  detail::check_pairing_bound(n);
  std::vector<PairPartition> out;
  for_each_noncrossing_pairing(n, [&](const std::vector<int>& partner) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= n; ++a)
      if (partner[a] > a) ps.emplace_back(a, partner[a]);
    out.emplace_back(n, ps);
  });
  return out;
}

/// All interval partitions of [n]; 2^(n-1) of them.
inline std::vector<SetPartition> enumerate_interval_partitions(int n) {
  detail::check_partition_bound(n);
  std::vector<SetPartition> out;
  for_each_interval_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
    out.emplace_back(n, blocks);
  });
  return out;
}

/// The unique interval pairing {(2k-1, 2k)}; absent for odd n.
inline std::optional<PairPartition> interval_pairing(int n) {
  if (n < 1) throw SizeError("interval_pairing: n must be positive");
  if (n % 2 != 0) return std::nullopt;
  std::vector<std::pair<int, int>> ps;
  for (int k = 1; k <= n / 2; ++k) ps.emplace_back(2 * k - 1, 2 * k);
  return PairPartition(n, ps);
}

// ---------------------------------------------------------------------------
// Genus inequality and index contraction
// ---------------------------------------------------------------------------

struct GenusBoundResult {
  int lhs = 0;
  int rhs = 0;
  bool holds = false;
};

/// #(t) + #(t^-1 s) + #(s) <= n + 2 #(t v s); returned, never assumed.
inline GenusBoundResult check_genus_bound(const Permutation& t, const Permutation& s) {
  if (t.n() != s.n()) throw SizeError("check_genus_bound: mismatched sizes");
  GenusBoundResult r;
  r.lhs = t.cycle_count() + compose(t.inverse(), s).cycle_count() + s.cycle_count();
  r.rhs = t.n() + 2 * join(as_partition(t), as_partition(s)).block_count();
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// Product over the cycles of sigma of the trace of the cyclically ordered
/// matrix product.
template <class S>
S trace_along(const Permutation& sigma, const std::vector<Matrix<S>>& mats) {
  if (static_cast<int>(mats.size()) != sigma.n())
    throw DimensionError("trace_along: need one matrix per point");
  for (const auto& m : mats)
    if (m.rows() != m.cols() || m.rows() != mats[0].rows())
      throw DimensionError("trace_along: matrices must be square of equal dimension");
  S result(1);
  for (const auto& cycle : sigma.cycles()) {
    Matrix<S> prod = mats[cycle[0] - 1];
    for (size_t i = 1; i < cycle.size(); ++i) prod = prod * mats[cycle[i] - 1];
    result = result * prod.trace();
  }
  return result;
}

/// Resolves the constrained index sum
///   sum over j = j o (pi sigma) of a^(1)_{j_sigma(1) j_sigma(2)} ... a^(m)_{j_sigma(2m-1) j_sigma(2m)}
/// into Tr_tau(A_1, ..., A_m). pi and sigma act on [2m]. Throws ContractError
/// if the parity condition k + pi(sigma(k)) = 1 (mod 2) fails, or if the
/// index classes do not carry a trace structure (each class must be the row
/// class of exactly one matrix and the column class of exactly one matrix).
inline Permutation contract_indices(const PairPartition& pairing, const Permutation& sigma, int m) {
  if (pairing.n() != 2 * m || sigma.n() != 2 * m)
    throw SizeError("contract_indices: pairing and sigma must act on [2m]");
  Permutation ps = compose(as_permutation(pairing), sigma);
  for (int k = 1; k <= 2 * m; ++k)
    if ((k + ps(k)) % 2 == 0)
      throw ContractError("contract_indices: parity condition violated");
  SetPartition classes = orbit_partition(ps);
  std::vector<int> row_matrix(classes.block_count(), 0), col_matrix(classes.block_count(), 0);
  for (int k = 1; k <= m; ++k) {
    int rc = classes.block_index_of(sigma(2 * k - 1));
    int cc = classes.block_index_of(sigma(2 * k));
    if (row_matrix[rc] != 0 || col_matrix[cc] != 0)
      throw ContractError("contract_indices: no trace structure (duplicate class use)");
    row_matrix[rc] = k;
    col_matrix[cc] = k;
  }
  std::vector<int> img(m);
  for (int k = 1; k <= m; ++k) {
    int cc = classes.block_index_of(sigma(2 * k));
    if (row_matrix[cc] == 0)
      throw ContractError("contract_indices: no trace structure (open chain)");
    img[k - 1] = row_matrix[cc];
  }
  return Permutation(std::move(img));
}

}  // namespace nctrace

#endif  // NCTRACE_PARTITIONS_HPP
