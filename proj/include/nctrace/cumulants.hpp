#ifndef NCTRACE_CUMULANTS_HPP
#define NCTRACE_CUMULANTS_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nctrace/errors.hpp"
#include "nctrace/partitions.hpp"

namespace nctrace {

/// Selects the summation lattice of the moment-cumulant recursion:
/// P(n) (classical), NC(n) (free) or I(n) (Boolean).
enum class CumulantKind { classical, free, boolean };

inline std::string str(CumulantKind k) {
  switch (k) {
    case CumulantKind::classical: return "classical";
    case CumulantKind::free: return "free";
    case CumulantKind::boolean: return "boolean";
  }
  return "?";
}

/// Streams the kind's lattice over [n].
template <class F>
void for_each_lattice_partition(CumulantKind kind, int n, F&& f) {
  switch (kind) {
    case CumulantKind::classical: for_each_set_partition(n, std::forward<F>(f)); break;
    case CumulantKind::free: for_each_noncrossing_partition(n, std::forward<F>(f)); break;
    case CumulantKind::boolean: for_each_interval_partition(n, std::forward<F>(f)); break;
  }
}

/// Moment evaluation on ordered tuples of variable tags, with the mandatory
/// cache. Determinism of the callback is assumed, multilinearity is not.
/// The cache is not synchronized: confine one functional to one transform.
template <class S>
class MomentFunctional {
 public:
  explicit MomentFunctional(std::function<S(std::span<const int>)> eval)
      : eval_(std::move(eval)) {}

  const S& operator()(std::span<const int> vars) const {
    std::vector<int> key(vars.begin(), vars.end());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), eval_(vars)).first;
    return it->second;
  }

 private:
  std::function<S(std::span<const int>)> eval_;
  mutable std::map<std::vector<int>, S> cache_;
};

namespace detail {

// Shared recursion: cumulant C(vars) = M(vars) - sum over non-maximal lattice
// partitions of the product of C over blocks (each block on its subtuple in
// induced order). Memoized on the tag subtuple.
template <class S>
class CumulantSolver {
 public:
  CumulantSolver(CumulantKind kind, const MomentFunctional<S>& m) : kind_(kind), moments_(m) {}

  const S& cumulant(std::span<const int> vars) {
    std::vector<int> key(vars.begin(), vars.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int n = static_cast<int>(vars.size());
    S result = moments_(vars);
    if (n > 1) {
      S correction{};
      for_each_lattice_partition(kind_, n, [&](const std::vector<std::vector<int>>& blocks) {
        if (blocks.size() == 1) return;
        S prod(1);
        for (const auto& b : blocks) {
          std::vector<int> sub;
          sub.reserve(b.size());
          for (int e : b) sub.push_back(vars[e - 1]);
          prod = prod * cumulant(sub);
          if (prod == S{}) break;
        }
        correction += prod;
      });
      result -= correction;
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  CumulantKind kind_;
  const MomentFunctional<S>& moments_;
  std::map<std::vector<int>, S> memo_;
};

}  // namespace detail

/// The kind's mixed cumulant of the tagged variables, solved from the
/// moment-cumulant recursion.
template <class S>
S cumulant_from_moments(CumulantKind kind, const MomentFunctional<S>& m,
                        std::span<const int> vars) {
  if (vars.empty()) throw SizeError("cumulant_from_moments: empty tuple");
  detail::CumulantSolver<S> solver(kind, m);
  return solver.cumulant(vars);
}

/// Direct lattice sum: moment as the sum over the kind's partitions of
/// products of cumulants over blocks. Inverse of cumulant_from_moments.
template <class S>
S moment_from_cumulants(CumulantKind kind, const std::function<S(std::span<const int>)>& cum,
                        std::span<const int> vars) {
  if (vars.empty()) throw SizeError("moment_from_cumulants: empty tuple");
  S result{};
  for_each_lattice_partition(kind, static_cast<int>(vars.size()),
                             [&](const std::vector<std::vector<int>>& blocks) {
                               S prod(1);
                               for (const auto& b : blocks) {
                                 std::vector<int> sub;
                                 sub.reserve(b.size());
                                 for (int e : b) sub.push_back(vars[e - 1]);
                                 prod = prod * cum(sub);
                                 if (prod == S{}) break;
                               }
                               result += prod;
                             });
  return result;
}

enum class TransformDirection { moments_to_cumulants, cumulants_to_moments };

/// Elementwise transform of a single variable's sequence (m_1, ..., m_L) or
/// (c_1, ..., c_L); L <= 12.
template <class S>
std::vector<S> univariate_transform(CumulantKind kind, const std::vector<S>& seq,
                                    TransformDirection direction) {
  if (seq.size() > 12) throw BoundError("univariate_transform: sequence longer than 12");
  std::vector<S> out;
  out.reserve(seq.size());
  if (direction == TransformDirection::moments_to_cumulants) {
    MomentFunctional<S> m([&](std::span<const int> vars) { return seq[vars.size() - 1]; });
    detail::CumulantSolver<S> solver(kind, m);
    for (size_t len = 1; len <= seq.size(); ++len) {
      std::vector<int> vars(len, 0);
      out.push_back(solver.cumulant(vars));
    }
  } else {
    auto cum = [&](std::span<const int> vars) { return seq[vars.size() - 1]; };
    for (size_t len = 1; len <= seq.size(); ++len) {
      std::vector<int> vars(len, 0);
      out.push_back(moment_from_cumulants<S>(kind, cum, vars));
    }
  }
  return out;
}

}  // namespace nctrace

#endif  // NCTRACE_CUMULANTS_HPP
