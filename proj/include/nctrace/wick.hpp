#ifndef NCTRACE_WICK_HPP
#define NCTRACE_WICK_HPP

#include <vector>

#include "nctrace/errors.hpp"
#include "nctrace/matrix.hpp"
#include "nctrace/partitions.hpp"

namespace nctrace {

namespace detail {
inline bool nonnegative_real(const Rational& r) { return r >= 0; }
inline bool nonnegative_real(const GaussianRational& z) { return z.is_real() && z.real() >= 0; }
}  // namespace detail

/// A finite family of vectors known only through its exact Gram matrix
/// <f_i, f_j>. Hermitian with real nonnegative diagonal.
template <class S>
class GramSpace {
 public:
  explicit GramSpace(Matrix<S> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionError("GramSpace: matrix not square");
    if (!(gram_ == gram_.conjugate_transpose()))
      throw ValidationError("GramSpace: matrix not Hermitian");
    for (int i = 0; i < gram_.rows(); ++i)
      if (!detail::nonnegative_real(gram_.at(i, i)))
        throw ValidationError("GramSpace: diagonal entry not real nonnegative");
  }

  int vector_count() const { return gram_.rows(); }

  /// <f_i, f_j>, 0-based.
  const S& inner(int i, int j) const {
    if (i < 0 || j < 0 || i >= vector_count() || j >= vector_count())
      throw SizeError("GramSpace: vector index out of range");
    return gram_.at(i, j);
  }

  const Matrix<S>& gram() const { return gram_; }

 private:
  Matrix<S> gram_;
};

namespace detail {

template <class S, class Enum>
S pairing_sum(const GramSpace<S>& space, const std::vector<int>& word, Enum&& enumerate) {
  for (int v : word)
    if (v < 0 || v >= space.vector_count()) throw SizeError("wick: vector index out of range");
  int n = static_cast<int>(word.size());
  if (n % 2 != 0) return S{};
  S total{};
  enumerate(n, [&](const std::vector<int>& partner) {
    S prod(1);
    for (int a = 1; a <= n; ++a) {
      if (partner[a] < a) continue;
      prod = prod * space.inner(word[a - 1], word[partner[a] - 1]);
      if (prod == S{}) return;  // zero Gram entry prunes the pairing
    }
    total += prod;
  });
  return total;
}

}  // namespace detail

/// Vacuum expectation of a product of free semicircular fields:
/// sum over non-crossing pairings of products of Gram entries.
template <class S>
S free_wick(const GramSpace<S>& space, const std::vector<int>& word) {
  return detail::pairing_sum(space, word, [](int n, auto&& f) {
    for_each_noncrossing_pairing(n, f);
  });
}

/// Boolean Bernoulli fields: the single interval pairing, or 0 for odd length.
template <class S>
S boolean_wick(const GramSpace<S>& space, const std::vector<int>& word) {
  for (int v : word)
    if (v < 0 || v >= space.vector_count()) throw SizeError("wick: vector index out of range");
  int n = static_cast<int>(word.size());
  if (n % 2 != 0) return S{};
  S prod(1);
  for (int i = 0; i + 1 < n; i += 2) {
    prod = prod * space.inner(word[i], word[i + 1]);
    if (prod == S{}) return prod;
  }
  return prod;
}

/// Classical Gaussian comparison: the Isserlis sum over all pairings.
template <class S>
S classical_wick(const GramSpace<S>& space, const std::vector<int>& word) {
  return detail::pairing_sum(space, word, [](int n, auto&& f) {
    for_each_pair_partition(n, f);
  });
}

}  // namespace nctrace

#endif  // NCTRACE_WICK_HPP
