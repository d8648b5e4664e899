#include "nctrace/cumulants.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "nctrace/wick.hpp"
#include "test_support.hpp"

using namespace nctrace;
using nctest::Rng;

namespace {

std::vector<Rational> rseq(const std::vector<int>& v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("univariate transforms recover the CLT laws", "[cumulants]") {
  using D = TransformDirection;
  // semicircular moments (Catalan interleaved with zeros) -> free delta_{n,2}
  std::vector<Rational> semi{0, 1, 0, 2, 0, 5};
  REQUIRE(univariate_transform(CumulantKind::free, semi, D::moments_to_cumulants) ==
          std::vector<Rational>{0, 1, 0, 0, 0, 0});
  // Bernoulli -> boolean delta_{n,2}
  std::vector<Rational> bern{0, 1, 0, 1};
  REQUIRE(univariate_transform(CumulantKind::boolean, bern, D::moments_to_cumulants) ==
          std::vector<Rational>{0, 1, 0, 0});
  // Gaussian -> classical delta_{n,2}
  std::vector<Rational> gauss{0, 1, 0, 3, 0, 15};
  REQUIRE(univariate_transform(CumulantKind::classical, gauss, D::moments_to_cumulants) ==
          std::vector<Rational>{0, 1, 0, 0, 0, 0});
  // all-zero stays all-zero, any kind
  std::vector<Rational> zero(6, Rational(0));
  for (auto kind : {CumulantKind::classical, CumulantKind::free, CumulantKind::boolean}) {
    REQUIRE(univariate_transform(kind, zero, D::moments_to_cumulants) == zero);
    REQUIRE(univariate_transform(kind, zero, D::cumulants_to_moments) == zero);
  }

  // cumulants -> moments: delta_{n,2} gives Catalan / all-ones / (2k-1)!!
  std::vector<Rational> delta2{0, 1, 0, 0, 0, 0, 0, 0, 0, 0};
  auto free_m = univariate_transform(CumulantKind::free, delta2, D::cumulants_to_moments);
  REQUIRE(free_m[7] == Rational(14));  // m_8 = Catalan(4)
  auto bool_m = univariate_transform(CumulantKind::boolean, delta2, D::cumulants_to_moments);
  for (int k = 1; k <= 5; ++k) REQUIRE(bool_m[2 * k - 1] == Rational(1));
  auto class_m = univariate_transform(CumulantKind::classical, delta2, D::cumulants_to_moments);
  REQUIRE(class_m[3] == Rational(3));  // |P_2(4)|
  for (int k = 1; k <= 5; ++k)
    REQUIRE(class_m[2 * k - 1] == Rational(nctest::double_factorial_odd(k)));
}

TEST_CASE("round trips are the identity on random sequences", "[cumulants]") {
  Rng rng(31);
  using D = TransformDirection;
  for (auto kind : {CumulantKind::classical, CumulantKind::free, CumulantKind::boolean}) {
    for (int iter = 0; iter < 10; ++iter) {
      std::vector<Rational> seq;
      for (int i = 0; i < 8; ++i) seq.push_back(rng.rational());
      auto cums = univariate_transform(kind, seq, D::moments_to_cumulants);
      REQUIRE(univariate_transform(kind, cums, D::cumulants_to_moments) == seq);
      auto moms = univariate_transform(kind, seq, D::cumulants_to_moments);
      REQUIRE(univariate_transform(kind, moms, D::moments_to_cumulants) == seq);
    }
  }
}

TEST_CASE("multivariate recursion round trip with noncommuting tags", "[cumulants]") {
  Rng rng(37);
  // a deterministic but order-sensitive moment functional
  MomentFunctional<Rational> m([](std::span<const int> vars) {
    Rational acc(1, 2);
    int weight = 1;
    for (int v : vars) {
      acc += Rational(v * weight, 3);
      weight = (weight * 2) % 7;
    }
    return acc;
  });
  for (auto kind : {CumulantKind::classical, CumulantKind::free, CumulantKind::boolean}) {
    for (int len = 1; len <= 5; ++len) {
      std::vector<int> vars;
      for (int i = 0; i < len; ++i) vars.push_back(rng.int_in(0, 3));
      // moment_from_cumulants(cumulant_from_moments) must reproduce m
      auto cum = [&](std::span<const int> sub) { return cumulant_from_moments(kind, m, sub); };
      REQUIRE(moment_from_cumulants<Rational>(kind, cum, vars) == m(vars));
    }
  }
}

TEST_CASE("cumulants are multilinear when the moments are", "[cumulants]") {
  // Vectors f0, f1 and f2 = a f0 + b f1 inside one Gram space; the Wick sum
  // is multilinear, so every cumulant must be linear in the f2 slot.
  Rng rng(41);
  for (auto kind : {CumulantKind::free, CumulantKind::boolean, CumulantKind::classical}) {
    Rational a = rng.nonzero_rational(), b = rng.nonzero_rational();
    Matrix<Rational> base = rng.gram(2);
    Matrix<Rational> g(3, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g.at(i, j) = base.at(i, j);
    for (int j = 0; j < 2; ++j) {
      g.at(2, j) = a * base.at(0, j) + b * base.at(1, j);
      g.at(j, 2) = g.at(2, j);
    }
    g.at(2, 2) = a * a * base.at(0, 0) + 2 * a * b * base.at(0, 1) + b * b * base.at(1, 1);
    GramSpace<Rational> space(g);

    MomentFunctional<Rational> m([&](std::span<const int> vars) {
      std::vector<int> word(vars.begin(), vars.end());
      switch (kind) {
        case CumulantKind::free: return free_wick(space, word);
        case CumulantKind::boolean: return boolean_wick(space, word);
        case CumulantKind::classical: return classical_wick(space, word);
      }
      return Rational(0);
    });

    for (int len = 2; len <= 5; ++len) {
      for (int slot = 0; slot < len; ++slot) {
        std::vector<int> with2, with0, with1;
        for (int i = 0; i < len; ++i) {
          int v = rng.int_in(0, 1);
          with2.push_back(i == slot ? 2 : v);
          with0.push_back(i == slot ? 0 : v);
          with1.push_back(i == slot ? 1 : v);
        }
        for (int i = 0; i < len; ++i)
          if (i != slot) with1[i] = with0[i] = with2[i];
        REQUIRE(cumulant_from_moments(kind, m, with2) ==
                a * cumulant_from_moments(kind, m, with0) +
                    b * cumulant_from_moments(kind, m, with1));
      }
    }
  }
}
