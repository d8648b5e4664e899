#ifndef NCTRACE_NPOLYNOMIAL_HPP
#define NCTRACE_NPOLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nctrace/errors.hpp"
#include "nctrace/rational.hpp"

namespace nctrace {

/// Laurent polynomial in the formal matrix dimension N, with exact
/// coefficients. Zero coefficients are never stored, so the zero polynomial
/// has no terms and its degree is absent ("-inf").
template <class C>
class NPolynomial {
 public:
  NPolynomial() = default;
  NPolynomial(C constant) {  // NOLINT: implicit by design
    if (!(constant == C{})) terms_.emplace(0, std::move(constant));
  }

  static NPolynomial term(int power, C coeff) {
    NPolynomial p;
    if (!(coeff == C{})) p.terms_.emplace(power, std::move(coeff));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  C leading_coefficient() const {
    if (terms_.empty()) return C{};
    return terms_.rbegin()->second;
  }

  C coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? C{} : it->second;
  }

  const std::map<int, C>& terms() const { return terms_; }

  void add_term(int power, const C& coeff) {
    auto [it, inserted] = terms_.try_emplace(power, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == C{}) terms_.erase(it);
    } else if (it->second == C{}) {
      terms_.erase(it);
    }
  }

  NPolynomial& operator+=(const NPolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
  }
  NPolynomial& operator-=(const NPolynomial& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, C{} - c);
    return *this;
  }
  NPolynomial& operator*=(const NPolynomial& o) { return *this = *this * o; }

  friend NPolynomial operator+(NPolynomial a, const NPolynomial& b) { return a += b; }
  friend NPolynomial operator-(NPolynomial a, const NPolynomial& b) { return a -= b; }
  friend NPolynomial operator-(const NPolynomial& a) {
    NPolynomial r;
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, C{} - c);
    return r;
  }
  friend NPolynomial operator*(const NPolynomial& a, const NPolynomial& b) {
    NPolynomial r;
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) r.add_term(pa + pb, ca * cb);
    return r;
  }
  friend NPolynomial operator*(const C& s, const NPolynomial& a) {
    NPolynomial r;
    if (s == C{}) return r;
    for (const auto& [p, c] : a.terms_) r.add_term(p, s * c);
    return r;
  }
  friend bool operator==(const NPolynomial& a, const NPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Evaluation at an exact value of N (nonzero when negative powers occur).
  C evaluate(const C& n) const {
    C result{};
    for (const auto& [p, c] : terms_) {
      C power(1);
      if (p >= 0) {
        for (int i = 0; i < p; ++i) power *= n;
      } else {
        if (n == C{}) throw Error("NPolynomial: evaluating negative power at 0");
        for (int i = 0; i < -p; ++i) power /= n;
      }
      result += c * power;
    }
    return result;
  }

 private:
  std::map<int, C> terms_;
};

/// (degree, leading coefficient); degree is absent and the coefficient 0 for
/// the zero polynomial.
template <class C>
std::pair<std::optional<int>, C> leading_term(const NPolynomial<C>& p) {
  return {p.degree(), p.leading_coefficient()};
}

/// Text form in descending powers, e.g. "2*N + N^-1"; "0" when zero.
template <class C>
std::string str(const NPolynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [power, coeff] = *it;
    if (!out.empty()) out += " + ";
    std::string cs = str(coeff);
    if (power == 0) {
      out += cs;
      continue;
    }
    if (cs == "1") cs.clear();
    else cs += "*";
    out += cs + (power == 1 ? "N" : "N^" + std::to_string(power));
  }
  return out;
}

}  // namespace nctrace

#endif  // NCTRACE_NPOLYNOMIAL_HPP
