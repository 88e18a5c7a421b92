#pragma once

// Exact-rational polynomials p_d with E(G,m) = p_d(m) whenever
// gcd(Exp(G), m) = d; degree |G|-1, leading coefficient 1/|G|!.

#include <cstdint>
#include <vector>

#include "gradcount/bigint.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/group.hpp"
#include "gradcount/numtheory.hpp"

namespace gradcount {

class RatPolynomial {
 public:
  RatPolynomial() = default;  // zero polynomial

  static RatPolynomial constant(Rat c) {
    RatPolynomial p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  RatPolynomial& operator+=(const RatPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  RatPolynomial& scale(const Rat& f) {
    for (Rat& c : c_) c *= f;
    trim();
    return *this;
  }

  // multiply by (a*x + b)
  RatPolynomial& mul_linear(const Rat& a, const Rat& b) {
    std::vector<Rat> out(c_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      out[i + 1] += c_[i] * a;
      out[i] += c_[i] * b;
    }
    c_ = std::move(out);
    trim();
    return *this;
  }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[i] is the coefficient of x^i
};

struct AsymptoticPolynomial {
  RatPolynomial poly;
  std::uint64_t divisor_tag = 1;

  Rat eval(const Int& m) const { return poly.eval(Rat(m)); }
};

// p_d(x) = (1/|G|) sum_{t|d} f_t(x) phi_G(t) with
// f_t(x) = (x/t + |G|/t - 1)(x/t + |G|/t - 2)...(x/t + 1) / (|G|/t - 1)!.
inline AsymptoticPolynomial asymptotic_polynomial(const GroupSpec& g, std::uint64_t d) {
  if (d == 0) throw domain_error("divisor tag must be positive");
  if (g.exponent() % d != 0)
    throw domain_error(std::to_string(d) + " does not divide Exp(G) = " + g.exponent().str());
  std::uint64_t n = checked_uint64(g.order(), "group order");
  if (n > 4096) throw domain_error("asymptotic polynomials limited to |G| <= 4096");

  RatPolynomial acc;
  for (std::uint64_t t : divisors_of(d)) {
    Int f = phi_of(g, t);
    if (f == 0) continue;
    std::uint64_t cols = n / t;  // |G|/t
    RatPolynomial ft = RatPolynomial::constant(Rat(1));
    for (std::uint64_t j = 1; j < cols; ++j) ft.mul_linear(Rat(Int(1), Int(t)), Rat(Int(j)));
    ft.scale(Rat(Int(1), factorial(cols - 1)));
    ft.scale(Rat(f));
    acc += ft;
  }
  acc.scale(Rat(Int(1), Int(n)));
  return {acc, d};
}

}  // namespace gradcount
