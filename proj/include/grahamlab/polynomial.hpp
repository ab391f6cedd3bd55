#pragma once

// Dense univariate polynomials over the rationals, exact throughout.
// Coefficient i is the coefficient of x^i; the zero polynomial is the empty
// vector and reports degree -1.
//
// Text format: comma-separated rationals, highest degree first, so
// "1,0,0,0" is x^3 and "1/2,3/2,5/2" is (x^2+3x+5)/2.

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grahamlab/bigint.hpp"

namespace grahamlab {

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial from_coeffs(std::vector<Rat> low_to_high) {
    Polynomial p;
    p.c_ = std::move(low_to_high);
    p.trim();
    return p;
  }

  static Polynomial monomial(int deg, const Rat& coeff = 1) {
    if (deg < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = coeff;
    return from_coeffs(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rat coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rat(0) : c_[i];
  }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  Rat operator()(const Int& x) const { return (*this)(Rat(x)); }
  Rat operator()(long long x) const { return (*this)(Rat(x)); }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(std::move(c));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + o * Rat(-1); }
  Polynomial operator*(const Rat& s) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= s;
    return from_coeffs(std::move(c));
  }
  bool operator==(const Polynomial&) const = default;

  // f(x + t) expanded in x, by Horner over (x + t).
  Polynomial shift(const Rat& t) const {
    std::vector<Rat> acc;  // result, low to high
    for (std::size_t i = c_.size(); i-- > 0;) {
      // acc <- acc * (x + t) + c_[i]
      std::vector<Rat> next(acc.size() + 1, Rat(0));
      for (std::size_t j = 0; j < acc.size(); ++j) {
        next[j + 1] += acc[j];
        next[j] += acc[j] * t;
      }
      if (next.empty()) next.push_back(Rat(0));
      next[0] += c_[i];
      acc = std::move(next);
    }
    return from_coeffs(std::move(acc));
  }

  Rat max_abs_coeff() const {
    Rat m = 0;
    for (const auto& x : c_) m = std::max(m, rat_abs(x));
    return m;
  }
  Rat max_abs_non_leading() const {
    Rat m = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, rat_abs(c_[i]));
    return m;
  }

  // Newton interpolation on exact rationals; abscissae must be distinct.
  static Polynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    std::size_t n = points.size();
    if (n == 0) return Polynomial();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (points[i].first == points[j].first)
          throw std::invalid_argument("interpolate: duplicate abscissa");
    std::vector<Rat> dd(n);  // divided differences, in place
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
      for (std::size_t i = n - 1; i >= level; --i)
        dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    // Fold Newton form from the top: p <- p * (x - x_i) + dd[i]
    Polynomial p;
    for (std::size_t i = n; i-- > 0;) {
      std::vector<Rat> c(p.c_.size() + 1, Rat(0));
      for (std::size_t j = 0; j < p.c_.size(); ++j) {
        c[j + 1] += p.c_[j];
        c[j] -= p.c_[j] * points[i].first;
      }
      if (c.empty()) c.push_back(Rat(0));
      c[0] += dd[i];
      p.c_ = std::move(c);
      p.trim();
    }
    return p;
  }

  static Polynomial parse(const std::string& text) {
    std::vector<Rat> high_first;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
      std::size_t a = tok.find_first_not_of(" \t");
      if (a == std::string::npos) throw std::invalid_argument("Polynomial::parse: empty coefficient");
      std::size_t b = tok.find_last_not_of(" \t");
      try {
        high_first.emplace_back(Rat(tok.substr(a, b - a + 1)));
      } catch (...) {
        throw std::invalid_argument("Polynomial::parse: bad coefficient '" + tok + "'");
      }
    }
    if (high_first.empty()) throw std::invalid_argument("Polynomial::parse: no coefficients");
    return from_coeffs({high_first.rbegin(), high_first.rend()});
  }

  std::string format() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      s += c_[i].str();
      if (i != 0) s += ",";
    }
    return s;
  }

 private:
  std::vector<Rat> c_;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

}  // namespace grahamlab
