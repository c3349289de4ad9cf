#pragma once

// Sparse integer polynomials in x_1..x_k, y_1..y_l with exact coefficients.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace srsk {

struct Monomial {
  std::vector<int> x;  // exponents of x_1..x_k
  std::vector<int> y;  // exponents of y_1..y_l

  Monomial() = default;
  Monomial(std::vector<int> xs, std::vector<int> ys)
      : x(std::move(xs)), y(std::move(ys)) {}
  static Monomial one(int k, int l) {
    return {std::vector<int>(static_cast<std::size_t>(k), 0),
            std::vector<int>(static_cast<std::size_t>(l), 0)};
  }

  int degree() const;
  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string format_monomial(const Monomial& m);

class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m, mpz_class coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  /// Zero when the monomial is absent.
  mpz_class coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const mpz_class& coeff);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;  // never holds a zero coefficient
};

/// Terms in decreasing exponent order, e.g. "x1^2 + x1*y1".
std::string format_polynomial(const Polynomial& p);

}  // namespace srsk
