#include "superrsk/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace srsk {

int Monomial::degree() const {
  return std::accumulate(x.begin(), x.end(), 0) +
         std::accumulate(y.begin(), y.end(), 0);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (x.size() != other.x.size() || y.size() != other.y.size())
    throw std::invalid_argument("monomials over different variable sets");
  Monomial out = *this;
  for (std::size_t i = 0; i < x.size(); ++i) out.x[i] += other.x[i];
  for (std::size_t j = 0; j < y.size(); ++j) out.y[j] += other.y[j];
  return out;
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  auto emit = [&out](char var, const std::vector<int>& exps) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!out.empty()) out.push_back('*');
      out.push_back(var);
      out += std::to_string(i + 1);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
  };
  emit('x', m.x);
  emit('y', m.y);
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(const Monomial& m, mpz_class coeff) {
  add_term(m, coeff);
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mono = format_monomial(m);
    if (magnitude != 1)
      out += magnitude.get_str() + (mono == "1" ? "" : "*" + mono);
    else
      out += mono;
  }
  return out;
}

}  // namespace srsk
