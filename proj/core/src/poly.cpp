#include <algorithm>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mahonian/polyring.hpp"

namespace mahonian {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarId v, std::uint32_t exponent) {
  if (exponent == 0) {
    return;
  }
  exps_.assign(v.index() + 1, 0);
  exps_[v.index()] = exponent;
  degree_ = exponent;
}

Monomial::Monomial(std::initializer_list<std::pair<VarId, std::uint32_t>> factors) {
  for (const auto& [v, e] : factors) {
    if (v.index() >= exps_.size()) {
      exps_.resize(v.index() + 1, 0);
    }
    exps_[v.index()] += e;
    degree_ += e;
  }
  trim();
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) {
    exps_.pop_back();
  }
}

std::vector<std::pair<VarId, std::uint32_t>> Monomial::factors() const {
  std::vector<std::pair<VarId, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) {
      out.emplace_back(VarId(i), exps_[i]);
    }
  }
  return out;
}

Monomial Monomial::with_exponent(VarId v, std::uint32_t exponent) const {
  Monomial m = *this;
  if (v.index() >= m.exps_.size()) {
    if (exponent == 0) {
      return m;
    }
    m.exps_.resize(v.index() + 1, 0);
  }
  m.degree_ = m.degree_ - m.exps_[v.index()] + exponent;
  m.exps_[v.index()] = exponent;
  m.trim();
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  const Monomial& longer = a.exps_.size() >= b.exps_.size() ? a : b;
  const Monomial& shorter = a.exps_.size() >= b.exps_.size() ? b : a;
  Monomial m = longer;
  for (std::size_t i = 0; i < shorter.exps_.size(); ++i) {
    m.exps_[i] += shorter.exps_[i];
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool Monomial::divisible_by(const Monomial& d) const {
  if (d.exps_.size() > exps_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < d.exps_.size(); ++i) {
    if (d.exps_[i] > exps_[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < d.exps_.size(); ++i) {
    m.exps_[i] -= d.exps_[i];
  }
  m.degree_ -= d.degree_;
  m.trim();
  return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (degree_ != o.degree_) {
    return degree_ <=> o.degree_;
  }
  const std::size_t n = std::max(exps_.size(), o.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t x = i < exps_.size() ? exps_[i] : 0;
    const std::uint32_t y = i < o.exps_.size() ? o.exps_[i] : 0;
    if (x != y) {
      return y <=> x;  // larger exponent first
    }
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors()) {
    out += v.name();
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) {
    terms_.emplace(Monomial{}, Integer(c));
  }
}

Poly::Poly(const Integer& c) {
  if (c != 0) {
    terms_.emplace(Monomial{}, c);
  }
}

Poly::Poly(const Monomial& m, const Integer& c) {
  if (c != 0) {
    terms_.emplace(m, c);
  }
}

Poly Poly::variable(VarId v, std::uint32_t exponent) { return Poly(Monomial(v, exponent)); }

Poly Poly::variable(std::string_view name, std::uint32_t exponent) {
  return variable(var(name), exponent);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() && terms_.begin()->second == 1;
}

Integer Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, m.exponent(v));
  }
  return d;
}

std::uint32_t Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, Integer(-c));
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) {
    return out;
  }
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) {
    coef *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Poly Poly::divide_exact(const Monomial& d) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    if (!m.divisible_by(d)) {
      throw std::domain_error("polynomial not divisible by " + d.to_string());
    }
    out.terms_.emplace(m.divided_by(d), c);
  }
  return out;
}

Poly Poly::substitute(VarId v, const Poly& value) const {
  return substitute({{v, value}});
}

Poly Poly::substitute(const std::vector<std::pair<VarId, Poly>>& values) const {
  // powers[i][e] = values[i].second ^ e, grown lazily
  std::vector<std::vector<Poly>> powers(values.size(), std::vector<Poly>{Poly(1)});
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Poly factor(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::uint32_t e = m.exponent(values[i].first);
      if (e == 0) {
        continue;
      }
      rest = rest.with_exponent(values[i].first, 0);
      auto& pw = powers[i];
      while (pw.size() <= e) {
        pw.push_back(pw.back() * values[i].second);
      }
      factor *= pw[e];
    }
    out += factor * Poly(rest, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (negative) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    if (m.is_constant()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) {
        out += magnitude.get_str();
      }
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

std::string Poly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) {
      mono[std::string(v.name())] = e;
    }
    terms.push_back({{"coef", c.get_str()}, {"mono", std::move(mono)}});
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result(1);
  Poly base = p;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      base *= base;
    }
  }
  return result;
}

}  // namespace mahonian
