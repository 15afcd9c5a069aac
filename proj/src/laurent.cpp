#include "knotile/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace knotile {

Laurent Laurent::monomial(int exp, long long coeff) {
  Laurent p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

long long Laurent::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const auto& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exp) ? it->second : 0;
}

int Laurent::min_exp() const { return terms_.front().first; }
int Laurent::max_exp() const { return terms_.back().first; }

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end());
  size_t w = 0;
  for (size_t i = 0; i < terms_.size();) {
    int e = terms_[i].first;
    long long c = 0;
    while (i < terms_.size() && terms_[i].first == e) c += terms_[i++].second;
    if (c != 0) terms_[w++] = {e, c};
  }
  terms_.resize(w);
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out;
  out.terms_ = terms_;
  out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
  out.normalize();
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o.negated(); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out;
  out.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.terms_.push_back({e1 + e2, c1 * c2});
  out.normalize();
  return out;
}

Laurent Laurent::shifted(int dexp) const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.first += dexp;
  return out;
}

Laurent Laurent::negated() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Laurent Laurent::mirrored() const {
  Laurent out = *this;
  for (auto& t : out.terms_) t.first = -t.first;
  std::sort(out.terms_.begin(), out.terms_.end());
  return out;
}

bool Laurent::exponents_divisible_by(int d) const {
  for (const auto& [e, c] : terms_)
    if (((e % d) + d) % d != 0) return false;
  return true;
}

long long Laurent::eval_t_minus_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) {
    if (((e % 4) + 4) % 4 != 0)
      throw std::runtime_error("eval_t_minus_one: exponent not divisible by 4");
    int k = e / 4;                       // t^(-k) with t=-1 contributes (-1)^k
    s += (k % 2 == 0) ? c : -c;
  }
  return s;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (c >= 0 && !out.empty()) out.push_back('+');
    if (c == -1 && e != 0) out.push_back('-');
    else if (c != 1 || e == 0) out += std::to_string(c);
    if (e != 0) {
      if (std::llabs(c) != 1) out.push_back('*');
      out += "A^" + std::to_string(e);
    }
  }
  return out;
}

Laurent Laurent::parse(const std::string& s) {
  Laurent out;
  if (s == "0") return out;
  size_t i = 0;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') { sign = -1; ++i; }
    long long c = 1;
    bool have_digits = false;
    size_t start = i;
    while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      c = std::stoll(s.substr(start, i - start));
      have_digits = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int e = 0;
    if (i + 1 < s.size() && s[i] == 'A' && s[i + 1] == '^') {
      i += 2;
      size_t es = i;
      if (i < s.size() && s[i] == '-') ++i;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ++i;
      e = std::stoi(s.substr(es, i - es));
    } else if (i < s.size() && s[i] == 'A') {
      throw std::runtime_error("laurent: expected A^exp");
    } else if (!have_digits) {
      throw std::runtime_error("laurent: bad term");
    }
    out.terms_.push_back({e, sign * c});
  }
  out.normalize();
  return out;
}

}  // namespace knotile
