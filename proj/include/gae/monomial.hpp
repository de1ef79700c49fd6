#pragma once

#include "gae/ints.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gae {

// Element of the free abelian group M: sparse exponent vector over palette
// variables. No zero exponents stored; entries sorted by variable id.
class Monomial {
public:
  using Entry = std::pair<int, long long>; // (varId, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    normalize();
  }
  static Monomial var(int id, long long exp = 1) {
    if (exp == 0) return {};
    return Monomial({{id, exp}});
  }

  bool is_one() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  long long exponent(int varId) const {
    for (const auto& [v, e] : entries_)
      if (v == varId) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out;
    out.reserve(a.entries_.size() + b.entries_.size());
    size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      if (j == b.entries_.size() ||
          (i < a.entries_.size() && a.entries_[i].first < b.entries_[j].first)) {
        out.push_back(a.entries_[i++]);
      } else if (i == a.entries_.size() || b.entries_[j].first < a.entries_[i].first) {
        out.push_back(b.entries_[j++]);
      } else {
        long long e = a.entries_[i].second + b.entries_[j].second;
        if (e != 0) out.push_back({a.entries_[i].first, e});
        ++i;
        ++j;
      }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
  }

  Monomial pow(long long k) const {
    if (k == 0) return {};
    Monomial m;
    m.entries_ = entries_;
    for (auto& [v, e] : m.entries_) e *= k;
    return m;
  }
  Monomial inverse() const { return pow(-1); }

  bool operator==(const Monomial& o) const { return entries_ == o.entries_; }

  // Lexicographic order on full exponent vectors (missing vars count as 0).
  std::strong_ordering operator<=>(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
      int va = i < entries_.size() ? entries_[i].first : INT32_MAX;
      int vb = j < o.entries_.size() ? o.entries_[j].first : INT32_MAX;
      long long ea = 0, eb = 0;
      if (va <= vb) ea = entries_[i].second;
      if (vb <= va) eb = o.entries_[j].second;
      if (va < vb) eb = 0;
      else if (vb < va) ea = 0;
      if (ea != eb) return ea <=> eb;
      if (va <= vb) ++i;
      if (vb <= va) ++j;
    }
    return std::strong_ordering::equal;
  }

  // componentwise min of exponents, treating absent vars as 0
  static Monomial exponent_min(const Monomial& a, const Monomial& b) {
    std::vector<Entry> out;
    size_t i = 0, j = 0;
    while (i < a.entries_.size() || j < b.entries_.size()) {
      int va = i < a.entries_.size() ? a.entries_[i].first : INT32_MAX;
      int vb = j < b.entries_.size() ? b.entries_[j].first : INT32_MAX;
      if (va < vb) {
        long long e = std::min(a.entries_[i].second, 0LL);
        if (e != 0) out.push_back({va, e});
        ++i;
      } else if (vb < va) {
        long long e = std::min(b.entries_[j].second, 0LL);
        if (e != 0) out.push_back({vb, e});
        ++j;
      } else {
        long long e = std::min(a.entries_[i].second, b.entries_[j].second);
        if (e != 0) out.push_back({va, e});
        ++i;
        ++j;
      }
    }
    Monomial m;
    m.entries_ = std::move(out);
    return m;
  }

private:
  void normalize() {
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> out;
    for (const auto& e : entries_) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Entry& e) { return e.second == 0; }),
              out.end());
    for (size_t k = 1; k < out.size(); ++k)
      if (out[k - 1].first == out[k].first) throw std::logic_error("monomial: dup var");
    entries_ = std::move(out);
  }

  std::vector<Entry> entries_;
};

} // namespace gae
