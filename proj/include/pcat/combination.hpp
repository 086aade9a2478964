#pragma once

#include <map>
#include <utility>

#include "pcat/half_power.hpp"
#include "pcat/partition.hpp"

namespace pcat {

/// Formal linear combination of partitions sharing one signature.
class DiagramCombination {
 public:
  using Terms = std::map<SetPartition, HalfPowerScalar>;

  DiagramCombination(int upper, int lower) : upper_(upper), lower_(lower) {}

  static DiagramCombination of(const SetPartition& p,
                               HalfPowerScalar c = HalfPowerScalar::one()) {
    DiagramCombination d(p.upper_count(), p.lower_count());
    d.add(p, std::move(c));
    return d;
  }

  int upper_count() const noexcept { return upper_; }
  int lower_count() const noexcept { return lower_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const SetPartition& p, const HalfPowerScalar& c) {
    if (p.upper_count() != upper_ || p.lower_count() != lower_)
      throw SignatureError("combination term has the wrong signature");
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  DiagramCombination& operator+=(const DiagramCombination& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  DiagramCombination scaled(const HalfPowerScalar& s) const {
    DiagramCombination out(upper_, lower_);
    for (const auto& [p, c] : terms_) out.add(p, c * s);
    return out;
  }

  bool operator==(const DiagramCombination& o) const {
    return upper_ == o.upper_ && lower_ == o.lower_ && terms_ == o.terms_;
  }

 private:
  int upper_;
  int lower_;
  Terms terms_;
};

inline DiagramCombination tensor(const DiagramCombination& a, const DiagramCombination& b) {
  DiagramCombination out(a.upper_count() + b.upper_count(), a.lower_count() + b.lower_count());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add(tensor(p, q), cp * cq);
  return out;
}

inline DiagramCombination involute(const DiagramCombination& a) {
  DiagramCombination out(a.lower_count(), a.upper_count());
  for (const auto& [p, c] : a.terms()) out.add(involute(p), c);
  return out;
}

/// Bilinear extension of compose; each closed loop contributes
/// n^(loop_half_exponent / 2), e.g. 2 for the loop value n and 4 for n^2.
inline DiagramCombination compose(const DiagramCombination& q, const DiagramCombination& p,
                                  int loop_half_exponent) {
  if (q.upper_count() != p.lower_count()) throw SignatureError("compose: signature mismatch");
  DiagramCombination out(p.upper_count(), q.lower_count());
  for (const auto& [qq, cq] : q.terms())
    for (const auto& [pp, cp] : p.terms()) {
      auto r = compose(qq, pp);
      out.add(r.partition, cq * cp * HalfPowerScalar::power(loop_half_exponent * r.loops));
    }
  return out;
}

}  // namespace pcat
