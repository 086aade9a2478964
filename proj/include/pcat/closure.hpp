#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcat/duality.hpp"
#include "pcat/echelon.hpp"
#include "pcat/sparse_operator.hpp"

namespace pcat {

/// plain: one object is one leg. projective: one object is two legs, and
/// only even signatures exist.
enum class Mode { plain, projective };

inline std::string to_string(Mode m) { return m == Mode::plain ? "plain" : "projective"; }

struct GeneratorSet {
  int dim = 1;
  Mode mode = Mode::plain;
  /// One-leg duality R in (0,2). In projective mode the object duality is
  /// the nested (id (x) R (x) id) R.
  SparseOperator duality;
  std::vector<SparseOperator> generators;

  int object_legs() const noexcept { return mode == Mode::plain ? 1 : 2; }
};

struct ClosureResult {
  Mode mode = Mode::plain;
  int dim = 1;
  int max_legs = 0;
  int slack = 0;
  bool saturated = false;
  int iterations = 0;
  /// Every signature allowed by the mode with at most max_legs legs.
  std::map<Signature, HomSpaceBasis> spaces;

  std::size_t dim_of(Signature s) const {
    auto it = spaces.find(s);
    return it == spaces.end() ? 0 : it->second.dimension();
  }
  std::map<Signature, std::size_t> dims() const {
    std::map<Signature, std::size_t> out;
    for (const auto& [s, b] : spaces) out[s] = b.dimension();
    return out;
  }
  bool contains(const SparseOperator& op) const {
    auto it = spaces.find(signature_of(op));
    return it != spaces.end() && it->second.contains(op);
  }
};

/// The object duality used for rotations: R itself in plain mode, the
/// nested duality in projective mode.
inline SparseOperator object_duality(const GeneratorSet& g) {
  if (g.mode == Mode::plain) return g.duality;
  const auto id = SparseOperator::identity(g.dim, 1);
  return compose_ops(tensor_ops(tensor_ops(id, g.duality), id), g.duality);
}

inline void validate(const GeneratorSet& g) {
  if (g.duality.dim() != g.dim || g.duality.in_legs() != 0 || g.duality.out_legs() != 2)
    throw ValidationError("duality must be a (0,2) operator of the generator dimension");
  if (!check_conjugate_equations(g.duality).passes)
    throw ValidationError("duality fails the conjugate equations");
  for (const auto& t : g.generators) {
    if (t.dim() != g.dim) throw ValidationError("generator dimension differs from the set");
    if (g.mode == Mode::projective && (t.in_legs() % 2 != 0 || t.out_legs() % 2 != 0))
      throw ValidationError("projective generators need even leg counts, got (" +
                            std::to_string(t.in_legs()) + "," + std::to_string(t.out_legs()) + ")");
  }
}

namespace detail {

class ClosureEngine {
 public:
  ClosureEngine(const GeneratorSet& g, int max_legs, int slack)
      : gens_(g), max_legs_(max_legs), bound_(max_legs + slack), ol_(g.object_legs()),
        id_obj_(SparseOperator::identity(g.dim, ol_)), duality_(object_duality(g)),
        duality_adj_(adjoint_op(duality_)) {}

  ClosureResult run(int max_rounds) {
    offer(SparseOperator::scalar(Rational(1), gens_.dim));
    offer(id_obj_);
    if (gens_.mode == Mode::plain) offer(gens_.duality);
    for (const auto& t : gens_.generators) offer(t);

    ClosureResult res;
    res.mode = gens_.mode;
    res.dim = gens_.dim;
    res.max_legs = max_legs_;
    res.slack = bound_ - max_legs_;
    while (!fresh_.empty()) {
      if (res.iterations == max_rounds) break;
      ++res.iterations;
      auto frontier = std::move(fresh_);
      fresh_.clear();
      std::sort(frontier.begin(), frontier.end(), [](const auto& a, const auto& b) {
        if (a.first.legs() != b.first.legs()) return a.first.legs() < b.first.legs();
        return a < b;
      });
      const bool rotate = rotations_available();
      for (const auto& [sig, idx] : frontier) expand(sig, idx, rotate);
    }
    res.saturated = fresh_.empty();
    for (int total = 0; total <= max_legs_; ++total)
      for (int in = 0; in <= total; ++in) {
        const Signature s{in, total - in};
        if (!allowed(s)) continue;
        auto it = spaces_.find(s);
        res.spaces.emplace(s, it == spaces_.end() ? HomSpaceBasis(gens_.dim, s.in, s.out)
                                                  : it->second.basis);
      }
    return res;
  }

 private:
  struct Space {
    HomSpaceBasis basis;
    std::vector<SparseOperator> spanning;
    std::unordered_map<std::uint64_t, std::vector<SparseOperator>> seen;
  };

  bool allowed(Signature s) const {
    if (s.legs() > bound_) return false;
    return gens_.mode == Mode::plain || (s.in % 2 == 0 && s.out % 2 == 0);
  }

  bool rotations_available() {
    auto it = spaces_.find(signature_of(duality_));
    return it != spaces_.end() && it->second.basis.contains(duality_);
  }

  void offer(const SparseOperator& op) {
    const Signature s = signature_of(op);
    if (!allowed(s) || op.is_zero()) return;
    auto it = spaces_.find(s);
    if (it == spaces_.end())
      it = spaces_.emplace(s, Space{HomSpaceBasis(gens_.dim, s.in, s.out), {}, {}}).first;
    Space& sp = it->second;
    // exact duplicate filter on the candidate scaled to a leading 1
    const Rational lead = op.entries().front().value;
    SparseOperator normal = lead == 1 ? op : op.scaled(1 / lead);
    auto& bucket = sp.seen[normal.hash()];
    if (std::find(bucket.begin(), bucket.end(), normal) != bucket.end()) return;
    bucket.push_back(normal);
    if (!sp.basis.insert(normal)) return;
    sp.spanning.push_back(std::move(normal));
    fresh_.emplace_back(s, sp.spanning.size() - 1);
  }

  void expand(Signature sig, std::size_t idx, bool rotate) {
    const SparseOperator t = spaces_.at(sig).spanning[idx];
    offer(adjoint_op(t));
    if (sig.legs() + 2 * ol_ <= bound_) {
      offer(tensor_ops(t, id_obj_));
      offer(tensor_ops(id_obj_, t));
    }
    for (const auto& g : gens_.generators)
      if (sig.legs() + g.legs() <= bound_) {
        offer(tensor_ops(t, g));
        offer(tensor_ops(g, t));
      }
    if (rotate) rotations(t);
    // pairwise compositions with everything found so far
    std::vector<std::pair<Signature, std::size_t>> after, before;
    for (const auto& [s2, sp] : spaces_) {
      if (s2.in == sig.out && allowed({sig.in, s2.out}))
        for (std::size_t j = 0; j < sp.spanning.size(); ++j) after.emplace_back(s2, j);
      if (s2.out == sig.in && allowed({s2.in, sig.out}))
        for (std::size_t j = 0; j < sp.spanning.size(); ++j) before.emplace_back(s2, j);
    }
    for (const auto& [s2, j] : after) offer(compose_ops(spaces_.at(s2).spanning[j], t));
    for (const auto& [s2, j] : before) offer(compose_ops(t, spaces_.at(s2).spanning[j]));
  }

  SparseOperator id_legs(int legs) const { return SparseOperator::identity(gens_.dim, legs); }

  void rotations(const SparseOperator& t) {
    const int k = t.in_legs(), l = t.out_legs();
    if (k >= ol_) {
      offer(compose_ops(tensor_ops(id_obj_, t), tensor_ops(duality_, id_legs(k - ol_))));
      offer(compose_ops(tensor_ops(t, id_obj_), tensor_ops(id_legs(k - ol_), duality_)));
    }
    if (l >= ol_) {
      offer(compose_ops(tensor_ops(duality_adj_, id_legs(l - ol_)), tensor_ops(id_obj_, t)));
      offer(compose_ops(tensor_ops(id_legs(l - ol_), duality_adj_), tensor_ops(t, id_obj_)));
    }
  }

  const GeneratorSet& gens_;
  int max_legs_;
  int bound_;
  int ol_;
  SparseOperator id_obj_;
  SparseOperator duality_;
  SparseOperator duality_adj_;
  std::map<Signature, Space> spaces_;
  std::vector<std::pair<Signature, std::size_t>> fresh_;
};

}  // namespace detail

/// Saturates the generator set under tensor products with identities and
/// generators, pairwise composition, adjoints and (once the object duality is
/// itself generated) rotations. Intermediate spaces may use up to
/// max_legs + slack legs; only spaces with at most max_legs legs are
/// reported. The result is a lower bound of the generated category; the
/// saturated flag records that the last round added nothing.
inline ClosureResult close(const GeneratorSet& g, int max_legs, int slack = 2, int max_rounds = 64) {
  if (max_legs < 2) throw ValidationError("close: max_legs must be >= 2");
  if (slack < 0) throw ValidationError("close: slack must be >= 0");
  validate(g);
  for (const auto& t : g.generators)
    if (t.legs() > max_legs + slack)
      throw ValidationError("generator has more legs than max_legs + slack");
  return detail::ClosureEngine(g, max_legs, slack).run(max_rounds);
}

}  // namespace pcat
