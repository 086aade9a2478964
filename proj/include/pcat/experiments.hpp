#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcat/classical.hpp"
#include "pcat/closure.hpp"
#include "pcat/enumerate.hpp"
#include "pcat/fattening.hpp"
#include "pcat/realize.hpp"

namespace pcat {

/// Hook for running closures, e.g. through the cache. Empty means close().
using Closer = std::function<ClosureResult(const GeneratorSet&, int max_legs, int slack)>;

namespace detail {
inline ClosureResult run_closer(const Closer& c, const GeneratorSet& g, int max_legs, int slack) {
  return c ? c(g, max_legs, slack) : close(g, max_legs, slack);
}
}  // namespace detail

enum class Preset {
  o_plus,        // free orthogonal: S = {pair}
  o_plus_bare,   // {pair} only, no sandwiched copy (exploratory)
  s_plus,        // free symmetric, through the outline map at dimension n^2
  o,             // classical orthogonal: S = {pair, cross}
  o_minus,       // anticommutative orthogonal: twisted pair and cross
};

inline std::string to_string(Preset p) {
  switch (p) {
    case Preset::o_plus: return "o-plus";
    case Preset::o_plus_bare: return "o-plus-bare";
    case Preset::s_plus: return "s-plus";
    case Preset::o: return "o";
    case Preset::o_minus: return "o-minus";
  }
  return "?";
}

inline Preset preset_from_string(const std::string& s) {
  for (Preset p : {Preset::o_plus, Preset::o_plus_bare, Preset::s_plus, Preset::o, Preset::o_minus})
    if (to_string(p) == s) return p;
  throw std::invalid_argument("unknown preset '" + s + "'");
}

/// id_{C^n} (x) t (x) id_{C^n}
inline SparseOperator sandwich(const SparseOperator& t) {
  const auto id = SparseOperator::identity(t.dim(), 1);
  return tensor_ops(tensor_ops(id, t), id);
}

/// Generating set of the base category; the duality comes first.
inline std::vector<SparseOperator> base_generators(Preset p, int n) {
  const auto pair = realize(SetPartition::pair(), n);
  switch (p) {
    case Preset::o_plus:
    case Preset::o_plus_bare: return {pair};
    case Preset::s_plus: return {pair, realize(SetPartition::singleton(), n), realize(SetPartition::fork(), n)};
    case Preset::o: return {pair, realize(SetPartition::crossing(), n)};
    case Preset::o_minus: return {realize_twisted_pair(n), realize_twisted_cross(n)};
  }
  return {};
}

/// Generator set for the base category itself (one object = one leg).
inline GeneratorSet plain_generators(Preset p, int n) {
  auto base = base_generators(p, n);
  GeneratorSet g{n, Mode::plain, base.front(), {}};
  g.generators.assign(base.begin() + 1, base.end());
  return g;
}

/// Generator set of the projective category at leg dimension n: S together
/// with id (x) T (x) id for every T in S. For s-plus the generators are the
/// outlines of the singleton and the fork (scalars dropped, spans only), and
/// o-plus-bare omits the sandwiched copies.
inline GeneratorSet projective_generators(Preset p, int n) {
  const auto pair = realize(SetPartition::pair(), n);
  GeneratorSet g{n, Mode::projective, pair, {}};
  switch (p) {
    case Preset::o_plus_bare: g.generators = {pair}; return g;
    case Preset::s_plus:
      g.generators = {realize(fatten(SetPartition::singleton()).pairing, n),
                      realize(fatten(SetPartition::fork()).pairing, n)};
      return g;
    default: break;
  }
  const auto base = base_generators(p, n);
  g.duality = base.front();
  for (const auto& t : base) {
    g.generators.push_back(t);
    g.generators.push_back(sandwich(t));
  }
  return g;
}

/// R^{1/2}(T) = (id^{(x)2m} (x) R*)(id (x) T (x) id) R for T in (0, 2m) legs.
inline SparseOperator half_rotate(const SparseOperator& t, const SparseOperator& duality) {
  if (t.in_legs() != 0) throw SignatureError("half_rotate needs an operator with no inputs");
  if (t.out_legs() % 2 != 0) throw ValidationError("half_rotate needs an even number of legs");
  if (t.out_legs() == 0) throw ValidationError("half_rotate needs at least two legs");
  const auto cap = tensor_ops(SparseOperator::identity(t.dim(), t.out_legs()), adjoint_op(duality));
  return compose_ops(cap, compose_ops(sandwich(t), duality));
}

/// Rank of the realized family at every signature allowed by the mode.
/// kind: NC pairings at n, all pairings at n, NC partitions at n, or
/// (s-plus, projective) NC partitions of the halved signature at n^2.
enum class ReferenceKind { nc_pairings, pairings, nc_partitions, nc_partitions_squared };

inline std::map<Signature, std::size_t> reference_dims(ReferenceKind kind, int n, int max_legs, Mode mode) {
  std::map<Signature, std::size_t> out;
  for (int total = 0; total <= max_legs; ++total)
    for (int in = 0; in <= total; ++in) {
      const Signature s{in, total - in};
      if (mode == Mode::projective && (s.in % 2 || s.out % 2)) continue;
      std::vector<SparseOperator> ops;
      switch (kind) {
        case ReferenceKind::nc_pairings:
          for (const auto& p : enumerate_nc_pairings(s.in, s.out)) ops.push_back(realize(p, n));
          break;
        case ReferenceKind::pairings:
          for (const auto& p : enumerate_pairings(s.in, s.out)) ops.push_back(realize(p, n));
          break;
        case ReferenceKind::nc_partitions:
          for (const auto& p : enumerate_nc_partitions(s.in, s.out)) ops.push_back(realize(p, n));
          break;
        case ReferenceKind::nc_partitions_squared:
          if (s.in % 2 || s.out % 2) throw ValidationError("halved signature must be even");
          for (const auto& p : enumerate_nc_partitions(s.in / 2, s.out / 2))
            ops.push_back(realize(p, n * n));
          break;
      }
      out[s] = span_dimension(ops);
    }
  return out;
}

struct DimMismatch {
  Signature signature;
  std::size_t found = 0;
  std::size_t expected = 0;
};

inline std::vector<DimMismatch> compare_dims(const std::map<Signature, std::size_t>& found,
                                             const std::map<Signature, std::size_t>& expected) {
  std::vector<DimMismatch> out;
  for (const auto& [s, e] : expected) {
    auto it = found.find(s);
    const std::size_t f = it == found.end() ? 0 : it->second;
    if (f != e) out.push_back({s, f, e});
  }
  return out;
}

enum class Status { pass, mismatch, inconclusive, exploratory };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::mismatch: return "mismatch";
    case Status::inconclusive: return "inconclusive";
    case Status::exploratory: return "exploratory";
  }
  return "?";
}

/// Checks on a projective closure: every basis element T in (a,b) with
/// a+b+4 <= max_legs has id (x) T (x) id in the closure, and every (0,2m)
/// element is mapped into its own space by R^{1/2}.
struct LemmaChecks {
  std::size_t sandwich_checked = 0;
  std::size_t sandwich_failed = 0;
  std::size_t half_rotation_checked = 0;
  std::size_t half_rotation_failed = 0;

  bool ok() const { return sandwich_failed == 0 && half_rotation_failed == 0; }
};

inline LemmaChecks check_lemma_conditions(const ClosureResult& c, const SparseOperator& duality) {
  LemmaChecks out;
  for (const auto& [s, basis] : c.spaces) {
    if (s.legs() + 4 <= c.max_legs)
      for (const auto& t : basis.elements()) {
        ++out.sandwich_checked;
        if (!c.contains(sandwich(t))) ++out.sandwich_failed;
      }
    if (s.in == 0 && s.out >= 2)
      for (const auto& t : basis.elements()) {
        ++out.half_rotation_checked;
        if (!basis.contains(half_rotate(t, duality))) ++out.half_rotation_failed;
      }
  }
  return out;
}

struct TheoremTReport {
  Preset preset = Preset::o_plus;
  int n = 0;
  ClosureResult closure;
  std::map<Signature, std::size_t> reference;
  std::vector<DimMismatch> mismatches;
  LemmaChecks lemma;
  /// o-plus-bare only: whether the bare closure is strictly smaller than the
  /// full projective category somewhere within the bound.
  std::optional<bool> strictly_smaller;
  Status status = Status::inconclusive;
};

inline TheoremTReport verify_theorem_T(int n, Preset preset, int max_legs, int slack = 2,
                                       const Closer& closer = {}) {
  if (n < 1) throw ValidationError("theorem-t needs n >= 1");
  if (preset != Preset::o_plus && preset != Preset::s_plus && preset != Preset::o_plus_bare)
    throw ValidationError("theorem-t presets are o-plus, s-plus and o-plus-bare");
  TheoremTReport rep;
  rep.preset = preset;
  rep.n = n;
  const auto gens = projective_generators(preset, n);
  rep.closure = detail::run_closer(closer, gens, max_legs, slack);
  rep.reference = reference_dims(
      preset == Preset::s_plus ? ReferenceKind::nc_partitions_squared : ReferenceKind::nc_pairings, n,
      max_legs, Mode::projective);
  rep.mismatches = compare_dims(rep.closure.dims(), rep.reference);
  rep.lemma = check_lemma_conditions(rep.closure, gens.duality);
  if (preset == Preset::o_plus_bare) {
    rep.strictly_smaller = !rep.mismatches.empty();
    rep.status = Status::exploratory;
  } else if (!rep.closure.saturated) {
    rep.status = Status::inconclusive;
  } else {
    rep.status = rep.mismatches.empty() && rep.lemma.ok() ? Status::pass : Status::mismatch;
  }
  return rep;
}

struct TwistedReport {
  int n = 0;
  ClosureResult twisted;
  ClosureResult untwisted;
  std::vector<DimMismatch> mismatches;  // found = twisted, expected = untwisted
  Status status = Status::inconclusive;
};

inline TwistedReport compare_twisted(int n, int max_legs, int slack = 2, const Closer& closer = {}) {
  if (n < 2) throw ValidationError("twisted comparison needs n >= 2");
  TwistedReport rep;
  rep.n = n;
  rep.twisted = detail::run_closer(closer, projective_generators(Preset::o_minus, n), max_legs, slack);
  rep.untwisted = detail::run_closer(closer, projective_generators(Preset::o, n), max_legs, slack);
  rep.mismatches = compare_dims(rep.twisted.dims(), rep.untwisted.dims());
  if (!rep.twisted.saturated || !rep.untwisted.saturated)
    rep.status = Status::inconclusive;
  else
    rep.status = rep.mismatches.empty() ? Status::pass : Status::mismatch;
  return rep;
}

/// Color word of k copies of v = u (x) u-bar: white, black repeated.
inline std::vector<Color> alternating_word(int objects) {
  std::vector<Color> w;
  for (int i = 0; i < objects; ++i) {
    w.push_back(Color::white);
    w.push_back(Color::black);
  }
  return w;
}

struct PuPoRow {
  Signature signature;
  std::size_t pairings = 0;
  std::size_t compatible = 0;
  std::optional<std::size_t> colored_rank;
  std::optional<std::size_t> uncolored_rank;
};

struct PuPoReport {
  int n = 0;
  std::vector<PuPoRow> rows;
  bool combinatorial_ok = true;
  bool spans_ok = true;
  Status status = Status::pass;
};

/// (a) every NC pairing on alternating doubled color words is color
/// compatible, for all even signatures with at most max_points points;
/// (b) colored and uncolored realized spans have equal rank at n for even
/// signatures with at most max_legs legs.
inline PuPoReport verify_pu_po(int n, int max_legs, int max_points = 12) {
  if (n < 1) throw ValidationError("pu-po needs n >= 1");
  PuPoReport rep;
  rep.n = n;
  for (int total = 0; total <= std::max(max_points, max_legs); total += 2)
    for (int in = 0; in <= total; in += 2) {
      PuPoRow row;
      row.signature = {in, total - in};
      const Coloring colors{alternating_word(in / 2), alternating_word((total - in) / 2)};
      std::vector<SparseOperator> all, colored;
      const bool spans = total <= max_legs;
      for (const auto& p : enumerate_nc_pairings(in, total - in)) {
        ++row.pairings;
        const bool ok = color_compatible(p.with_colors(colors));
        row.compatible += ok;
        if (spans) {
          all.push_back(realize(p, n));
          if (ok) colored.push_back(all.back());
        }
      }
      if (total <= max_points && row.compatible != row.pairings) rep.combinatorial_ok = false;
      if (spans) {
        row.colored_rank = span_dimension(colored);
        row.uncolored_rank = span_dimension(all);
        if (*row.colored_rank != *row.uncolored_rank) rep.spans_ok = false;
      }
      rep.rows.push_back(row);
    }
  rep.status = rep.combinatorial_ok && rep.spans_ok ? Status::pass : Status::mismatch;
  return rep;
}

/// (id^3 (x) R* (x) id)(id^2 (x) X (x) id^2)(id (x) R (x) id^3) == id (x) X (x) id
/// for the crossing X: the sandwiched crossing is generated by the plain one
/// and the duality.
inline bool icrosspart_identity(int n) {
  const auto pair = realize(SetPartition::pair(), n);
  const auto cross = realize(SetPartition::crossing(), n);
  auto id = [n](int legs) { return SparseOperator::identity(n, legs); };
  const auto up = tensor_ops(tensor_ops(id(1), pair), id(3));
  const auto mid = tensor_ops(tensor_ops(id(2), cross), id(2));
  const auto down = tensor_ops(tensor_ops(id(3), adjoint_op(pair)), id(1));
  return compose_ops(down, compose_ops(mid, up)) == sandwich(cross);
}

struct ClassicalReport {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  PoRelationReport worst;          // componentwise maxima over the samples
  double intertwiner_residual = 0.0;  // realized NC pairings and the crossing
  std::map<int, bool> icrosspart;  // per dimension
  Status status = Status::pass;
};

/// Samples A in O(n) from consecutive seeds, checks the relation families of
/// A (x) A and that realized NC pairings (up to four legs) and the crossing
/// intertwine A. The crossing factorization is checked exactly at 2, 3 and n.
inline ClassicalReport classical_check(int n, int samples, std::uint64_t seed, double tol) {
  if (n < 1) throw ValidationError("classical-check needs n >= 1");
  if (samples < 1) throw ValidationError("classical-check needs at least one sample");
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  ClassicalReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  std::vector<SparseOperator> ops{realize(SetPartition::crossing(), n)};
  for (int total = 2; total <= 4; total += 2)
    for (int in = 0; in <= total; ++in)
      for (const auto& p : enumerate_nc_pairings(in, total - in)) ops.push_back(realize(p, n));
  bool ok = true;
  for (int i = 0; i < samples; ++i) {
    const auto a = random_orthogonal(n, seed + static_cast<std::uint64_t>(i));
    const auto r = po_relation_check(a, tol);
    ok = ok && r.passes;
    rep.worst.symmetry = std::max(rep.worst.symmetry, r.symmetry);
    rep.worst.trace = std::max(rep.worst.trace, r.trace);
    rep.worst.contraction = std::max(rep.worst.contraction, r.contraction);
    rep.worst.orthogonality = std::max(rep.worst.orthogonality, r.orthogonality);
    for (const auto& t : ops) rep.intertwiner_residual = std::max(rep.intertwiner_residual, intertwiner_residual(t, a));
  }
  rep.worst.passes = ok;
  for (int d : {2, 3, n}) rep.icrosspart[d] = icrosspart_identity(d);
  bool exact = true;
  for (const auto& [d, v] : rep.icrosspart) exact = exact && v;
  rep.status = ok && exact && rep.intertwiner_residual <= tol ? Status::pass : Status::mismatch;
  return rep;
}

}  // namespace pcat
