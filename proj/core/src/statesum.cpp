#include "tvsum/statesum.hpp"

#include <algorithm>
#include <map>

#include "tvsum/errors.hpp"
#include "tvsum/parallel.hpp"
#include "tvsum/signed_magnitude.hpp"

namespace tvsum {

Real contribution_constant(const QContext& ctx, const AbstractSpine& spine) {
  long disk_faces = 0;
  for (const auto& f : spine.faces) {
    if (f.chi == 1) ++disk_faces;
  }
  return pow_si(ctx.one_minus_q(), -disk_faces) * pow_si(ctx.k_constant(), spine.vertex_count());
}

namespace {

int theta_sign(const AbstractSpine& spine, const Coloring& c, const SpineEdge& e) {
  const long T = (c.colors[static_cast<size_t>(e.faces[0])] +
                  c.colors[static_cast<size_t>(e.faces[1])] +
                  c.colors[static_cast<size_t>(e.faces[2])]) / 2;
  (void)spine;
  return (T % 2 == 0) ? 1 : -1;
}

// The reparse of E(F) uses one 6j per vertex and splits each edge theta as
// sqrt(theta)^2 between its endpoints; since the 6j is computed against
// |theta|, the residual edge signs are carried explicitly.
int edge_sign_product(const AbstractSpine& spine, const Coloring& c) {
  int s = 1;
  for (const auto& e : spine.edges) {
    if (e.chi == 1) s *= theta_sign(spine, c, e);
  }
  return s;
}

Real reparsed_value(const QContext& ctx, const AbstractSpine& spine, const Coloring& c) {
  Real v = ctx.one();
  for (size_t i = 0; i < spine.faces.size(); ++i) {
    if (spine.faces[i].chi == 1) v *= quantum_delta(ctx, c.colors[i]);
  }
  for (int vi = 0; vi < spine.vertex_count(); ++vi) {
    v *= sixj_unitary(ctx, vertex_labeling(spine, c, vi));
  }
  if (edge_sign_product(spine, c) < 0) v.negate();
  return v;
}

}  // namespace

Contribution contribution(const QContext& ctx, const AbstractSpine& spine, const Coloring& c) {
  if (!is_admissible_coloring(spine, c)) throw InvalidInput("coloring not admissible");
  Contribution out;
  out.value = reparsed_value(ctx, spine, c);
  out.q = q_value(spine, c);
  out.peel = peel_index(spine, c);
  out.max_color = c.max_color();
  out.m_even = c.m_even();
  out.bound = contribution_constant(ctx, spine) * ctx.t_pow(out.q);
  return out;
}

Real contribution_definitional(const QContext& ctx, const AbstractSpine& spine,
                               const Coloring& c) {
  if (!is_admissible_coloring(spine, c)) throw InvalidInput("coloring not admissible");
  SignedMagnitude acc = SignedMagnitude::one(ctx.work_prec());
  for (size_t i = 0; i < spine.faces.size(); ++i) {
    if (spine.faces[i].chi == 1) {
      acc *= SignedMagnitude::from_real(quantum_delta(ctx, c.colors[i]));
      if (acc.sign == 0) return ctx.zero();
    }
  }
  for (int vi = 0; vi < spine.vertex_count(); ++vi) {
    acc *= tet(ctx, vertex_labeling(spine, c, vi));
    if (acc.sign == 0) return ctx.zero();
  }
  for (const auto& e : spine.edges) {
    if (e.chi == 1) {
      acc /= theta(ctx, c.colors[static_cast<size_t>(e.faces[0])],
                   c.colors[static_cast<size_t>(e.faces[1])],
                   c.colors[static_cast<size_t>(e.faces[2])]);
    }
  }
  return acc.value();
}

Contribution contribution_shift(const QContext& ctx, const AbstractSpine& spine,
                                const Coloring& c, long k) {
  return contribution(ctx, spine, shift(spine, c, k));
}

namespace {

// Places a vertex's forced (non-growing) slots into the e / (e,f) positions
// via tetrahedral-coefficient symmetries and selects the matching limit.
struct VertexLimit {
  TetLabels labels;
  LimitVariant variant;
};

VertexLimit classify_vertex(const AbstractSpine& spine, const Coloring& c, int vi) {
  const auto& slots = spine.vertices[static_cast<size_t>(vi)].faces;
  std::array<bool, 6> fixed{};
  int n_fixed = 0;
  for (int s = 0; s < 6; ++s) {
    if (spine.faces[static_cast<size_t>(slots[static_cast<size_t>(s)])].forced.has_value()) {
      fixed[static_cast<size_t>(s)] = true;
      ++n_fixed;
    }
  }
  TetLabels labels = vertex_labeling(spine, c, vi);
  if (n_fixed == 0) return {labels, LimitVariant::kAllGrow};

  // Slot layout (a,b,e,c,d,f): column = index % 3, top row = index < 3.
  int col = -1;
  bool single_on_bottom = false;
  for (int s = 0; s < 6; ++s) {
    if (!fixed[static_cast<size_t>(s)]) continue;
    if (col >= 0 && s % 3 != col) {
      throw InvalidInput("augmentation pattern not supported: forced slots span two columns");
    }
    col = s % 3;
    single_on_bottom = s >= 3;
  }
  if (n_fixed > 2) throw InvalidInput("augmentation pattern not supported: >2 forced slots");

  if (col == 0) labels = labels.with_column_order(1, 2, 0);
  if (col == 1) labels = labels.with_column_order(0, 2, 1);
  if (n_fixed == 2) return {labels, LimitVariant::kEAndFFixed};
  if (single_on_bottom) labels = labels.with_pair_flip(0, 2);
  return {labels, LimitVariant::kEFixed};
}

}  // namespace

Real e_infinity(const QContext& ctx, const AbstractSpine& spine, const Coloring& c,
                const Real& tol) {
  if (!(tol > 0L)) throw InvalidInput("tol must be positive");
  if (!is_admissible_coloring(spine, c)) throw InvalidInput("coloring not admissible");
  if (peel_index(spine, c) != 0) {
    throw InvalidInput("e_infinity is defined on 0-peelable colorings");
  }
  Real face_prod = ctx.one();
  int sign = edge_sign_product(spine, c);
  for (size_t i = 0; i < spine.faces.size(); ++i) {
    if (spine.faces[i].chi != 1) continue;
    face_prod *= ctx.t_pow(-2 * c.colors[i]) / ctx.one_minus_q();
    if (c.colors[i] % 2 != 0) sign = -sign;
  }
  const int nv = spine.vertex_count();

  // Sign stability of t^{4k chi} E_k under k -> k+1: each chi-1 edge whose
  // triple grows on an odd number of faces flips its theta sign, and each
  // vertex with a single fixed slot flips its 6j sign (the sum endpoint
  // moves by 3). If the net parity is odd the sequence alternates and the
  // limit does not exist.
  long flips = 0;
  for (const auto& e : spine.edges) {
    if (e.chi != 1) continue;
    int free_faces = 0;
    for (int f : e.faces) {
      if (!spine.faces[static_cast<size_t>(f)].forced.has_value()) ++free_faces;
    }
    flips += free_faces % 2;
  }
  // Per-vertex truncation tolerance: the other factors are bounded by
  // face_prod * K^{nv-1} (each |6j|_inf <= K since its exponent is >= 0).
  Real budget = face_prod * pow_si(ctx.k_constant(), nv - 1) * (4 * nv);
  const Real vertex_tol = tol / budget;

  std::vector<VertexLimit> limits;
  limits.reserve(static_cast<size_t>(nv));
  for (int vi = 0; vi < nv; ++vi) {
    limits.push_back(classify_vertex(spine, c, vi));
    if (limits.back().variant == LimitVariant::kEFixed) ++flips;
  }
  if (flips % 2 != 0) {
    throw NonConvergence("contribution sign alternates under the boundary shift", 0);
  }

  Real prod = face_prod;
  for (const auto& vl : limits) {
    prod *= sixj_infinity(ctx, vl.labels, vl.variant, vertex_tol);
  }
  if (sign < 0) prod.negate();
  return prod;
}

Real e_infinity(const QContext& ctx, const AbstractSpine& spine, const Coloring& c) {
  // Default truncation comfortably below the advertised precision.
  Real tol = ctx.one();
  for (unsigned i = 0; i < ctx.precision_bits(); ++i) tol /= 2L;
  return e_infinity(ctx, spine, c, tol);
}

namespace {

struct ColoringMeta {
  Coloring coloring;
  long max = 0, peel = 0, q = 0, m_even = 0;
};

std::vector<ColoringMeta> enumerate_meta(const AbstractSpine& spine, long bound) {
  std::vector<ColoringMeta> out;
  enumerate_colorings(spine, bound, [&](const Coloring& c) {
    ColoringMeta m;
    m.coloring = c;
    m.max = c.max_color();
    m.m_even = c.m_even();
    m.peel = peel_index(spine, c);
    m.q = q_value(spine, c);
    out.push_back(std::move(m));
  });
  return out;
}

}  // namespace

ZkResult z_k(const QContext& ctx, const AbstractSpine& spine, long k, long n_inner,
             const EvalOptions& options) {
  if (k < 0 || n_inner < 0) throw InvalidInput("z_k needs k, n_inner >= 0");
  const auto metas = enumerate_meta(spine, n_inner + 2);
  const long chi = euler_characteristic(spine);
  const Real dconst = contribution_constant(ctx, spine);

  std::vector<size_t> main_idx, frontier_idx;
  for (size_t i = 0; i < metas.size(); ++i) {
    if (metas[i].peel != 0) continue;
    (metas[i].max <= n_inner ? main_idx : frontier_idx).push_back(i);
  }
  // Sort by max color (enumeration order is already lexicographic).
  std::stable_sort(main_idx.begin(), main_idx.end(),
                   [&](size_t a, size_t b) { return metas[a].max < metas[b].max; });

  std::vector<Real> values(main_idx.size()), abs_values(main_idx.size());
  parallel_for(main_idx.size(), options.threads, [&](size_t i) {
    const auto& m = metas[main_idx[i]];
    Real v = reparsed_value(ctx, spine, shift(spine, m.coloring, k));
    abs_values[i] = abs(v);
    values[i] = std::move(v);
  });

  ZkResult out{tree_sum(values, ctx.work_prec()), tree_sum(abs_values, ctx.work_prec()),
               ctx.zero()};
  const Real scale = ctx.t_pow(-4 * k * chi);
  for (size_t i : frontier_idx) out.truncation_bound += dconst * ctx.t_pow(metas[i].q) * scale;
  return out;
}

const char* case_name(TheoremCase c) {
  switch (c) {
    case TheoremCase::kChiNegative: return "chi_negative";
    case TheoremCase::kChiZero: return "chi_zero";
    case TheoremCase::kChiOne: return "chi_one";
  }
  return "?";
}

TheoremCase case_for(const AbstractSpine& spine) {
  const long chi = euler_characteristic(spine);
  if (chi < 0) return TheoremCase::kChiNegative;
  if (chi == 0) return TheoremCase::kChiZero;
  if (chi == 1) return TheoremCase::kChiOne;
  throw InvalidInput("no convergence case covers chi = " + std::to_string(chi));
}

namespace {

void check_case(TheoremCase tc, long chi) {
  const bool ok = (tc == TheoremCase::kChiNegative && chi < 0) ||
                  (tc == TheoremCase::kChiZero && chi == 0) ||
                  (tc == TheoremCase::kChiOne && chi == 1);
  if (!ok) {
    throw InvalidInput(std::string("case ") + case_name(tc) + " does not match chi = " +
                       std::to_string(chi));
  }
}

// Monotone-decrease onset: smallest grid position p such that deltas are
// nonincreasing for every step after p.
long find_n0(const std::vector<Real>& deltas, const std::vector<long>& idx) {
  if (deltas.size() < 2) return deltas.empty() ? -1 : idx.front();
  size_t last_violation = 0;
  for (size_t i = 1; i < deltas.size(); ++i) {
    if (deltas[i] > deltas[i - 1]) last_violation = i;
  }
  if (last_violation + 1 >= deltas.size()) return -1;  // still growing at the end
  return idx[last_violation];
}

}  // namespace

SumReport theorem_sum(const QContext& ctx, const AbstractSpine& spine, TheoremCase tc, long n,
                      const Real& tol, const EvalOptions& options) {
  if (n < 0) throw InvalidInput("N must be nonnegative");
  if (!(tol > 0L)) throw InvalidInput("tol must be positive");
  const long chi = euler_characteristic(spine);
  check_case(tc, chi);

  const long bound = (tc == TheoremCase::kChiOne) ? 2 * n : n;
  const auto metas = enumerate_meta(spine, bound + 2);
  const Real dconst = contribution_constant(ctx, spine);

  std::vector<size_t> main_idx, frontier_idx;
  for (size_t i = 0; i < metas.size(); ++i) {
    (metas[i].max <= bound ? main_idx : frontier_idx).push_back(i);
  }
  // Grouped by peel index, then max color; lexicographic within (enumeration
  // order is lexicographic and the sort is stable).
  std::stable_sort(main_idx.begin(), main_idx.end(), [&](size_t a, size_t b) {
    if (metas[a].peel != metas[b].peel) return metas[a].peel < metas[b].peel;
    return metas[a].max < metas[b].max;
  });

  std::vector<Real> values(main_idx.size()), abs_values(main_idx.size());
  parallel_for(main_idx.size(), options.threads, [&](size_t i) {
    Real v = reparsed_value(ctx, spine, metas[main_idx[i]].coloring);
    abs_values[i] = abs(v);
    values[i] = std::move(v);
  });

  // Cell sums over contiguous (peel, max) runs, tree-reduced, then combined
  // into per-max buckets in ascending peel order.
  std::map<long, Real> bucket, abs_bucket;
  for (size_t lo = 0; lo < main_idx.size();) {
    size_t hi = lo;
    const long p = metas[main_idx[lo]].peel, mx = metas[main_idx[lo]].max;
    while (hi < main_idx.size() && metas[main_idx[hi]].peel == p && metas[main_idx[hi]].max == mx) {
      ++hi;
    }
    const Real cell = tree_sum(values, lo, hi, ctx.work_prec());
    const Real abs_cell = tree_sum(abs_values, lo, hi, ctx.work_prec());
    auto [it, fresh] = bucket.try_emplace(mx, ctx.zero());
    it->second += cell;
    auto [ait, afresh] = abs_bucket.try_emplace(mx, ctx.zero());
    ait->second += abs_cell;
    lo = hi;
  }
  std::vector<Real> s_prefix(static_cast<size_t>(bound) + 1, ctx.zero());
  std::vector<Real> abs_prefix(static_cast<size_t>(bound) + 1, ctx.zero());
  for (long m = 0; m <= bound; ++m) {
    if (m > 0) {
      s_prefix[static_cast<size_t>(m)] = s_prefix[static_cast<size_t>(m - 1)];
      abs_prefix[static_cast<size_t>(m)] = abs_prefix[static_cast<size_t>(m - 1)];
    }
    if (auto it = bucket.find(m); it != bucket.end()) {
      s_prefix[static_cast<size_t>(m)] += it->second;
      abs_prefix[static_cast<size_t>(m)] += abs_bucket.at(m);
    }
  }

  SumReport rep;
  rep.theorem_case = tc;
  rep.n = n;
  rep.color_bound = bound;
  rep.partial_sum = s_prefix[static_cast<size_t>(bound)];
  rep.abs_partial_sum = abs_prefix[static_cast<size_t>(bound)];
  rep.tail_bound = ctx.zero();
  for (size_t i : frontier_idx) rep.tail_bound += dconst * ctx.t_pow(metas[i].q);

  const long bound_even = bound - (bound % 2);

  if (tc == TheoremCase::kChiNegative || tc == TheoremCase::kChiZero) {
    Real prev = ctx.zero();
    for (long m = 0; m <= bound_even; m += 2) {
      Real r = s_prefix[static_cast<size_t>(m)];
      if (tc == TheoremCase::kChiZero) r /= (m / 2 + 1);
      if (m > 0) {
        rep.delta_indices.push_back(m);
        rep.cauchy_deltas.push_back(abs(r - prev));
      }
      if (m == bound_even) rep.renormalized = r;
      prev = std::move(r);
    }
  } else {
    for (long j = 0; j <= n; ++j) {
      Real r = ctx.t_pow(4 * j) * s_prefix[static_cast<size_t>(std::min(2 * j, bound))];
      if (j > 0) {
        rep.delta_indices.push_back(j);
        rep.cauchy_deltas.push_back(abs(r - rep.renormalized));
      }
      rep.renormalized = std::move(r);
    }
  }
  rep.n0 = find_n0(rep.cauchy_deltas, rep.delta_indices);

  const Real last_delta = rep.cauchy_deltas.empty() ? ctx.zero() : rep.cauchy_deltas.back();
  switch (tc) {
    case TheoremCase::kChiNegative:
      // S_N is the estimate itself; the frontier bounds the truncation.
      rep.renormalized_band = rep.tail_bound;
      break;
    case TheoremCase::kChiZero: {
      // The Cesaro mean behaves like limit + A/L over L populated peel
      // levels, so delta_L = A/(L(L-1)) and the remaining error is about
      // delta * (L-1); (L+1) leaves headroom.
      const long levels = bound_even / 2 + 1;
      rep.renormalized_band = last_delta * (levels + 1);
      break;
    }
    case TheoremCase::kChiOne: {
      // Geometric remainder with ratio t^4. The frontier enters at the
      // renormalized scale t^{4N}.
      const Real r4 = ctx.t_pow(4);
      rep.tail_bound *= ctx.t_pow(4 * n);
      rep.renormalized_band = last_delta * r4 / (ctx.one() - r4) + rep.tail_bound;
      break;
    }
  }

  // Independent series over 0-peelable surfaces (chi_zero and chi_one).
  if (tc == TheoremCase::kChiNegative) {
    rep.series_value = rep.partial_sum;
    rep.series_band = rep.tail_bound;
    rep.series_color_bound = bound;
  } else {
    std::vector<size_t> s0;
    for (size_t i = 0; i < metas.size(); ++i) {
      if (metas[i].peel == 0 && metas[i].max <= bound) s0.push_back(i);
    }
    std::stable_sort(s0.begin(), s0.end(),
                     [&](size_t a, size_t b) { return metas[a].max < metas[b].max; });
    // Per-term bound for the series tail: D t^{Q} (chi_zero) or
    // D t^{Q + 2 m(F)}/(1-q) (chi_one).
    const auto series_weight = [&](const ColoringMeta& m) {
      Real w = dconst * ctx.t_pow(m.q);
      if (tc == TheoremCase::kChiOne) w *= ctx.t_pow(2 * m.m_even) / ctx.one_minus_q();
      return w;
    };
    // Smallest K whose in-range tail dips below tol/2.
    Real running = ctx.zero();
    for (size_t r = s0.size(); r-- > 0;) {
      running += series_weight(metas[s0[r]]);
      if (running > tol / 2L) {
        rep.series_color_bound = metas[s0[r]].max;
        break;
      }
    }
    std::vector<size_t> kept;
    Real shell_tail = ctx.zero();
    for (size_t i : s0) {
      if (metas[i].max <= rep.series_color_bound) {
        kept.push_back(i);
      } else {
        shell_tail += series_weight(metas[i]);
      }
    }
    const Real inner_tol = tol / (4 * static_cast<long>(kept.size() + 1));
    std::vector<Real> terms(kept.size());
    parallel_for(kept.size(), options.threads, [&](size_t i) {
      const auto& m = metas[kept[i]];
      Real v = e_infinity(ctx, spine, m.coloring, inner_tol);
      if (tc == TheoremCase::kChiOne) v *= ctx.t_pow(2 * m.m_even);
      terms[i] = std::move(v);
    });
    rep.series_value = tree_sum(terms, ctx.work_prec());
    if (tc == TheoremCase::kChiOne) rep.series_value /= ctx.one_minus_q();
    rep.series_band = shell_tail + tol / 4L;
  }

  rep.converged = rep.n0 >= 0 && rep.cauchy_deltas.size() >= 3 && rep.renormalized_band.is_finite();
  return rep;
}

TailReport tail_report(const QContext& ctx, const AbstractSpine& spine, long n, long k,
                       long ceiling) {
  if (n < 0 || k < 0) throw InvalidInput("tail_report needs n, k >= 0");
  if (ceiling < n) throw InvalidInput("ceiling must be >= n");
  const Real dconst = contribution_constant(ctx, spine);
  TailReport out{ctx.zero(), n, k, ceiling};
  enumerate_colorings(spine, ceiling, [&](const Coloring& c) {
    const long mx = c.max_color();
    if (mx <= n || peel_index(spine, c) != 0) return;
    out.value += dconst * ctx.t_pow(q_value(spine, c));
  });
  return out;
}

}  // namespace tvsum
