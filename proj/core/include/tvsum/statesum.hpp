#pragma once

#include <vector>

#include "tvsum/coloring.hpp"
#include "tvsum/qalgebra.hpp"
#include "tvsum/spine.hpp"
#include "tvsum/surfaces.hpp"

namespace tvsum {

struct EvalOptions {
  int threads = 1;
};

/// D(t, spine) = (1-q)^{-#{f: chi(f)=1}} K(t)^{#v}; |E(F)| <= D t^{Q(F)}.
Real contribution_constant(const QContext& ctx, const AbstractSpine& spine);

struct Contribution {
  Real value;       // E(F)
  Real bound;       // D t^{Q(F)}
  long q = 0;
  long peel = 0;
  long max_color = 0;
  long m_even = 0;  // least even >= max color
};

/// E(F) through the reparsed form prod_f Delta^{chi(f)} prod_v 6j, carrying
/// the edge-theta signs explicitly so the value always equals the
/// definitional form (see contribution_definitional).
Contribution contribution(const QContext& ctx, const AbstractSpine& spine, const Coloring& c);

/// E(F) from the definition: prod Delta^{chi(f)} prod_v Tet / prod_e
/// theta^{chi(e)}, accumulated in log space. Cross-check path.
Real contribution_definitional(const QContext& ctx, const AbstractSpine& spine,
                               const Coloring& c);

/// E_k(F) = E(F + k * boundary), the coloring shifted by 2k on free faces.
Contribution contribution_shift(const QContext& ctx, const AbstractSpine& spine,
                                const Coloring& c, long k);

/// E_inf(F) = lim t^{4k chi} E_k(F) for 0-peelable F, by the limit 6j series
/// (all-grow at free vertices; e / e-and-f variants at vertices with forced
/// slots). tol bounds the truncation of each per-vertex series.
Real e_infinity(const QContext& ctx, const AbstractSpine& spine, const Coloring& c,
                const Real& tol);
Real e_infinity(const QContext& ctx, const AbstractSpine& spine, const Coloring& c);

struct ZkResult {
  Real value;             // Z_k truncated at the inner color bound
  Real abs_value;         // |Z|_k likewise
  Real truncation_bound;  // frontier bound: sum of D t^{Q-4k chi} over the next shell
};
ZkResult z_k(const QContext& ctx, const AbstractSpine& spine, long k, long n_inner,
             const EvalOptions& options = {});

enum class TheoremCase { kChiNegative, kChiZero, kChiOne };
const char* case_name(TheoremCase c);
/// Case implied by euler_characteristic(spine); throws for chi > 1.
TheoremCase case_for(const AbstractSpine& spine);

/// Convergence report for one theorem case.
///
/// chi_negative: renormalized = S_N (the series converges absolutely).
/// chi_zero:     renormalized = S_N / (#populated peel levels) with the level
///               count floor(N/2)+1; series = sum over 0-peelable F of
///               E_inf(F), truncated at series_color_bound.
/// chi_one:      renormalized = t^{4N} S_{2N}; series =
///               (1/(1-q)) sum t^{2 m(F)} E_inf(F) over 0-peelable F.
struct SumReport {
  TheoremCase theorem_case = TheoremCase::kChiZero;
  long n = 0;                    // requested N
  long color_bound = 0;          // enumerated bound (N, or 2N for chi_one)
  Real partial_sum;              // S at color_bound
  Real abs_partial_sum;
  Real renormalized;
  Real renormalized_band;        // error estimate for renormalized
  Real series_value;
  Real series_band;
  long series_color_bound = 0;
  Real tail_bound;               // frontier shell (color_bound, color_bound+2]
  std::vector<long> delta_indices;
  std::vector<Real> cauchy_deltas;
  long n0 = -1;                  // deltas nonincreasing from this index on
  bool converged = false;
};

SumReport theorem_sum(const QContext& ctx, const AbstractSpine& spine, TheoremCase theorem_case,
                      long n, const Real& tol, const EvalOptions& options = {});

/// Empirical tail bound of the restated tail lemma: sum of D t^{Q(F)} over
/// 0-peelable colorings with max color in (n, ceiling]. The t^{4k chi}
/// scaling cancels against the k-shift of Q exactly, so the value is
/// k-invariant; k is recorded for the report.
struct TailReport {
  Real value;
  long n = 0, k = 0, ceiling = 0;
};
TailReport tail_report(const QContext& ctx, const AbstractSpine& spine, long n, long k,
                       long ceiling);

}  // namespace tvsum
