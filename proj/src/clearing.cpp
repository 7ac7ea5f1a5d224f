// Copyright 2026 The Fennec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fennec/clearing.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace fennec {

Money ClearingResult::Inflow(int firm) const {
  Money in(0);
  for (const auto& row : payments) in += row[firm];
  return in;
}

MoneyVec PrioritySplit(const Money& total, const Strategy& strategy,
                       const MoneyVec& liability_row) {
  MoneyVec out(liability_row.size(), Money(0));
  Money remaining = total < 0 ? Money(0) : total;
  for (const auto& cls : strategy.classes) {
    if (remaining == 0) break;
    Money class_liab(0);
    for (int j : cls) class_liab += liability_row[j];
    if (class_liab == 0) continue;
    const Money take = std::min(remaining, class_liab);
    for (int j : cls) out[j] = take * liability_row[j] / class_liab;
    remaining -= take;
  }
  return out;
}

namespace {

// Per-firm split geometry: class liabilities and their running sums. The
// split of a total t is piecewise linear in t with breakpoints exactly at the
// cumulative class sums (within a class the caps never bind strictly).
struct FirmSplit {
  const Strategy* strategy = nullptr;
  MoneyVec class_liab;
  MoneyVec cums;  // cums[m] = liability of classes 0..m-1; cums.back() == L_i
};

struct Ctx {
  const FinancialNetwork* net;
  const LiabilityMatrix* lm;
  const StrategyProfile* profile;
  int n;
  std::vector<FirmSplit> split;

  Ctx(const FinancialNetwork& network, const LiabilityMatrix& liabilities,
      const StrategyProfile& prof)
      : net(&network), lm(&liabilities), profile(&prof), n(network.size()) {
    split.resize(n);
    for (int i = 0; i < n; ++i) {
      FirmSplit& fs = split[i];
      fs.strategy = &prof.strategies[i];
      fs.cums.push_back(Money(0));
      for (const auto& cls : fs.strategy->classes) {
        Money liab(0);
        for (int j : cls) liab += liabilities.l[i][j];
        fs.class_liab.push_back(liab);
        fs.cums.push_back(fs.cums.back() + liab);
      }
    }
  }

  MoneyVec SplitRow(int i, const Money& total) const {
    return PrioritySplit(total, *split[i].strategy, lm->l[i]);
  }

  MoneyVec InflowAll(const MoneyVec& totals) const {
    MoneyVec in(n, Money(0));
    for (int j = 0; j < n; ++j) {
      if (totals[j] == 0) continue;
      MoneyVec row = SplitRow(j, totals[j]);
      for (int i = 0; i < n; ++i) in[i] += row[i];
    }
    return in;
  }
};

enum class Dir { kUp, kDown };

struct Constraint {
  Money g0;
  MoneyVec coef;  // over active coordinates; constraint is g0 + coef.x >= 0
};

struct Piece {
  std::vector<MoneyVec> B;  // a x a
  MoneyVec c;               // a
  std::vector<Constraint> constraints;
};

struct AffineSolution {
  bool unique = false;
  MoneyVec z;
};

// Gaussian elimination over the rationals for (I - B) z = c.
AffineSolution SolveAffine(const Piece& piece) {
  const int a = static_cast<int>(piece.c.size());
  std::vector<MoneyVec> m(a, MoneyVec(a + 1, Money(0)));
  for (int r = 0; r < a; ++r) {
    for (int cidx = 0; cidx < a; ++cidx) {
      m[r][cidx] = (r == cidx ? Money(1) : Money(0)) - piece.B[r][cidx];
    }
    m[r][a] = piece.c[r];
  }
  std::vector<int> where(a, -1);
  int row = 0;
  for (int col = 0; col < a && row < a; ++col) {
    int pivot = -1;
    for (int r = row; r < a; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[row]);
    for (int r = 0; r < a; ++r) {
      if (r != row && m[r][col] != 0) {
        Money factor = m[r][col] / m[row][col];
        for (int k = col; k <= a; ++k) m[r][k] -= factor * m[row][k];
      }
    }
    where[col] = row;
    ++row;
  }
  AffineSolution sol;
  if (row < a) return sol;  // free variables (or inconsistency): not unique
  sol.unique = true;
  sol.z.assign(a, Money(0));
  for (int col = 0; col < a; ++col) {
    sol.z[col] = m[where[col]][a] / m[where[col]][col];
  }
  return sol;
}

// A monotone payment system over a subset of firms; the rest are pinned.
struct System {
  const Ctx* ctx;
  std::vector<int> active;
  std::vector<char> is_active;
  bool solvency_branch;  // firms with assets >= L_i pay L_i

  System(const Ctx& c, const std::vector<char>& active_mask, bool solvency)
      : ctx(&c), is_active(active_mask), solvency_branch(solvency) {
    for (int i = 0; i < c.n; ++i) {
      if (active_mask[i]) active.push_back(i);
    }
  }

  // One exact application of the map; pinned coordinates are left untouched.
  MoneyVec Apply(const MoneyVec& totals) const {
    const auto& net = *ctx->net;
    const auto& L = ctx->lm->totals;
    MoneyVec in = ctx->InflowAll(totals);
    MoneyVec out = totals;
    for (int i : active) {
      const Money assets = net.external(i) + in[i];
      if (solvency_branch && assets >= L[i]) {
        out[i] = L[i];
        continue;
      }
      Money v = net.costs().alpha * net.external(i) + net.costs().beta * in[i];
      if (v < 0) v = 0;
      if (v > L[i]) v = L[i];
      out[i] = v;
    }
    return out;
  }

  // Affine representation of the map valid around `totals` when moving in
  // direction `dir`, together with the closed region of validity.
  Piece BuildPiece(const MoneyVec& totals, Dir dir) const {
    const auto& net = *ctx->net;
    const auto& L = ctx->lm->totals;
    const int n = ctx->n;
    const int a = static_cast<int>(active.size());
    std::vector<int> pos(n, -1);
    for (int k = 0; k < a; ++k) pos[active[k]] = k;

    // Inflow as an affine function of the active totals.
    MoneyVec in_const(n, Money(0));
    std::vector<MoneyVec> in_coef(n, MoneyVec(a, Money(0)));
    Piece piece;
    piece.B.assign(a, MoneyVec(a, Money(0)));
    piece.c.assign(a, Money(0));

    for (int j = 0; j < n; ++j) {
      const FirmSplit& fs = ctx->split[j];
      const int num_classes = static_cast<int>(fs.class_liab.size());
      const Money t = totals[j];
      if (pos[j] < 0) {
        // Pinned: constant split row.
        MoneyVec row = ctx->SplitRow(j, t);
        for (int i = 0; i < n; ++i) in_const[i] += row[i];
        continue;
      }
      // Locate the frontier segment of t among the class breakpoints.
      int frontier = -1;  // -1: constant piece (t == 0 going down, or t == L)
      Money lo(0), hi(0);
      if (dir == Dir::kUp) {
        if (t == fs.cums.back()) {
          lo = hi = t;
        } else {
          for (int f = 0; f < num_classes; ++f) {
            if (fs.cums[f] <= t && t < fs.cums[f + 1]) {
              frontier = f;
              lo = fs.cums[f];
              hi = fs.cums[f + 1];
              break;
            }
          }
        }
      } else {
        if (t == 0) {
          lo = hi = Money(0);
        } else {
          for (int f = 0; f < num_classes; ++f) {
            if (fs.cums[f] < t && t <= fs.cums[f + 1]) {
              frontier = f;
              lo = fs.cums[f];
              hi = fs.cums[f + 1];
              break;
            }
          }
        }
      }
      // Constant part: classes before the frontier paid in full. For a fully
      // paid firm (frontier < 0, t == L_j) every class is constant.
      const int full_upto = frontier >= 0 ? frontier : (t == 0 ? 0 : num_classes);
      for (int m = 0; m < full_upto; ++m) {
        for (int i : fs.strategy->classes[m]) in_const[i] += ctx->lm->l[j][i];
      }
      if (frontier >= 0) {
        const Money& cl = fs.class_liab[frontier];
        for (int i : fs.strategy->classes[frontier]) {
          const Money w = ctx->lm->l[j][i] / cl;  // pi' within the class
          in_const[i] += -fs.cums[frontier] * w;
          in_coef[i][pos[j]] += w;
        }
      }
      // Segment constraints lo <= t_j <= hi.
      {
        Constraint c1{-lo, MoneyVec(a, Money(0))};
        c1.coef[pos[j]] = 1;
        piece.constraints.push_back(std::move(c1));
        Constraint c2{hi, MoneyVec(a, Money(0))};
        c2.coef[pos[j]] = -1;
        piece.constraints.push_back(std::move(c2));
      }
    }

    // Branch selection per active firm.
    MoneyVec in_now = ctx->InflowAll(totals);
    for (int k = 0; k < a; ++k) {
      const int i = active[k];
      const Money assets = net.external(i) + in_now[i];
      const Money v =
          net.costs().alpha * net.external(i) + net.costs().beta * in_now[i];
      auto add_expr_constraint = [&](const Money& const_part,
                                     const MoneyVec& coef, Money sign,
                                     Money bound) {
        // sign * (expr - bound) >= 0
        Constraint c{sign * (const_part - bound), MoneyVec(a, Money(0))};
        for (int k2 = 0; k2 < a; ++k2) c.coef[k2] = sign * coef[k2];
        piece.constraints.push_back(std::move(c));
      };
      // inflow expression for firm i
      const MoneyVec& icoef = in_coef[i];
      const Money iconst = in_const[i];
      // assets = e_i + inflow; v = alpha e_i + beta inflow
      MoneyVec vcoef(a, Money(0));
      for (int k2 = 0; k2 < a; ++k2) vcoef[k2] = net.costs().beta * icoef[k2];
      const Money vconst =
          net.costs().alpha * net.external(i) + net.costs().beta * iconst;

      const bool solvent = solvency_branch && assets >= L[i];
      if (solvent) {
        piece.c[k] = L[i];
        // e_i + inflow >= L_i
        add_expr_constraint(net.external(i) + iconst, icoef, Money(1), L[i]);
        continue;
      }
      if (solvency_branch) {
        // stay on the default side: e_i + inflow <= L_i
        add_expr_constraint(net.external(i) + iconst, icoef, Money(-1), L[i]);
      }
      if (v < 0 || (v == 0 && dir == Dir::kDown)) {
        piece.c[k] = 0;  // zero-clamped
        add_expr_constraint(vconst, vcoef, Money(-1), Money(0));
      } else if (v > L[i] || (v == L[i] && dir == Dir::kUp)) {
        piece.c[k] = L[i];  // capped at total liabilities
        add_expr_constraint(vconst, vcoef, Money(1), L[i]);
      } else {
        piece.c[k] = vconst;
        for (int k2 = 0; k2 < a; ++k2) piece.B[k][k2] = vcoef[k2];
        add_expr_constraint(vconst, vcoef, Money(1), Money(0));
        add_expr_constraint(vconst, vcoef, Money(-1), L[i]);
      }
    }
    return piece;
  }

  MoneyVec ActivePart(const MoneyVec& totals) const {
    MoneyVec out;
    out.reserve(active.size());
    for (int i : active) out.push_back(totals[i]);
    return out;
  }

  void SetActivePart(MoneyVec& totals, const MoneyVec& part) const {
    for (std::size_t k = 0; k < active.size(); ++k) totals[active[k]] = part[k];
  }
};

bool SatisfiesConstraints(const Piece& piece, const MoneyVec& z) {
  for (const Constraint& c : piece.constraints) {
    Money g = c.g0;
    for (std::size_t k = 0; k < z.size(); ++k) g += c.coef[k] * z[k];
    if (g < 0) return false;
  }
  return true;
}

bool PointwiseLeq(const MoneyVec& a, const MoneyVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Exact linear extrapolation of a periodic stepping pattern. Returns the
// number of extra laps that provably stay within each phase's affine piece,
// together with the per-lap displacement of the newest phase.
struct Ray {
  long long laps = 0;
  MoneyVec delta;  // displacement of the current point per lap
};

std::optional<Ray> DetectRay(const System& sys,
                             const std::deque<MoneyVec>& hist,
                             const MoneyVec& current_active, Dir dir,
                             const MoneyVec& pinned_template) {
  const int a = static_cast<int>(current_active.size());
  const int t = static_cast<int>(hist.size());  // hist then current
  constexpr int kMaxPeriod = 12;
  for (int p = 1; p <= kMaxPeriod; ++p) {
    if (t < 2 * p) continue;
    // Sequence s_0..s_{t} with s_t = current. Phase points: the last p+1.
    auto at = [&](int idx) -> const MoneyVec& {
      return idx == t ? current_active : hist[idx];
    };
    bool periodic = true;
    std::vector<MoneyVec> deltas(p);  // per phase j: s_{t-p+1+j} - s_{t-2p+1+j}
    for (int j = 0; j < p && periodic; ++j) {
      const int hi = t - p + 1 + j;
      const int lo = hi - p;
      if (lo - p < 0) {
        periodic = false;
        break;
      }
      MoneyVec d1(a), d0(a);
      for (int k = 0; k < a; ++k) {
        d1[k] = at(hi)[k] - at(lo)[k];
        d0[k] = at(lo)[k] - at(lo - p)[k];
      }
      if (d1 != d0) {
        periodic = false;
        break;
      }
      deltas[j] = std::move(d1);
    }
    if (!periodic) continue;
    // Verify the chain B_j * delta_j == delta_{j+1} and bound the laps.
    long long best = -1;
    bool ok = true;
    for (int j = 0; j < p && ok; ++j) {
      const int idx = t - p + 1 + j;
      MoneyVec full = pinned_template;
      sys.SetActivePart(full, at(idx));
      Piece piece = sys.BuildPiece(full, dir);
      // chain check
      const MoneyVec& dj = deltas[j];
      const MoneyVec& dnext = deltas[(j + 1) % p];
      for (int r = 0; r < a && ok; ++r) {
        Money acc(0);
        for (int k = 0; k < a; ++k) acc += piece.B[r][k] * dj[k];
        if (acc != dnext[r]) ok = false;
      }
      if (!ok) break;
      // laps while constraints hold: g0 + coef.(y + m d) >= 0
      for (const Constraint& c : piece.constraints) {
        Money g = c.g0;
        Money slope(0);
        for (int k = 0; k < a; ++k) {
          g += c.coef[k] * at(idx)[k];
          slope += c.coef[k] * dj[k];
        }
        if (slope < 0) {
          // m <= g / (-slope); clamp huge jumps, partial rays remain sound
          Money limit = g / -slope;
          BigInt fl = numerator(limit) / denominator(limit);
          if (fl > 1000000000000LL) fl = 1000000000000LL;
          long long m = fl.convert_to<long long>();
          if (m < 0) m = 0;
          if (best < 0 || m < best) best = m;
        }
      }
    }
    if (!ok) continue;
    if (best < 0) {
      // Unbounded growth without any binding constraint would contradict the
      // L_i caps; treat as a regime bug.
      throw Error(ErrorCode::kNonFiniteRegime,
                  "unbounded ray in payment fixed point");
    }
    if (best == 0) return std::nullopt;
    Ray ray;
    ray.laps = best;
    ray.delta = deltas[p - 1];  // phase of the current point
    return ray;
  }
  return std::nullopt;
}

// Monotone exact fixed-point search from `start` in direction `dir`.
MoneyVec SolveMonotone(const System& sys, MoneyVec totals, Dir dir) {
  constexpr int kMaxIters = 20000;
  constexpr int kHistCap = 40;
  std::deque<MoneyVec> hist;
  for (int iter = 0; iter < kMaxIters; ++iter) {
    MoneyVec fx = sys.Apply(totals);
    bool fixed = true;
    for (int i : sys.active) fixed &= (fx[i] == totals[i]);
    if (fixed) return totals;
    // The iteration must be monotone; a violation means the start was not on
    // the right side of the solution.
    for (int i : sys.active) {
      const bool ok = dir == Dir::kUp ? fx[i] >= totals[i] : fx[i] <= totals[i];
      if (!ok) {
        throw Error(ErrorCode::kNonFiniteRegime,
                    "non-monotone payment iteration");
      }
    }
    hist.push_back(sys.ActivePart(totals));
    if (static_cast<int>(hist.size()) > kHistCap) hist.pop_front();
    totals = std::move(fx);

    Piece piece = sys.BuildPiece(totals, dir);
    AffineSolution sol = SolveAffine(piece);
    if (sol.unique) {
      const MoneyVec x_active = sys.ActivePart(totals);
      const bool right_side = dir == Dir::kUp ? PointwiseLeq(x_active, sol.z)
                                              : PointwiseLeq(sol.z, x_active);
      if (right_side && SatisfiesConstraints(piece, sol.z)) {
        sys.SetActivePart(totals, sol.z);
        hist.clear();
      }
      continue;
    }
    if (auto ray = DetectRay(sys, hist, sys.ActivePart(totals), dir, totals)) {
      MoneyVec x_active = sys.ActivePart(totals);
      for (std::size_t k = 0; k < x_active.size(); ++k) {
        x_active[k] += Money(ray->laps) * ray->delta[k];
      }
      sys.SetActivePart(totals, x_active);
      hist.clear();
    }
  }
  throw Error(ErrorCode::kNonFiniteRegime,
              "payment fixed point exceeded its iteration bound");
}

std::vector<char> WClosure(const Ctx& ctx, const MoneyVec& totals) {
  const auto& net = *ctx.net;
  const auto& L = ctx.lm->totals;
  std::vector<char> w(ctx.n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    // Inflows with W members paying in full and the rest frozen at `totals`.
    MoneyVec pinned(ctx.n);
    for (int j = 0; j < ctx.n; ++j) pinned[j] = w[j] ? L[j] : totals[j];
    MoneyVec in = ctx.InflowAll(pinned);
    for (int i = 0; i < ctx.n; ++i) {
      if (w[i] && net.external(i) + in[i] < L[i]) {
        w[i] = 0;
        changed = true;
      }
    }
  }
  return w;
}

// Least clearing fixed point that also grants solvency to every group of
// firms whose mutual full payments are self-sustaining given the money that
// has already provably arrived. This is the maximal proper solution: no
// defaulting firm ever pays with money that cannot be traced to external
// assets or to fully-settling solvent firms.
struct PumpedResult {
  MoneyVec totals;
  int rounds = 0;
};

PumpedResult PumpedLfp(const Ctx& ctx) {
  const auto& L = ctx.lm->totals;
  MoneyVec totals(ctx.n, Money(0));
  std::vector<char> w(ctx.n, 0);
  int rounds = 0;
  while (true) {
    ++rounds;
    std::vector<char> wnew = WClosure(ctx, totals);
    for (int i = 0; i < ctx.n; ++i) {
      if (w[i] && !wnew[i]) {
        throw Error(ErrorCode::kNonFiniteRegime, "solvent set shrank");
      }
    }
    MoneyVec start = totals;
    for (int i = 0; i < ctx.n; ++i) {
      if (wnew[i]) start[i] = L[i];
    }
    std::vector<char> active(ctx.n);
    for (int i = 0; i < ctx.n; ++i) active[i] = !wnew[i];
    System sys(ctx, active, /*solvency=*/true);
    MoneyVec solved = SolveMonotone(sys, start, Dir::kUp);
    if (wnew == w && solved == totals) break;
    w = std::move(wnew);
    totals = std::move(solved);
    if (rounds > 2 * ctx.n + 4) {
      throw Error(ErrorCode::kNonFiniteRegime, "solvent-set loop overran");
    }
  }
  return PumpedResult{totals, rounds};
}

std::vector<int> DefaultsOf(const FinancialNetwork& net,
                            const LiabilityMatrix& lm, const MoneyVec& inflow) {
  std::vector<int> out;
  for (int i = 0; i < net.size(); ++i) {
    if (net.external(i) + inflow[i] < lm.totals[i]) out.push_back(i);
  }
  return out;
}

ClearingResult Assemble(const Ctx& ctx, const MoneyVec& totals, bool filter,
                        int rounds) {
  const auto& net = *ctx.net;
  const auto& lm = *ctx.lm;
  ClearingResult res;
  res.payments = PaymentsFromTotals(lm, *ctx.profile, totals);
  if (filter) res.payments = ProperFilter(res.payments, net);
  res.totals.assign(ctx.n, Money(0));
  MoneyVec inflow(ctx.n, Money(0));
  for (int i = 0; i < ctx.n; ++i) {
    for (int j = 0; j < ctx.n; ++j) {
      res.totals[i] += res.payments[i][j];
      inflow[j] += res.payments[i][j];
    }
  }
  res.defaults = DefaultsOf(net, lm, inflow);
  res.recovery.assign(ctx.n, Money(1));
  for (int i : res.defaults) {
    if (lm.totals[i] > 0) res.recovery[i] = res.totals[i] / lm.totals[i];
  }
  res.proper = true;
  res.converged = true;
  res.rounds = rounds;
  return res;
}

}  // namespace

MoneyVec InnerFixedPoint(const FinancialNetwork& net, const LiabilityMatrix& lm,
                         const StrategyProfile& profile,
                         const std::vector<bool>& in_default,
                         const MoneyVec& start) {
  Ctx ctx(net, lm, profile);
  std::vector<char> active(net.size());
  MoneyVec x = start;
  for (int i = 0; i < net.size(); ++i) {
    active[i] = in_default[i] ? 1 : 0;
    if (!in_default[i]) x[i] = lm.totals[i];
    if (x[i] > lm.totals[i]) x[i] = lm.totals[i];
  }
  System sys(ctx, active, /*solvency=*/false);
  return SolveMonotone(sys, std::move(x), Dir::kDown);
}

RawMaximalResult MaximalRaw(const FinancialNetwork& net,
                            const LiabilityMatrix& lm,
                            const StrategyProfile& profile) {
  Ctx ctx(net, lm, profile);
  RawMaximalResult res;
  res.totals = lm.totals;  // p^(-1): everyone pays in full
  res.in_default.assign(net.size(), false);
  while (true) {
    ++res.rounds;
    MoneyVec inflow = ctx.InflowAll(res.totals);
    std::vector<bool> next = res.in_default;
    for (int i = 0; i < net.size(); ++i) {
      const Money effective_equity =
          net.external(i) + inflow[i] - lm.totals[i];
      if (effective_equity < 0) next[i] = true;
    }
    if (next == res.in_default) break;
    for (int i = 0; i < net.size(); ++i) {
      if (res.in_default[i] && !next[i]) {
        throw Error(ErrorCode::kNonFiniteRegime, "default set shrank");
      }
    }
    MoneyVec prev = res.totals;
    res.totals = InnerFixedPoint(net, lm, profile, next, res.totals);
    if (!PointwiseLeq(res.totals, prev)) {
      throw Error(ErrorCode::kNonFiniteRegime,
                  "payment vector increased across rounds");
    }
    res.in_default = std::move(next);
    if (res.rounds > net.size() + 1) {
      throw Error(ErrorCode::kNonFiniteRegime, "default-set loop overran");
    }
  }
  return res;
}

MoneyMatrix ProperFilter(const MoneyMatrix& payments,
                         const FinancialNetwork& net) {
  const int n = net.size();
  std::vector<char> marked(n, 0), checked(n, 0);
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    if (net.external(i) > 0) {
      marked[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    checked[i] = 1;
    for (int j = 0; j < n; ++j) {
      if (!marked[j] && !checked[j] && payments[i][j] > 0) {
        marked[j] = 1;
        queue.push_back(j);
      }
    }
  }
  MoneyMatrix out = payments;
  for (int i = 0; i < n; ++i) {
    if (!checked[i]) {
      for (int j = 0; j < n; ++j) out[i][j] = 0;
    }
  }
  return out;
}

MoneyMatrix PaymentsFromTotals(const LiabilityMatrix& lm,
                               const StrategyProfile& profile,
                               const MoneyVec& totals) {
  const int n = lm.size();
  MoneyMatrix p = ZeroMatrix(n);
  for (int i = 0; i < n; ++i) {
    p[i] = PrioritySplit(totals[i], profile.strategies[i], lm.l[i]);
  }
  return p;
}

ClearingResult McpClearResolved(const FinancialNetwork& net,
                                const LiabilityMatrix& lm,
                                const StrategyProfile& profile,
                                ClearingDirection direction) {
  ValidateProfile(net, profile);
  Ctx ctx(net, lm, profile);
  if (direction == ClearingDirection::kMinimal) {
    std::vector<char> active(net.size(), 1);
    System sys(ctx, active, /*solvency=*/true);
    MoneyVec totals = SolveMonotone(sys, MoneyVec(net.size(), Money(0)), Dir::kUp);
    return Assemble(ctx, totals, /*filter=*/false, /*rounds=*/1);
  }
  RawMaximalResult raw = MaximalRaw(net, lm, profile);
  PumpedResult pumped = PumpedLfp(ctx);
  ClearingResult res = Assemble(ctx, pumped.totals, /*filter=*/true, raw.rounds);
  if (!PointwiseLeq(res.totals, raw.totals)) {
    throw Error(ErrorCode::kNonFiniteRegime,
                "proper payments exceed the raw maximum");
  }
  return res;
}

ClearingResult McpClear(const FinancialNetwork& net,
                        const StrategyProfile& profile,
                        ClearingDirection direction) {
  LiabilityMatrix lm = ResolveBase(net);
  return McpClearResolved(net, lm, profile, direction);
}

ClearingResult CdsClear(const FinancialNetwork& net,
                        const StrategyProfile& profile,
                        const CdsOptions& options) {
  MoneyVec recovery(net.size(), Money(1));
  ClearingResult last;
  for (int round = 1; round <= options.max_rounds; ++round) {
    LiabilityMatrix lm = ResolveLiabilities(net, recovery);
    last = McpClearResolved(net, lm, profile, ClearingDirection::kMaximal);
    last.rounds = round;
    LiabilityMatrix implied = ResolveLiabilities(net, last.recovery);
    if (implied.l == lm.l) {
      last.converged = true;
      return last;
    }
    recovery = last.recovery;
  }
  last.converged = false;
  return last;
}

ClearingResult ProportionalClear(const FinancialNetwork& net,
                                 const CdsOptions& options) {
  return CdsClear(net, ProportionalProfile(net), options);
}

}  // namespace fennec
