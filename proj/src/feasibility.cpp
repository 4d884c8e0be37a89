#include "necklace/feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace necklace {
namespace {

// Internal row form: a . x <= b (eq = false) or a . x == b (eq = true).
struct Row {
  std::vector<Rational> a;
  Rational b;
  bool eq = false;

  bool all_zero() const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }
};

// Scales the row so its first nonzero coefficient has absolute value 1.
// Positive scaling preserves the relation, so rows with identical
// coefficient vectors become directly comparable.
void canonical_scale(Row& r) {
  for (const auto& c : r.a) {
    if (c != 0) {
      Rational s = abs(c);
      if (s != 1) {
        for (auto& x : r.a) x /= s;
        r.b /= s;
      }
      return;
    }
  }
}

// Drops trivially satisfied rows, keeps the tightest bound among rows with
// equal coefficient vectors, and reports infeasibility from constant rows.
// Returns false if a row is unsatisfiable on its own.
bool prune_rows(std::vector<Row>& rows) {
  std::vector<Row> kept;
  std::map<std::vector<Rational>, size_t> best;  // coeff vector -> index in kept
  for (auto& r : rows) {
    if (r.all_zero()) {
      if (r.b < 0) return false;
      continue;  // 0 <= b with b >= 0
    }
    canonical_scale(r);
    auto [it, inserted] = best.try_emplace(r.a, kept.size());
    if (inserted) {
      kept.push_back(std::move(r));
    } else if (r.b < kept[it->second].b) {
      kept[it->second].b = std::move(r.b);
    }
  }
  rows = std::move(kept);
  return true;
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& constant,
                  const std::vector<Rational>& x) {
  Rational v = constant;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v += coeffs[i] * x[i];
  return v;
}

}  // namespace

FeasibilityResult solve_feasibility(const FeasibilitySystem& system) {
  const int n = system.variable_count;
  std::vector<Row> eqs, ineqs;
  for (const auto& c : system.constraints) {
    if (static_cast<int>(c.coefficients.size()) > n)
      throw std::invalid_argument("constraint references undeclared variable");
    Row r;
    r.a.assign(n, Rational(0));
    std::copy(c.coefficients.begin(), c.coefficients.end(), r.a.begin());
    r.b = c.constant;
    if (c.relation == Relation::GreaterEq) {
      for (auto& x : r.a) x = -x;
      r.b = -r.b;
    }
    r.eq = c.relation == Relation::Equal;
    (r.eq ? eqs : ineqs).push_back(std::move(r));
  }

  // Phase 1: eliminate equalities by substitution. Each step solves the
  // first remaining equality for its lowest-index variable and substitutes
  // everywhere; substitutions are replayed in reverse when assembling the
  // witness.
  struct Substitution {
    int var;
    std::vector<Rational> expr;  // x_var = expr . x + offset
    Rational offset;
  };
  std::vector<Substitution> subs;
  while (!eqs.empty()) {
    Row row = std::move(eqs.front());
    eqs.erase(eqs.begin());
    int v = -1;
    for (int j = 0; j < n; ++j)
      if (row.a[j] != 0) { v = j; break; }
    if (v < 0) {
      if (row.b != 0) return {false, std::nullopt};
      continue;
    }
    Substitution s;
    s.var = v;
    s.expr.assign(n, Rational(0));
    const Rational pivot = row.a[v];
    for (int j = 0; j < n; ++j)
      if (j != v && row.a[j] != 0) s.expr[j] = -row.a[j] / pivot;
    s.offset = row.b / pivot;
    auto substitute = [&](Row& r) {
      if (r.a[v] == 0) return;
      const Rational c = r.a[v];
      r.a[v] = 0;
      for (int j = 0; j < n; ++j)
        if (s.expr[j] != 0) r.a[j] += c * s.expr[j];
      r.b -= c * s.offset;
    };
    for (auto& r : eqs) substitute(r);
    for (auto& r : ineqs) substitute(r);
    subs.push_back(std::move(s));
  }

  // Phase 2: Fourier-Motzkin elimination of the remaining variables, in
  // declaration order, so the last variable is the one whose interval
  // becomes constant. The rows mentioning each variable are retained so its
  // interval can be reconstructed during back-substitution.
  if (!prune_rows(ineqs)) return {false, std::nullopt};
  std::vector<std::pair<int, std::vector<Row>>> eliminated;  // var, its rows
  for (int v = 0; v < n; ++v) {
    std::vector<Row> with_v, without, lowers, uppers;
    for (auto& r : ineqs) {
      if (r.a[v] == 0) {
        without.push_back(std::move(r));
      } else {
        (r.a[v] > 0 ? uppers : lowers).push_back(r);
        with_v.push_back(std::move(r));
      }
    }
    // lower: a_v < 0 gives x_v >= (b - rest)/a_v ; upper: a_v > 0.
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        Row combined;
        combined.a.assign(n, Rational(0));
        const Rational s_lo = -lo.a[v];  // > 0
        const Rational s_up = up.a[v];   // > 0
        for (int j = 0; j < n; ++j) {
          Rational c = s_up * lo.a[j] + s_lo * up.a[j];
          combined.a[j] = std::move(c);
        }
        combined.a[v] = 0;
        combined.b = s_up * lo.b + s_lo * up.b;
        without.push_back(std::move(combined));
      }
    }
    ineqs = std::move(without);
    if (!prune_rows(ineqs)) return {false, std::nullopt};
    if (!with_v.empty()) eliminated.emplace_back(v, std::move(with_v));
  }

  // Whatever survives has no variables left.
  for (const auto& r : ineqs)
    if (r.b < 0) return {false, std::nullopt};

  // Phase 3: back-substitute. FM variables come back in reverse elimination
  // order; each gets the midpoint of its now-constant interval (one-sided
  // intervals snap to the nearest integer inside them).
  std::vector<Rational> x(n, Rational(0));
  for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
    const int v = it->first;
    std::optional<Rational> lo, hi;
    for (const auto& r : it->second) {
      Rational rest = r.b;
      for (int j = 0; j < n; ++j)
        if (j != v && r.a[j] != 0) rest -= r.a[j] * x[j];
      Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!hi || bound < *hi) hi = std::move(bound);
      } else {
        if (!lo || bound > *lo) lo = std::move(bound);
      }
    }
    if (lo && hi) {
      assert(*lo <= *hi);
      x[v] = (*lo + *hi) / 2;
    } else if (lo) {
      x[v] = Rational(ceil_rat(*lo));
    } else if (hi) {
      x[v] = Rational(floor_rat(*hi));
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    x[it->var] = evaluate(it->expr, it->offset, x);

  // The witness must satisfy the original system exactly; anything else is
  // an elimination bug, not an input error.
  for (const auto& c : system.constraints) {
    Rational lhs(0);
    for (size_t i = 0; i < c.coefficients.size(); ++i)
      if (c.coefficients[i] != 0) lhs += c.coefficients[i] * x[i];
    const bool ok = c.relation == Relation::Equal     ? lhs == c.constant
                    : c.relation == Relation::LessEq ? lhs <= c.constant
                                                     : lhs >= c.constant;
    if (!ok) throw std::logic_error("feasibility witness failed re-verification");
  }
  return {true, std::move(x)};
}

}  // namespace necklace
