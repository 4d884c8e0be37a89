#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "necklace/rational.hpp"

namespace necklace {

/// Colors are 1-based: valid ids are 1..k for a k-coloring.
using ColorId = int;

/// A step coloring of the whole real line: finitely many half-open cells
/// [x_{j-1}, x_j) with one color each, and a default color outside
/// [x_0, x_m). With no cells at all, the line is constantly the default
/// color. Stands in for a measurable coloring; every color class is a
/// finite union of intervals (up to two unbounded rays of default color).
class StepColoring {
 public:
  /// Throws std::invalid_argument unless breakpoints are strictly
  /// increasing, cell_colors has exactly breakpoints.size()-1 entries
  /// (or both are empty), and every color lies in 1..k.
  StepColoring(int k, std::vector<Rational> breakpoints,
               std::vector<ColorId> cell_colors, ColorId default_color);

  int color_count() const { return k_; }
  ColorId default_color() const { return default_color_; }
  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<ColorId>& cell_colors() const { return cell_colors_; }

  /// Value at x; right-continuous (breakpoints take the right cell's color).
  ColorId color_at(const Rational& x) const;

  /// Merges equal-colored neighbor cells and strips boundary cells that
  /// already match the default color. Idempotent; two step colorings agree
  /// almost everywhere iff their canonical forms are equal.
  StepColoring canonicalized() const;

  bool operator==(const StepColoring&) const = default;

 private:
  int k_;
  std::vector<Rational> breakpoints_;
  std::vector<ColorId> cell_colors_;
  ColorId default_color_;
};

/// Closed intervals [a_j, b_j] with pairwise disjoint interiors.
/// The constructor sorts members and validates.
class IntervalFamily {
 public:
  explicit IntervalFamily(std::vector<std::pair<Rational, Rational>> members);

  const std::vector<std::pair<Rational, Rational>>& members() const {
    return members_;
  }
  Rational total_length() const;

 private:
  std::vector<std::pair<Rational, Rational>> members_;
};

/// Per-color measures lambda_i(f, F), i = 1..k.
struct MeasureVector {
  std::vector<Rational> per_color;
};

/// Exact Lebesgue measure of f^{-1}(color) within the union of F.
Rational color_measure(const StepColoring& f, const IntervalFamily& family,
                       ColorId color);

MeasureVector color_measures(const StepColoring& f, const IntervalFamily& family);

/// Normalized measure of {x in [-n,n] : f(x) != g(x)}, i.e.
/// lambda(D_n(f,g)) / n. Always in [0, 2].
Rational window_distance(const StepColoring& f, const StepColoring& g, int n);

/// Equal-length half-open monochromatic blocks tiling [-n, n): the
/// interval colorings I_n. block_colors gives the blocks left to right.
StepColoring make_interval_coloring(int n, const std::vector<ColorId>& block_colors,
                                    int k, ColorId default_color);

}  // namespace necklace
