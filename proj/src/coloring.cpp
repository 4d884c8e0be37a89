#include "necklace/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace necklace {

StepColoring::StepColoring(int k, std::vector<Rational> breakpoints,
                           std::vector<ColorId> cell_colors, ColorId default_color)
    : k_(k),
      breakpoints_(std::move(breakpoints)),
      cell_colors_(std::move(cell_colors)),
      default_color_(default_color) {
  if (k_ < 1) throw std::invalid_argument("color count must be positive");
  if (breakpoints_.empty() ? !cell_colors_.empty()
                           : cell_colors_.size() != breakpoints_.size() - 1)
    throw std::invalid_argument("cell_colors length must be breakpoint count - 1");
  for (size_t j = 0; j + 1 < breakpoints_.size(); ++j)
    if (!(breakpoints_[j] < breakpoints_[j + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (ColorId c : cell_colors_)
    if (c < 1 || c > k_) throw std::invalid_argument("cell color out of range");
  if (default_color_ < 1 || default_color_ > k_)
    throw std::invalid_argument("default color out of range");
}

ColorId StepColoring::color_at(const Rational& x) const {
  // Cell j is [x_j, x_{j+1}): find the last breakpoint <= x.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it == breakpoints_.begin() || it == breakpoints_.end()) return default_color_;
  return cell_colors_[static_cast<size_t>(it - breakpoints_.begin()) - 1];
}

StepColoring StepColoring::canonicalized() const {
  std::vector<Rational> bp;
  std::vector<ColorId> colors;
  for (size_t j = 0; j < cell_colors_.size(); ++j) {
    if (!colors.empty() && colors.back() == cell_colors_[j]) continue;  // merge
    bp.push_back(breakpoints_[j]);
    colors.push_back(cell_colors_[j]);
  }
  if (!cell_colors_.empty()) bp.push_back(breakpoints_.back());
  // Strip boundary cells that repeat the default color.
  while (!colors.empty() && colors.front() == default_color_) {
    colors.erase(colors.begin());
    bp.erase(bp.begin());
  }
  while (!colors.empty() && colors.back() == default_color_) {
    colors.pop_back();
    bp.pop_back();
  }
  if (colors.empty()) bp.clear();
  return StepColoring(k_, std::move(bp), std::move(colors), default_color_);
}

IntervalFamily::IntervalFamily(std::vector<std::pair<Rational, Rational>> members)
    : members_(std::move(members)) {
  for (const auto& [a, b] : members_)
    if (!(a < b)) throw std::invalid_argument("interval members need a < b");
  std::sort(members_.begin(), members_.end());
  for (size_t j = 0; j + 1 < members_.size(); ++j)
    if (members_[j].second > members_[j + 1].first)
      throw std::invalid_argument("interval members must have disjoint interiors");
}

Rational IntervalFamily::total_length() const {
  Rational total(0);
  for (const auto& [a, b] : members_) total += b - a;
  return total;
}

namespace {

// Measure of f^{-1}(color) within [a, b].
Rational measure_in_interval(const StepColoring& f, const Rational& a,
                             const Rational& b, ColorId color) {
  Rational total(0);
  const auto& bp = f.breakpoints();
  const auto& colors = f.cell_colors();
  if (bp.empty()) return f.default_color() == color ? b - a : Rational(0);
  // Default-colored rays outside [x_0, x_m).
  if (f.default_color() == color) {
    if (a < bp.front()) total += std::min(b, bp.front()) - a;
    if (b > bp.back()) total += b - std::max(a, bp.back());
  }
  for (size_t j = 0; j < colors.size(); ++j) {
    if (colors[j] != color) continue;
    const Rational lo = std::max(a, bp[j]);
    const Rational hi = std::min(b, bp[j + 1]);
    if (lo < hi) total += hi - lo;
  }
  return total;
}

}  // namespace

Rational color_measure(const StepColoring& f, const IntervalFamily& family,
                       ColorId color) {
  if (color < 1 || color > f.color_count())
    throw std::invalid_argument("color out of range");
  Rational total(0);
  for (const auto& [a, b] : family.members())
    total += measure_in_interval(f, a, b, color);
  return total;
}

MeasureVector color_measures(const StepColoring& f, const IntervalFamily& family) {
  MeasureVector m;
  m.per_color.reserve(f.color_count());
  for (ColorId c = 1; c <= f.color_count(); ++c)
    m.per_color.push_back(color_measure(f, family, c));
  return m;
}

Rational window_distance(const StepColoring& f, const StepColoring& g, int n) {
  if (f.color_count() != g.color_count())
    throw std::invalid_argument("mismatched color counts");
  if (n < 1) throw std::invalid_argument("window index must be positive");
  const Rational lo(-n), hi(n);
  // Merge both breakpoint sets restricted to [-n, n]; on each merged cell
  // both colorings are constant.
  std::vector<Rational> grid{lo};
  for (const auto& coloring : {&f, &g})
    for (const auto& x : coloring->breakpoints())
      if (lo < x && x < hi) grid.push_back(x);
  grid.push_back(hi);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  Rational diff(0);
  for (size_t j = 0; j + 1 < grid.size(); ++j)
    if (f.color_at(grid[j]) != g.color_at(grid[j])) diff += grid[j + 1] - grid[j];
  return diff / n;
}

StepColoring make_interval_coloring(int n, const std::vector<ColorId>& block_colors,
                                    int k, ColorId default_color) {
  if (n < 1) throw std::invalid_argument("window index must be positive");
  if (block_colors.empty()) throw std::invalid_argument("empty block list");
  const size_t count = block_colors.size();
  std::vector<Rational> bp;
  bp.reserve(count + 1);
  const Rational width = Rational(2 * n) / Rational(static_cast<long>(count));
  for (size_t j = 0; j <= count; ++j)
    bp.push_back(Rational(-n) + width * Rational(static_cast<long>(j)));
  return StepColoring(k, std::move(bp), block_colors, default_color);
}

}  // namespace necklace
