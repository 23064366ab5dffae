#include "polynorm/exact_lp.hpp"

#include "polynorm/error.hpp"

namespace polynorm {
namespace {

// Dense phase-one tableau for  A w = b, w >= 0  with one artificial per row.
// Columns [0, k) are the structural weights, [k, k + m) the artificials and
// column k + m the right-hand side.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::span<const LatticePoint> generators, const RationalPoint& target)
      : rows_(target.dim() + 1),
        structural_(generators.size()),
        width_(structural_ + rows_ + 1),
        cells_(rows_ * width_),
        cost_(width_),
        basis_(rows_) {
    const std::size_t n = target.dim();
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational rhs = i < n ? target[i] : Rational(1);
      const bool flip = sgn(rhs) < 0;
      for (std::size_t j = 0; j < structural_; ++j) {
        Rational a = i < n ? Rational(generators[j][i]) : Rational(1);
        at(i, j) = flip ? Rational(-a) : a;
      }
      at(i, structural_ + i) = 1;
      at(i, width_ - 1) = flip ? Rational(-rhs) : rhs;
      basis_[i] = structural_ + i;
    }
    // Reduced costs of  min sum(artificials): minus the column sums.
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cost_[j] -= at(i, j);
      cost_[width_ - 1] -= at(i, width_ - 1);
    }
  }

  std::optional<std::vector<Rational>> solve() {
    while (sgn(cost_[width_ - 1]) != 0) {
      std::size_t entering = structural_;
      for (std::size_t j = 0; j < structural_; ++j) {
        if (sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == structural_) return std::nullopt;  // optimum > 0

      std::size_t leaving = rows_;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(at(i, entering)) <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, entering);
        if (leaving == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so some row always qualifies.
      if (leaving == rows_) {
        throw Error(ErrorCode::IdentityCheckFailed, "phase-one simplex unbounded");
      }
      pivot(leaving, entering);
    }
    std::vector<Rational> weights(structural_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < structural_) weights[basis_[i]] = at(i, width_ - 1);
    }
    return weights;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / at(row, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(at(row, j)) != 0) at(row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || sgn(at(i, col)) == 0) continue;
      const Rational factor = at(i, col);
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(at(row, j)) != 0) at(i, j) -= factor * at(row, j);
      }
    }
    if (sgn(cost_[col]) != 0) {
      const Rational factor = cost_[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(at(row, j)) != 0) cost_[j] -= factor * at(row, j);
      }
    }
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> convex_weights(
    std::span<const LatticePoint> generators, const RationalPoint& target) {
  if (generators.empty()) return std::nullopt;
  for (const auto& g : generators) require_same_dim(target.dim(), g.dim());
  return PhaseOneTableau(generators, target).solve();
}

}  // namespace polynorm
