#pragma once

// Exact two-phase tableau simplex over an ordered field.
//
//   minimize c^T z  subject to  A z = b,  z >= 0.
//
// Entering columns follow Dantzig's rule until a run of degenerate pivots is
// seen, after which the solver switches to Bland's rule for the rest of the
// solve. Bland's rule cannot cycle, so every solve terminates.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lly {

enum class LpStatus { optimal, infeasible, unbounded };

template <class Field>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Field objective{};
  std::vector<Field> primal;  // z, one entry per column of A
  std::vector<Field> dual;    // y with A^T y <= c and b^T y = objective
  std::size_t pivots = 0;
};

template <class Field>
class SimplexSolver {
 public:
  using Matrix = std::vector<std::vector<Field>>;

  /// Degenerate pivots tolerated under Dantzig's rule before Bland takes over.
  static constexpr std::size_t kDegenerateRunLimit = 32;

  SimplexSolver(const Matrix& A, const std::vector<Field>& b, const std::vector<Field>& c)
      : rows_(b.size()), cols_(c.size()) {
    if (A.size() != rows_) throw std::invalid_argument("row count mismatch");
    width_ = cols_ + rows_ + 1;
    tableau_.assign(rows_, std::vector<Field>(width_, Field(0)));
    sign_.assign(rows_, 1);
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (A[i].size() != cols_) throw std::invalid_argument("column count mismatch");
      const bool flip = b[i] < Field(0);
      sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] = flip ? Field(-A[i][j]) : A[i][j];
      tableau_[i][cols_ + i] = Field(1);
      tableau_[i][width_ - 1] = flip ? Field(-b[i]) : b[i];
      basis_[i] = cols_ + i;
    }
    cost_ = c;
  }

  LpResult<Field> solve() {
    LpResult<Field> result;

    // Phase 1: drive the artificial sum to zero.
    std::vector<Field> phase1(cols_ + rows_, Field(0));
    for (std::size_t i = 0; i < rows_; ++i) phase1[cols_ + i] = Field(1);
    load_objective(phase1);
    run(cols_ + rows_, result.pivots);
    if (objective_value() != Field(0)) {
      result.status = LpStatus::infeasible;
      return result;
    }
    // Pivot zero-level artificials out where a real column allows it; the rest
    // sit in redundant rows whose real entries are all zero.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (tableau_[i][j] != Field(0)) {
          pivot(i, j);
          ++result.pivots;
          break;
        }
      }
    }

    // Phase 2 on the real costs; artificials stay in the tableau to expose the
    // simplex multipliers but may never re-enter.
    std::vector<Field> phase2(cols_ + rows_, Field(0));
    for (std::size_t j = 0; j < cols_; ++j) phase2[j] = cost_[j];
    load_objective(phase2);
    if (!run(cols_, result.pivots)) {
      result.status = LpStatus::unbounded;
      return result;
    }

    result.status = LpStatus::optimal;
    result.objective = objective_value();
    result.primal.assign(cols_, Field(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) result.primal[basis_[i]] = tableau_[i][width_ - 1];
    }
    result.dual.assign(rows_, Field(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      Field y = -reduced_[cols_ + i];
      result.dual[i] = sign_[i] < 0 ? Field(-y) : y;
    }
    return result;
  }

 private:
  void load_objective(const std::vector<Field>& cost) {
    reduced_.assign(width_, Field(0));
    for (std::size_t j = 0; j + 1 < width_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const Field& cb = cost[basis_[i]];
      if (cb == Field(0)) continue;
      for (std::size_t j = 0; j < width_; ++j) reduced_[j] -= cb * tableau_[i][j];
    }
  }

  // Objective row's last entry holds -c_B^T x_B.
  Field objective_value() const { return -reduced_[width_ - 1]; }

  void pivot(std::size_t row, std::size_t col) {
    auto& prow = tableau_[row];
    const Field inv = Field(1) / prow[col];
    for (auto& v : prow) v *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Field factor = tableau_[i][col];
      if (factor == Field(0)) continue;
      auto& r = tableau_[i];
      for (std::size_t j = 0; j < width_; ++j) {
        if (prow[j] != Field(0)) r[j] -= factor * prow[j];
      }
    }
    Field factor = reduced_[col];
    if (factor != Field(0)) {
      for (std::size_t j = 0; j < width_; ++j) {
        if (prow[j] != Field(0)) reduced_[j] -= factor * prow[j];
      }
    }
    basis_[row] = col;
  }

  // Iterates until optimal over entering candidates [0, eligible). Returns
  // false when the objective is unbounded below.
  bool run(std::size_t eligible, std::size_t& pivots) {
    bool bland = false;
    std::size_t degenerate_run = 0;
    for (;;) {
      std::size_t enter = eligible;
      for (std::size_t j = 0; j < eligible; ++j) {
        if (reduced_[j] < Field(0)) {
          if (bland) {
            enter = j;
            break;
          }
          if (enter == eligible || reduced_[j] < reduced_[enter]) enter = j;
        }
      }
      if (enter == eligible) return true;

      std::size_t leave = rows_;
      Field best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Field& a = tableau_[i][enter];
        if (a <= Field(0)) continue;
        Field ratio = tableau_[i][width_ - 1] / a;
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_) return false;

      if (best_ratio == Field(0)) {
        if (++degenerate_run > kDegenerateRunLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      ++pivots;
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_ = 0;
  std::vector<std::vector<Field>> tableau_;
  std::vector<Field> reduced_;
  std::vector<Field> cost_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

template <class Field>
LpResult<Field> solve_standard_form(const std::vector<std::vector<Field>>& A,
                                    const std::vector<Field>& b, const std::vector<Field>& c) {
  return SimplexSolver<Field>(A, b, c).solve();
}

}  // namespace lly
