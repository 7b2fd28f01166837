// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvr {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : char { le = 'L', eq = 'E', ge = 'G' };

// Sparse mixed-integer linear program: columns with bounds/integrality,
// rows stored CSR with a sense and right-hand side, and a linear
// objective (minimization) plus constant offset.
class MilpModel {
 public:
  std::string name = "model";

  int add_col(std::string col_name, double lb, double ub, double obj_coef,
              bool integer = false);
  // Entries must reference existing columns; duplicate columns within one
  // row are coalesced by summation.
  int add_row(std::string row_name, RowSense sense,
              std::span<const std::pair<int, double>> entries, double rhs);

  int num_cols() const { return static_cast<int>(col_lb_.size()); }
  int num_rows() const { return static_cast<int>(row_rhs_.size()); }
  int num_nonzeros() const { return static_cast<int>(val_.size()); }

  double col_lb(int j) const { return col_lb_[j]; }
  double col_ub(int j) const { return col_ub_[j]; }
  double obj(int j) const { return obj_[j]; }
  bool is_integer(int j) const { return integer_[j] != 0; }
  const std::string& col_name(int j) const { return col_names_[j]; }

  RowSense row_sense(int i) const { return row_sense_[i]; }
  double row_rhs(int i) const { return row_rhs_[i]; }
  const std::string& row_name(int i) const { return row_names_[i]; }
  std::span<const int> row_cols(int i) const;
  std::span<const double> row_vals(int i) const;

  double obj_offset = 0.0;

  // Checks the structural invariants: finite coefficients, integer
  // columns with integral finite bounds, lb <= ub, unique names. Returns
  // a description of the first defect, empty if well formed.
  std::string well_formed_error() const;

  double objective_value(std::span<const double> x) const;
  // Signed activity of row i under x.
  double row_activity(int i, std::span<const double> x) const;

 private:
  std::vector<double> col_lb_, col_ub_, obj_;
  std::vector<std::uint8_t> integer_;
  std::vector<std::string> col_names_;
  std::vector<RowSense> row_sense_;
  std::vector<double> row_rhs_;
  std::vector<std::string> row_names_;
  std::vector<int> row_start_{0};
  std::vector<int> col_idx_;
  std::vector<double> val_;
};

}  // namespace mvr
