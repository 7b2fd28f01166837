// SPDX-License-Identifier: Apache-2.0

#include "mvr/milp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace mvr {

int MilpModel::add_col(std::string col_name, double lb, double ub, double obj_coef,
                       bool integer) {
  col_lb_.push_back(lb);
  col_ub_.push_back(ub);
  obj_.push_back(obj_coef);
  integer_.push_back(integer ? 1 : 0);
  col_names_.push_back(std::move(col_name));
  return num_cols() - 1;
}

int MilpModel::add_row(std::string row_name, RowSense sense,
                       std::span<const std::pair<int, double>> entries, double rhs) {
  // coalesce duplicates, keep ascending column order for determinism
  std::map<int, double> coef;
  for (const auto& [j, v] : entries) {
    if (j < 0 || j >= num_cols())
      throw std::out_of_range("MilpModel::add_row: column index out of range in row " +
                              row_name);
    coef[j] += v;
  }
  for (const auto& [j, v] : coef) {
    col_idx_.push_back(j);
    val_.push_back(v);
  }
  row_start_.push_back(static_cast<int>(col_idx_.size()));
  row_sense_.push_back(sense);
  row_rhs_.push_back(rhs);
  row_names_.push_back(std::move(row_name));
  return num_rows() - 1;
}

std::span<const int> MilpModel::row_cols(int i) const {
  return {col_idx_.data() + row_start_[i],
          static_cast<std::size_t>(row_start_[i + 1] - row_start_[i])};
}

std::span<const double> MilpModel::row_vals(int i) const {
  return {val_.data() + row_start_[i],
          static_cast<std::size_t>(row_start_[i + 1] - row_start_[i])};
}

std::string MilpModel::well_formed_error() const {
  for (int j = 0; j < num_cols(); ++j) {
    if (std::isnan(col_lb_[j]) || std::isnan(col_ub_[j]) || !std::isfinite(obj_[j]))
      return "column " + col_names_[j] + ": non-finite bound or objective";
    if (col_lb_[j] > col_ub_[j]) return "column " + col_names_[j] + ": lb > ub";
    if (integer_[j]) {
      if (!std::isfinite(col_lb_[j]) || !std::isfinite(col_ub_[j]))
        return "integer column " + col_names_[j] + ": bounds must be finite";
      if (col_lb_[j] != std::floor(col_lb_[j]) || col_ub_[j] != std::floor(col_ub_[j]))
        return "integer column " + col_names_[j] + ": non-integral bounds";
    }
  }
  for (std::size_t k = 0; k < val_.size(); ++k)
    if (!std::isfinite(val_[k])) return "non-finite row coefficient";
  for (int i = 0; i < num_rows(); ++i)
    if (!std::isfinite(row_rhs_[i])) return "row " + row_names_[i] + ": non-finite rhs";
  std::unordered_set<std::string> seen;
  for (const auto& nm : col_names_)
    if (!seen.insert("c:" + nm).second) return "duplicate column name " + nm;
  for (const auto& nm : row_names_)
    if (!seen.insert("r:" + nm).second) return "duplicate row name " + nm;
  return {};
}

double MilpModel::objective_value(std::span<const double> x) const {
  double acc = obj_offset;
  for (int j = 0; j < num_cols(); ++j) acc += obj_[j] * x[j];
  return acc;
}

double MilpModel::row_activity(int i, std::span<const double> x) const {
  double acc = 0.0;
  const auto cols = row_cols(i);
  const auto vals = row_vals(i);
  for (std::size_t k = 0; k < cols.size(); ++k) acc += vals[k] * x[cols[k]];
  return acc;
}

}  // namespace mvr
