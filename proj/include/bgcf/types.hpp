#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bgcf/common.hpp"

namespace bgcf {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Pure measurement model: every indicator loads on exactly one factor.
/// Indicator and factor indices are 0-based; `factor_of[j]` is the factor of
/// indicator j, `first_indicator[q]` the smallest indicator index of factor q.
struct MeasurementStructure {
  int p = 0;
  int k = 0;
  std::vector<int> factor_of;
  std::vector<int> first_indicator;
  std::vector<std::string> indicator_names;  // empty => unnamed
  std::vector<std::string> factor_names;

  static MeasurementStructure from_assignment(std::vector<int> factor_of, int k) {
    MeasurementStructure s;
    s.p = static_cast<int>(factor_of.size());
    s.k = k;
    s.factor_of = std::move(factor_of);
    s.first_indicator.assign(k, -1);
    for (int j = 0; j < s.p; ++j) {
      const int q = s.factor_of[j];
      if (q < 0 || q >= k) throw input_error("structure: factor index out of range");
      if (s.first_indicator[q] < 0) s.first_indicator[q] = j;
    }
    s.validate();
    return s;
  }

  std::vector<std::vector<int>> indicators_per_factor() const {
    std::vector<std::vector<int>> by_factor(k);
    for (int j = 0; j < p; ++j) by_factor[factor_of[j]].push_back(j);
    return by_factor;
  }

  bool is_single_indicator(int q) const { return indicator_count(q) == 1; }

  int indicator_count(int q) const {
    return static_cast<int>(std::count(factor_of.begin(), factor_of.end(), q));
  }

  void validate() const {
    if (p <= 0 || k <= 0) throw input_error("structure: p and k must be positive");
    if (k > p) throw input_error("structure: more factors than indicators");
    if (static_cast<int>(factor_of.size()) != p)
      throw input_error("structure: assignment size mismatch");
    for (int q = 0; q < k; ++q)
      if (indicator_count(q) == 0)
        throw input_error("structure: factor " + std::to_string(q + 1) + " has no indicators");
  }
};

/// CFA parameter blocks: interfactor correlations C (k x k), loadings
/// Lambda (p x k, one nonzero per row), residual variances D (length p).
struct FactorModelParams {
  MatrixXd C;
  MatrixXd Lambda;
  VectorXd D;

  int p() const { return static_cast<int>(Lambda.rows()); }
  int k() const { return static_cast<int>(Lambda.cols()); }
};

namespace detail {

inline bool is_positive_definite(const MatrixXd &m, double tol = 0.0) {
  if (m.rows() != m.cols()) return false;
  Eigen::LLT<MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) return true;
  // LLT can fail marginally; fall back to the spectrum.
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(m);
  return es.eigenvalues().minCoeff() > tol;
}

}  // namespace detail

/// Checks all FactorModelParams invariants against a structure.
inline void validate_params(const FactorModelParams &params, const MeasurementStructure &s) {
  if (params.p() != s.p || params.k() != s.k || params.D.size() != s.p ||
      params.C.rows() != s.k || params.C.cols() != s.k)
    throw input_error("params: shape mismatch with structure");
  if (!params.C.isApprox(params.C.transpose(), 1e-12))
    throw input_error("params: C not symmetric");
  for (int q = 0; q < s.k; ++q)
    if (std::abs(params.C(q, q) - 1.0) > 1e-10)
      throw input_error("params: C diagonal must be 1");
  if (!detail::is_positive_definite(params.C))
    throw numeric_error("params: C not positive definite");
  for (int j = 0; j < s.p; ++j) {
    for (int q = 0; q < s.k; ++q) {
      const bool structural = (s.factor_of[j] == q);
      if (!structural && params.Lambda(j, q) != 0.0)
        throw input_error("params: Lambda nonzero outside measurement structure");
      if (structural && params.Lambda(j, q) == 0.0)
        throw input_error("params: structural loading is zero");
    }
    if (params.D(j) < 0.0) throw input_error("params: negative residual variance");
  }
  for (int q = 0; q < s.k; ++q) {
    if (params.Lambda(s.first_indicator[q], q) <= 0.0)
      throw input_error("params: first loading of factor " + std::to_string(q + 1) +
                        " must be positive");
    if (s.is_single_indicator(q)) {
      const int j = s.first_indicator[q];
      if (std::abs(params.Lambda(j, q) - 1.0) > 1e-10 || std::abs(params.D(j)) > 1e-10)
        throw input_error("params: single-indicator factor requires loading 1, residual 0");
    }
  }
  for (int j = 0; j < s.p; ++j)
    if (params.D(j) == 0.0 && !s.is_single_indicator(s.factor_of[j]))
      throw input_error("params: zero residual on a multi-indicator factor");
}

/// Correlation matrix over X = (Z^T, eta^T)^T: indicator block first.
struct JointCorrelation {
  MatrixXd sigma;
  int p = 0;
  int k = 0;

  JointCorrelation() = default;
  JointCorrelation(MatrixXd m, int p_, int k_) : sigma(std::move(m)), p(p_), k(k_) {
    if (sigma.rows() != p + k || sigma.cols() != p + k)
      throw input_error("joint correlation: dimension mismatch");
  }

  /// Response-block S (p x p).
  Eigen::Block<const MatrixXd> response_block() const { return sigma.topLeftCorner(p, p); }
  /// Factor-block C (k x k).
  Eigen::Block<const MatrixXd> factor_block() const { return sigma.bottomRightCorner(k, k); }
  /// Cross block Lambda*C (p x k).
  Eigen::Block<const MatrixXd> cross_block() const { return sigma.topRightCorner(p, k); }
};

/// Sparsity pattern of the precision matrix over (Z, eta): indicators are
/// mutually non-adjacent, each indicator touches only its factor, and the
/// factor block is complete.
struct PrecisionGraph {
  int p = 0;
  int k = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, vertex indices in [0, p+k)

  int vertex_count() const { return p + k; }

  bool adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
  }
};

enum class ColumnKind { continuous, ordinal };

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::continuous;
  std::vector<double> levels;  // ordinal only; sorted ascending
};

/// n x p observed table with missingness mask (1 = observed, 0 = missing).
/// Missing cells of `values` hold NaN.
struct MixedDataset {
  int n = 0;
  int p = 0;
  MatrixXd values;
  Eigen::ArrayXXi mask;
  std::vector<ColumnSpec> columns;

  bool observed(int i, int j) const { return mask(i, j) != 0; }

  void validate() const {
    if (values.rows() != n || values.cols() != p || mask.rows() != n || mask.cols() != p ||
        static_cast<int>(columns.size()) != p)
      throw input_error("dataset: shape mismatch");
    for (int j = 0; j < p; ++j) {
      std::vector<double> seen;
      for (int i = 0; i < n; ++i) {
        if (!observed(i, j)) continue;
        const double v = values(i, j);
        if (std::isnan(v)) throw input_error("dataset: observed cell holds NaN");
        if (columns[j].kind == ColumnKind::ordinal) {
          const auto &lv = columns[j].levels;
          if (!std::binary_search(lv.begin(), lv.end(), v))
            throw input_error("dataset: value " + std::to_string(v) +
                              " not a declared level of ordinal column " + columns[j].name);
        }
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
      }
      if (seen.size() < 2)
        throw input_error("dataset: column " +
                          (columns[j].name.empty() ? std::to_string(j + 1) : columns[j].name) +
                          " has fewer than two distinct observed values");
    }
    for (const auto &col : columns)
      if (col.kind == ColumnKind::ordinal && col.levels.size() < 2)
        throw input_error("dataset: ordinal column needs at least two levels");
  }
};

}  // namespace bgcf
