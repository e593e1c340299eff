#pragma once

#include <random>
#include <vector>

#include "oat/matspace.hpp"

namespace testutil {

// Independent reference implementation of span arithmetic: matrices become
// realified coordinate rows and all rank/membership questions are answered
// by plain Gaussian elimination with partial pivoting.
inline std::vector<std::vector<double>> realified_rows(
    const std::vector<oat::CMatrix>& mats) {
  std::vector<std::vector<double>> rows;
  for (const auto& m : mats) {
    std::vector<double> row;
    row.reserve(2 * m.size());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        row.push_back(m(r, c).real());
        row.push_back(m(r, c).imag());
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int gauss_rank(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  // Complex span: close the row set under multiplication by i
  // (realified as the pairwise (re, im) -> (-im, re) shuffle).
  const std::size_t w = rows[0].size();
  const std::size_t n0 = rows.size();
  for (std::size_t k = 0; k < n0; ++k) {
    std::vector<double> tw(w);
    for (std::size_t j = 0; j + 1 < w; j += 2) {
      tw[j] = -rows[k][j + 1];
      tw[j + 1] = rows[k][j];
    }
    rows.push_back(std::move(tw));
  }
  double scale = tol;
  for (const auto& r : rows)
    for (double v : r) scale = std::max(scale, std::abs(v));
  const double cutoff = tol * scale * 10.0;
  int rank = 0;
  std::size_t col = 0;
  for (; col < w && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
    if (std::abs(rows[pivot][col]) <= cutoff) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const double f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < w; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  // The i-closure doubles real dimension; complex dimension is half.
  return rank / 2;
}

inline int oracle_dim(const std::vector<oat::CMatrix>& mats, double tol) {
  return gauss_rank(realified_rows(mats), tol);
}

inline bool oracle_contains(const std::vector<oat::CMatrix>& mats,
                            const oat::CMatrix& m, double tol) {
  auto with = mats;
  with.push_back(m);
  return oracle_dim(with, tol) == oracle_dim(mats, tol);
}

inline oat::CMatrix random_matrix(std::mt19937& rng, Eigen::Index r,
                                  Eigen::Index c) {
  std::normal_distribution<double> dist;
  oat::CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = oat::Complex(dist(rng), dist(rng));
  return m;
}

}  // namespace testutil
