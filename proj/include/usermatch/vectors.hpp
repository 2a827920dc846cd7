#pragma once

#include "usermatch/types.hpp"

#include <string>
#include <vector>

namespace usermatch {

// One view's vector per cookie: sparse TF-IDF rows or dense embeddings
// (stored column-per-cookie so each vector is contiguous).
struct VectorSet {
  std::string view;
  std::vector<std::string> ids;  // ascending
  Eigen::Index dim = 0;
  bool dense = false;
  std::vector<SparseVec> sparse_rows;
  Eigen::MatrixXd dense_cols;  // dim x n

  std::size_t size() const { return ids.size(); }
  int index_of(const std::string& id) const;
  double norm_of(std::size_t i) const;
};

// Sorted-merge dot product over sparse inner indices; the one arithmetic
// path every cosine in the project goes through.
double sparse_dot(const SparseVec& a, const SparseVec& b);

// Builds a sparse vector from (index, value) pairs sorted by index.
SparseVec make_sparse(Eigen::Index dim,
                      const std::vector<std::pair<Eigen::Index, double>>& entries);

}  // namespace usermatch
