#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tnopt {

using Label = std::string;

/// Dense multidimensional array of doubles with labeled axes.
///
/// Data lives in a fixed canonical layout: row-major, last axis fastest.
/// Labels are unique within a tensor and name the index each axis carries,
/// so operations pair axes by label rather than by position. Tensors are
/// value types; operations never mutate their inputs.
class Tensor {
 public:
  Tensor() = default;  // rank-0 scalar holding 0

  Tensor(std::vector<std::size_t> shape, std::vector<Label> labels);
  Tensor(std::vector<std::size_t> shape, std::vector<Label> labels,
         std::vector<double> data);

  static Tensor scalar(double value);
  static Tensor vector(const Label& label, std::vector<double> values);

  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const;
  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  std::size_t extent(const Label& label) const;
  std::size_t axis_of(const Label& label) const;  // throws structure_error
  bool has_label(const Label& label) const;

  double& at(std::initializer_list<std::size_t> idx);
  double at(std::initializer_list<std::size_t> idx) const;
  std::size_t flat_index(std::span<const std::size_t> idx) const;

  /// Axes reordered to the given label order (a permutation of labels()).
  Tensor transposed(const std::vector<Label>& label_order) const;

  /// Same data under new labels; mapping must be a bijection over existing
  /// labels (identity entries may be omitted).
  Tensor relabeled(const std::map<Label, Label>& mapping) const;

  double max_abs() const;
  bool all_finite() const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Label> labels_;
  std::vector<double> data_{0.0};
};

/// Pairwise tensor contraction: sums over each (label-in-a, label-in-b)
/// pair. Result carries the unpaired axes of a then b, in original order.
Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<std::pair<Label, Label>>& pairs);

/// Tensor (outer) product; label sets must be disjoint.
Tensor outer(const Tensor& a, const Tensor& b);

/// Copy node: 1 where all indices agree, 0 elsewhere. Default labels are
/// k0..k{rank-1} when none are given.
Tensor make_copy_node(std::size_t rank, std::size_t dim,
                      std::vector<Label> labels = {});

/// Square matrix carrying the given values on the diagonal.
Tensor diag_tensor(std::span<const double> values, const Label& row = "d0",
                   const Label& col = "d1");

/// Generalized pairwise merge over same-named shared labels: labels in
/// `sum` are contracted away, labels in `keep` stay as a single shared
/// (diagonal) axis of the result. Both lists must occur in a and b.
/// Result axes: keep..., free-a..., free-b...
Tensor hyper_merge(const Tensor& a, const Tensor& b,
                   std::span<const Label> sum, std::span<const Label> keep);

/// Multiplies slice k of the given axis by weights[k].
Tensor scale_axis(const Tensor& t, const Label& axis,
                  std::span<const double> weights);

/// Keeps the first `keep` indices of the given axis.
Tensor slice_axis(const Tensor& t, const Label& axis, std::size_t keep);

/// True when the tensors hold the same labels and equal data once axes are
/// aligned by label (|a-b| <= atol + rtol*|b| elementwise).
bool label_aligned_close(const Tensor& a, const Tensor& b, double rtol,
                         double atol = 0.0);

}  // namespace tnopt
