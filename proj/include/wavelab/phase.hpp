#pragma once

#include "wavelab/grid.hpp"

namespace wavelab {

/// Real-valued degree-1 homogeneous phase, smooth away from the origin.
/// Supported shapes: euclidean |xi|, ellipse sqrt(xi . A xi) with A SPD,
/// and linear v . xi.
class WavePhase {
 public:
  enum class Kind { euclidean, ellipse, linear };

  static WavePhase euclidean(int dim);
  static WavePhase ellipse(std::array<std::array<double, 2>, 2> A);  // dim 2
  static WavePhase linear(int dim, Point v);
  /// The zero phase (for reductions to the unmodulated operator).
  static WavePhase none(int dim);

  double operator()(Point xi) const;
  Point gradient(Point xi) const;

  /// R = sup over the unit sphere of |grad phi|; computed at construction by
  /// a 512-sample sweep with golden-section refinement.
  double gradient_sup() const { return grad_sup_; }
  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return zero_; }

 private:
  WavePhase(Kind k, int dim) : kind_(k), dim_(dim) {}
  void compute_gradient_sup();

  Kind kind_;
  int dim_;
  bool zero_ = false;
  std::array<std::array<double, 2>, 2> A_{};  // ellipse matrix
  Point v_{};                                 // linear direction
  double grad_sup_ = 0.0;
};

}  // namespace wavelab
