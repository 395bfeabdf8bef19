#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aclb/tensor.hpp"

namespace aclb {

using NodeId = std::uint32_t;

/// Reverse-mode autodiff tape over dense Tensors.
///
/// Values are computed eagerly as nodes are appended, so the tape order is a
/// topological order and backward() is a single reverse sweep. A graph is
/// built for one training step and then cleared; parameters are bound as
/// `param` leaves each step and their gradients read back via grad().
///
/// Gradients only flow through subgraphs that depend on a param leaf;
/// everything else is treated as constant and never allocates a gradient.
class Graph {
 public:
  /// Trainable leaf. The tensor is copied; call grad() after backward() to
  /// retrieve d(loss)/d(leaf).
  NodeId param(const Tensor& t);
  /// Non-trainable leaf.
  NodeId constant(Tensor t);
  NodeId constant_scalar(double v) { return constant(Tensor::scalar(v)); }

  // Operation suite. Shape mismatches throw DataError naming the operation.
  NodeId matmul(NodeId a, NodeId b);  ///< [m,k]x[k,n] -> [m,n] or [m,k]x[k] -> [m]
  NodeId add(NodeId a, NodeId b);     ///< elementwise; either side may be scalar
  NodeId mul(NodeId a, NodeId b);     ///< elementwise; either side may be scalar
  NodeId sigmoid(NodeId x);
  NodeId tanh(NodeId x);
  NodeId concat(std::span<const NodeId> xs);  ///< along last axis, rank <= 1 inputs
  NodeId concat(NodeId a, NodeId b);
  NodeId softmax(NodeId x);  ///< along last axis
  NodeId log(NodeId x);      ///< inputs floored at 1e-12
  NodeId neg(NodeId x);
  NodeId mean(NodeId x);  ///< over all elements -> scalar
  /// Elementwise max over equally-shaped inputs (max over the stacking axis),
  /// tracking the argmax per element; ties go to the earliest input.
  NodeId max_rows(std::span<const NodeId> xs);
  NodeId cosine(NodeId a, NodeId b);  ///< cosine similarity of two vectors -> scalar
  /// Row select along the first axis: [r,c] -> [c]; for rank-1, -> scalar.
  /// Also serves as embedding lookup.
  NodeId lookup(NodeId table, std::size_t index);

  /// Accumulates d(loss)/d(node) for every node the scalar loss depends on.
  void backward(NodeId loss);

  const Tensor& value(NodeId id) const { return nodes_[id].value; }
  double scalar_value(NodeId id) const { return nodes_[id].value.values[0]; }
  /// Gradient of the last backward() loss w.r.t. this node. Zero tensor if
  /// the loss does not reach it.
  const Tensor& grad(NodeId id);

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }
  void reserve(std::size_t n) { nodes_.reserve(n); }

 private:
  enum class Op : std::uint8_t {
    kLeaf,
    kMatMul,
    kAdd,
    kMul,
    kSigmoid,
    kTanh,
    kConcat,
    kSoftmax,
    kLog,
    kNeg,
    kMean,
    kMaxRows,
    kCosine,
    kLookup,
  };

  struct Node {
    Op op = Op::kLeaf;
    bool requires_grad = false;
    NodeId a = 0;
    NodeId b = 0;
    std::size_t aux = 0;           // lookup index
    std::vector<NodeId> nary;      // concat / max_rows inputs
    std::vector<std::size_t> arg;  // max_rows winners
    Tensor value;
    Tensor grad;
  };

  NodeId push(Node n);
  Tensor& grad_buf(NodeId id);
  void backprop(Node& n);

  std::vector<Node> nodes_;
};

}  // namespace aclb
