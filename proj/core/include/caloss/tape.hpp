#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace caloss::diff {

using Matrix = Eigen::MatrixXd;

enum class Op : std::uint8_t {
  kLeaf,       // externally set value, gradient tracked
  kConstant,   // externally set value, no consumer cares about its gradient
  kAdd,        // b may broadcast (1x1 or 1xn row)
  kSub,
  kMul,        // elementwise; b may broadcast (1x1 or 1xn row)
  kMatMul,
  kRelu,
  kSigmoid,
  kLog,
  kExp,
  kSoftplus,
  kShift,      // value + scalar
  kScale,      // value * scalar
  kSum,        // -> 1x1
  kMean,       // -> 1x1
  kLogSumExpRows,  // m x n -> m x 1
  kGaussianLogPdf, // elementwise over (y, mu, sigma)
  kDropoutMask,    // elementwise multiply by a stored 0/k mask
  kSliceCols,
  kConcatCols,
};

// A reverse-mode tape over dense double matrices. Nodes are appended in
// topological order; forward() re-evaluates the whole graph (leaves keep
// their externally set values), backward() accumulates exact gradients.
// A tape is confined to one thread during forward/backward.
class Tape {
 public:
  using Id = std::int32_t;

  Id leaf(Matrix value);
  Id leaf(int rows, int cols) { return leaf(Matrix::Zero(rows, cols)); }
  Id constant(Matrix value);

  // Rebinds a leaf/constant/dropout value. Shape must match.
  void set_value(Id id, const Matrix& value);

  Id add(Id a, Id b);
  Id sub(Id a, Id b);
  Id mul(Id a, Id b);
  Id matmul(Id a, Id b);
  Id relu(Id a);
  Id sigmoid(Id a);
  Id log(Id a);
  Id exp(Id a);
  Id softplus(Id a);
  Id shift(Id a, double k);
  Id scale(Id a, double k);
  Id sum(Id a);
  Id mean(Id a);
  Id logsumexp_rows(Id a);
  Id gaussian_logpdf(Id y, Id mu, Id sigma);
  // Mask entries are multipliers (0 for dropped units, 1/keep otherwise) and
  // are rebound per training step via set_mask.
  Id dropout_mask(Id a, Matrix mask);
  void set_mask(Id dropout_node, const Matrix& mask);
  Id slice_cols(Id a, int from, int len);
  Id concat_cols(const std::vector<Id>& parts);

  // Deterministic re-evaluation of every node in creation order.
  void forward();
  // Seeds d(root)/d(root) = 1 (root must be 1x1) and accumulates gradients
  // over fan-out into every node.
  void backward(Id root);

  const Matrix& value(Id id) const { return nodes_[id].value; }
  const Matrix& grad(Id id) const { return nodes_[id].grad; }
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Op op;
    Id a = -1;
    Id b = -1;
    Id c = -1;
    std::vector<Id> many;
    double k = 0.0;
    int from = 0;
    int len = 0;
    Matrix aux;  // dropout mask
    Matrix value;
    Matrix grad;
  };

  Id push(Node node);
  void eval(Node& n);
  const Matrix& val(Id id) const { return nodes_[id].value; }

  std::vector<Node> nodes_;
};

}  // namespace caloss::diff
