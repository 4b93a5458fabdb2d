#pragma once

#include <span>
#include <string>
#include <vector>

#include "uavpc/rng.hpp"

namespace uavpc {

// Fully connected network: rectifier on hidden layers, identity on the
// output. Weights of layer l are stored row-major as [in][out], so
// weights[l][i * out + j] connects input i to output j.
struct MlpParameters {
  std::vector<int> layer_sizes;
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;

  int input_size() const { return layer_sizes.front(); }
  int output_size() const { return layer_sizes.back(); }
  int n_layers() const { return static_cast<int>(layer_sizes.size()) - 1; }
};

// Same shapes as the weights/biases they differentiate.
struct MlpGradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;

  void set_zero();
  void scale(double factor);
};

// Post-activation values per layer; activations[0] is the input copy.
struct ForwardCache {
  std::vector<std::vector<double>> activations;
};

// Weights ~ N(0, 2/fan_in) (rectifier scaling), biases zero.
MlpParameters init_parameters(const std::vector<int>& layer_sizes, Rng& rng);

MlpGradients make_gradients(const MlpParameters& params);

std::vector<double> forward(const MlpParameters& params, std::span<const double> input,
                            ForwardCache* cache = nullptr);

// Reverse accumulation from d(loss)/d(output); adds into `out` so batch
// gradients can be summed across samples. `cache` must come from a forward
// call on the same parameters.
void backward(const MlpParameters& params, const ForwardCache& cache,
              std::span<const double> output_gradient, MlpGradients& out);

// Bias-corrected Adam with conventional constants.
struct AdamState {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long step = 0;
  std::vector<std::vector<double>> m_weights, v_weights;
  std::vector<std::vector<double>> m_biases, v_biases;
};

AdamState make_adam_state(const MlpParameters& params, double learning_rate);

void adam_step(MlpParameters& params, const MlpGradients& grads, AdamState& state);

// Text checkpoint, magic "UPCQ1": layer count, layer sizes, then per layer
// the row-major weights followed by the biases. Values are printed with 17
// significant digits so a round trip reproduces every double bit-exactly.
void save_parameters(const MlpParameters& params, const std::string& path);
MlpParameters load_parameters(const std::string& path);

}  // namespace uavpc
