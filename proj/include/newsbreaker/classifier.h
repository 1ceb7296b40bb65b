//
// Copyright 2026 The NewsBreaker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Built-in two-class text classifier: mean-pooled word embeddings, one hidden
// layer and a softmax over {real, fake}. Gradients are written out by hand;
// the same backward pass drives training and Gradient x Input saliency.

#ifndef NEWSBREAKER_CLASSIFIER_H_
#define NEWSBREAKER_CLASSIFIER_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "newsbreaker/dataset.h"
#include "newsbreaker/random.h"
#include "newsbreaker/text.h"

namespace newsbreaker {

inline constexpr size_t kRealIndex = 0;
inline constexpr size_t kFakeIndex = 1;

constexpr size_t LabelIndex(Label2 label) {
  return label == Label2::kReal ? kRealIndex : kFakeIndex;
}

class Vocab {
 public:
  static constexpr size_t kUnknownIndex = 0;
  static constexpr std::string_view kUnknownToken = "<unk>";

  // Only the unknown token.
  Vocab();

  // Lowercased model tokens with frequency >= min_frequency, ordered by
  // descending frequency then lexicographically.
  static Vocab Build(std::span<const std::string> corpus, size_t min_frequency);

  // Rebuilds a vocabulary from its index order; index 0 must be kUnknownToken.
  static Vocab FromTokens(std::vector<std::string> tokens, size_t min_frequency);

  size_t size() const { return tokens_.size(); }
  size_t min_frequency() const { return min_frequency_; }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& TokenAt(size_t index) const { return tokens_[index]; }

  // Index of an already-lowercased word, or kUnknownIndex.
  size_t IndexOf(std::string_view lowercase_word) const;

  bool operator==(const Vocab& other) const {
    return tokens_ == other.tokens_ && min_frequency_ == other.min_frequency_;
  }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, size_t> index_;
  size_t min_frequency_ = 1;
};

// Tokens the model reads: everything except punctuation.
std::vector<Token> ModelTokens(std::string_view text);

// Vocabulary indices of the model tokens of `text`; [kUnknownIndex] when the
// text has no model tokens.
std::vector<size_t> Encode(const Vocab& vocab, std::string_view text);

// kIdentity makes the whole network affine in its inputs; it exists for
// attribution and gradient oracles.
enum class Activation : uint32_t { kTanh = 0, kIdentity = 1 };

struct ModelParams {
  size_t vocab_size = 0;
  size_t dim = 0;
  size_t hidden = 0;
  Activation activation = Activation::kTanh;
  std::vector<double> embeddings;  // vocab_size x dim, row-major
  std::vector<double> w1;          // dim x hidden
  std::vector<double> b1;          // hidden
  std::vector<double> w2;          // hidden x 2
  std::vector<double> b2;          // 2

  static ModelParams Zeros(size_t vocab_size, size_t dim, size_t hidden,
                           Activation activation = Activation::kTanh);

  std::span<const double> Embedding(size_t index) const {
    return {embeddings.data() + index * dim, dim};
  }
  std::span<double> MutableEmbedding(size_t index) {
    return {embeddings.data() + index * dim, dim};
  }

  // Throws Error(kStructural) on inconsistent shapes or non-finite values.
  void Validate() const;

  bool operator==(const ModelParams&) const = default;
};

struct ClassProbs {
  double p_real = 0.5;
  double p_fake = 0.5;

  // Exact ties go to Real.
  Label2 Predicted() const { return p_fake > p_real ? Label2::kFake : Label2::kReal; }
  double operator[](size_t index) const { return index == kRealIndex ? p_real : p_fake; }
};

struct ForwardResult {
  ClassProbs probs;
  std::array<double, 2> logits{};
  std::vector<double> pooled;      // dim
  std::vector<double> pre_hidden;  // hidden
  std::vector<double> hidden;      // hidden
};

// Throws Error(kInvalidArgument) for an empty index list.
ForwardResult Forward(const ModelParams& params, std::span<const size_t> indices);

// Forward over explicit input vectors, `inputs` holding n x dim row-major.
ForwardResult ForwardEmbedded(const ModelParams& params,
                              std::span<const double> inputs, size_t n);

struct TrainConfig {
  size_t dim = 32;
  size_t hidden = 16;
  double learning_rate = 0.02;
  size_t epochs = 10;
  size_t batch_size = 16;
  uint64_t seed = kDefaultSeed;
  double l2 = 1e-5;

  void Validate() const;
};

struct TrainResult {
  ModelParams params;
  std::vector<double> epoch_loss;  // mean cross-entropy per epoch
};

// Uniform(-0.05, 0.05) weights, zero biases, drawn from Rng(config.seed).
ModelParams InitParams(size_t vocab_size, const TrainConfig& config);

// Mini-batch Adagrad on cross-entropy. Bit-reproducible for a
// fixed seed. Throws Error(kNumeric) if the loss stops being finite.
TrainResult Train(std::span<const LabeledStatement> train_set, const Vocab& vocab,
                  const TrainConfig& config);

struct Model {
  ModelParams params;
  Vocab vocab;

  bool operator==(const Model&) const = default;
};

ClassProbs Predict(const ModelParams& params, const Vocab& vocab, std::string_view text);

// What Gradient x Input differentiates: the pre-softmax logit (default) or
// the softmax probability of the target class.
enum class SaliencyTarget { kLogit, kProbability };

struct SaliencyMap {
  std::vector<std::string> tokens;  // original casing
  std::vector<double> scores;
  Label2 target = Label2::kFake;
};

// d(target) / d(input_k) for each of the n input vectors (n x dim).
std::vector<double> InputGradient(const ModelParams& params,
                                  std::span<const double> inputs, size_t n,
                                  Label2 target,
                                  SaliencyTarget mode = SaliencyTarget::kLogit);

// Per token: sum over embedding dimensions of gradient * embedding.
SaliencyMap GxiSaliency(const ModelParams& params, const Vocab& vocab,
                        std::string_view text, Label2 target = Label2::kFake,
                        SaliencyTarget mode = SaliencyTarget::kLogit);

// Largest relative error between the analytic input gradient of either logit
// and central finite differences over every embedding coordinate of every
// token. Relative error is |a - n| / max(|a|, |n|, 1e-6).
// Throws Error(kInvalidArgument) unless 0 < epsilon <= 1e-2.
double GradCheck(const ModelParams& params, const Vocab& vocab,
                 std::string_view text, double epsilon);

// Binary container; layout in docs/model_format.md.
inline constexpr uint32_t kModelFormatVersion = 1;

std::string SerializeModel(const Model& model);
// Throws Error(kModelFormat) on bad magic, version or truncation.
Model DeserializeModel(std::string_view bytes);

void SaveModel(const Model& model, const std::filesystem::path& path);
Model LoadModel(const std::filesystem::path& path);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_CLASSIFIER_H_
