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

#include "newsbreaker/classifier.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "newsbreaker/error.h"
#include "newsbreaker/io.h"
#include "newsbreaker/utf8.h"

namespace newsbreaker {
namespace {

constexpr double kAdagradEpsilon = 1e-8;

constexpr std::string_view kMagic("NBMODEL\0", 8);

double Activate(Activation activation, double x) {
  return activation == Activation::kTanh ? std::tanh(x) : x;
}

// Derivative of the activation expressed through its output.
double ActivationSlope(Activation activation, double output) {
  return activation == Activation::kTanh ? 1.0 - output * output : 1.0;
}

std::array<double, 2> Softmax(const std::array<double, 2>& logits) {
  const double m = std::max(logits[0], logits[1]);
  const double e0 = std::exp(logits[0] - m);
  const double e1 = std::exp(logits[1] - m);
  const double z = e0 + e1;
  return {e0 / z, e1 / z};
}

// Forward from an already pooled input vector.
ForwardResult ForwardPooled(const ModelParams& params, std::vector<double> pooled) {
  ForwardResult result;
  result.pooled = std::move(pooled);
  result.pre_hidden.assign(params.b1.begin(), params.b1.end());
  for (size_t i = 0; i < params.dim; ++i) {
    const double x = result.pooled[i];
    const double* row = params.w1.data() + i * params.hidden;
    for (size_t j = 0; j < params.hidden; ++j) result.pre_hidden[j] += x * row[j];
  }
  result.hidden.resize(params.hidden);
  for (size_t j = 0; j < params.hidden; ++j) {
    result.hidden[j] = Activate(params.activation, result.pre_hidden[j]);
  }
  result.logits = {params.b2[0], params.b2[1]};
  for (size_t j = 0; j < params.hidden; ++j) {
    result.logits[0] += result.hidden[j] * params.w2[j * 2];
    result.logits[1] += result.hidden[j] * params.w2[j * 2 + 1];
  }
  const std::array<double, 2> p = Softmax(result.logits);
  result.probs = {p[0], p[1]};
  return result;
}

// Backpropagates d(output)/d(logits) to d(output)/d(pooled input).
std::vector<double> PooledGradient(const ModelParams& params,
                                   const ForwardResult& forward,
                                   const std::array<double, 2>& d_logits) {
  std::vector<double> d_pre(params.hidden);
  for (size_t j = 0; j < params.hidden; ++j) {
    const double d_hidden =
        params.w2[j * 2] * d_logits[0] + params.w2[j * 2 + 1] * d_logits[1];
    d_pre[j] = d_hidden * ActivationSlope(params.activation, forward.hidden[j]);
  }
  std::vector<double> d_pooled(params.dim, 0.0);
  for (size_t i = 0; i < params.dim; ++i) {
    const double* row = params.w1.data() + i * params.hidden;
    double sum = 0.0;
    for (size_t j = 0; j < params.hidden; ++j) sum += row[j] * d_pre[j];
    d_pooled[i] = sum;
  }
  return d_pooled;
}

std::array<double, 2> TargetLogitGradient(const ForwardResult& forward,
                                          Label2 target, SaliencyTarget mode) {
  const size_t t = LabelIndex(target);
  std::array<double, 2> d{0.0, 0.0};
  if (mode == SaliencyTarget::kLogit) {
    d[t] = 1.0;
  } else {
    const double pt = forward.probs[t];
    for (size_t j = 0; j < 2; ++j) {
      d[j] = pt * ((j == t ? 1.0 : 0.0) - forward.probs[j]);
    }
  }
  return d;
}

std::vector<double> Gather(const ModelParams& params, std::span<const size_t> indices) {
  std::vector<double> inputs;
  inputs.reserve(indices.size() * params.dim);
  for (size_t index : indices) {
    if (index >= params.vocab_size) {
      throw Error(ErrorCode::kInvalidArgument,
                  "token index " + std::to_string(index) + " outside vocabulary");
    }
    const auto row = params.Embedding(index);
    inputs.insert(inputs.end(), row.begin(), row.end());
  }
  return inputs;
}

bool AllFinite(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

class Writer {
 public:
  void Bytes(std::string_view bytes) { out_.append(bytes); }
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void Doubles(const std::vector<double>& values) {
    for (double v : values) U64(std::bit_cast<uint64_t>(v));
  }
  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view Bytes(size_t n) {
    Need(n);
    const std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  uint32_t U32() {
    Need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += 4;
    return v;
  }
  uint64_t U64() {
    Need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i])) << (8 * i);
    }
    pos_ += 8;
    return v;
  }
  std::vector<double> Doubles(size_t n) {
    if (n > remaining() / 8) {
      throw Error(ErrorCode::kModelFormat, "truncated model file");
    }
    std::vector<double> values(n);
    for (double& v : values) v = std::bit_cast<double>(U64());
    return values;
  }
  size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void Need(size_t n) const {
    if (n > remaining()) {
      throw Error(ErrorCode::kModelFormat, "truncated model file");
    }
  }

  std::string_view bytes_;
  size_t pos_ = 0;
};

}  // namespace

Vocab::Vocab() : tokens_{std::string(kUnknownToken)} {
  index_.emplace(tokens_[0], kUnknownIndex);
}

Vocab Vocab::Build(std::span<const std::string> corpus, size_t min_frequency) {
  if (corpus.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot build a vocabulary from no text");
  }
  std::map<std::string, size_t> counts;
  for (const std::string& text : corpus) {
    for (const Token& token : ModelTokens(text)) ++counts[ToLower(token.surface)];
  }
  std::vector<std::pair<std::string, size_t>> kept;
  for (auto& [word, count] : counts) {
    if (count >= std::max<size_t>(min_frequency, 1)) kept.emplace_back(word, count);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::vector<std::string> tokens{std::string(kUnknownToken)};
  for (auto& [word, count] : kept) tokens.push_back(std::move(word));
  return FromTokens(std::move(tokens), std::max<size_t>(min_frequency, 1));
}

Vocab Vocab::FromTokens(std::vector<std::string> tokens, size_t min_frequency) {
  if (tokens.empty() || tokens[0] != kUnknownToken) {
    throw Error(ErrorCode::kStructural, "vocabulary index 0 must be the unknown token");
  }
  Vocab vocab;
  vocab.tokens_ = std::move(tokens);
  vocab.index_.clear();
  for (size_t i = 0; i < vocab.tokens_.size(); ++i) {
    if (!vocab.index_.emplace(vocab.tokens_[i], i).second) {
      throw Error(ErrorCode::kStructural,
                  "duplicate vocabulary entry '" + vocab.tokens_[i] + "'");
    }
  }
  vocab.min_frequency_ = min_frequency;
  return vocab;
}

size_t Vocab::IndexOf(std::string_view lowercase_word) const {
  const auto it = index_.find(std::string(lowercase_word));
  return it == index_.end() ? kUnknownIndex : it->second;
}

std::vector<Token> ModelTokens(std::string_view text) {
  std::vector<Token> tokens = Tokenize(text);
  std::erase_if(tokens, [](const Token& t) { return t.kind == TokenKind::kPunctuation; });
  return tokens;
}

std::vector<size_t> Encode(const Vocab& vocab, std::string_view text) {
  std::vector<size_t> indices;
  for (const Token& token : ModelTokens(text)) {
    indices.push_back(vocab.IndexOf(ToLower(token.surface)));
  }
  if (indices.empty()) indices.push_back(Vocab::kUnknownIndex);
  return indices;
}

ModelParams ModelParams::Zeros(size_t vocab_size, size_t dim, size_t hidden,
                               Activation activation) {
  ModelParams params;
  params.vocab_size = vocab_size;
  params.dim = dim;
  params.hidden = hidden;
  params.activation = activation;
  params.embeddings.assign(vocab_size * dim, 0.0);
  params.w1.assign(dim * hidden, 0.0);
  params.b1.assign(hidden, 0.0);
  params.w2.assign(hidden * 2, 0.0);
  params.b2.assign(2, 0.0);
  return params;
}

void ModelParams::Validate() const {
  if (vocab_size == 0 || dim == 0 || hidden == 0) {
    throw Error(ErrorCode::kStructural, "model dimensions must be positive");
  }
  if (embeddings.size() != vocab_size * dim || w1.size() != dim * hidden ||
      b1.size() != hidden || w2.size() != hidden * 2 || b2.size() != 2) {
    throw Error(ErrorCode::kStructural, "parameter array sizes do not match dimensions");
  }
  if (activation != Activation::kTanh && activation != Activation::kIdentity) {
    throw Error(ErrorCode::kStructural, "unknown activation");
  }
  for (const auto* values : {&embeddings, &w1, &b1, &w2, &b2}) {
    if (!AllFinite(*values)) {
      throw Error(ErrorCode::kStructural, "model parameters contain non-finite values");
    }
  }
}

ForwardResult ForwardEmbedded(const ModelParams& params, std::span<const double> inputs,
                              size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "forward pass needs at least one token");
  }
  if (inputs.size() != n * params.dim) {
    throw Error(ErrorCode::kInvalidArgument, "input size does not match n x dim");
  }
  std::vector<double> pooled(params.dim, 0.0);
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < params.dim; ++i) pooled[i] += inputs[k * params.dim + i];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  for (double& v : pooled) v *= inv_n;
  return ForwardPooled(params, std::move(pooled));
}

ForwardResult Forward(const ModelParams& params, std::span<const size_t> indices) {
  if (indices.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "forward pass needs at least one token");
  }
  const std::vector<double> inputs = Gather(params, indices);
  return ForwardEmbedded(params, inputs, indices.size());
}

void TrainConfig::Validate() const {
  if (dim == 0 || hidden == 0 || batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dim, hidden and batch size must be positive");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "learning rate must be positive");
  }
  if (!(l2 >= 0.0) || !std::isfinite(l2)) {
    throw Error(ErrorCode::kInvalidArgument, "l2 must be non-negative");
  }
}

ModelParams InitParams(size_t vocab_size, const TrainConfig& config) {
  ModelParams params = ModelParams::Zeros(vocab_size, config.dim, config.hidden);
  Rng rng(config.seed);
  for (auto* values : {&params.embeddings, &params.w1, &params.w2}) {
    for (double& v : *values) v = rng.Uniform(-0.05, 0.05);
  }
  return params;
}

TrainResult Train(std::span<const LabeledStatement> train_set, const Vocab& vocab,
                  const TrainConfig& config) {
  config.Validate();
  if (train_set.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "training set is empty");
  }
  TrainResult result;
  result.params = InitParams(vocab.size(), config);
  ModelParams& p = result.params;

  std::vector<std::vector<size_t>> encoded;
  encoded.reserve(train_set.size());
  for (const LabeledStatement& record : train_set) {
    encoded.push_back(Encode(vocab, record.text));
  }

  // Shuffles draw from their own stream so init and order are independent.
  Rng rng(Mix64(config.seed));
  std::vector<size_t> order(train_set.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::vector<double> g_w1(p.w1.size());
  std::vector<double> g_b1(p.b1.size());
  std::vector<double> g_w2(p.w2.size());
  std::vector<double> g_b2(p.b2.size());
  std::vector<double> g_embeddings(p.embeddings.size(), 0.0);
  std::vector<bool> touched(p.vocab_size, false);
  // Squared-gradient sums, shaped like the parameters.
  ModelParams acc = ModelParams::Zeros(p.vocab_size, p.dim, p.hidden, p.activation);
  std::vector<size_t> touched_rows;

  for (size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.Shuffle(order);
    double loss_sum = 0.0;
    for (size_t start = 0; start < order.size(); start += config.batch_size) {
      const size_t stop = std::min(order.size(), start + config.batch_size);
      std::fill(g_w1.begin(), g_w1.end(), 0.0);
      std::fill(g_b1.begin(), g_b1.end(), 0.0);
      std::fill(g_w2.begin(), g_w2.end(), 0.0);
      std::fill(g_b2.begin(), g_b2.end(), 0.0);

      for (size_t b = start; b < stop; ++b) {
        const std::vector<size_t>& indices = encoded[order[b]];
        const size_t gold = LabelIndex(train_set[order[b]].label2);
        const ForwardResult f = Forward(p, indices);

        const double m = std::max(f.logits[0], f.logits[1]);
        const double log_z =
            m + std::log(std::exp(f.logits[0] - m) + std::exp(f.logits[1] - m));
        loss_sum += log_z - f.logits[gold];

        const std::array<double, 2> d_logits = {
            f.probs.p_real - (gold == kRealIndex ? 1.0 : 0.0),
            f.probs.p_fake - (gold == kFakeIndex ? 1.0 : 0.0)};
        std::vector<double> d_pre(p.hidden);
        for (size_t j = 0; j < p.hidden; ++j) {
          g_w2[j * 2] += f.hidden[j] * d_logits[0];
          g_w2[j * 2 + 1] += f.hidden[j] * d_logits[1];
          const double d_hidden = p.w2[j * 2] * d_logits[0] + p.w2[j * 2 + 1] * d_logits[1];
          d_pre[j] = d_hidden * ActivationSlope(p.activation, f.hidden[j]);
          g_b1[j] += d_pre[j];
        }
        g_b2[0] += d_logits[0];
        g_b2[1] += d_logits[1];
        std::vector<double> d_pooled(p.dim, 0.0);
        for (size_t i = 0; i < p.dim; ++i) {
          const double* row = p.w1.data() + i * p.hidden;
          double* g_row = g_w1.data() + i * p.hidden;
          double sum = 0.0;
          for (size_t j = 0; j < p.hidden; ++j) {
            g_row[j] += f.pooled[i] * d_pre[j];
            sum += row[j] * d_pre[j];
          }
          d_pooled[i] = sum;
        }
        const double inv_n = 1.0 / static_cast<double>(indices.size());
        for (size_t index : indices) {
          if (!touched[index]) {
            touched[index] = true;
            touched_rows.push_back(index);
          }
          double* g_row = g_embeddings.data() + index * p.dim;
          for (size_t i = 0; i < p.dim; ++i) g_row[i] += d_pooled[i] * inv_n;
        }
      }

      // Adagrad step on the batch-mean gradient plus L2. Weight decay on
      // embeddings is lazy: only rows seen in this batch.
      const double inv_batch = 1.0 / static_cast<double>(stop - start);
      auto step = [&](double& param, double& accumulator, double gradient, double decay) {
        const double g = gradient * inv_batch + decay * param;
        accumulator += g * g;
        param -= config.learning_rate * g / (std::sqrt(accumulator) + kAdagradEpsilon);
      };
      for (size_t k = 0; k < p.w1.size(); ++k) step(p.w1[k], acc.w1[k], g_w1[k], config.l2);
      for (size_t k = 0; k < p.w2.size(); ++k) step(p.w2[k], acc.w2[k], g_w2[k], config.l2);
      for (size_t k = 0; k < p.b1.size(); ++k) step(p.b1[k], acc.b1[k], g_b1[k], 0.0);
      for (size_t k = 0; k < p.b2.size(); ++k) step(p.b2[k], acc.b2[k], g_b2[k], 0.0);
      std::sort(touched_rows.begin(), touched_rows.end());
      for (size_t row : touched_rows) {
        for (size_t i = row * p.dim; i < (row + 1) * p.dim; ++i) {
          step(p.embeddings[i], acc.embeddings[i], g_embeddings[i], config.l2);
          g_embeddings[i] = 0.0;
        }
        touched[row] = false;
      }
      touched_rows.clear();
    }
    const double mean_loss = loss_sum / static_cast<double>(order.size());
    if (!std::isfinite(mean_loss)) {
      throw Error(ErrorCode::kNumeric,
                  "training loss became non-finite in epoch " + std::to_string(epoch + 1) +
                      "; try a smaller learning rate");
    }
    result.epoch_loss.push_back(mean_loss);
  }
  return result;
}

ClassProbs Predict(const ModelParams& params, const Vocab& vocab, std::string_view text) {
  const std::vector<size_t> indices = Encode(vocab, text);
  return Forward(params, indices).probs;
}

std::vector<double> InputGradient(const ModelParams& params, std::span<const double> inputs,
                                  size_t n, Label2 target, SaliencyTarget mode) {
  const ForwardResult forward = ForwardEmbedded(params, inputs, n);
  const std::vector<double> d_pooled =
      PooledGradient(params, forward, TargetLogitGradient(forward, target, mode));
  // The mean pool hands every occurrence the same 1/n share.
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> gradient(n * params.dim);
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < params.dim; ++i) gradient[k * params.dim + i] = d_pooled[i] * inv_n;
  }
  return gradient;
}

SaliencyMap GxiSaliency(const ModelParams& params, const Vocab& vocab, std::string_view text,
                        Label2 target, SaliencyTarget mode) {
  SaliencyMap map;
  map.target = target;
  std::vector<size_t> indices;
  for (const Token& token : ModelTokens(text)) {
    map.tokens.push_back(token.surface);
    indices.push_back(vocab.IndexOf(ToLower(token.surface)));
  }
  if (indices.empty()) {
    map.tokens.emplace_back(Vocab::kUnknownToken);
    indices.push_back(Vocab::kUnknownIndex);
  }
  const std::vector<double> inputs = Gather(params, indices);
  const std::vector<double> gradient =
      InputGradient(params, inputs, indices.size(), target, mode);
  map.scores.assign(indices.size(), 0.0);
  for (size_t k = 0; k < indices.size(); ++k) {
    double score = 0.0;
    for (size_t i = 0; i < params.dim; ++i) {
      score += gradient[k * params.dim + i] * inputs[k * params.dim + i];
    }
    map.scores[k] = score;
  }
  return map;
}

double GradCheck(const ModelParams& params, const Vocab& vocab, std::string_view text,
                 double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) {
    throw Error(ErrorCode::kInvalidArgument, "grad check epsilon must lie in (0, 1e-2]");
  }
  const std::vector<size_t> indices = Encode(vocab, text);
  const size_t n = indices.size();
  std::vector<double> inputs = Gather(params, indices);
  double worst = 0.0;
  for (Label2 target : {Label2::kReal, Label2::kFake}) {
    const size_t t = LabelIndex(target);
    const std::vector<double> analytic = InputGradient(params, inputs, n, target);
    for (size_t c = 0; c < inputs.size(); ++c) {
      const double saved = inputs[c];
      inputs[c] = saved + epsilon;
      const double up = ForwardEmbedded(params, inputs, n).logits[t];
      inputs[c] = saved - epsilon;
      const double down = ForwardEmbedded(params, inputs, n).logits[t];
      inputs[c] = saved;
      const double numeric = (up - down) / (2.0 * epsilon);
      const double scale = std::max({std::abs(analytic[c]), std::abs(numeric), 1e-6});
      worst = std::max(worst, std::abs(analytic[c] - numeric) / scale);
    }
  }
  return worst;
}

std::string SerializeModel(const Model& model) {
  const ModelParams& p = model.params;
  p.Validate();
  if (p.vocab_size != model.vocab.size()) {
    throw Error(ErrorCode::kStructural, "embedding rows do not match vocabulary size");
  }
  Writer w;
  w.Bytes(kMagic);
  w.U32(kModelFormatVersion);
  w.U32(static_cast<uint32_t>(p.activation));
  w.U64(p.dim);
  w.U64(p.hidden);
  w.U64(p.vocab_size);
  w.U64(model.vocab.min_frequency());
  for (const std::string& token : model.vocab.tokens()) {
    w.U32(static_cast<uint32_t>(token.size()));
    w.Bytes(token);
  }
  w.Doubles(p.embeddings);
  w.Doubles(p.w1);
  w.Doubles(p.b1);
  w.Doubles(p.w2);
  w.Doubles(p.b2);
  return w.Take();
}

Model DeserializeModel(std::string_view bytes) {
  if (bytes.size() < kMagic.size() || bytes.substr(0, kMagic.size()) != kMagic) {
    throw Error(ErrorCode::kModelFormat, "not a model file");
  }
  Reader r(bytes);
  r.Bytes(kMagic.size());
  const uint32_t version = r.U32();
  if (version != kModelFormatVersion) {
    throw Error(ErrorCode::kModelFormat,
                "unsupported model format version " + std::to_string(version) +
                    " (expected " + std::to_string(kModelFormatVersion) + ")");
  }
  Model model;
  ModelParams& p = model.params;
  const uint32_t activation = r.U32();
  if (activation > static_cast<uint32_t>(Activation::kIdentity)) {
    throw Error(ErrorCode::kModelFormat, "unknown activation code");
  }
  p.activation = static_cast<Activation>(activation);
  p.dim = r.U64();
  p.hidden = r.U64();
  p.vocab_size = r.U64();
  const uint64_t min_frequency = r.U64();
  constexpr uint64_t kMaxDimension = uint64_t{1} << 20;
  if (p.dim == 0 || p.hidden == 0 || p.dim > kMaxDimension || p.hidden > kMaxDimension) {
    throw Error(ErrorCode::kModelFormat, "implausible model dimensions");
  }
  if (p.vocab_size > r.remaining() / 4) {
    throw Error(ErrorCode::kModelFormat, "truncated model file");
  }
  std::vector<std::string> tokens;
  tokens.reserve(p.vocab_size);
  for (size_t i = 0; i < p.vocab_size; ++i) {
    const uint32_t length = r.U32();
    tokens.emplace_back(r.Bytes(length));
  }
  try {
    model.vocab = Vocab::FromTokens(std::move(tokens), min_frequency);
  } catch (const Error& e) {
    throw Error(ErrorCode::kModelFormat, e.what());
  }
  p.embeddings = r.Doubles(p.vocab_size * p.dim);
  p.w1 = r.Doubles(p.dim * p.hidden);
  p.b1 = r.Doubles(p.hidden);
  p.w2 = r.Doubles(p.hidden * 2);
  p.b2 = r.Doubles(2);
  if (r.remaining() != 0) {
    throw Error(ErrorCode::kModelFormat, "trailing bytes after model parameters");
  }
  try {
    p.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kModelFormat, e.what());
  }
  return model;
}

void SaveModel(const Model& model, const std::filesystem::path& path) {
  WriteStringToFile(path, SerializeModel(model));
}

Model LoadModel(const std::filesystem::path& path) {
  return DeserializeModel(ReadFileToString(path));
}

}  // namespace newsbreaker
