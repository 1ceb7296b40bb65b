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

// Corpus-level saliency statistics and the two standalone renderings: a
// per-statement token heatmap (HTML) and a frequency/saliency scatter (SVG
// with a CSV sidecar).

#ifndef NEWSBREAKER_SALIENCY_ANALYSIS_H_
#define NEWSBREAKER_SALIENCY_ANALYSIS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "newsbreaker/classifier.h"

namespace newsbreaker {

struct WordSaliencyStat {
  std::string word;  // lowercased
  size_t doc_frequency = 0;
  size_t n_occurrences = 0;
  double mean_score = 0.0;

  bool operator==(const WordSaliencyStat&) const = default;
};

// Fake-class Gradient x Input over every document, pooled per lowercased
// word. Sorted by |mean_score| descending, ties by word.
std::vector<WordSaliencyStat> AggregateWordSaliency(const Model& model,
                                                    std::span<const std::string> corpus,
                                                    SaliencyTarget mode = SaliencyTarget::kLogit);

// Same pooling over precomputed per-document saliency maps.
std::vector<WordSaliencyStat> AggregateSaliencyMaps(std::span<const SaliencyMap> maps);

// Mean |mean_score| of the most and least frequent tenth of the words
// (at least one word each), ranked by doc_frequency with ties by word.
struct DecileContrast {
  double top_frequency_mean_abs = 0.0;
  double bottom_frequency_mean_abs = 0.0;
  size_t decile_size = 0;
};
// Throws Error(kInvalidArgument) for empty stats.
DecileContrast FrequencyDecileContrast(std::span<const WordSaliencyStat> stats);

// Self-contained HTML page. Throws Error(kInvalidArgument) when the lengths
// differ.
std::string RenderHeatmap(std::span<const std::string> tokens, std::span<const double> scores,
                          std::string_view title = "Gradient x Input");

// CSS colour for `score` given the largest magnitude in the document.
std::string HeatmapColor(double score, double max_abs);

// Self-contained SVG; x is log10(doc_frequency), y is mean_score. Throws
// Error(kInvalidArgument) for empty stats.
std::string RenderScatter(std::span<const WordSaliencyStat> stats);

// Columns word,doc_frequency,n_occurrences,mean_score; scores with six
// decimals. Rows follow `stats`.
std::string ScatterCsv(std::span<const WordSaliencyStat> stats);

}  // namespace newsbreaker

#endif  // NEWSBREAKER_SALIENCY_ANALYSIS_H_
