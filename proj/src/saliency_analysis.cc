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

#include "newsbreaker/saliency_analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "newsbreaker/error.h"
#include "newsbreaker/utf8.h"

namespace newsbreaker {
namespace {

std::string Format(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  std::string out = buffer;
  if (out.rfind("-", 0) == 0 && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string EscapeXml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<WordSaliencyStat> AggregateSaliencyMaps(std::span<const SaliencyMap> maps) {
  struct Accumulator {
    double sum = 0.0;
    size_t occurrences = 0;
    size_t documents = 0;
  };
  std::map<std::string, Accumulator> words;
  for (const SaliencyMap& map : maps) {
    std::set<std::string> seen;
    for (size_t i = 0; i < map.tokens.size(); ++i) {
      std::string word = ToLower(map.tokens[i]);
      Accumulator& acc = words[word];
      acc.sum += map.scores[i];
      ++acc.occurrences;
      if (seen.insert(std::move(word)).second) ++acc.documents;
    }
  }
  std::vector<WordSaliencyStat> stats;
  stats.reserve(words.size());
  for (const auto& [word, acc] : words) {
    stats.push_back({word, acc.documents, acc.occurrences, acc.sum / static_cast<double>(acc.occurrences)});
  }
  std::stable_sort(stats.begin(), stats.end(), [](const WordSaliencyStat& a, const WordSaliencyStat& b) {
    return std::fabs(a.mean_score) > std::fabs(b.mean_score);
  });
  return stats;
}

std::vector<WordSaliencyStat> AggregateWordSaliency(const Model& model, std::span<const std::string> corpus,
                                                    SaliencyTarget mode) {
  std::vector<SaliencyMap> maps;
  maps.reserve(corpus.size());
  for (const std::string& text : corpus) {
    maps.push_back(GxiSaliency(model.params, model.vocab, text, Label2::kFake, mode));
  }
  return AggregateSaliencyMaps(maps);
}

DecileContrast FrequencyDecileContrast(std::span<const WordSaliencyStat> stats) {
  if (stats.empty()) throw Error(ErrorCode::kInvalidArgument, "no word statistics");
  std::vector<const WordSaliencyStat*> order;
  for (const WordSaliencyStat& stat : stats) order.push_back(&stat);
  std::sort(order.begin(), order.end(), [](const WordSaliencyStat* a, const WordSaliencyStat* b) {
    if (a->doc_frequency != b->doc_frequency) return a->doc_frequency > b->doc_frequency;
    return a->word < b->word;
  });
  DecileContrast contrast;
  contrast.decile_size = std::max<size_t>(1, order.size() / 10);
  for (size_t i = 0; i < contrast.decile_size; ++i) {
    contrast.top_frequency_mean_abs += std::fabs(order[i]->mean_score);
    contrast.bottom_frequency_mean_abs += std::fabs(order[order.size() - 1 - i]->mean_score);
  }
  contrast.top_frequency_mean_abs /= static_cast<double>(contrast.decile_size);
  contrast.bottom_frequency_mean_abs /= static_cast<double>(contrast.decile_size);
  return contrast;
}

std::string HeatmapColor(double score, double max_abs) {
  const double intensity = max_abs > 0.0 ? std::min(1.0, std::fabs(score) / max_abs) : 0.0;
  const int fade = static_cast<int>(std::lround(255.0 * (1.0 - intensity)));
  char buffer[32];
  if (score > 0.0 && max_abs > 0.0) {
    std::snprintf(buffer, sizeof(buffer), "rgb(255,%d,%d)", fade, fade);
  } else if (score < 0.0 && max_abs > 0.0) {
    std::snprintf(buffer, sizeof(buffer), "rgb(%d,%d,255)", fade, fade);
  } else {
    std::snprintf(buffer, sizeof(buffer), "rgb(255,255,255)");
  }
  return buffer;
}

std::string RenderHeatmap(std::span<const std::string> tokens, std::span<const double> scores,
                          std::string_view title) {
  if (tokens.size() != scores.size()) {
    throw Error(ErrorCode::kInvalidArgument, "heatmap needs one score per token");
  }
  double max_abs = 0.0;
  for (double s : scores) {
    if (!std::isfinite(s)) throw Error(ErrorCode::kInvalidArgument, "heatmap score is not finite");
    max_abs = std::max(max_abs, std::fabs(s));
  }
  std::string out =
      "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>" + EscapeXml(title) +
      "</title>\n<style>\n"
      "body { font-family: sans-serif; margin: 2em; }\n"
      ".tok { padding: 0.1em 0.2em; border-radius: 0.2em; line-height: 2em; }\n"
      ".legend span { padding: 0.1em 0.5em; }\n"
      "</style>\n</head>\n<body>\n<h1>" +
      EscapeXml(title) + "</h1>\n<p class=\"legend\"><span style=\"background:rgb(255,0,0)\">toward fake</span> "
      "<span style=\"background:rgb(0,0,255);color:white\">toward real</span> max |score| = " +
      Format("%.6f", max_abs) + "</p>\n<p>\n";
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += "<span class=\"tok\" style=\"background:" + HeatmapColor(scores[i], max_abs) + "\" title=\"" +
           Format("%.6f", scores[i]) + "\">" + EscapeXml(tokens[i]) + "</span>";
  }
  out += "\n</p>\n</body>\n</html>\n";
  return out;
}

std::string RenderScatter(std::span<const WordSaliencyStat> stats) {
  if (stats.empty()) throw Error(ErrorCode::kInvalidArgument, "scatter needs at least one point");
  constexpr double kWidth = 640, kHeight = 480, kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;
  double x_max = 0.0;
  double y_abs = 0.0;
  for (const WordSaliencyStat& stat : stats) {
    x_max = std::max(x_max, std::log10(static_cast<double>(std::max<size_t>(stat.doc_frequency, 1))));
    y_abs = std::max(y_abs, std::fabs(stat.mean_score));
  }
  const double x_hi = std::max(1.0, std::ceil(x_max));
  const double y_hi = y_abs > 0.0 ? y_abs * 1.05 : 1.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + plot_w * x / x_hi; };
  auto py = [&](double y) { return kTop + plot_h * (1.0 - (y + y_hi) / (2.0 * y_hi)); };

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">Mean saliency vs. document "
         "frequency</text>\n";
  out += "<line x1=\"" + Format("%.2f", kLeft) + "\" y1=\"" + Format("%.2f", kTop + plot_h) + "\" x2=\"" +
         Format("%.2f", kLeft + plot_w) + "\" y2=\"" + Format("%.2f", kTop + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + Format("%.2f", kLeft) + "\" y1=\"" + Format("%.2f", kTop) + "\" x2=\"" +
         Format("%.2f", kLeft) + "\" y2=\"" + Format("%.2f", kTop + plot_h) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + Format("%.2f", kLeft) + "\" y1=\"" + Format("%.2f", py(0.0)) + "\" x2=\"" +
         Format("%.2f", kLeft + plot_w) + "\" y2=\"" + Format("%.2f", py(0.0)) +
         "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  for (int decade = 0; decade <= static_cast<int>(x_hi); ++decade) {
    const double x = px(decade);
    out += "<line x1=\"" + Format("%.2f", x) + "\" y1=\"" + Format("%.2f", kTop + plot_h) + "\" x2=\"" +
           Format("%.2f", x) + "\" y2=\"" + Format("%.2f", kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + Format("%.2f", x) + "\" y=\"" + Format("%.2f", kTop + plot_h + 18) +
           "\" text-anchor=\"middle\">1e" + std::to_string(decade) + "</text>\n";
  }
  for (double y : {-y_hi, 0.0, y_hi}) {
    out += "<text x=\"" + Format("%.2f", kLeft - 6) + "\" y=\"" + Format("%.2f", py(y) + 4) +
           "\" text-anchor=\"end\">" + Format("%.4f", y) + "</text>\n";
  }
  out += "<text x=\"" + Format("%.2f", kLeft + plot_w / 2) + "\" y=\"" + Format("%.2f", kHeight - 10) +
         "\" text-anchor=\"middle\">document frequency (log scale)</text>\n";
  out += "<text transform=\"translate(16 " + Format("%.2f", kTop + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">mean G x I score</text>\n";
  out += "<g fill=\"steelblue\" fill-opacity=\"0.6\">\n";
  for (const WordSaliencyStat& stat : stats) {
    const double x = std::log10(static_cast<double>(std::max<size_t>(stat.doc_frequency, 1)));
    out += "<circle cx=\"" + Format("%.2f", px(x)) + "\" cy=\"" + Format("%.2f", py(stat.mean_score)) +
           "\" r=\"2.5\"><title>" + EscapeXml(stat.word) + " " + Format("%.6f", stat.mean_score) +
           "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string ScatterCsv(std::span<const WordSaliencyStat> stats) {
  std::string out = "word,doc_frequency,n_occurrences,mean_score\n";
  for (const WordSaliencyStat& stat : stats) {
    out += CsvField(stat.word) + "," + std::to_string(stat.doc_frequency) + "," +
           std::to_string(stat.n_occurrences) + "," + Format("%.6f", stat.mean_score) + "\n";
  }
  return out;
}

}  // namespace newsbreaker
