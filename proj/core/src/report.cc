// Copyright 2026 The Subaspect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subaspect/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "subaspect/fileio.h"

namespace subaspect {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string Num(double v, const char* format = "%.9g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class Svg {
 public:
  Svg(int width, int height, const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
         << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
         << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out_ << "<rect width=\"" << width << "\" height=\"" << height
         << "\" fill=\"white\"/>\n";
    Text(width / 2.0, 20, title, "middle", 14);
  }

  void Rect(double x, double y, double w, double h, const char* fill) {
    out_ << "<rect x=\"" << Num(x, "%.2f") << "\" y=\"" << Num(y, "%.2f")
         << "\" width=\"" << Num(w, "%.2f") << "\" height=\"" << Num(h, "%.2f")
         << "\" fill=\"" << fill << "\"/>\n";
  }

  void Line(double x1, double y1, double x2, double y2) {
    out_ << "<line x1=\"" << Num(x1, "%.2f") << "\" y1=\"" << Num(y1, "%.2f")
         << "\" x2=\"" << Num(x2, "%.2f") << "\" y2=\"" << Num(y2, "%.2f")
         << "\" stroke=\"black\"/>\n";
  }

  void Circle(double x, double y, double r, const char* fill) {
    out_ << "<circle cx=\"" << Num(x, "%.2f") << "\" cy=\"" << Num(y, "%.2f")
         << "\" r=\"" << Num(r, "%.2f") << "\" fill=\"" << fill << "\"/>\n";
  }

  void Text(double x, double y, const std::string& text,
            const char* anchor = "start", int size = 12) {
    out_ << "<text x=\"" << Num(x, "%.2f") << "\" y=\"" << Num(y, "%.2f")
         << "\" text-anchor=\"" << anchor << "\" font-size=\"" << size << "\">"
         << XmlEscape(text) << "</text>\n";
  }

  std::string Finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

// Horizontal bar chart of values in [0, 1].
std::string BarChart(const std::string& title,
                     const std::vector<std::pair<std::string, double>>& bars) {
  const int row = 22;
  const int height = 50 + row * static_cast<int>(bars.size());
  Svg svg(520, height, title);
  const double left = 150;
  const double width = 300;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double y = 35 + row * static_cast<double>(i);
    const double v = std::clamp(bars[i].second, 0.0, 1.0);
    svg.Text(left - 6, y + 14, bars[i].first, "end");
    svg.Rect(left, y + 3, width * v, row - 6, "#4e79a7");
    svg.Text(left + width * v + 4, y + 14, FormatPercent(bars[i].second));
  }
  return svg.Finish();
}

std::string HistogramChart(const std::string& title, const Histogram& h) {
  Svg svg(520, 260, title);
  std::uint64_t peak = 1;
  for (auto c : h) peak = std::max(peak, c);
  const double left = 40;
  const double bottom = 220;
  const double bar = 22;
  for (std::size_t b = 0; b < h.size(); ++b) {
    const double height = 170.0 * static_cast<double>(h[b]) / peak;
    svg.Rect(left + bar * b, bottom - height, bar - 2, height, "#59a14f");
  }
  svg.Line(left, bottom, left + bar * h.size(), bottom);
  svg.Text(left, bottom + 16, "0.0");
  svg.Text(left + bar * h.size(), bottom + 16, "1.0", "end");
  svg.Text(left + bar * h.size() / 2.0, bottom + 32, "normalized rank",
           "middle");
  return svg.Finish();
}

std::string TriangleChart(const BiasReport& report) {
  Svg svg(480, 440, "Aspect triangle: " + report.corpus);
  // Vertices: position (top), diversity (bottom left), importance (bottom
  // right).
  const double px = 240, py = 60, dx = 60, dy = 380, ix = 420, iy = 380;
  svg.Line(px, py, dx, dy);
  svg.Line(dx, dy, ix, iy);
  svg.Line(ix, iy, px, py);
  svg.Text(px, py - 10, "Position", "middle");
  svg.Text(dx, dy + 20, "Diversity", "middle");
  svg.Text(ix, iy + 20, "Importance", "middle");
  auto plot = [&](const Triangle& t, const char* color,
                  const std::string& label) {
    const double x = t.position * px + t.diversity * dx + t.importance * ix;
    const double y = t.position * py + t.diversity * dy + t.importance * iy;
    svg.Circle(x, y, 5, color);
    svg.Text(x + 8, y + 4, label);
  };
  if (report.triangle) plot(*report.triangle, "#e15759", report.corpus);
  for (const auto& s : report.system_bias) {
    plot(s.triangle, "#4e79a7", s.algorithm);
  }
  return svg.Finish();
}

}  // namespace

std::string FormatPercent(double fraction) {
  const double tenths = std::floor(fraction * 1000.0 + 0.5 + 1e-9);
  double value = tenths / 10.0;
  if (value == 0.0) value = 0.0;  // no "-0.0"
  return Num(value, "%.1f");
}

std::map<std::string, std::string> RenderReport(const BiasReport& report) {
  std::map<std::string, std::string> files;

  {
    std::ostringstream csv;
    csv << "algorithm,R1,R2,RL,R,VO,SO,docs,vo_missing\n";
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& s : report.algorithms) {
      csv << CsvField(s.algorithm) << ',' << FormatPercent(s.r1) << ','
          << FormatPercent(s.r2) << ',' << FormatPercent(s.rl) << ','
          << FormatPercent(s.r) << ',' << (s.vo ? FormatPercent(*s.vo) : "")
          << ',' << FormatPercent(s.so) << ',' << s.num_docs << ','
          << s.vo_missing << '\n';
      bars.emplace_back(s.algorithm, s.r);
    }
    files["report.csv"] = csv.str();
    files["charts/rouge.svg"] =
        BarChart("Mean ROUGE (R): " + report.corpus, bars);
  }

  if (report.triangle) {
    ordered_json j;
    j["corpus"] = report.corpus;
    j["aspects"] = {{"position", "first"},
                    {"diversity", "convexfall"},
                    {"importance", "n_nearest"}};
    j["inputs"] = {{"position", report.triangle_inputs[0]},
                   {"diversity", report.triangle_inputs[1]},
                   {"importance", report.triangle_inputs[2]}};
    j["coordinates"] = {{"position", report.triangle->position},
                        {"diversity", report.triangle->diversity},
                        {"importance", report.triangle->importance}};
    j["degenerate"] = report.triangle->degenerate;
    files["triangle.json"] = j.dump(2) + "\n";
  }
  if (report.triangle || !report.system_bias.empty()) {
    files["charts/triangle.svg"] = TriangleChart(report);
  }

  if (report.venn) {
    const VennSummary& v = *report.venn;
    ordered_json j;
    j["corpus"] = report.corpus;
    j["docs"] = v.num_docs;
    ordered_json fractions = ordered_json::object();
    ordered_json counts = ordered_json::object();
    std::vector<std::pair<std::string, double>> bars;
    for (std::size_t r = 0; r < kNumVennRegions; ++r) {
      fractions[VennRegionNames()[r]] = v.fractions[r];
      counts[VennRegionNames()[r]] = v.mean_counts[r];
      bars.emplace_back(VennRegionNames()[r], v.fractions[r]);
    }
    j["fractions"] = fractions;
    j["mean_counts"] = counts;
    j["mean_union_size"] = v.mean_union_size;
    j["oracle_recall"] = v.oracle_recall;
    files["venn.json"] = j.dump(2) + "\n";
    bars.emplace_back("oracle recall", v.oracle_recall);
    files["charts/venn.svg"] =
        BarChart("Venn regions (fraction of union): " + report.corpus, bars);
  }

  if (report.histograms) {
    static const char* kNames[3] = {"position", "diversity", "importance"};
    for (std::size_t a = 0; a < 3; ++a) {
      const Histogram& h = (*report.histograms)[a];
      std::ostringstream csv;
      csv << "bin,lower,upper,count\n";
      for (std::size_t b = 0; b < h.size(); ++b) {
        csv << b << ',' << Num(0.05 * b, "%.2f") << ','
            << Num(0.05 * (b + 1), "%.2f") << ',' << h[b] << '\n';
      }
      files[std::string("hist_") + kNames[a] + ".csv"] = csv.str();
      files[std::string("charts/hist_") + kNames[a] + ".svg"] =
          HistogramChart(std::string("Oracle sentences by ") + kNames[a] +
                             " rank: " + report.corpus,
                         h);
    }
  }

  if (report.novelty) {
    const NoveltySummary& n = *report.novelty;
    std::ostringstream csv;
    csv << "corpus,R_OT,OT_unigram,OT_bigram,TS_unigram,TS_bigram,docs\n";
    csv << CsvField(report.corpus) << ',' << FormatPercent(n.rouge_oracle_target)
        << ',' << FormatPercent(n.unigram.overlap_oracle_target) << ','
        << FormatPercent(n.bigram.overlap_oracle_target) << ','
        << FormatPercent(n.unigram.novel_target_source) << ','
        << FormatPercent(n.bigram.novel_target_source) << ',' << n.num_docs
        << '\n';
    files["novelty.csv"] = csv.str();
  }

  if (!report.system_bias.empty()) {
    std::ostringstream csv;
    csv << "algorithm,R_P,R_D,R_I,p,d,i\n";
    for (const auto& s : report.system_bias) {
      csv << CsvField(s.algorithm) << ',' << FormatPercent(s.r_position) << ','
          << FormatPercent(s.r_diversity) << ','
          << FormatPercent(s.r_importance) << ','
          << Num(s.triangle.position, "%.4f") << ','
          << Num(s.triangle.diversity, "%.4f") << ','
          << Num(s.triangle.importance, "%.4f") << '\n';
    }
    files["system_bias.csv"] = csv.str();
  }

  if (!report.projections.empty()) {
    std::ostringstream csv;
    csv << "doc_id,kind,index,x,y\n";
    for (const auto& p : report.projections) {
      csv << CsvField(p.doc_id) << ',' << (p.target ? "target" : "source")
          << ',' << p.index << ',' << Num(p.x) << ',' << Num(p.y) << '\n';
    }
    files["pca_coords.csv"] = csv.str();
  }
  return files;
}

void WriteReport(const BiasReport& report, const std::string& outdir) {
  const auto files = RenderReport(report);
  for (const auto& [name, contents] : files) {
    WriteFileAtomic((std::filesystem::path(outdir) / name).string(), contents);
  }
}

}  // namespace subaspect
