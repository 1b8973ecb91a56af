// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#include "spikecrypt/raster.hpp"

#include <algorithm>
#include <ostream>

namespace spikecrypt::snn {

void write_raster_csv(std::ostream& out, const NetworkTopology& topo,
                      const SimulationResult& result, std::span<const Layer> layers) {
  out << "neuron_id,time_ms\n";
  for (Layer l : layers) {
    const auto& trains = result.layer(l);
    write_spike_rows(out, trains, topo.range(l).first);
  }
}

namespace {

std::string escape_xml(const std::string& s) {
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

}  // namespace

void write_raster_svg(std::ostream& out, const SimulationResult& result,
                      std::span<const Layer> panels, const std::string& title) {
  constexpr double kWidth = 900.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kPanelHeight = 140.0;
  constexpr double kGap = 30.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double height = kTop + static_cast<double>(panels.size()) * (kPanelHeight + kGap) + 20.0;
  const double T = result.duration_ms > 0.0 ? result.duration_ms : 1.0;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << height << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"15\">" << escape_xml(title) << "</text>\n";
  }
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const Layer l = panels[p];
    const auto& trains = result.layer(l);
    const double y0 = kTop + static_cast<double>(p) * (kPanelHeight + kGap);
    const std::string name(layer_name(l));
    out << "<g class=\"panel\" id=\"panel-" << name << "\">\n";
    out << "<rect x=\"" << kLeft << "\" y=\"" << y0 << "\" width=\"" << plot_w << "\" height=\""
        << kPanelHeight << "\" fill=\"none\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << y0 + kPanelHeight / 2
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\">" << name
        << "</text>\n";
    const std::size_t rows = std::max<std::size_t>(trains.size(), 1);
    const double row_h = kPanelHeight / static_cast<double>(rows);
    for (std::size_t n = 0; n < trains.size(); ++n) {
      const double ya = y0 + static_cast<double>(n) * row_h;
      for (double t : trains[n].times()) {
        const double x = kLeft + plot_w * t / T;
        out << "<line x1=\"" << x << "\" x2=\"" << x << "\" y1=\"" << ya << "\" y2=\""
            << ya + std::max(row_h * 0.8, 0.5) << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
      }
    }
    out << "</g>\n";
  }
  const double axis_y = kTop + static_cast<double>(panels.size()) * (kPanelHeight + kGap) - kGap + 16;
  out << "<text x=\"" << kLeft << "\" y=\"" << axis_y
      << "\" font-family=\"sans-serif\" font-size=\"11\">0 ms</text>\n";
  out << "<text x=\"" << kLeft + plot_w << "\" y=\"" << axis_y
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << format_double(T) << " ms</text>\n";
  out << "</svg>\n";
}

}  // namespace spikecrypt::snn
