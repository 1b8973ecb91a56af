// Copyright 2026 The spikecrypt Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "spikecrypt/network.hpp"

namespace spikecrypt::snn {

/// Layers shown by default: L1, L2, L3 and noise.
inline constexpr std::array<Layer, 4> kRasterPanels = {Layer::kInput, Layer::kHidden,
                                                       Layer::kOutput, Layer::kNoise};

/// CSV with global neuron ids (see NetworkTopology::layers).
void write_raster_csv(std::ostream& out, const NetworkTopology& topo,
                      const SimulationResult& result, std::span<const Layer> layers = kAllLayers);

/// One stacked panel per layer, one row per neuron, a tick per spike.
void write_raster_svg(std::ostream& out, const SimulationResult& result,
                      std::span<const Layer> panels = kRasterPanels, const std::string& title = {});

}  // namespace spikecrypt::snn
