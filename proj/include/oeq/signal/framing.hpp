// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "oeq/signal/waveform.hpp"

namespace oeq::signal {

/// One input/target window pair, expressed as indices into the frame.
/// Input covers [input_start, input_start + input_len); the target is the
/// centered output_len sub-range of the transmitted symbols.
struct Window {
  std::size_t input_start;
  std::size_t target_start;
};

struct WindowSlices {
  std::vector<Window> windows;
  bool too_short = false;  // frame shorter than one input window
};

/// Slide WindowSpec over the frame; windows that would overrun are dropped.
WindowSlices slice_windows(std::size_t frame_len, const WindowSpec& spec);

inline WindowSlices slice_windows(const SymbolFrame& frame, const WindowSpec& spec) {
  return slice_windows(frame.size(), spec);
}

}  // namespace oeq::signal
