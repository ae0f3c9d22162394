// SPDX-License-Identifier: Apache-2.0
#include "oeq/signal/framing.hpp"

namespace oeq::signal {

WindowSlices slice_windows(std::size_t frame_len, const WindowSpec& spec) {
  spec.validate();
  WindowSlices out;
  if (frame_len < spec.input_len) {
    out.too_short = true;
    return out;
  }
  const std::size_t guard = spec.guard();
  for (std::size_t start = 0; start + spec.input_len <= frame_len; start += spec.stride)
    out.windows.push_back({start, start + guard});
  return out;
}

}  // namespace oeq::signal
