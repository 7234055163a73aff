// Copyright 2026 The tvfx Authors
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

#pragma once

#include <cstddef>
#include <vector>

#include "tvfx/audio/clip.hpp"
#include "tvfx/nn/tensor.hpp"

namespace tvfx {

enum class Window {
  kRectangular,  // analysis: the model consumes raw slices
  kHanning,      // synthesis
};

/// Windowed view of a mono signal: `positions` center frames of length
/// `frame_size` at 50% hop, each stacked with its k previous and k
/// subsequent frames (zero-padded past the clip edges).
///
/// Position p is centered at (p - 1) * hop: one lead-in position precedes
/// the clip so that Hanning overlap-add reconstruction is exact from the
/// first sample.
struct FrameSet {
  nn::Tensor frames;  // (positions, 2k + 1, frame_size)
  std::size_t frame_size = 0;
  std::size_t hop = 0;
  std::size_t context = 0;
  std::size_t signal_length = 0;  // original clip length in samples
  Window window = Window::kRectangular;

  std::size_t positions() const { return frames.dim(0); }
  /// Sample offset of position p's center frame (may be negative).
  long long center_offset(std::size_t p) const {
    return static_cast<long long>(p) * static_cast<long long>(hop) -
           static_cast<long long>(hop);
  }
  /// Copy of one position's (2k+1, frame_size) stack.
  nn::Tensor position(std::size_t p) const;
  /// Copy of one position's center frame.
  std::vector<double> center_frame(std::size_t p) const;
};

/// Periodic Hanning window of length n: 0.5 * (1 - cos(2 pi i / n)).
/// Sums to exactly 1 across 50% hops.
std::vector<double> hanning(std::size_t n);

/// Slices a mono clip into a FrameSet. frame_size must be a power of two
/// in [1024, 8192]; hop is frame_size / 2. A clip shorter than one frame
/// yields a single zero-padded position.
FrameSet frame_signal(const AudioClip& clip, std::size_t frame_size,
                      std::size_t context);

/// Hanning-windowed constant-overlap-add synthesis of consecutive frames
/// at 50% hop. frame_outputs is (positions, frame_size) or a vector of
/// frames; output covers the full support (positions - 1) * hop +
/// frame_size with frame p placed at p * hop.
AudioClip overlap_add(const std::vector<std::vector<double>>& frame_outputs,
                      std::size_t frame_size, int sample_rate);

/// Reconstructs a clip of frame_set.signal_length samples from per-position
/// model output frames, undoing the lead-in offset.
AudioClip reconstruct(const FrameSet& frame_set,
                      const std::vector<std::vector<double>>& frame_outputs,
                      int sample_rate);

}  // namespace tvfx
