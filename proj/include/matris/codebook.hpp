// SPDX-License-Identifier: Apache-2.0
//
// b-bit phase-shifter codebooks and the nearest-level quantizer.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matris/channel.hpp"

namespace matris {

inline constexpr unsigned kMaxCodebookBits = 16;

/// Either ideal continuous shifters or the 2^b uniform levels k 2 pi / 2^b.
class PhaseCodebook
{
  public:
    static PhaseCodebook continuous();
    static PhaseCodebook discrete(unsigned bits);

    bool is_continuous() const noexcept { return !bits_; }
    /// Zero for the continuous codebook.
    unsigned bits() const noexcept { return bits_.value_or(0); }
    /// Ascending, starts at 0, empty when continuous.
    const std::vector<double>& levels() const noexcept { return levels_; }
    double step() const noexcept;

    /// "continuous" or "<b>bit".
    std::string label() const;
    /// Inverse of label(). Throws InvalidArgument on anything else.
    static PhaseCodebook parse(const std::string& label);

    friend bool operator==(const PhaseCodebook& a, const PhaseCodebook& b) { return a.bits_ == b.bits_; }

  private:
    PhaseCodebook() = default;

    std::optional<unsigned> bits_;
    std::vector<double> levels_;
};

PhaseCodebook build_codebook(unsigned bits);

/// min(|a - b|, 2 pi - |a - b|) for a, b in [0, 2 pi).
double circular_distance(double a, double b);

/// Nearest level under the circular metric. Exact midpoints resolve to the
/// smaller level value, including the wrap-around midpoint between the top
/// level and 2 pi, which resolves to 0. Input must already be in [0, 2 pi).
double quantize(double phase, const PhaseCodebook& codebook);

/// Applied shifter phases, one per TRIS element, each in [0, 2 pi).
struct PhaseVector
{
    std::vector<double> phases;

    std::size_t size() const noexcept { return phases.size(); }
};

PhaseVector quantize_vector(const LinkState& link, const PhaseCodebook& codebook);

} // namespace matris
