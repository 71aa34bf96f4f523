// SPDX-License-Identifier: Apache-2.0
#include "matris/codebook.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "matris/errors.hpp"

namespace matris {

PhaseCodebook PhaseCodebook::continuous()
{
    return PhaseCodebook{};
}

PhaseCodebook PhaseCodebook::discrete(unsigned bits)
{
    if (bits < 1 || bits > kMaxCodebookBits)
        throw InvalidArgument("codebook bits must be in [1, " + std::to_string(kMaxCodebookBits) + "], got "
                              + std::to_string(bits));
    PhaseCodebook cb;
    cb.bits_ = bits;
    const std::size_t count = std::size_t{1} << bits;
    const double step = kTwoPi / static_cast<double>(count);
    cb.levels_.resize(count);
    for (std::size_t k = 0; k < count; ++k)
        cb.levels_[k] = static_cast<double>(k) * step;
    return cb;
}

double PhaseCodebook::step() const noexcept
{
    return bits_ ? kTwoPi / static_cast<double>(levels_.size()) : 0.0;
}

std::string PhaseCodebook::label() const
{
    return bits_ ? std::to_string(*bits_) + "bit" : std::string("continuous");
}

PhaseCodebook PhaseCodebook::parse(const std::string& label)
{
    if (label == "continuous")
        return continuous();
    const std::string suffix = "bit";
    if (label.size() > suffix.size() && label.ends_with(suffix))
    {
        unsigned bits = 0;
        const char* first = label.data();
        const char* last = label.data() + label.size() - suffix.size();
        auto [ptr, ec] = std::from_chars(first, last, bits);
        if (ec == std::errc{} && ptr == last)
            return discrete(bits);
    }
    throw InvalidArgument("unknown codebook '" + label + "' (expected 'continuous' or '<b>bit')");
}

PhaseCodebook build_codebook(unsigned bits)
{
    return PhaseCodebook::discrete(bits);
}

double circular_distance(double a, double b)
{
    const double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

double quantize(double phase, const PhaseCodebook& codebook)
{
    if (!(phase >= 0.0 && phase < kTwoPi))
        throw InvalidArgument("phase must be wrapped to [0, 2pi) before quantization");
    if (codebook.is_continuous())
        return phase;

    const auto& levels = codebook.levels();
    const std::size_t count = levels.size();
    std::size_t lower = static_cast<std::size_t>(phase / codebook.step());
    if (lower >= count)
        lower = count - 1;
    const std::size_t upper = (lower + 1) % count;

    // Only the two bracketing levels can be nearest; compare them with the
    // same metric an exhaustive search would use.
    const double d_lower = circular_distance(phase, levels[lower]);
    const double d_upper = circular_distance(phase, levels[upper]);
    if (d_upper < d_lower)
        return levels[upper];
    if (d_lower < d_upper)
        return levels[lower];
    return std::min(levels[lower], levels[upper]);
}

PhaseVector quantize_vector(const LinkState& link, const PhaseCodebook& codebook)
{
    PhaseVector out;
    if (codebook.is_continuous())
    {
        out.phases = link.ideal_phase;
        return out;
    }
    out.phases.reserve(link.size());
    for (double phase : link.ideal_phase)
        out.phases.push_back(quantize(phase, codebook));
    return out;
}

} // namespace matris
