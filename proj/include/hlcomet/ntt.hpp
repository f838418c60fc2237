#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hlc::ntt {

/// 7 * 2^26 + 1, primitive root 3. Transforms up to 2^26 points.
inline constexpr std::uint32_t kModulus = 469762049;
inline constexpr std::uint32_t kPrimitiveRoot = 3;
inline constexpr unsigned kMaxLog2Size = 26;

/// In-place forward (or inverse, scaled by 1/size) transform over Z/kModulus.
/// size must be a power of two no larger than 2^kMaxLog2Size.
void transform(std::span<std::uint32_t> a, bool inverse);

/// Linear self-convolution (a * a)[0, out_len) reduced mod kModulus. The
/// result equals the integer convolution whenever every true coefficient is
/// below kModulus. ResourceLimitError if the needed transform is too large.
std::vector<std::uint32_t> self_convolve(std::span<const std::uint32_t> a, std::size_t out_len);

}  // namespace hlc::ntt
