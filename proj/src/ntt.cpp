#include "hlcomet/ntt.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "hlcomet/errors.hpp"

namespace hlc::ntt {
namespace {

constexpr std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kModulus);
}

constexpr std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp) {
  std::uint32_t r = 1;
  while (exp) {
    if (exp & 1) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

static_assert((kModulus - 1) % (1u << kMaxLog2Size) == 0);
static_assert(pow_mod(kPrimitiveRoot, (kModulus - 1) / 2) == kModulus - 1);

}  // namespace

void transform(std::span<std::uint32_t> a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!std::has_single_bit(n) || std::countr_zero(n) > static_cast<int>(kMaxLog2Size)) {
    throw InvalidArgument("NTT size " + std::to_string(n) +
                          " is not a power of two within 2^26");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<std::uint32_t> roots(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = pow_mod(kPrimitiveRoot, (kModulus - 1) / len);
    if (inverse) w = pow_mod(w, kModulus - 2);
    const std::size_t half = len / 2;
    roots[0] = 1;
    for (std::size_t k = 1; k < half; ++k) roots[k] = mul(roots[k - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t u = a[i + k];
        const std::uint32_t v = mul(a[i + k + half], roots[k]);
        const std::uint32_t s = u + v;
        a[i + k] = s >= kModulus ? s - kModulus : s;
        a[i + k + half] = u >= v ? u - v : u + kModulus - v;
      }
    }
  }

  if (inverse) {
    const std::uint32_t n_inv = pow_mod(static_cast<std::uint32_t>(n % kModulus), kModulus - 2);
    for (auto& x : a) x = mul(x, n_inv);
  }
}

std::vector<std::uint32_t> self_convolve(std::span<const std::uint32_t> a, std::size_t out_len) {
  // Coefficients at index >= out_len cannot reach an output below out_len.
  const std::size_t used = std::min(a.size(), out_len);
  if (used == 0) return std::vector<std::uint32_t>(out_len, 0);
  const std::size_t size = std::bit_ceil(2 * used - 1);
  if (std::countr_zero(size) > static_cast<int>(kMaxLog2Size)) {
    throw ResourceLimitError("self-convolution of length " + std::to_string(used) +
                             " needs a transform beyond 2^26 points");
  }
  std::vector<std::uint32_t> buf(size, 0);
  for (std::size_t i = 0; i < used; ++i) buf[i] = a[i] % kModulus;
  transform(buf, false);
  for (auto& x : buf) x = mul(x, x);
  transform(buf, true);
  buf.resize(out_len, 0);
  return buf;
}

}  // namespace hlc::ntt
