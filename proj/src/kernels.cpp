#include "mstd/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "bit_util.hpp"

namespace mstd {

std::string_view to_string(Kernel k) {
  switch (k) {
    case Kernel::Auto: return "auto";
    case Kernel::ShiftOr: return "shift-or";
    case Kernel::Convolution: return "convolution";
  }
  return "auto";
}

Kernel parse_kernel(std::string_view name) {
  if (name == "auto") return Kernel::Auto;
  if (name == "shift-or") return Kernel::ShiftOr;
  if (name == "convolution") return Kernel::Convolution;
  throw Error("unknown kernel: " + std::string(name));
}

namespace {

// 998244353 = 119 * 2^23 + 1; counts never exceed min(|X|, |Y|) < modulus.
constexpr std::uint32_t kMod = 998244353;
constexpr std::uint32_t kRoot = 3;
constexpr std::size_t kMaxLog = 23;

std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kMod);
}

std::uint32_t power(std::uint32_t b, std::uint64_t e) {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

void ntt(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint32_t> roots;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = power(kRoot, (kMod - 1) / len);
    if (inverse) w = power(w, kMod - 2);
    const std::size_t half = len / 2;
    roots.assign(half, 1);
    for (std::size_t i = 1; i < half; ++i) roots[i] = mul(roots[i - 1], w);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::uint32_t u = a[i + j];
        const std::uint32_t v = mul(a[i + j + half], roots[j]);
        a[i + j] = u + v >= kMod ? u + v - kMod : u + v;
        a[i + j + half] = u >= v ? u - v : u + kMod - v;
      }
    }
  }
  if (inverse) {
    const std::uint32_t inv_n = power(static_cast<std::uint32_t>(n), kMod - 2);
    for (auto& x : a) x = mul(x, inv_n);
  }
}

std::vector<std::uint32_t> to_coefficients(std::span<const Word> bits, std::size_t nbits, std::size_t size) {
  std::vector<std::uint32_t> c(size, 0);
  for (std::size_t w = 0; w < bits.size(); ++w) {
    Word x = bits[w];
    while (x) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(x));
      if (i < nbits) c[i] = 1;
      x &= x - 1;
    }
  }
  return c;
}

std::vector<Word> convolve_ntt(std::span<const Word> x, std::size_t nx, std::span<const Word> y, std::size_t ny) {
  const std::size_t out_bits = nx + ny - 1;
  const std::size_t size = std::bit_ceil(out_bits);
  if (std::countr_zero(size) > static_cast<int>(kMaxLog)) throw Error("bool_convolve: operands too long for the transform");
  auto fx = to_coefficients(x, nx, size);
  ntt(fx, false);
  const bool same = nx == ny && std::equal(x.begin(), x.end(), y.begin());
  if (same) {
    for (auto& v : fx) v = mul(v, v);
  } else {
    auto fy = to_coefficients(y, ny, size);
    ntt(fy, false);
    for (std::size_t i = 0; i < size; ++i) fx[i] = mul(fx[i], fy[i]);
  }
  ntt(fx, true);
  std::vector<Word> out(words_for(out_bits), 0);
  for (std::size_t i = 0; i < out_bits; ++i)
    if (fx[i]) detail::set_bit(out, i);
  return out;
}

std::vector<Word> convolve_shift_or(std::span<const Word> x, std::size_t nx, std::span<const Word> y, std::size_t ny) {
  const std::size_t out_bits = nx + ny - 1;
  std::vector<Word> out(words_for(out_bits), 0);
  // Shift the denser operand by each member of the sparser one.
  const bool x_sparser = detail::popcount(x) <= detail::popcount(y);
  const auto dense = x_sparser ? y : x;
  const auto sparse = x_sparser ? x : y;
  const std::size_t sparse_bits = x_sparser ? nx : ny;
  for (std::size_t w = 0; w < sparse.size(); ++w) {
    Word bits = sparse[w];
    while (bits) {
      const std::size_t i = w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits));
      if (i < sparse_bits) detail::or_shifted(out, dense, i);
      bits &= bits - 1;
    }
  }
  if (out_bits % kWordBits) out.back() &= detail::low_mask(out_bits % kWordBits);
  return out;
}

}  // namespace

Kernel choose_kernel(std::size_t nx, std::size_t px, std::size_t ny, std::size_t py) {
  const std::size_t out_bits = nx + ny - 1;
  if (out_bits < 8192) return Kernel::ShiftOr;
  const double shift_cost = static_cast<double>(std::min(px, py)) * static_cast<double>(words_for(std::max(nx, ny)));
  const double n = static_cast<double>(std::bit_ceil(out_bits));
  // Three transforms of n/2 log n butterflies, each a few word-op equivalents.
  const double conv_cost = 6.0 * n * std::log2(n);
  return conv_cost < shift_cost ? Kernel::Convolution : Kernel::ShiftOr;
}

std::vector<Word> bool_convolve(std::span<const Word> x, std::size_t nx, std::span<const Word> y, std::size_t ny,
                                Kernel kernel) {
  if (nx == 0 || ny == 0) throw Error("bool_convolve: empty operand");
  if (kernel == Kernel::Auto) kernel = choose_kernel(nx, detail::popcount(x), ny, detail::popcount(y));
  return kernel == Kernel::Convolution ? convolve_ntt(x, nx, y, ny) : convolve_shift_or(x, nx, y, ny);
}

}  // namespace mstd
