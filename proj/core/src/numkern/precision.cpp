#include "lsharp/numkern/precision.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace lsharp {

namespace {

std::atomic<long> g_default_bits{kDefaultPrecisionBits};
thread_local long t_scope_bits = 0;

void check_bits(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1L << 24) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
}

}  // namespace

long working_precision() noexcept {
  return t_scope_bits > 0 ? t_scope_bits : g_default_bits.load(std::memory_order_relaxed);
}

void set_default_precision(long bits) {
  check_bits(bits);
  g_default_bits.store(bits, std::memory_order_relaxed);
}

long default_precision() noexcept { return g_default_bits.load(std::memory_order_relaxed); }

PrecisionScope::PrecisionScope(long bits) : saved_(t_scope_bits) {
  check_bits(bits);
  t_scope_bits = bits;
}

PrecisionScope::~PrecisionScope() { t_scope_bits = saved_; }

long bits_for_digits(double digits) noexcept {
  return static_cast<long>(std::ceil(std::max(digits, 0.0) * 3.321928094887362));
}

long bits_for_tolerance(long precision_bits, double divisor, long guard) noexcept {
  const long needed = bits_for_digits(static_cast<double>(precision_bits) / divisor);
  return std::max(precision_bits, needed) + guard;
}

}  // namespace lsharp
