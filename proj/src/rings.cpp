#include "smr/rings.hpp"

#include <numeric>
#include <string>

#include "smr/errors.hpp"

namespace smr {

RingCtx::RingCtx(std::uint32_t modulus) : m(modulus) {
  if (m < 2 || m > 65536u) {
    throw InvalidInputError("modulus must be between 2 and 65536, got " + std::to_string(modulus));
  }
}

bool is_prime_modulus(std::uint32_t m) {
  if (m < 2) return false;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> divisors_of(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

Ideal::Ideal(std::uint32_t g, RingCtx ctx) : g_(g), m_(ctx.m) {
  if (g == 0 || m_ % g != 0) {
    throw InvalidInputError("ideal generator must be a positive divisor of the modulus");
  }
}

std::vector<std::uint32_t> Ideal::elements() const {
  std::vector<std::uint32_t> out;
  out.reserve(m_ / g_);
  for (std::uint32_t x = 0; x < m_; x += g_) out.push_back(x);
  return out;
}

Ideal canonical_ideal(std::uint32_t x, RingCtx ctx) {
  if (x >= ctx.m) {
    throw InvalidInputError("ring element out of range: " + std::to_string(x) +
                            " >= " + std::to_string(ctx.m));
  }
  return Ideal(std::gcd(x, ctx.m), ctx);
}

namespace {

void check_same_modulus(const Ideal& a, const Ideal& b) {
  if (a.m() != b.m()) throw InvalidInputError("ideal modulus mismatch");
}

}  // namespace

Ideal ideal_combine(IdealOp op, const Ideal& a, const Ideal& b) {
  check_same_modulus(a, b);
  const RingCtx ctx(a.m());
  switch (op) {
    case IdealOp::sum:
      return Ideal(std::gcd(a.g(), b.g()), ctx);
    case IdealOp::product:
      return Ideal(static_cast<std::uint32_t>(
                       std::gcd(static_cast<std::uint64_t>(a.g()) * b.g(),
                                static_cast<std::uint64_t>(ctx.m))),
                   ctx);
    case IdealOp::intersection:
      // Both generators divide m, so the lcm does as well.
      return Ideal(std::lcm(a.g(), b.g()), ctx);
  }
  throw InvalidInputError("unknown ideal operation");
}

bool ideal_leq(const Ideal& a, const Ideal& b) {
  check_same_modulus(a, b);
  return a.g() % b.g() == 0;
}

std::vector<Ideal> ideals_of(RingCtx ctx) {
  std::vector<Ideal> out;
  for (std::uint32_t d : divisors_of(ctx.m)) out.emplace_back(d, ctx);
  return out;
}

}  // namespace smr
