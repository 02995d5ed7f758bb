#ifndef SMR_RINGS_HPP
#define SMR_RINGS_HPP

// The base ring Z_m and its ideal semiring. Every ideal of Z_m is
// principal and generated by a divisor of m, so an ideal is carried by its
// canonical generator: g = m is the trivial ideal (0), g = 1 is the
// improper ideal (1) = Z_m, and x belongs to (g) iff g divides x.

#include <cstdint>
#include <vector>

namespace smr {

struct RingCtx {
  std::uint32_t m;

  explicit RingCtx(std::uint32_t modulus);

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % m; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : m - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % m);
  }

  friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

bool is_prime_modulus(std::uint32_t m);
std::vector<std::uint32_t> divisors_of(std::uint32_t m);

class Ideal {
 public:
  // g must be a positive divisor of m.
  Ideal(std::uint32_t g, RingCtx ctx);

  std::uint32_t g() const { return g_; }
  std::uint32_t m() const { return m_; }
  bool is_zero() const { return g_ == m_; }
  bool is_improper() const { return g_ == 1; }
  bool contains(std::uint32_t x) const { return x % g_ == 0; }
  // The ideal as an explicit subset {0, g, 2g, ...} of Z_m, ascending.
  std::vector<std::uint32_t> elements() const;

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  std::uint32_t g_;
  std::uint32_t m_;
};

// The ideal generated by a ring element: canonical generator gcd(x, m),
// with gcd(0, m) = m.
Ideal canonical_ideal(std::uint32_t x, RingCtx ctx);

enum class IdealOp { sum, product, intersection };

Ideal ideal_combine(IdealOp op, const Ideal& a, const Ideal& b);

// Inclusion a <= b, i.e. b.g divides a.g.
bool ideal_leq(const Ideal& a, const Ideal& b);

// One ideal per divisor of m, ascending by generator: (1) first, (0) last.
std::vector<Ideal> ideals_of(RingCtx ctx);

}  // namespace smr

#endif  // SMR_RINGS_HPP
