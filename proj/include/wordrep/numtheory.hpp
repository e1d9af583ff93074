#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wordrep::numtheory {

// Order of the cyclic group (Z_m, +). Always at least 2.
class Modulus {
 public:
  explicit Modulus(std::int64_t m);

  std::int64_t value() const { return m_; }

  // Reduces any integer (negative included) into [0, m).
  std::int64_t reduce(std::int64_t v) const;

 private:
  std::int64_t m_;
};

std::int64_t gcd_all(std::span<const std::int64_t> values);

// Unique x in [0, m) with b*x == a (mod m). Throws NoUniqueSolution when
// gcd(b, m) != 1.
std::int64_t solve_linear_congruence(std::int64_t b, std::int64_t a, Modulus m);

// m / gcd(m, k), with the identity element having order 1.
std::int64_t additive_order(std::int64_t k, Modulus m);

// Additive generators of Z_m in ascending order.
std::vector<std::int64_t> unit_residues(Modulus m);

std::int64_t mod_inverse(std::int64_t b, Modulus m);

}  // namespace wordrep::numtheory
