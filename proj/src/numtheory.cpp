#include "wordrep/numtheory.hpp"

#include <numeric>
#include <string>

#include "wordrep/errors.hpp"

namespace wordrep::numtheory {

Modulus::Modulus(std::int64_t m) : m_(m) {
  if (m < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(m));
  }
}

std::int64_t Modulus::reduce(std::int64_t v) const {
  std::int64_t r = v % m_;
  return r < 0 ? r + m_ : r;
}

std::int64_t gcd_all(std::span<const std::int64_t> values) {
  if (values.empty()) throw UsageError("gcd_all: empty sequence");
  std::int64_t g = 0;
  for (std::int64_t v : values) {
    if (v < 1) throw UsageError("gcd_all: values must be positive");
    g = std::gcd(g, v);
  }
  return g;
}

namespace {

// Extended Euclid; returns g and sets x with a*x == g (mod b).
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  x = old_s;
  return old_r;
}

}  // namespace

std::int64_t mod_inverse(std::int64_t b, Modulus m) {
  std::int64_t x = 0;
  std::int64_t g = ext_gcd(m.reduce(b), m.value(), x);
  if (g != 1) {
    throw NoInverse(std::to_string(b) + " has no inverse modulo " +
                    std::to_string(m.value()));
  }
  return m.reduce(x);
}

std::int64_t solve_linear_congruence(std::int64_t b, std::int64_t a, Modulus m) {
  if (std::gcd(m.reduce(b), m.value()) != 1) {
    throw NoUniqueSolution("gcd(" + std::to_string(b) + ", " +
                           std::to_string(m.value()) + ") != 1");
  }
  // Products stay below m^2; moduli here are far from overflow territory.
  return m.reduce(mod_inverse(b, m) * m.reduce(a));
}

std::int64_t additive_order(std::int64_t k, Modulus m) {
  if (k < 0 || k >= m.value()) throw UsageError("additive_order: k outside [0, m)");
  if (k == 0) return 1;
  return m.value() / std::gcd(m.value(), k);
}

std::vector<std::int64_t> unit_residues(Modulus m) {
  std::vector<std::int64_t> units;
  for (std::int64_t g = 1; g < m.value(); ++g) {
    if (std::gcd(g, m.value()) == 1) units.push_back(g);
  }
  return units;
}

}  // namespace wordrep::numtheory
