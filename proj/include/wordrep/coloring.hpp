#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"

namespace wordrep {

// Coloring constructions for 5-regular circulants. Mod3 and
// GeneratorBlocks act on C_{2n}(a, b, n) directly; the remaining schemes
// act on the unit-jump form C_{2n}(1, x, n).
enum class Scheme { Mod3, GeneratorBlocks, NX2, NX0, N0X1, N0X2, N1X2, N2X1 };

inline constexpr Scheme kAllSchemes[] = {Scheme::Mod3, Scheme::GeneratorBlocks,
                                         Scheme::NX2,  Scheme::NX0,
                                         Scheme::N0X1, Scheme::N0X2,
                                         Scheme::N1X2, Scheme::N2X1};

namespace coloring_tables {

// Color of residue class i within block X, Y, Z (rows) for the
// three-block schemes. kBlockTable drives NX0 and N0X1, kBlockTableAlt drives
// N0X2 (before the three special vertices are recolored with c3).
inline constexpr std::array<std::array<int, 3>, 3> kBlockTable{{
    {0, 1, 2},  // X_0 -> c0, X_1 -> c1, X_2 -> c2
    {1, 2, 0},  // Y_0 -> c1, Y_1 -> c2, Y_2 -> c0
    {2, 0, 1},  // Z_0 -> c2, Z_1 -> c0, Z_2 -> c1
}};
inline constexpr std::array<std::array<int, 3>, 3> kBlockTableAlt{{
    {0, 1, 2},  // X_0 -> c0, X_1 -> c1, X_2 -> c2
    {2, 0, 1},  // Y_0 -> c2, Y_1 -> c0, Y_2 -> c1
    {1, 2, 0},  // Z_0 -> c1, Z_1 -> c2, Z_2 -> c0
}};

}  // namespace coloring_tables

const char* to_string(Scheme s);
std::optional<Scheme> scheme_from_string(const std::string& s);
bool is_unit_jump_scheme(Scheme s);

struct ColoringCertificate {
  CirculantSpec spec;
  std::vector<int> colors;
  ColorDag color_dag;
  Scheme scheme;
  // GeneratorBlocks: chosen generator g and block length r.
  std::int64_t generator = 0;
  std::int64_t block = 0;
  bool verified = false;
};

struct ProperCheck {
  bool ok;
  std::vector<Edge> violations;
};

// Throws UsageError when colors is not total on V(g).
ProperCheck verify_proper(const Graph& g, const std::vector<int>& colors);

// The four machine checks a certificate must pass.
struct CertificateCheck {
  bool proper = false;
  bool homomorphic = false;
  bool acyclic = false;
  bool shortcut_free = false;
  std::optional<ShortcutWitness> witness;

  bool ok() const { return proper && homomorphic && acyclic && shortcut_free; }
};

CertificateCheck check_certificate(const ColoringCertificate& cert);

// Smallest generator g of Z_{2n} with min{p, q, 2n-p, 2n-q} >= ceil(2n/3)
// where a = p*g and b = q*g; returns (g, r).
std::optional<std::pair<std::int64_t, std::int64_t>> generator_block_params(
    std::int64_t n, std::int64_t a, std::int64_t b);

// Whether the scheme's hypothesis holds. For unit-jump schemes the pair
// (n, x) describes C_{2n}(1, x, n); otherwise (n, a, b) is the general shape.
bool scheme_hypothesis(Scheme s, std::int64_t n, std::int64_t a, std::int64_t b);

std::vector<Scheme> applicable_schemes(std::int64_t n, std::int64_t a, std::int64_t b);

// spec must be (2n, {a, b, n}); for unit-jump schemes a must equal 1.
// Throws SchemeNotApplicable on a failed hypothesis and CertificateFailure
// if any machine check disagrees with the construction.
ColoringCertificate build_coloring(const CirculantSpec& spec, Scheme scheme);

// Pulls a certificate back along an isomorphism map (spec -> cert.spec)
// and re-verifies it on the target spec.
ColoringCertificate pull_back(const ColoringCertificate& cert, const CirculantSpec& target,
                              const VertexMap& map);

}  // namespace wordrep
