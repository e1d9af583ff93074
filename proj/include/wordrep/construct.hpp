#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wordrep/coloring.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/words.hpp"

namespace wordrep {

enum class MorphismScheme { X2, Half, HalfToTwoThirds };

const char* to_string(MorphismScheme s);
bool morphism_hypothesis(MorphismScheme s, std::int64_t n, std::int64_t x);
int morphism_uniformity(MorphismScheme s, std::int64_t n);

// Word for C_{2n}(1, x, n): f(0) f(1) ... f(2n-1), checked with represents()
// before returning.
Word build_word_morphism(std::int64_t n, std::int64_t x, MorphismScheme scheme);

enum class ParityKind { Bipartite, PrismReduction, NotApplicable };
const char* to_string(ParityKind k);

struct ParityOutcome {
  ParityKind kind;
  // PrismReduction only: C_n(a/2, b/2) and the verified map
  // C_{2n}(a, b, n) -> P_2 x C_n(a/2, b/2), row-major with P_2 first.
  std::optional<CirculantSpec> reduced;
  VertexMap map;
};

// Throws Disconnected when n is even and a, b are both even.
ParityOutcome parity_classify(std::int64_t n, std::int64_t a, std::int64_t b);

struct Factorization {
  std::int64_t p = 0, q = 0;
  std::vector<std::int64_t> R;  // jumps on Z_p, canonical
  std::vector<std::int64_t> S;  // jumps on Z_q, canonical
  std::int64_t d = 1;
  VertexMap map;  // C_{2n}(a, b, n) -> C_p(R) x C_q(S)
};

// a is the even jump, b the odd one (their order as integers is free).
// Parity patterns: n, b odd and a even; or n, a even and b odd.
// Throws PreconditionError outside both patterns or for a disconnected spec,
// and NotFactorizable when no (p, q) works.
Factorization factorize_5regular(std::int64_t n, std::int64_t a, std::int64_t b);

// Jump set of C_{pq}(T) with T = d q R u d p S.
std::vector<std::int64_t> factorization_jumps(const Factorization& f);

// 5 + min(p, q). Throws UsageError unless the factors are a 3-regular
// circulant and a cycle.
int rep_bound_from_factorization(const Factorization& f);

// Jumps equal {r, ..., 2r} with 2 < (n+1)/5 < r < (n-1)/4, compared exactly.
bool non_representable_family(std::int64_t n, const std::vector<std::int64_t>& jumps);

enum class Verdict { Representable, NotRepresentable, Unknown };
const char* to_string(Verdict v);

// G = left x right (row-major), certified by the map and by a semi-transitive
// orientation of each factor.
struct ProductCertificate {
  CirculantSpec left;
  CirculantSpec right;
  VertexMap map;
  Orientation left_orientation;
  Orientation right_orientation;
  std::optional<Factorization> factorization;
};

struct FamilyCondition {
  std::int64_t order;
  std::int64_t r;
};

using Certificate = std::variant<std::monostate, Word, ColoringCertificate, Orientation,
                                 ProductCertificate, FamilyCondition>;

const char* certificate_kind(const Certificate& c);

struct ClassificationResult {
  CirculantSpec spec;
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  // Spec the certificate speaks about. Differs from spec only for
  // disconnected inputs, where it is the reduced component.
  CirculantSpec certified_spec;
  std::optional<int> rep_number_upper;
  std::string theorem_tag;
  bool verify_ok = false;
  std::uint64_t search_nodes = 0;
  double elapsed_ms = 0;
  // Certificates that were built but failed their check on the way.
  std::vector<std::string> notes;
};

// Re-checks the certificate from scratch against certified_spec.
bool verify_certificate(const Certificate& cert, const CirculantSpec& spec);

ClassificationResult classify(std::int64_t n, std::int64_t a, std::int64_t b,
                              std::uint64_t budget = kDefaultSearchBudget);

// Any circulant: 5-regular shapes go through classify, others through
// decomposition, the family rule and search.
ClassificationResult classify_circulant(const CirculantSpec& spec,
                                        std::uint64_t budget = kDefaultSearchBudget);

}  // namespace wordrep
