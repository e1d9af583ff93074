#include "wordrep/construct.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "wordrep/errors.hpp"
#include "wordrep/numtheory.hpp"

namespace wordrep {

namespace nt = numtheory;

const char* to_string(MorphismScheme s) {
  switch (s) {
    case MorphismScheme::X2: return "X2";
    case MorphismScheme::Half: return "Half";
    case MorphismScheme::HalfToTwoThirds: return "HalfToTwoThirds";
  }
  return "?";
}

bool morphism_hypothesis(MorphismScheme s, std::int64_t n, std::int64_t x) {
  if (n < 3 || !(1 < x && x < n)) return false;
  switch (s) {
    case MorphismScheme::X2: return x == 2;
    case MorphismScheme::Half: return 2 * x == n;
    case MorphismScheme::HalfToTwoThirds: return n < 2 * x && 3 * x <= 2 * n;
  }
  return false;
}

int morphism_uniformity(MorphismScheme s, std::int64_t n) {
  if (s == MorphismScheme::X2) return n == 3 ? 1 : 3;
  return 5;
}

Word build_word_morphism(std::int64_t n, std::int64_t x, MorphismScheme scheme) {
  if (!morphism_hypothesis(scheme, n, x)) {
    throw SchemeNotApplicable(std::string(to_string(scheme)) + " hypothesis fails for n=" +
                              std::to_string(n) + ", x=" + std::to_string(x));
  }
  const std::int64_t N = 2 * n;
  const nt::Modulus m(N);
  Word w;
  if (scheme == MorphismScheme::X2 && n == 3) {
    // C_6(1, 2, 3) is K_6.
    for (int i = 0; i < 6; ++i) w.push_back(i);
  } else {
    std::vector<std::int64_t> offsets;
    switch (scheme) {
      case MorphismScheme::X2: offsets = {0, -2, n}; break;
      case MorphismScheme::Half: offsets = {0, -1, x, n, -x}; break;
      case MorphismScheme::HalfToTwoThirds: offsets = {0, -1, -x, n, x}; break;
    }
    w.reserve(N * offsets.size());
    for (std::int64_t i = 0; i < N; ++i)
      for (std::int64_t o : offsets) w.push_back(static_cast<Vertex>(m.reduce(i + o)));
  }

  Graph g = build_circulant(five_regular_spec(n, 1, x));
  if (!represents(w, g).ok || uniformity(w) != morphism_uniformity(scheme, n)) {
    throw ConstructionBug(std::string(to_string(scheme)) + " word does not represent C_" +
                          std::to_string(N) + "(1," + std::to_string(x) + "," +
                          std::to_string(n) + ")");
  }
  return w;
}

const char* to_string(ParityKind k) {
  switch (k) {
    case ParityKind::Bipartite: return "Bipartite";
    case ParityKind::PrismReduction: return "PrismReduction";
    case ParityKind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

namespace {

Graph p2() { return build_circulant(CirculantSpec(2, {1})); }

}  // namespace

ParityOutcome parity_classify(std::int64_t n, std::int64_t a, std::int64_t b) {
  CirculantSpec spec = five_regular_spec(n, a, b);
  const bool a_odd = a % 2, b_odd = b % 2;
  if (n % 2 == 0) {
    if (!a_odd && !b_odd) throw Disconnected(spec.to_string() + " is disconnected");
    return {ParityKind::NotApplicable, std::nullopt, {}};
  }
  if (a_odd && b_odd) return {ParityKind::Bipartite, std::nullopt, {}};
  if (a_odd || b_odd) return {ParityKind::NotApplicable, std::nullopt, {}};

  CirculantSpec reduced(n, {a / 2, b / 2});
  const std::int64_t half = (n + 1) / 2;  // 2^{-1} mod n
  VertexMap map;
  map.image.resize(2 * n);
  for (std::int64_t v = 0; v < 2 * n; ++v) {
    map.image[v] = static_cast<Vertex>((v % 2) * n + (v * half) % n);
  }
  Graph prism = cartesian_product(p2(), build_circulant(reduced));
  if (!check_isomorphism_by_map(build_circulant(spec), prism, map)) {
    throw ConstructionBug("prism map fails for " + spec.to_string());
  }
  return {ParityKind::PrismReduction, reduced, std::move(map)};
}

std::vector<std::int64_t> factorization_jumps(const Factorization& f) {
  std::vector<std::int64_t> raw;
  for (std::int64_t r : f.R) raw.push_back(f.d * f.q * r);
  for (std::int64_t s : f.S) raw.push_back(f.d * f.p * s);
  return CirculantSpec::canonical(f.p * f.q, raw).jumps();
}

Factorization factorize_5regular(std::int64_t n, std::int64_t a, std::int64_t b) {
  CirculantSpec spec = five_regular_spec(n, std::min(a, b), std::max(a, b));
  const bool pattern1 = n % 2 == 1 && b % 2 == 1 && a % 2 == 0;
  const bool pattern2 = n % 2 == 0 && a % 2 == 0 && b % 2 == 1;
  if (!pattern1 && !pattern2) {
    throw PreconditionError("factorization needs a even, b odd (got n=" + std::to_string(n) +
                            ", a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")");
  }
  if (!is_connected_circulant(spec)) {
    throw PreconditionError(spec.to_string() + " is disconnected; factor its component");
  }
  const std::int64_t N = 2 * n;
  for (std::int64_t p = 3; p <= N; ++p) {
    if (N % p != 0) continue;
    const std::int64_t q = N / p;
    if (!(1 < q && q < n) || a % p != 0 || b % q != 0 || std::gcd(p, q) != 1) continue;

    Factorization f;
    f.p = p;
    f.q = q;
    f.R = CirculantSpec::canonical(p, {p / 2, b / q}).jumps();
    f.S = CirculantSpec::canonical(q, {a / p}).jumps();
    const std::int64_t qi = nt::mod_inverse(q, nt::Modulus(p));
    const std::int64_t pi = nt::mod_inverse(p, nt::Modulus(q));
    f.map.image.resize(N);
    for (std::int64_t v = 0; v < N; ++v) {
      f.map.image[v] = static_cast<Vertex>(((qi * v) % p) * q + (pi * v) % q);
    }
    if (factorization_jumps(f) != spec.jumps()) {
      throw ConstructionBug("factor jumps do not reproduce " + spec.to_string());
    }
    Graph prod = cartesian_product(build_circulant(CirculantSpec(p, f.R)),
                                   build_circulant(CirculantSpec(q, f.S)));
    if (!check_isomorphism_by_map(build_circulant(spec), prod, f.map)) {
      throw ConstructionBug("factor map fails for " + spec.to_string());
    }
    return f;
  }
  throw NotFactorizable(spec.to_string() + " admits no coprime (p, q) factorization");
}

int rep_bound_from_factorization(const Factorization& f) {
  if (f.p < 3 || f.q < 3 || f.R.size() != 2 || f.S.size() != 1) {
    throw UsageError("rep bound needs a 3-regular first factor and a cycle second factor");
  }
  CirculantSpec left(f.p, f.R), right(f.q, f.S);
  if (left.degree() != 3 || right.degree() != 2 || !is_connected_circulant(right)) {
    throw UsageError("rep bound needs a 3-regular first factor and a cycle second factor");
  }
  return static_cast<int>(5 + std::min(f.p, f.q));
}

bool non_representable_family(std::int64_t n, const std::vector<std::int64_t>& jumps) {
  std::vector<std::int64_t> j = jumps;
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  if (j.empty()) return false;
  const std::int64_t r = j.front();
  if (static_cast<std::int64_t>(j.size()) != r + 1) return false;
  for (std::int64_t i = 0; i <= r; ++i)
    if (j[i] != r + i) return false;
  // 2 < (n+1)/5 < r < (n-1)/4
  return n + 1 > 10 && 5 * r > n + 1 && 4 * r < n - 1;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Representable: return "Representable";
    case Verdict::NotRepresentable: return "NotRepresentable";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 1: return "Word";
    case 2: return "Coloring";
    case 3: return "Orientation";
    case 4: return std::get<ProductCertificate>(c).factorization ? "Factorization" : "Prism";
    case 5: return "FamilyCondition";
    default: return "none";
  }
}

namespace {

bool product_valid(const ProductCertificate& pc, const CirculantSpec& spec) {
  Graph l = build_circulant(pc.left), r = build_circulant(pc.right);
  if (!(pc.left_orientation.graph() == l) || !(pc.right_orientation.graph() == r)) return false;
  if (!is_semi_transitive(pc.left_orientation) || !is_semi_transitive(pc.right_orientation)) {
    return false;
  }
  if (pc.factorization && factorization_jumps(*pc.factorization) != spec.jumps()) return false;
  Graph g = build_circulant(spec);
  Graph prod = cartesian_product(l, r);
  if (static_cast<int>(pc.map.image.size()) != g.vertex_count() ||
      prod.vertex_count() != g.vertex_count()) {
    return false;
  }
  return check_isomorphism_by_map(g, prod, pc.map);
}

}  // namespace

bool verify_certificate(const Certificate& cert, const CirculantSpec& spec) {
  try {
    switch (cert.index()) {
      case 1: return represents(std::get<Word>(cert), build_circulant(spec)).ok;
      case 2: {
        const auto& c = std::get<ColoringCertificate>(cert);
        return c.spec == spec && check_certificate(c).ok();
      }
      case 3: {
        const auto& o = std::get<Orientation>(cert);
        return o.graph() == build_circulant(spec) && is_semi_transitive(o);
      }
      case 4: return product_valid(std::get<ProductCertificate>(cert), spec);
      case 5: {
        const auto& f = std::get<FamilyCondition>(cert);
        return f.order == spec.n_vertices() && f.r == spec.jumps().front() &&
               non_representable_family(spec.n_vertices(), spec.jumps());
      }
      default: return false;
    }
  } catch (const Error&) {
    return false;
  }
}

namespace {

using Clock = std::chrono::steady_clock;

// Semi-transitive orientations for both factors, or nothing if a search
// does not finish.
std::optional<ProductCertificate> certify_product(const CirculantSpec& left,
                                                  const CirculantSpec& right, VertexMap map,
                                                  std::uint64_t budget,
                                                  std::uint64_t& nodes) {
  SearchResult l = search_semi_transitive(build_circulant(left), budget);
  nodes += l.nodes;
  if (l.status != SearchStatus::Found) return std::nullopt;
  SearchResult r = search_semi_transitive(build_circulant(right), budget);
  nodes += r.nodes;
  if (r.status != SearchStatus::Found) return std::nullopt;
  return ProductCertificate{left, right, std::move(map), *l.orientation, *r.orientation,
                            std::nullopt};
}

Word pull_back_word(const Word& w, const VertexMap& map) {
  std::vector<Vertex> inv(map.image.size());
  for (std::size_t v = 0; v < map.image.size(); ++v) inv[map.image[v]] = static_cast<Vertex>(v);
  Word out;
  out.reserve(w.size());
  for (Vertex l : w) out.push_back(inv[l]);
  return out;
}

void search_fallback(ClassificationResult& res, const Graph& g, std::uint64_t budget) {
  if (g.vertex_count() > 64) {
    res.theorem_tag = "Search/TooLarge";
    return;
  }
  SearchResult s = search_semi_transitive(g, budget);
  res.search_nodes += s.nodes;
  res.theorem_tag = "Search";
  if (s.status == SearchStatus::Found) {
    res.verdict = Verdict::Representable;
    res.certificate = *s.orientation;
  } else if (s.status == SearchStatus::NotRepresentable) {
    res.verdict = Verdict::NotRepresentable;
  }
}

bool try_theorems(ClassificationResult& res, std::int64_t n, std::int64_t a, std::int64_t b,
                  std::uint64_t budget) {
  const CirculantSpec& spec = res.spec;

  ParityOutcome parity = parity_classify(n, a, b);
  if (parity.kind == ParityKind::Bipartite) {
    Graph g = build_circulant(spec);
    res.certificate = Orientation::from_ranks(g, *two_coloring(g));
    res.theorem_tag = "Parity/Bipartite";
    return true;
  }
  if (parity.kind == ParityKind::PrismReduction) {
    auto pc = certify_product(CirculantSpec(2, {1}), *parity.reduced, parity.map, budget,
                              res.search_nodes);
    if (pc) {
      res.certificate = std::move(*pc);
      res.theorem_tag = "Parity/PrismReduction";
      return true;
    }
  }

  auto form = unit_jump_form(n, a, b);
  if (form) {
    const std::int64_t x = form->x;
    for (MorphismScheme s :
         {MorphismScheme::X2, MorphismScheme::Half, MorphismScheme::HalfToTwoThirds}) {
      if (!morphism_hypothesis(s, n, x)) continue;
      res.certificate = pull_back_word(build_word_morphism(n, x, s), form->map);
      res.rep_number_upper = morphism_uniformity(s, n);
      res.theorem_tag = (s == MorphismScheme::X2 && n == 3) ? "X2/K6" : to_string(s);
      return true;
    }
  }

  for (Scheme s : kAllSchemes) {
    // A certificate that fails its own check is skipped, never trusted.
    try {
      if (!is_unit_jump_scheme(s)) {
        if (!scheme_hypothesis(s, n, a, b)) continue;
        res.certificate = build_coloring(spec, s);
      } else {
        if (!form || !scheme_hypothesis(s, n, form->x, 1)) continue;
        ColoringCertificate unit = build_coloring(five_regular_spec(n, 1, form->x), s);
        res.certificate = pull_back(unit, spec, form->map);
      }
    } catch (const CertificateFailure& ex) {
      res.notes.push_back(ex.what());
      continue;
    }
    res.theorem_tag = std::string("Coloring/") + to_string(s);
    return true;
  }

  // The even jump plays the role of a.
  std::optional<std::pair<std::int64_t, std::int64_t>> roles;
  if (a % 2 == 0 && b % 2 == 1) roles = {a, b};
  else if (b % 2 == 0 && a % 2 == 1) roles = {b, a};
  if (roles) {
    try {
      Factorization f = factorize_5regular(n, roles->first, roles->second);
      auto pc = certify_product(CirculantSpec(f.p, f.R), CirculantSpec(f.q, f.S), f.map,
                                budget, res.search_nodes);
      if (pc) {
        res.rep_number_upper = rep_bound_from_factorization(f);
        pc->factorization = std::move(f);
        res.certificate = std::move(*pc);
        res.theorem_tag = "Factorization";
        return true;
      }
    } catch (const NotFactorizable&) {
    } catch (const PreconditionError&) {
    }
  }
  return false;
}

ClassificationResult fresh_result(const CirculantSpec& spec) {
  ClassificationResult res{spec, Verdict::Unknown, std::monostate{}, spec, std::nullopt, {}, false, 0, 0, {}};
  return res;
}

void finish(ClassificationResult& res, Clock::time_point start) {
  if (res.verdict == Verdict::Representable || res.certificate.index() != 0) {
    res.verify_ok = verify_certificate(res.certificate, res.certified_spec);
  }
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ClassificationResult wrap_components(ClassificationResult inner, const CirculantSpec& spec,
                                     std::int64_t copies) {
  ClassificationResult res = std::move(inner);
  res.spec = spec;
  res.theorem_tag = "Components(" + std::to_string(copies) + ")/" + res.theorem_tag;
  // Disjoint copies of a k-representable graph are max(k, 2)-representable.
  if (res.rep_number_upper) res.rep_number_upper = std::max(*res.rep_number_upper, 2);
  return res;
}

}  // namespace

ClassificationResult classify(std::int64_t n, std::int64_t a, std::int64_t b,
                              std::uint64_t budget) {
  const auto start = Clock::now();
  CirculantSpec spec = five_regular_spec(n, a, b);

  ComponentDecomposition dec = component_decomposition(spec);
  if (dec.copies > 1) {
    const std::int64_t d = dec.copies;
    ClassificationResult res = wrap_components(classify(n / d, a / d, b / d, budget), spec, d);
    res.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
  }

  ClassificationResult res = fresh_result(spec);
  if (non_representable_family(spec.n_vertices(), spec.jumps())) {
    res.verdict = Verdict::NotRepresentable;
    res.certificate = FamilyCondition{spec.n_vertices(), spec.jumps().front()};
    res.theorem_tag = "Family";
  } else if (try_theorems(res, n, a, b, budget)) {
    res.verdict = Verdict::Representable;
  } else {
    search_fallback(res, build_circulant(spec), budget);
  }
  finish(res, start);
  return res;
}

ClassificationResult classify_circulant(const CirculantSpec& spec, std::uint64_t budget) {
  const auto& j = spec.jumps();
  const std::int64_t N = spec.n_vertices();
  if (N % 2 == 0 && N >= 6 && j.size() == 3 && 2 * j[2] == N) {
    return classify(N / 2, j[0], j[1], budget);
  }
  const auto start = Clock::now();
  ComponentDecomposition dec = component_decomposition(spec);
  if (dec.copies > 1) {
    ClassificationResult res =
        wrap_components(classify_circulant(dec.reduced, budget), spec, dec.copies);
    res.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return res;
  }
  ClassificationResult res = fresh_result(spec);
  if (non_representable_family(N, j)) {
    res.verdict = Verdict::NotRepresentable;
    res.certificate = FamilyCondition{N, j.front()};
    res.theorem_tag = "Family";
  } else {
    search_fallback(res, build_circulant(spec), budget);
  }
  finish(res, start);
  return res;
}

}  // namespace wordrep
