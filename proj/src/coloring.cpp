#include "wordrep/coloring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "wordrep/errors.hpp"
#include "wordrep/numtheory.hpp"

namespace wordrep {

namespace nt = numtheory;

namespace {

using coloring_tables::kBlockTable;
using coloring_tables::kBlockTableAlt;

// Semi-transitive orientation of K4 on colors c0..c3; its topological
// order is c0, c3, c2, c1.
ColorDag k4_dag() {
  ColorDag dag;
  dag.color_count = 4;
  dag.arcs = {{0, 2}, {3, 1}, {3, 2}, {0, 1}, {0, 3}, {2, 1}};
  return dag;
}

ColorDag linear3_dag() { return ColorDag::complete_from_order({0, 1, 2}); }

// c_i = i and d_i = 3 + i.
constexpr int c(int i) { return i; }
constexpr int d(int i) { return 3 + i; }

struct FiveRegularShape {
  std::int64_t n, a, b;
};

FiveRegularShape shape_of(const CirculantSpec& spec) {
  const auto& j = spec.jumps();
  if (spec.n_vertices() % 2 != 0 || j.size() != 3 || 2 * j[2] != spec.n_vertices()) {
    throw SpecError(spec.to_string() + " is not of the shape C_{2n}(a, b, n)");
  }
  return {j[2], j[0], j[1]};
}

int block_of(std::int64_t v, std::int64_t end0, std::int64_t end1) {
  return v < end0 ? 0 : (v < end1 ? 1 : 2);
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Mod3: return "Mod3";
    case Scheme::GeneratorBlocks: return "GeneratorBlocks";
    case Scheme::NX2: return "NX2";
    case Scheme::NX0: return "NX0";
    case Scheme::N0X1: return "N0X1";
    case Scheme::N0X2: return "N0X2";
    case Scheme::N1X2: return "N1X2";
    case Scheme::N2X1: return "N2X1";
  }
  return "?";
}

std::optional<Scheme> scheme_from_string(const std::string& s) {
  for (Scheme sc : kAllSchemes)
    if (s == to_string(sc)) return sc;
  return std::nullopt;
}

bool is_unit_jump_scheme(Scheme s) {
  return s != Scheme::Mod3 && s != Scheme::GeneratorBlocks;
}

ProperCheck verify_proper(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) {
    throw UsageError("verify_proper: coloring must cover every vertex");
  }
  ProperCheck res{true, {}};
  for (auto [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      res.ok = false;
      res.violations.emplace_back(u, v);
    }
  }
  return res;
}

CertificateCheck check_certificate(const ColoringCertificate& cert) {
  CertificateCheck chk;
  Graph g = build_circulant(cert.spec);
  chk.proper = verify_proper(g, cert.colors).ok;
  if (!chk.proper) return chk;
  try {
    Orientation o = orient_by_color_order(g, cert.colors, cert.color_dag);
    chk.homomorphic = true;
    chk.acyclic = is_acyclic(o);
    if (!chk.acyclic) return chk;
    chk.witness = find_shortcut(o);
    chk.shortcut_free = !chk.witness.has_value();
  } catch (const HomomorphismError&) {
    chk.homomorphic = false;
  } catch (const UsageError&) {
    // cyclic or malformed color dag
    chk.homomorphic = false;
  }
  return chk;
}

std::optional<std::pair<std::int64_t, std::int64_t>> generator_block_params(
    std::int64_t n, std::int64_t a, std::int64_t b) {
  const nt::Modulus m(2 * n);
  const std::int64_t need = (2 * n + 2) / 3;  // ceil(2n/3)
  for (std::int64_t g : nt::unit_residues(m)) {
    std::int64_t inv = nt::mod_inverse(g, m);
    std::int64_t p = m.reduce(a * inv), q = m.reduce(b * inv);
    std::int64_t r = std::min({p, q, 2 * n - p, 2 * n - q});
    if (r >= need) return std::pair{g, r};
  }
  return std::nullopt;
}

bool scheme_hypothesis(Scheme s, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (s == Scheme::Mod3) {
    for (std::int64_t v : {a, b, 2 * n - a, 2 * n - b, n})
      if (v % 3 == 0) return false;
    return true;
  }
  if (s == Scheme::GeneratorBlocks) return generator_block_params(n, a, b).has_value();

  // Unit-jump schemes read (n, a) as (n, x).
  const std::int64_t x = a;
  if (!(1 < x && x < n)) return false;
  const std::int64_t nm = n % 3, xm = x % 3;
  switch (s) {
    case Scheme::NX2: return nm == 2 && xm == 2;
    case Scheme::NX0: return nm == 0 && xm == 0 && 3 * x > 2 * n;
    case Scheme::N0X1: return nm == 0 && xm == 1 && 2 * x < n;
    case Scheme::N0X2: return nm == 0 && xm == 2 && 2 < x && 2 * x < n;
    case Scheme::N1X2: return nm == 1 && xm == 2 && 2 < x && 2 * x < n;
    case Scheme::N2X1: return nm == 2 && xm == 1 && 2 * x < n;
    default: return false;
  }
}

std::vector<Scheme> applicable_schemes(std::int64_t n, std::int64_t a, std::int64_t b) {
  five_regular_spec(n, a, b);
  std::vector<Scheme> out;
  std::optional<std::int64_t> x;
  if (auto form = unit_jump_form(n, a, b)) x = form->x;
  for (Scheme s : kAllSchemes) {
    if (!is_unit_jump_scheme(s)) {
      if (scheme_hypothesis(s, n, a, b)) out.push_back(s);
    } else if (x && scheme_hypothesis(s, n, *x, 1)) {
      out.push_back(s);
    }
  }
  return out;
}

namespace {

std::string describe_failure(const ColoringCertificate& cert, const CertificateCheck& chk) {
  std::ostringstream os;
  os << to_string(cert.scheme) << " certificate for " << cert.spec.to_string() << " failed:";
  if (!chk.proper) os << " improper";
  else if (!chk.homomorphic) os << " not homomorphic to its color dag";
  else if (!chk.acyclic) os << " cyclic";
  else if (chk.witness) {
    os << " shortcut along";
    for (Vertex v : chk.witness->path) os << ' ' << v;
    os << " (missing " << chk.witness->missing_pair.first << '-'
       << chk.witness->missing_pair.second << ')';
  }
  return os.str();
}

}  // namespace

ColoringCertificate build_coloring(const CirculantSpec& spec, Scheme scheme) {
  auto [n, a, b] = shape_of(spec);
  const std::int64_t N = 2 * n;
  ColoringCertificate cert{spec, std::vector<int>(N, 0), {}, scheme};

  if (is_unit_jump_scheme(scheme)) {
    if (a != 1) {
      throw SchemeNotApplicable(std::string(to_string(scheme)) +
                                " needs the unit-jump form C_{2n}(1, x, n)");
    }
    if (!scheme_hypothesis(scheme, n, b, 1)) {
      throw SchemeNotApplicable(std::string(to_string(scheme)) + " hypothesis fails for n=" +
                                std::to_string(n) + ", x=" + std::to_string(b));
    }
  } else if (!scheme_hypothesis(scheme, n, a, b)) {
    throw SchemeNotApplicable(std::string(to_string(scheme)) + " hypothesis fails for " +
                              spec.to_string());
  }
  const std::int64_t x = b;
  auto& col = cert.colors;

  switch (scheme) {
    case Scheme::Mod3:
      for (std::int64_t j = 0; j < N; ++j) col[j] = static_cast<int>(j % 3);
      cert.color_dag = linear3_dag();
      break;
    case Scheme::GeneratorBlocks: {
      auto [g, r] = *generator_block_params(n, a, b);
      cert.generator = g;
      cert.block = r;
      for (std::int64_t k = 0; k < N; ++k) {
        col[(k * g) % N] = k < r ? 0 : (k < 2 * r ? 1 : 2);
      }
      cert.color_dag = linear3_dag();
      break;
    }
    case Scheme::NX2:
      for (std::int64_t j = 0; j < N; ++j) col[j] = static_cast<int>(j % 3);
      col[N - 1] = 3;
      cert.color_dag = k4_dag();
      break;
    case Scheme::NX0:
      for (std::int64_t j = 0; j < N; ++j)
        col[j] = kBlockTable[block_of(j, x, 2 * x)][j % 3];
      cert.color_dag = linear3_dag();
      break;
    case Scheme::N0X1:
      for (std::int64_t j = 0; j < N; ++j)
        col[j] = kBlockTable[block_of(j, n, N - x)][j % 3];
      cert.color_dag = linear3_dag();
      break;
    case Scheme::N0X2:
      for (std::int64_t j = 0; j < N; ++j)
        col[j] = kBlockTableAlt[block_of(j, n, N - x)][j % 3];
      col[n] = col[N - x] = col[N - 1] = 3;
      cert.color_dag = k4_dag();
      break;
    case Scheme::N1X2:
    case Scheme::N2X1:
      for (std::int64_t j = 0; j < N; ++j) {
        int i = static_cast<int>(j % 3);
        col[j] = j < N - x ? c(i) : d(i);
      }
      cert.color_dag = scheme == Scheme::N1X2
                           ? ColorDag::complete_from_order({d(0), c(0), d(2), c(2), d(1), c(1)})
                           : ColorDag::complete_from_order({d(0), c(0), d(1), c(1), d(2), c(2)});
      break;
  }

  CertificateCheck chk = check_certificate(cert);
  if (!chk.ok()) throw CertificateFailure(describe_failure(cert, chk));
  cert.verified = true;
  return cert;
}

ColoringCertificate pull_back(const ColoringCertificate& cert, const CirculantSpec& target,
                              const VertexMap& map) {
  if (static_cast<std::int64_t>(map.image.size()) != target.n_vertices() ||
      target.n_vertices() != cert.spec.n_vertices()) {
    throw UsageError("pull_back: size mismatch");
  }
  if (!check_isomorphism_by_map(build_circulant(target), build_circulant(cert.spec), map)) {
    throw UsageError("pull_back: map is not an isomorphism");
  }
  ColoringCertificate out = cert;
  out.spec = target;
  for (std::size_t v = 0; v < map.image.size(); ++v) out.colors[v] = cert.colors[map.image[v]];
  CertificateCheck chk = check_certificate(out);
  if (!chk.ok()) throw CertificateFailure(describe_failure(out, chk));
  out.verified = true;
  return out;
}

}  // namespace wordrep
