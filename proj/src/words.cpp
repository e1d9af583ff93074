#include "wordrep/words.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include "wordrep/errors.hpp"

namespace wordrep {

namespace {

// Positions of each letter 0..alphabet-1, ascending.
std::vector<std::vector<int>> positions(const Word& w, int alphabet) {
  std::vector<std::vector<int>> pos(alphabet);
  for (int i = 0; i < static_cast<int>(w.size()); ++i) pos[w[i]].push_back(i);
  return pos;
}

bool positions_alternate(const std::vector<int>& px, const std::vector<int>& py) {
  if (px.empty() || py.empty()) return false;
  std::size_t i = 0, j = 0;
  int prev = -1;  // 0 = x, 1 = y
  while (i < px.size() || j < py.size()) {
    int next;
    if (j == py.size() || (i < px.size() && px[i] < py[j])) {
      next = 0;
      ++i;
    } else {
      next = 1;
      ++j;
    }
    if (next == prev) return false;
    prev = next;
  }
  return true;
}

// Alphabet size if letters are exactly 0..m-1, else nullopt.
std::optional<int> dense_alphabet(const Word& w) {
  if (w.empty()) return std::nullopt;
  int m = *std::max_element(w.begin(), w.end()) + 1;
  if (*std::min_element(w.begin(), w.end()) < 0) return std::nullopt;
  std::vector<bool> seen(m, false);
  for (Vertex v : w) seen[v] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  return m;
}

}  // namespace

bool alternates(const Word& w, Vertex x, Vertex y) {
  if (x == y) throw UsageError("alternates: letters must differ");
  int prev = -1;
  bool seen_x = false, seen_y = false;
  for (Vertex c : w) {
    if (c != x && c != y) continue;
    if (c == prev) return false;
    prev = c;
    (c == x ? seen_x : seen_y) = true;
  }
  return seen_x && seen_y;
}

std::optional<int> uniformity(const Word& w) {
  if (w.empty()) return std::nullopt;
  std::map<Vertex, int> counts;
  for (Vertex v : w) ++counts[v];
  int k = counts.begin()->second;
  for (auto& [v, c] : counts) {
    if (c != k) return std::nullopt;
  }
  return k;
}

Graph graph_of_word(const Word& w) {
  auto m = dense_alphabet(w);
  if (!m) throw UsageError("graph_of_word: letters must be exactly 0..m-1");
  auto pos = positions(w, *m);
  std::vector<Edge> edges;
  for (int x = 0; x < *m; ++x)
    for (int y = x + 1; y < *m; ++y)
      if (positions_alternate(pos[x], pos[y])) edges.emplace_back(x, y);
  return Graph(*m, edges);
}

RepresentsResult represents(const Word& w, const Graph& g) {
  auto m = dense_alphabet(w);
  if (!m || *m != g.vertex_count()) {
    throw UsageError("represents: word alphabet must equal the vertex set 0.." +
                     std::to_string(g.vertex_count() - 1));
  }
  auto pos = positions(w, *m);
  RepresentsResult res{true, {}};
  for (int x = 0; x < *m; ++x) {
    for (int y = x + 1; y < *m; ++y) {
      bool alt = positions_alternate(pos[x], pos[y]);
      bool adj = g.adjacent(x, y);
      if (alt != adj) {
        res.ok = false;
        res.violations.push_back({{x, y}, adj, alt});
      }
    }
  }
  return res;
}

Word rotate_uniform(const Word& w, std::size_t cut) {
  if (!uniformity(w)) throw PreconditionError("rotate_uniform: word is not uniform");
  if (cut > w.size()) throw UsageError("rotate_uniform: cut beyond word length");
  Word out(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
  return out;
}

namespace {

class UniformWordSearch {
 public:
  UniformWordSearch(const Graph& g, int k, std::uint64_t& nodes, std::uint64_t budget)
      : g_(g),
        n_(g.vertex_count()),
        k_(k),
        nodes_(nodes),
        budget_(budget),
        count_(n_, 0),
        last_(n_, -1),
        broken_(static_cast<std::size_t>(n_) * n_, 0) {
    word_.reserve(static_cast<std::size_t>(n_) * k_);
  }

  // 1 found, 0 exhausted, -1 budget exceeded.
  int run() {
    int r = place(0);
    return r;
  }

  const Word& word() const { return word_; }

 private:
  int place(Vertex x) {
    if (++nodes_ > budget_) return -1;
    const int p = static_cast<int>(word_.size());
    // Adjacent letters may not repeat in their restriction.
    for (Vertex y : g_.neighbors(x)) {
      if (last_[x] >= 0 && last_[x] > last_[y]) return 0;
    }
    std::vector<int> newly_broken;
    if (last_[x] >= 0) {
      for (Vertex y = 0; y < n_; ++y) {
        if (y == x || g_.adjacent(x, y)) continue;
        if (last_[x] > last_[y] && !broken_[idx(x, y)]) {
          broken_[idx(x, y)] = broken_[idx(y, x)] = 1;
          newly_broken.push_back(y);
        }
      }
    }
    int saved_last = last_[x];
    ++count_[x];
    last_[x] = p;
    word_.push_back(x);

    int result = 0;
    bool ok = true;
    if (count_[x] == k_) {
      for (Vertex y = 0; y < n_ && ok; ++y) {
        if (y != x && !g_.adjacent(x, y) && count_[y] == k_ && !broken_[idx(x, y)]) ok = false;
      }
    }
    if (ok) {
      if (static_cast<int>(word_.size()) == n_ * k_) {
        return 1;
      }
      for (Vertex nx = 0; nx < n_; ++nx) {
        if (count_[nx] == k_) continue;
        result = place(nx);
        if (result != 0) break;
      }
      if (result == 1) return 1;
    }
    word_.pop_back();
    last_[x] = saved_last;
    --count_[x];
    for (Vertex y : newly_broken) broken_[idx(x, y)] = broken_[idx(y, x)] = 0;
    return result;
  }

  std::size_t idx(Vertex a, Vertex b) const { return static_cast<std::size_t>(a) * n_ + b; }

  const Graph& g_;
  int n_;
  int k_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<int> count_;
  std::vector<int> last_;
  std::vector<std::uint8_t> broken_;
  Word word_;
};

}  // namespace

UniformSearchResult find_uniform_representation(const Graph& g, int k, std::uint64_t budget) {
  if (g.vertex_count() < 1) throw UsageError("uniform word search: empty graph");
  if (k < 1) throw UsageError("uniform word search: k must be positive");
  UniformSearchResult res{UniformSearchStatus::NotFound, std::nullopt, {}, 0};
  UniformWordSearch search(g, k, res.nodes_explored, budget);
  int r = search.run();
  if (r == 1) {
    res.status = UniformSearchStatus::Found;
    res.k = k;
    res.witness = search.word();
  } else if (r < 0) {
    res.status = UniformSearchStatus::Undecided;
    res.nodes_explored = std::min(res.nodes_explored, budget);
  }
  return res;
}

UniformSearchResult min_uniform_representation(const Graph& g, int k_max,
                                               std::uint64_t budget) {
  if (k_max < 1) throw UsageError("min_uniform_representation: k_max must be positive");
  UniformSearchResult res{UniformSearchStatus::NotFound, std::nullopt, {}, 0};
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t left = budget - std::min(budget, res.nodes_explored);
    UniformSearchResult step = find_uniform_representation(g, k, left);
    res.nodes_explored += step.nodes_explored;
    if (step.status != UniformSearchStatus::NotFound) {
      step.nodes_explored = res.nodes_explored;
      return step;
    }
  }
  return res;
}

Word parse_word(const std::string& line) {
  Word w;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0) {
      throw UsageError("invalid letter '" + tok + "'");
    }
    w.push_back(v);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

std::vector<Word> read_words(std::istream& in) {
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    Word w = parse_word(line);
    if (!w.empty()) words.push_back(std::move(w));
  }
  return words;
}

}  // namespace wordrep
