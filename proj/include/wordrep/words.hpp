#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

using Word = std::vector<Vertex>;

// True iff both letters occur and the restriction of w to {x, y} never
// repeats a letter. Throws UsageError when x == y.
bool alternates(const Word& w, Vertex x, Vertex y);

// k if every letter occurs exactly k times.
std::optional<int> uniformity(const Word& w);

// Letters must be exactly 0..m-1 (each at least once).
Graph graph_of_word(const Word& w);

struct PairViolation {
  Edge pair;
  bool expected;  // adjacency in the graph
  bool actual;    // alternation in the word
};

struct RepresentsResult {
  bool ok;
  std::vector<PairViolation> violations;
};

// Throws UsageError if the word's alphabet differs from V(g).
RepresentsResult represents(const Word& w, const Graph& g);

// v.u for w = u.v split at cut. Throws PreconditionError for non-uniform w.
Word rotate_uniform(const Word& w, std::size_t cut);

enum class UniformSearchStatus { Found, NotFound, Undecided };

struct UniformSearchResult {
  UniformSearchStatus status;
  std::optional<int> k;
  Word witness;
  std::uint64_t nodes_explored = 0;
};

// A k-uniform representing word for fixed k, exhaustively.
UniformSearchResult find_uniform_representation(const Graph& g, int k, std::uint64_t budget);

// Smallest k <= k_max admitting a k-uniform representing word. Exhaustive
// over words starting with letter 0; the first witness found per k is the
// lexicographically least such word.
UniformSearchResult min_uniform_representation(const Graph& g, int k_max,
                                               std::uint64_t budget);

// Whitespace separated decimal letters.
Word parse_word(const std::string& line);
std::string format_word(const Word& w);
// One word per non-blank line.
std::vector<Word> read_words(std::istream& in);

}  // namespace wordrep
