#pragma once

// Artin braid words, the permutation projection, Garside normal form,
// strand deletion and the free-group automorphism model of Br_n.
//
// Conventions: words act left to right. A Permutation stores 0-based
// images, image[p] being the bottom position of the strand that starts at
// top position p, so permutation_of(u v) applies u first.

#include <cstdint>
#include <string>
#include <vector>

#include "braids/word.hpp"

namespace braids {

struct Letter {
  int index;  // 1-based sigma index
  int sign;   // +1 or -1

  friend bool operator==(Letter const&, Letter const&) = default;
};

struct BraidWord {
  int n = 1;
  std::vector<Letter> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<Letter> ls = {});

  // throws std::invalid_argument when an index is out of range
  void validate() const;
  BraidWord inverse() const;
  // reversed letter order, same signs: the anti-automorphism fixing sigma_i
  BraidWord reversed() const;
  std::size_t size() const noexcept { return letters.size(); }

  friend BraidWord operator*(BraidWord const& u, BraidWord const& v);
  friend bool operator==(BraidWord const&, BraidWord const&) = default;
};

BraidWord pow(BraidWord const& w, int k);

// Converts sigma tokens; throws std::invalid_argument on any other token.
BraidWord braid_from_tokens(int n, std::vector<Token> const& toks);
BraidWord parse_braid(std::string_view text, int default_n = 0);
std::vector<Token> to_tokens(BraidWord const& w);
std::string to_string(BraidWord const& w);

struct Permutation {
  std::vector<int> image;

  static Permutation identity(int n);
  int size() const noexcept { return static_cast<int>(image.size()); }
  Permutation inverse() const;
  // this first, then other
  Permutation then(Permutation const& other) const;
  bool is_identity() const;
  // cycle notation with 1-based points, "()" for the identity
  std::string cycles() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;
};

Permutation permutation_of(BraidWord const& w);
BraidWord delta_word(int n);

// Positive permutation braids, identified with their permutations.
bool in_starting_set(Permutation const& a, int i);   // i is 0-based
bool in_finishing_set(Permutation const& a, int i);  // i is 0-based
BraidWord permutation_braid_word(Permutation const& a);
// Conjugation by Delta: positions reflected p -> n-1-p.
Permutation delta_conjugate(Permutation const& a);

struct GarsideNF {
  int n = 1;
  long power = 0;
  std::vector<Permutation> factors;

  friend bool operator==(GarsideNF const&, GarsideNF const&) = default;
};

GarsideNF garside_nf(BraidWord const& w);
// Delta^power followed by the factor words.
BraidWord to_word(GarsideNF const& nf);
bool is_left_weighted(GarsideNF const& nf);
bool braid_equal(BraidWord const& u, BraidWord const& v);

// Right-greedy form B_1 ... B_k Delta^power, obtained from the left form of
// the reversed word.
struct RightGreedyForm {
  std::vector<Permutation> factors;
  long power = 0;
};
RightGreedyForm right_greedy(BraidWord const& w);

enum class Greedy { left, right };
std::string format_nf(GarsideNF const& nf, Greedy side = Greedy::left);

// Free group words: letters are +-g for generator g in 1..rank.
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  FreeWord inverse() const;
  friend bool operator==(FreeWord const&, FreeWord const&) = default;
};

FreeWord free_reduce(FreeWord const& w);
std::string to_string(FreeWord const& w);

struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;  // images[g-1] is the image of x_g

  static FreeAutomorphism identity(int rank);
  // this first, then other
  FreeAutomorphism then(FreeAutomorphism const& other) const;
  FreeWord apply(FreeWord const& w) const;

  friend bool operator==(FreeAutomorphism const&,
                         FreeAutomorphism const&) = default;
};

FreeAutomorphism act_free(BraidWord const& w);

// Partial isomorphism of F_n in the monoid EF_n. target[g-1] is the index
// of the letter x_{a(g)} sitting in the middle of the image of x_g, or 0
// when x_g is outside the domain.
struct PartialFreeIso {
  int rank = 0;
  std::vector<int> target;
  std::vector<FreeWord> images;

  static PartialFreeIso identity(int rank);
  static PartialFreeIso from(FreeAutomorphism const& a);
  bool defined(int g) const { return target[g - 1] != 0; }
  // this first, then other; letters outside other's domain, and then
  // letters outside the composite's image, become 1
  PartialFreeIso then(PartialFreeIso const& other) const;

  friend bool operator==(PartialFreeIso const&,
                         PartialFreeIso const&) = default;
};

// Bottom position (1-based) of the strand starting at top position s.
int final_position(BraidWord const& w, int s);
BraidWord delete_strand(BraidWord const& w, int s);

}  // namespace braids
