#pragma once

// The inverse braid monoid IB_n of partial braids, its type-B submonoid and
// the partial welded model IBP_n.
//
// A partial braid is stored as a canonical triple (I, J, core): the strand
// starting at the r-th point of I ends at the pi(r)-th point of J, where pi
// is the permutation of the core braid on k = |I| strands. Equal elements
// have identical triples, so == decides the word problem.

#include <compare>
#include <string>
#include <vector>

#include "braids/braid_core.hpp"

namespace braids {

struct PartialBraid {
  int n = 0;
  std::vector<int> I;  // ascending, 1-based
  std::vector<int> J;  // ascending, 1-based
  GarsideNF core{0, 0, {}};

  static PartialBraid identity(int n);
  // the empty braid: every strand deleted; absorbing
  static PartialBraid empty(int n);
  static PartialBraid from_braid(BraidWord const& w);
  static PartialBraid eps(int n, int i);

  int k() const noexcept { return static_cast<int>(I.size()); }
  bool total() const noexcept { return k() == n; }

  friend bool operator==(PartialBraid const&, PartialBraid const&) = default;
};

// Words over sigma_i^{+-1}, e_i and, for the type-B variant, t^{+-1}.
struct IBWord {
  int n = 1;
  std::vector<Token> letters;

  // throws std::invalid_argument on a bad token; tau only when type_b
  void validate(bool type_b = false) const;
};

IBWord ib_from_tokens(int n, std::vector<Token> const& toks);
IBWord parse_ib(std::string_view text, int default_n = 0);
std::string to_string(IBWord const& w);

PartialBraid pb_from_word(IBWord const& w);
PartialBraid pb_multiply(PartialBraid const& a, PartialBraid const& b);
PartialBraid pb_inverse(PartialBraid const& a);
// Representative gather * e_{k+1} ... e_n * core * scatter, where gather
// brings I to the first k points without crossing survivors.
IBWord pb_to_word(PartialBraid const& a);
// "I=[..] J=[..] core=<garside form>"
std::string format_pb(PartialBraid const& a);

// Image in the monoid of partial free-group isomorphisms.
PartialFreeIso phi(IBWord const& w);
PartialFreeIso phi(PartialBraid const& a);

// Partial injection of {1..n}; image[p-1] = 0 when p is not in the domain.
struct PartialInjection {
  int n = 0;
  std::vector<int> image;

  static PartialInjection identity(int n);
  PartialInjection then(PartialInjection const& other) const;
  friend bool operator==(PartialInjection const&,
                         PartialInjection const&) = default;
  friend auto operator<=>(PartialInjection const&,
                          PartialInjection const&) = default;
};

PartialInjection tau(PartialBraid const& a);
std::string to_string(PartialInjection const& p);

// eps_i * b == eps_i, i.e. deleting strand i leaves the trivial braid.
bool brunnian_test(BraidWord const& b, int i);
// all i
bool brunnian_test(BraidWord const& b);

// x_i = s_{i-1}^-1 ... s_1^-1 s_1^2 s_1 ... s_{i-1}, i = 1..n-1, exactly as
// the textbook formula reads. Note x_1 and x_2 coincide.
std::vector<BraidWord> brunnian_free_generators(int n);
// The usual free basis A_{1j} = s_{j-1} ... s_2 s_1^2 s_2^-1 ... s_{j-1}^-1,
// j = 2..n, of the 1-Brunnian subgroup.
std::vector<BraidWord> standard_brunnian_generators(int n);

struct AbelianImage {
  bool eps = false;
  long z = 0;      // sigma exponent sum, forced to 0 when eps is present
  long z_tau = 0;  // tau exponent sum (type B only), same rule

  friend bool operator==(AbelianImage const&, AbelianImage const&) = default;
};

AbelianImage abelianize(IBWord const& w);
AbelianImage abelianize(PartialBraid const& a);

// Type B: s_i -> s_{i+1}, e_i -> e_{i+1}, t -> s_1^2 in IB_{n+1}.
PartialBraid typeb_embed(IBWord const& w);

// Partial signed permutation: image[p-1] = +-q, or 0 outside the domain;
// -p maps to -image[p-1].
struct SignedPartialPermutation {
  int n = 0;
  std::vector<int> image;

  static SignedPartialPermutation identity(int n);
  SignedPartialPermutation then(SignedPartialPermutation const& other) const;
  bool total() const;
  friend bool operator==(SignedPartialPermutation const&,
                         SignedPartialPermutation const&) = default;
};

SignedPartialPermutation rho_b(IBWord const& w);
std::string to_string(SignedPartialPermutation const& p);

// Partial welded braids: sigma_i^{+-1}, xi_i and e_i acting on F_n.
struct IBPLetter {
  enum class Kind { sigma, xi, eps };
  Kind kind = Kind::sigma;
  int i = 1;
  int sign = 1;
};

struct IBPWord {
  int n = 1;
  std::vector<IBPLetter> letters;
};

PartialFreeIso ibp_model(IBPWord const& w);

}  // namespace braids
