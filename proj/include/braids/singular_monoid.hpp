#pragma once

// The singular braid monoid SB_n in band generators a_ts^{+-1}, b_ts.
//
// Positive words are compared through their positive-equivalence class in
// SBKL_n^+: every defining relation there has length two on both sides, so
// classes are finite and can be enumerated by closure. Normal forms have the
// shape delta^m * base with the base the deg-lex least word of its class.
// The normal form itself never enumerates a class: left division by a
// generator is decided through the lcm table (a common multiple of x and y
// is a multiple of their lcm, and inadmissible pairs have none), and the
// tests check the result against the closure.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braids/bkl_band.hpp"

namespace braids {

struct SLetter {
  bool singular = false;  // b_ts when set, a_ts otherwise
  int t = 2;
  int s = 1;
  int sign = 1;  // only a letters may carry -1

  friend bool operator==(SLetter const&, SLetter const&) = default;
  friend auto operator<=>(SLetter const&, SLetter const&) = default;
};

inline SLetter a_gen(int t, int s, int sign = 1) { return {false, t, s, sign}; }
inline SLetter b_gen(int t, int s) { return {true, t, s, 1}; }

struct SBandWord {
  int n = 2;
  std::vector<SLetter> letters;

  SBandWord() = default;
  SBandWord(int strands, std::vector<SLetter> ls = {});

  // throws std::invalid_argument on bad indices or an inverted b letter
  void validate() const;
  bool positive() const;
  std::size_t size() const noexcept { return letters.size(); }

  friend SBandWord operator*(SBandWord const& u, SBandWord const& v);
  friend bool operator==(SBandWord const&, SBandWord const&) = default;
  friend auto operator<=>(SBandWord const&, SBandWord const&) = default;
};

// Classical generators sigma_i^{+-1} and x_i.
struct SingularWord {
  int n = 2;
  std::vector<Token> letters;

  void validate() const;
};

SBandWord sband_from_tokens(int n, std::vector<Token> const& toks);
SBandWord parse_sband(std::string_view text, int default_n = 0);
SingularWord singular_from_tokens(int n, std::vector<Token> const& toks);
SingularWord parse_singular(std::string_view text, int default_n = 0);
std::vector<Token> to_tokens(SBandWord const& w);
std::string to_string(SBandWord const& w);
std::string to_string(SingularWord const& w);

SBandWord from_band(BandWord const& w);
SBandWord sband_delta(int n);
SBandWord classical_to_band(SingularWord const& w);
SingularWord band_to_classical(SBandWord const& w);

// delta^k w delta^-k: every index moves down by k (mod n).
SBandWord delta_shift_down(SBandWord const& w, int k);
// D_ts with a_ts D_ts = delta, read off the explicit left-divisibility
// expression for delta.
SBandWord delta_cofactor(int n, int t, int s);

// Defining relations of SB_n in band generators, including a a^-1 = 1.
struct SRelation {
  SBandWord lhs;
  SBandWord rhs;
};
std::vector<SRelation> sbkl_relations(int n);

struct ClosureOptions {
  std::size_t cap = 1'000'000;
  bool parallel = true;
};

class ClosureOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All positive words positively equivalent to the seed, in deg-lex order.
struct PositiveClass {
  int n = 2;
  std::vector<SBandWord> members;

  bool contains(SBandWord const& w) const;
};

PositiveClass positive_closure(SBandWord const& w, ClosureOptions opts = {});
// Breadth-first reference used to check the parallel kernel.
PositiveClass positive_closure_serial(SBandWord const& w,
                                      std::size_t cap = 1'000'000);
bool positively_equivalent(SBandWord const& u, SBandWord const& v);

// Deg-lex order: a letters before b letters, each family by (t, s).
bool deglex_less(SBandWord const& u, SBandWord const& v);
SBandWord base(SBandWord const& w);
std::optional<SBandWord> delta_divide(SBandWord const& w);

struct SingularNF {
  int n = 2;
  long power = 0;
  SBandWord base;

  friend bool operator==(SingularNF const&, SingularNF const&) = default;
  friend auto operator<=>(SingularNF const&, SingularNF const&) = default;
};

SingularNF singular_nf(SBandWord const& w);
SingularNF singular_nf(SingularWord const& w);
// delta^power base, as a positive word when power >= 0.
SBandWord to_word(SingularNF const& nf);
std::string format_nf(SingularNF const& nf);
bool singular_equal(SBandWord const& u, SBandWord const& v);
bool singular_equal(SingularWord const& u, SingularWord const& v);

// Least common multiple of two distinct positive generators, with
// lcm = x cx = y cy.
struct LcmResult {
  SBandWord lcm;
  SBandWord cx;
  SBandWord cy;
};
bool admissible(int n, SLetter const& x, SLetter const& y);
std::optional<LcmResult> pair_lcm(int n, SLetter const& x, SLetter const& y);

class LeftCancelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Given x X = y Y (checked), returns Z with X = (x v y)*_x Z and
// Y = (x v y)*_y Z. Throws LeftCancelError when the premise fails or the
// pair is inadmissible.
SBandWord left_cancel(int n, SLetter const& x, SBandWord const& X,
                      SLetter const& y, SBandWord const& Y);

SingularNF conjugate_by(SBandWord const& u, BandWord const& g);

struct ConjugacyOptions {
  std::size_t max_set = 200'000;
};

// C+(u): positive conjugates reachable through divisors of delta.
std::vector<SingularNF> positive_conjugates(SBandWord const& u,
                                            ConjugacyOptions opts = {});
std::vector<SingularNF> positive_conjugates(SingularNF const& u,
                                            ConjugacyOptions opts = {});
// Both sides are first multiplied by the least central delta^(nk) that
// makes their normal forms positive.
bool conjugacy_test(SBandWord const& u, SBandWord const& v,
                    ConjugacyOptions opts = {});

// Conjugation invariants.
int b_count(SBandWord const& w);
int a_exponent_sum(SBandWord const& w);

}  // namespace braids
