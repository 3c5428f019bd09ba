#pragma once

// Birman-Ko-Lee band generators a_ts = (s_{t-1}..s_{s+1}) s_s (..)^-1,
// the fundamental word delta = a_{n(n-1)} ... a_21, its divisors
// (non-crossing partitions of {1..n}) and the left-greedy BKL normal form.

#include <string>
#include <vector>

#include "braids/braid_core.hpp"

namespace braids {

struct BandLetter {
  int t;     // 1 <= s < t <= n
  int s;
  int sign;  // +1 or -1

  friend bool operator==(BandLetter const&, BandLetter const&) = default;
};

struct BandWord {
  int n = 1;
  std::vector<BandLetter> letters;

  BandWord() = default;
  BandWord(int strands, std::vector<BandLetter> ls = {});

  void validate() const;
  BandWord inverse() const;
  std::size_t size() const noexcept { return letters.size(); }

  friend BandWord operator*(BandWord const& u, BandWord const& v);
  friend bool operator==(BandWord const&, BandWord const&) = default;
};

BandWord band_from_tokens(int n, std::vector<Token> const& toks);
BandWord parse_band(std::string_view text, int default_n = 0);
std::vector<Token> to_tokens(BandWord const& w);
std::string to_string(BandWord const& w);

BraidWord band_to_artin(BandWord const& w);
BandWord artin_to_band(BraidWord const& w);
BandWord band_delta_word(int n);

// A positive divisor of delta. up[x] is the next larger point of x's block,
// wrapping from the block maximum to its minimum (0-based); this is also
// the permutation of the braid.
class CanonicalFactor {
 public:
  CanonicalFactor() = default;
  static CanonicalFactor identity(int n);
  static CanonicalFactor delta(int n);
  // blocks are sets of 1-based points; throws unless they form a
  // non-crossing partition of {1..n} (singletons may be omitted)
  static CanonicalFactor from_blocks(int n,
                                     std::vector<std::vector<int>> const& bl);
  // throws unless every cycle is increasing and the cycles do not cross
  static CanonicalFactor from_permutation(Permutation const& p);

  int n() const noexcept { return static_cast<int>(up_.size()); }
  std::vector<int> const& up() const noexcept { return up_; }
  Permutation permutation() const { return Permutation{up_}; }
  // 1-based blocks of size >= 2, each listed descending, ordered by
  // decreasing maximum
  std::vector<std::vector<int>> blocks() const;
  BandWord word() const;
  int length() const;
  bool is_identity() const;
  bool is_delta() const;

  friend bool operator==(CanonicalFactor const&,
                         CanonicalFactor const&) = default;
  friend auto operator<=>(CanonicalFactor const&,
                          CanonicalFactor const&) = default;

 private:
  explicit CanonicalFactor(std::vector<int> up) : up_(std::move(up)) {}
  std::vector<int> up_;
};

std::string to_string(CanonicalFactor const& f);

// delta_divisors and the lattice operations below enumerate the divisor
// set, so they are limited to this many strands.
inline constexpr int kMaxDivisorStrands = 8;

// Memoized per n; the returned reference stays valid for the process.
std::vector<CanonicalFactor> const& delta_divisors(int n);
// Brute force over delta_divisors(n), with divisibility decided by the
// braid word problem.
bool factor_divides(CanonicalFactor const& f, CanonicalFactor const& g);
CanonicalFactor factor_meet(CanonicalFactor const& f,
                            CanonicalFactor const& g);
CanonicalFactor factor_join(CanonicalFactor const& f,
                            CanonicalFactor const& g);

// Meet computed as the common refinement of the two partitions; valid for
// any n and used by bkl_nf.
CanonicalFactor partition_meet(CanonicalFactor const& f,
                               CanonicalFactor const& g);
// f^-1 delta, the right complement of f.
CanonicalFactor right_complement(CanonicalFactor const& f);
// delta^-k f delta^k: every point moves up by k (mod n).
CanonicalFactor delta_shift(CanonicalFactor const& f, int k);

struct BklNF {
  int n = 1;
  long power = 0;
  std::vector<CanonicalFactor> factors;

  friend bool operator==(BklNF const&, BklNF const&) = default;
};

BklNF bkl_nf(BandWord const& w);
BandWord to_word(BklNF const& nf);
bool band_equal(BandWord const& u, BandWord const& v);
std::string format_nf(BklNF const& nf);

}  // namespace braids
