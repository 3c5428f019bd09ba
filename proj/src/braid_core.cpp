#include "braids/braid_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braids {

BraidWord::BraidWord(int strands, std::vector<Letter> ls)
    : n(strands), letters(std::move(ls)) {
  validate();
}

void BraidWord::validate() const {
  if (n < 0) {
    throw std::invalid_argument("negative strand count");
  }
  for (auto const& l : letters) {
    if (l.index < 1 || l.index >= n || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("letter s" + std::to_string(l.index)
                                  + " out of range for n="
                                  + std::to_string(n));
    }
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.n = n;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back({it->index, -it->sign});
  }
  return out;
}

BraidWord BraidWord::reversed() const {
  BraidWord out;
  out.n = n;
  out.letters.assign(letters.rbegin(), letters.rend());
  return out;
}

BraidWord operator*(BraidWord const& u, BraidWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("strand counts differ");
  }
  BraidWord out;
  out.n = u.n;
  out.letters = u.letters;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BraidWord pow(BraidWord const& w, int k) {
  BraidWord base = k < 0 ? w.inverse() : w;
  BraidWord out;
  out.n = w.n;
  for (int r = 0; r < std::abs(k); ++r) {
    out.letters.insert(out.letters.end(), base.letters.begin(),
                       base.letters.end());
  }
  return out;
}

BraidWord braid_from_tokens(int n, std::vector<Token> const& toks) {
  BraidWord out;
  out.n = n;
  for (auto const& t : toks) {
    if (t.gen != Gen::sigma) {
      throw std::invalid_argument("expected a sigma letter, got "
                                  + format_token(t));
    }
    out.letters.push_back({t.i, t.sign});
  }
  out.validate();
  return out;
}

BraidWord parse_braid(std::string_view text, int default_n) {
  auto parsed = parse_word(text);
  int n = parsed.n.value_or(
      default_n > 0 ? default_n : min_strands(parsed.tokens));
  return braid_from_tokens(n, parsed.tokens);
}

std::vector<Token> to_tokens(BraidWord const& w) {
  std::vector<Token> out;
  out.reserve(w.letters.size());
  for (auto const& l : w.letters) {
    out.push_back({Gen::sigma, l.index, 0, l.sign});
  }
  return out;
}

std::string to_string(BraidWord const& w) {
  return format_tokens(to_tokens(w));
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    p.image[static_cast<std::size_t>(image[i])] = static_cast<int>(i);
  }
  return p;
}

Permutation Permutation::then(Permutation const& other) const {
  Permutation p;
  p.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    p.image[i] = other.image[static_cast<std::size_t>(image[i])];
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i] || image[i] == static_cast<int>(i)) {
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) {
        out += ' ';
      }
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(image[j]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation permutation_of(BraidWord const& w) {
  // at[pos] = strand currently at pos
  std::vector<int> at(static_cast<std::size_t>(w.n));
  std::iota(at.begin(), at.end(), 0);
  for (auto const& l : w.letters) {
    std::swap(at[static_cast<std::size_t>(l.index - 1)],
              at[static_cast<std::size_t>(l.index)]);
  }
  Permutation p;
  p.image.resize(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) {
    p.image[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  }
  return p;
}

BraidWord delta_word(int n) {
  BraidWord out;
  out.n = n;
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      out.letters.push_back({i, 1});
    }
  }
  return out;
}

bool in_starting_set(Permutation const& a, int i) {
  return a.image[static_cast<std::size_t>(i)]
         > a.image[static_cast<std::size_t>(i + 1)];
}

bool in_finishing_set(Permutation const& a, int i) {
  auto inv = a.inverse();
  return inv.image[static_cast<std::size_t>(i)]
         > inv.image[static_cast<std::size_t>(i + 1)];
}

BraidWord permutation_braid_word(Permutation const& a) {
  BraidWord out;
  out.n = a.size();
  std::vector<int> f = a.image;
  int i = 0;
  while (i + 1 < out.n) {
    if (f[static_cast<std::size_t>(i)] > f[static_cast<std::size_t>(i + 1)]) {
      out.letters.push_back({i + 1, 1});
      std::swap(f[static_cast<std::size_t>(i)],
                f[static_cast<std::size_t>(i + 1)]);
      i = std::max(0, i - 1);
    } else {
      ++i;
    }
  }
  return out;
}

Permutation delta_conjugate(Permutation const& a) {
  int n = a.size();
  Permutation p;
  p.image.resize(a.image.size());
  for (int x = 0; x < n; ++x) {
    p.image[static_cast<std::size_t>(n - 1 - x)]
        = n - 1 - a.image[static_cast<std::size_t>(x)];
  }
  return p;
}

namespace {

// A permutation braid with its inverse kept in sync.
struct Simple {
  std::vector<int> f;    // top -> bottom
  std::vector<int> inv;  // bottom -> top

  explicit Simple(std::vector<int> image) : f(std::move(image)) {
    inv.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      inv[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    }
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  bool is_delta() const {
    int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i) {
      if (f[static_cast<std::size_t>(i)] != n - 1 - i) {
        return false;
      }
    }
    return true;
  }
};

// Moves crossings from the head of b into a until S(b) is inside F(a).
bool left_weight(Simple& a, Simple& b) {
  int n = static_cast<int>(a.f.size());
  bool changed = false;
  int i = 0;
  while (i + 1 < n) {
    auto ui = static_cast<std::size_t>(i);
    if (b.f[ui] > b.f[ui + 1] && a.inv[ui] < a.inv[ui + 1]) {
      std::swap(a.inv[ui], a.inv[ui + 1]);
      a.f[static_cast<std::size_t>(a.inv[ui])] = i;
      a.f[static_cast<std::size_t>(a.inv[ui + 1])] = i + 1;
      std::swap(b.f[ui], b.f[ui + 1]);
      b.inv[static_cast<std::size_t>(b.f[ui])] = i;
      b.inv[static_cast<std::size_t>(b.f[ui + 1])] = i + 1;
      changed = true;
      i = std::max(0, i - 1);
    } else {
      ++i;
    }
  }
  return changed;
}

void push_simple(std::vector<Simple>& out, Simple s) {
  if (s.is_identity()) {
    return;
  }
  out.push_back(std::move(s));
  for (std::size_t k = out.size() - 1; k > 0; --k) {
    if (!left_weight(out[k - 1], out[k])) {
      break;
    }
    if (out[k].is_identity()) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
}

}  // namespace

GarsideNF garside_nf(BraidWord const& w) {
  w.validate();
  GarsideNF nf;
  nf.n = w.n;
  if (w.n <= 1) {
    return nf;
  }
  int const n = w.n;
  // Each sigma_i^-1 becomes Delta^-1 (Delta sigma_i^-1); moving the Delta^-1
  // to the front conjugates everything before it by Delta.
  std::size_t len = w.letters.size();
  std::vector<int> flips_after(len + 1, 0);
  for (std::size_t k = len; k-- > 0;) {
    flips_after[k] = flips_after[k + 1] + (w.letters[k].sign < 0 ? 1 : 0);
  }
  nf.power = -static_cast<long>(flips_after[0]);
  std::vector<Simple> factors;
  for (std::size_t k = 0; k < len; ++k) {
    auto const& l = w.letters[k];
    int i = l.index - 1;
    std::vector<int> f(static_cast<std::size_t>(n));
    if (l.sign > 0) {
      std::iota(f.begin(), f.end(), 0);
      std::swap(f[static_cast<std::size_t>(i)],
                f[static_cast<std::size_t>(i + 1)]);
    } else {
      for (int x = 0; x < n; ++x) {
        int y = n - 1 - x;
        f[static_cast<std::size_t>(x)] = y == i ? i + 1 : y == i + 1 ? i : y;
      }
    }
    if (flips_after[k + 1] % 2 != 0) {
      std::vector<int> g(f.size());
      for (int x = 0; x < n; ++x) {
        g[static_cast<std::size_t>(n - 1 - x)]
            = n - 1 - f[static_cast<std::size_t>(x)];
      }
      f = std::move(g);
    }
    push_simple(factors, Simple(std::move(f)));
  }
  // Safety sweep: the right-to-left pass already leaves the sequence
  // left-weighted, so this normally does nothing.
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      if (left_weight(factors[k], factors[k + 1])) {
        again = true;
      }
    }
    std::erase_if(factors, [](Simple const& s) { return s.is_identity(); });
  }
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead].is_delta()) {
    ++lead;
  }
  nf.power += static_cast<long>(lead);
  for (std::size_t k = lead; k < factors.size(); ++k) {
    nf.factors.push_back(Permutation{std::move(factors[k].f)});
  }
  return nf;
}

BraidWord to_word(GarsideNF const& nf) {
  BraidWord out = pow(delta_word(nf.n), static_cast<int>(nf.power));
  for (auto const& f : nf.factors) {
    auto fw = permutation_braid_word(f);
    out.letters.insert(out.letters.end(), fw.letters.begin(),
                       fw.letters.end());
  }
  return out;
}

bool is_left_weighted(GarsideNF const& nf) {
  auto const delta = permutation_of(delta_word(nf.n));
  for (std::size_t k = 0; k < nf.factors.size(); ++k) {
    auto const& a = nf.factors[k];
    if (a.is_identity() || a == delta) {
      return false;
    }
    if (k + 1 < nf.factors.size()) {
      for (int i = 0; i + 1 < nf.n; ++i) {
        if (in_starting_set(nf.factors[k + 1], i)
            && !in_finishing_set(a, i)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool braid_equal(BraidWord const& u, BraidWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("braid_equal: strand counts differ");
  }
  return garside_nf(u) == garside_nf(v);
}

RightGreedyForm right_greedy(BraidWord const& w) {
  // The reversal anti-automorphism fixes Delta and maps the left form of
  // rev(w) to the right form of w, factor by factor.
  auto nf = garside_nf(w.reversed());
  RightGreedyForm out;
  out.power = nf.power;
  for (auto it = nf.factors.rbegin(); it != nf.factors.rend(); ++it) {
    out.factors.push_back(it->inverse());
  }
  return out;
}

std::string format_nf(GarsideNF const& nf, Greedy side) {
  auto bracket = [](Permutation const& p) {
    return "[" + to_string(permutation_braid_word(p)) + "]";
  };
  std::string delta = "D^" + std::to_string(nf.power);
  std::string out;
  if (side == Greedy::left) {
    out = delta;
    for (auto const& f : nf.factors) {
      out += " " + bracket(f);
    }
    return out;
  }
  auto rg = right_greedy(to_word(nf));
  for (auto const& f : rg.factors) {
    out += bracket(f) + " ";
  }
  return out + "D^" + std::to_string(rg.power);
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.rank = rank;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back(-*it);
  }
  return out;
}

FreeWord free_reduce(FreeWord const& w) {
  FreeWord out;
  out.rank = w.rank;
  out.letters.reserve(w.letters.size());
  for (int g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -g) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

std::string to_string(FreeWord const& w) {
  std::string out;
  for (int g : w.letters) {
    if (!out.empty()) {
      out += ' ';
    }
    out += "x" + std::to_string(std::abs(g)) + (g < 0 ? "'" : "");
  }
  return out.empty() ? "1" : out;
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  FreeAutomorphism a;
  a.rank = rank;
  for (int g = 1; g <= rank; ++g) {
    a.images.push_back(FreeWord{rank, {g}});
  }
  return a;
}

namespace {

// Substitutes images[g-1] for x_g; a null entry maps the letter to 1.
FreeWord substitute(FreeWord const& w,
                    std::vector<FreeWord const*> const& images,
                    int rank) {
  FreeWord out;
  out.rank = rank;
  for (int g : w.letters) {
    auto const* img = images[static_cast<std::size_t>(std::abs(g) - 1)];
    if (img == nullptr) {
      continue;
    }
    auto emit = [&](int h) {
      if (!out.letters.empty() && out.letters.back() == -h) {
        out.letters.pop_back();
      } else {
        out.letters.push_back(h);
      }
    };
    if (g > 0) {
      for (int h : img->letters) {
        emit(h);
      }
    } else {
      for (auto it = img->letters.rbegin(); it != img->letters.rend(); ++it) {
        emit(-*it);
      }
    }
  }
  return out;
}

}  // namespace

FreeWord FreeAutomorphism::apply(FreeWord const& w) const {
  std::vector<FreeWord const*> table;
  for (auto const& img : images) {
    table.push_back(&img);
  }
  return substitute(w, table, rank);
}

FreeAutomorphism FreeAutomorphism::then(FreeAutomorphism const& other) const {
  FreeAutomorphism out;
  out.rank = rank;
  for (auto const& img : images) {
    out.images.push_back(other.apply(img));
  }
  return out;
}

FreeAutomorphism act_free(BraidWord const& w) {
  w.validate();
  int n = w.n;
  auto cur = FreeAutomorphism::identity(n);
  std::vector<FreeWord> sub(static_cast<std::size_t>(n));
  std::vector<FreeWord const*> table(static_cast<std::size_t>(n));
  for (int g = 1; g <= n; ++g) {
    sub[static_cast<std::size_t>(g - 1)] = FreeWord{n, {g}};
  }
  for (auto const& l : w.letters) {
    int i = l.index;
    auto& xi = sub[static_cast<std::size_t>(i - 1)];
    auto& xj = sub[static_cast<std::size_t>(i)];
    if (l.sign > 0) {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      xi.letters = {i + 1};
      xj.letters = {-(i + 1), i, i + 1};
    } else {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      xi.letters = {i, i + 1, -i};
      xj.letters = {i};
    }
    for (int g = 1; g <= n; ++g) {
      table[static_cast<std::size_t>(g - 1)] =
          &sub[static_cast<std::size_t>(g - 1)];
    }
    for (auto& img : cur.images) {
      img = substitute(img, table, n);
    }
    xi.letters = {i};
    xj.letters = {i + 1};
  }
  return cur;
}

PartialFreeIso PartialFreeIso::identity(int rank) {
  return from(FreeAutomorphism::identity(rank));
}

PartialFreeIso PartialFreeIso::from(FreeAutomorphism const& a) {
  PartialFreeIso p;
  p.rank = a.rank;
  p.images = a.images;
  for (auto const& img : a.images) {
    // reduced conjugates w^-1 x_j w keep x_j in the middle
    p.target.push_back(std::abs(img.letters[img.letters.size() / 2]));
  }
  return p;
}

PartialFreeIso PartialFreeIso::then(PartialFreeIso const& other) const {
  PartialFreeIso out;
  out.rank = rank;
  std::vector<FreeWord const*> table;
  for (int g = 1; g <= other.rank; ++g) {
    table.push_back(other.defined(g)
                        ? &other.images[static_cast<std::size_t>(g - 1)]
                        : nullptr);
  }
  for (int g = 1; g <= rank; ++g) {
    auto ug = static_cast<std::size_t>(g - 1);
    if (!defined(g) || !other.defined(target[ug])) {
      out.target.push_back(0);
      out.images.push_back(FreeWord{rank, {}});
      continue;
    }
    out.target.push_back(
        other.target[static_cast<std::size_t>(target[ug] - 1)]);
    out.images.push_back(substitute(images[ug], table, rank));
  }
  // conjugating words may only use generators of the image subgroup
  std::vector<FreeWord> keep(static_cast<std::size_t>(rank));
  std::vector<FreeWord const*> restrict(static_cast<std::size_t>(rank), nullptr);
  for (int t : out.target) {
    if (t != 0) {
      keep[static_cast<std::size_t>(t - 1)] = FreeWord{rank, {t}};
      restrict[static_cast<std::size_t>(t - 1)] = &keep[static_cast<std::size_t>(t - 1)];
    }
  }
  for (auto& img : out.images) {
    img = substitute(img, restrict, rank);
  }
  return out;
}

int final_position(BraidWord const& w, int s) {
  int p = s;
  for (auto const& l : w.letters) {
    if (p == l.index) {
      p = l.index + 1;
    } else if (p == l.index + 1) {
      p = l.index;
    }
  }
  return p;
}

BraidWord delete_strand(BraidWord const& w, int s) {
  if (s < 1 || s > w.n) {
    throw std::out_of_range("delete_strand: strand " + std::to_string(s)
                            + " not in 1.." + std::to_string(w.n));
  }
  BraidWord out;
  out.n = w.n - 1;
  int p = s;
  for (auto const& l : w.letters) {
    int i = l.index;
    if (p == i) {
      p = i + 1;
    } else if (p == i + 1) {
      p = i;
    } else if (i > p) {
      out.letters.push_back({i - 1, l.sign});
    } else {
      out.letters.push_back({i, l.sign});
    }
  }
  return out;
}

}  // namespace braids
