#include "braids/bkl_band.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace braids {

BandWord::BandWord(int strands, std::vector<BandLetter> ls)
    : n(strands), letters(std::move(ls)) {
  validate();
}

void BandWord::validate() const {
  for (auto const& l : letters) {
    if (!(1 <= l.s && l.s < l.t && l.t <= n)
        || (l.sign != 1 && l.sign != -1)) {
      throw std::invalid_argument("band letter a(" + std::to_string(l.t) + ","
                                  + std::to_string(l.s)
                                  + ") out of range for n="
                                  + std::to_string(n));
    }
  }
}

BandWord BandWord::inverse() const {
  BandWord out;
  out.n = n;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.letters.push_back({it->t, it->s, -it->sign});
  }
  return out;
}

BandWord operator*(BandWord const& u, BandWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("strand counts differ");
  }
  BandWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

BandWord band_from_tokens(int n, std::vector<Token> const& toks) {
  BandWord out;
  out.n = n;
  for (auto const& t : toks) {
    if (t.gen == Gen::a) {
      out.letters.push_back({t.i, t.j, t.sign});
    } else if (t.gen == Gen::sigma) {
      out.letters.push_back({t.i + 1, t.i, t.sign});
    } else {
      throw std::invalid_argument("expected a band letter, got "
                                  + format_token(t));
    }
  }
  out.validate();
  return out;
}

BandWord parse_band(std::string_view text, int default_n) {
  auto parsed = parse_word(text);
  int n = parsed.n.value_or(
      default_n > 0 ? default_n : min_strands(parsed.tokens));
  return band_from_tokens(n, parsed.tokens);
}

std::vector<Token> to_tokens(BandWord const& w) {
  std::vector<Token> out;
  for (auto const& l : w.letters) {
    out.push_back({Gen::a, l.t, l.s, l.sign});
  }
  return out;
}

std::string to_string(BandWord const& w) {
  return format_tokens(to_tokens(w));
}

BraidWord band_to_artin(BandWord const& w) {
  w.validate();
  BraidWord out;
  out.n = w.n;
  for (auto const& l : w.letters) {
    for (int i = l.t - 1; i > l.s; --i) {
      out.letters.push_back({i, 1});
    }
    out.letters.push_back({l.s, l.sign});
    for (int i = l.s + 1; i < l.t; ++i) {
      out.letters.push_back({i, -1});
    }
  }
  return out;
}

BandWord artin_to_band(BraidWord const& w) {
  w.validate();
  BandWord out;
  out.n = w.n;
  for (auto const& l : w.letters) {
    out.letters.push_back({l.index + 1, l.index, l.sign});
  }
  return out;
}

BandWord band_delta_word(int n) {
  BandWord out;
  out.n = n;
  for (int t = n; t >= 2; --t) {
    out.letters.push_back({t, t - 1, 1});
  }
  return out;
}

namespace {

// Smallest point of each point's cycle.
std::vector<int> cycle_labels(std::vector<int> const& p) {
  std::vector<int> label(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (label[i] >= 0) {
      continue;
    }
    std::size_t j = i;
    while (label[j] < 0) {
      label[j] = static_cast<int>(i);
      j = static_cast<std::size_t>(p[j]);
    }
  }
  return label;
}

// Increasing cyclic permutation whose cycles are the classes of label.
std::vector<int> from_labels(std::vector<int> const& label) {
  std::size_t n = label.size();
  std::vector<int> up(n);
  std::map<int, std::vector<int>> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    blocks[label[i]].push_back(static_cast<int>(i));
  }
  for (auto const& [key, pts] : blocks) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      up[static_cast<std::size_t>(pts[k])] = pts[(k + 1) % pts.size()];
    }
  }
  return up;
}

bool crossing_free(std::vector<int> const& label) {
  int n = static_cast<int>(label.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (label[static_cast<std::size_t>(a)]
          == label[static_cast<std::size_t>(b)]) {
        continue;
      }
      for (int c = b + 1; c < n; ++c) {
        if (label[static_cast<std::size_t>(c)]
            != label[static_cast<std::size_t>(a)]) {
          continue;
        }
        for (int d = c + 1; d < n; ++d) {
          if (label[static_cast<std::size_t>(d)]
              == label[static_cast<std::size_t>(b)]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

CanonicalFactor CanonicalFactor::identity(int n) {
  std::vector<int> up(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(up.begin(), up.end(), 0);
  return CanonicalFactor(std::move(up));
}

CanonicalFactor CanonicalFactor::delta(int n) {
  std::vector<int> up(static_cast<std::size_t>(std::max(n, 0)));
  for (int x = 0; x < n; ++x) {
    up[static_cast<std::size_t>(x)] = (x + 1) % n;
  }
  return CanonicalFactor(std::move(up));
}

CanonicalFactor CanonicalFactor::from_blocks(
    int n, std::vector<std::vector<int>> const& bl) {
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (auto const& block : bl) {
    if (block.empty()) {
      continue;
    }
    int key = *std::min_element(block.begin(), block.end()) - 1;
    for (int p : block) {
      if (p < 1 || p > n || used[static_cast<std::size_t>(p - 1)]) {
        throw std::invalid_argument("blocks do not partition 1..n");
      }
      used[static_cast<std::size_t>(p - 1)] = true;
      label[static_cast<std::size_t>(p - 1)] = key;
    }
  }
  if (!crossing_free(label)) {
    throw std::invalid_argument("blocks cross");
  }
  return CanonicalFactor(from_labels(label));
}

CanonicalFactor CanonicalFactor::from_permutation(Permutation const& p) {
  auto label = cycle_labels(p.image);
  auto up = from_labels(label);
  if (up != p.image || !crossing_free(label)) {
    throw std::invalid_argument("permutation " + p.cycles()
                                + " is not a divisor of delta");
  }
  return CanonicalFactor(std::move(up));
}

std::vector<std::vector<int>> CanonicalFactor::blocks() const {
  auto label = cycle_labels(up_);
  std::map<int, std::vector<int>> by;
  for (std::size_t i = 0; i < up_.size(); ++i) {
    by[label[i]].push_back(static_cast<int>(i) + 1);
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, pts] : by) {
    if (pts.size() >= 2) {
      std::reverse(pts.begin(), pts.end());
      out.push_back(std::move(pts));
    }
  }
  std::sort(out.begin(), out.end(),
            [](auto const& a, auto const& b) { return a.front() > b.front(); });
  return out;
}

BandWord CanonicalFactor::word() const {
  BandWord w;
  w.n = n();
  for (auto const& block : blocks()) {
    for (std::size_t k = 0; k + 1 < block.size(); ++k) {
      w.letters.push_back({block[k], block[k + 1], 1});
    }
  }
  return w;
}

int CanonicalFactor::length() const {
  auto label = cycle_labels(up_);
  int blocks = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    blocks += label[i] == static_cast<int>(i) ? 1 : 0;
  }
  return n() - blocks;
}

bool CanonicalFactor::is_identity() const {
  for (std::size_t i = 0; i < up_.size(); ++i) {
    if (up_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

bool CanonicalFactor::is_delta() const {
  int k = n();
  for (int x = 0; x < k; ++x) {
    if (up_[static_cast<std::size_t>(x)] != (x + 1) % k) {
      return false;
    }
  }
  return true;
}

std::string to_string(CanonicalFactor const& f) {
  if (f.is_identity()) {
    return "1";
  }
  return to_string(f.word());
}

namespace {

struct DivisorTable {
  std::vector<CanonicalFactor> items;
  std::map<CanonicalFactor, std::size_t> index;
  // divides[f][g]: f left-divides g; filled on first lattice query
  std::vector<std::vector<char>> divides;
  std::once_flag order_once;
};

void enumerate_partitions(int n, std::vector<int>& label, int next,
                          std::vector<CanonicalFactor>& out) {
  if (next == n) {
    if (crossing_free(label)) {
      out.push_back(CanonicalFactor::from_permutation(
          Permutation{from_labels(label)}));
    }
    return;
  }
  // restricted growth: join an existing block (keyed by its first point)
  // or open a new one
  for (int b = 0; b <= next; ++b) {
    if (b < next && label[static_cast<std::size_t>(b)] != b) {
      continue;
    }
    label[static_cast<std::size_t>(next)] = b;
    enumerate_partitions(n, label, next + 1, out);
  }
}

DivisorTable& divisor_table(int n) {
  if (n < 0 || n > kMaxDivisorStrands) {
    throw std::out_of_range("delta_divisors: n=" + std::to_string(n)
                            + " exceeds the bound "
                            + std::to_string(kMaxDivisorStrands));
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DivisorTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<DivisorTable>();
    std::vector<int> label(static_cast<std::size_t>(n));
    enumerate_partitions(n, label, 0, slot->items);
    std::sort(slot->items.begin(), slot->items.end(),
              [](CanonicalFactor const& a, CanonicalFactor const& b) {
                return std::pair(a.length(), a) < std::pair(b.length(), b);
              });
    for (std::size_t k = 0; k < slot->items.size(); ++k) {
      slot->index[slot->items[k]] = k;
    }
  }
  return *slot;
}

DivisorTable& ordered_table(int n) {
  auto& tab = divisor_table(n);
  std::call_once(tab.order_once, [&tab] {
    std::size_t m = tab.items.size();
    tab.divides.assign(m, std::vector<char>(m, 0));
    for (std::size_t f = 0; f < m; ++f) {
      auto pf = tab.items[f].permutation();
      auto wf = band_to_artin(tab.items[f].word());
      for (std::size_t g = 0; g < m; ++g) {
        // the cofactor h with f h = g is pinned down by its permutation
        auto ph = pf.inverse().then(tab.items[g].permutation());
        auto it = tab.index.end();
        try {
          it = tab.index.find(CanonicalFactor::from_permutation(ph));
        } catch (std::invalid_argument const&) {
          continue;
        }
        if (it == tab.index.end()) {
          continue;
        }
        auto const& h = tab.items[it->second];
        if (tab.items[f].length() + h.length() != tab.items[g].length()) {
          continue;
        }
        tab.divides[f][g] = braid_equal(wf * band_to_artin(h.word()),
                                        band_to_artin(tab.items[g].word()));
      }
    }
  });
  return tab;
}

void same_n(CanonicalFactor const& f, CanonicalFactor const& g) {
  if (f.n() != g.n()) {
    throw std::invalid_argument("factors live on different strand counts");
  }
}

}  // namespace

std::vector<CanonicalFactor> const& delta_divisors(int n) {
  return divisor_table(n).items;
}

bool factor_divides(CanonicalFactor const& f, CanonicalFactor const& g) {
  same_n(f, g);
  auto& tab = ordered_table(f.n());
  return tab.divides[tab.index.at(f)][tab.index.at(g)] != 0;
}

CanonicalFactor factor_meet(CanonicalFactor const& f,
                            CanonicalFactor const& g) {
  same_n(f, g);
  auto& tab = ordered_table(f.n());
  auto fi = tab.index.at(f);
  auto gi = tab.index.at(g);
  // items are sorted by length, so the last common divisor found is the
  // longest; it is the meet when the divisors form a lattice
  std::size_t best = 0;
  for (std::size_t d = 0; d < tab.items.size(); ++d) {
    if (tab.divides[d][fi] && tab.divides[d][gi]) {
      best = d;
    }
  }
  for (std::size_t d = 0; d < tab.items.size(); ++d) {
    if (tab.divides[d][fi] && tab.divides[d][gi] && !tab.divides[d][best]) {
      throw std::logic_error("divisor set is not a meet semilattice");
    }
  }
  return tab.items[best];
}

CanonicalFactor factor_join(CanonicalFactor const& f,
                            CanonicalFactor const& g) {
  same_n(f, g);
  auto& tab = ordered_table(f.n());
  auto fi = tab.index.at(f);
  auto gi = tab.index.at(g);
  std::size_t best = tab.items.size();
  for (std::size_t d = 0; d < tab.items.size(); ++d) {
    if (tab.divides[fi][d] && tab.divides[gi][d]) {
      best = d;
      break;
    }
  }
  for (std::size_t d = 0; d < tab.items.size(); ++d) {
    if (tab.divides[fi][d] && tab.divides[gi][d] && !tab.divides[best][d]) {
      throw std::logic_error("divisor set is not a join semilattice");
    }
  }
  return tab.items[best];
}

CanonicalFactor partition_meet(CanonicalFactor const& f,
                               CanonicalFactor const& g) {
  same_n(f, g);
  auto lf = cycle_labels(f.up());
  auto lg = cycle_labels(g.up());
  std::map<std::pair<int, int>, int> key;
  std::vector<int> label(lf.size());
  for (std::size_t i = 0; i < lf.size(); ++i) {
    auto [it, fresh] = key.try_emplace({lf[i], lg[i]}, static_cast<int>(i));
    label[i] = it->second;
  }
  return CanonicalFactor::from_permutation(Permutation{from_labels(label)});
}

namespace {

// Hot-path helpers working on raw images; identical semantics to the
// public functions but without validation.
using Img = std::vector<int>;

Img meet_img(Img const& f, Img const& g, std::vector<int>& lf,
             std::vector<int>& lg, std::vector<int>& label) {
  std::size_t n = f.size();
  lf = cycle_labels(f);
  lg = cycle_labels(g);
  // points are visited in increasing order, so the first point of each
  // (lf, lg) class is its minimum; a small scan keeps this O(n * classes)
  label.assign(n, -1);
  std::vector<int> first;
  for (std::size_t i = 0; i < n; ++i) {
    int found = -1;
    for (int r : first) {
      auto ur = static_cast<std::size_t>(r);
      if (lf[ur] == lf[i] && lg[ur] == lg[i]) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(i);
      first.push_back(found);
    }
    label[i] = found;
  }
  Img up(n);
  std::vector<int> last(n, -1);  // last seen point of each class
  for (std::size_t i = 0; i < n; ++i) {
    auto key = static_cast<std::size_t>(label[i]);
    if (last[key] >= 0) {
      up[static_cast<std::size_t>(last[key])] = static_cast<int>(i);
    }
    last[key] = static_cast<int>(i);
  }
  for (int r : first) {
    up[static_cast<std::size_t>(last[static_cast<std::size_t>(r)])] = r;
  }
  return up;
}

bool img_identity(Img const& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

bool img_delta(Img const& f) {
  std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] != static_cast<int>((i + 1) % n)) {
      return false;
    }
  }
  return true;
}

struct Scratch {
  std::vector<int> lf, lg, label;
  Img inv, star;
};

// One meet makes (a, b) left-weighted: a := a m, b := m^-1 b where
// m = (a^-1 delta) meet b.
bool bkl_left_weight(Img& a, Img& b, Scratch& s) {
  std::size_t n = a.size();
  s.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  }
  s.star.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.star[i] = (s.inv[i] + 1) % static_cast<int>(n);
  }
  Img m = meet_img(s.star, b, s.lf, s.lg, s.label);
  if (img_identity(m)) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = m[static_cast<std::size_t>(a[i])];
  }
  // b := m^-1 b, image[x] = b[m^-1[x]]
  Img nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    nb[static_cast<std::size_t>(m[i])] = b[i];
  }
  b = std::move(nb);
  return true;
}

void push_factor(std::vector<Img>& out, Img f, Scratch& s) {
  if (img_identity(f)) {
    return;
  }
  out.push_back(std::move(f));
  for (std::size_t k = out.size() - 1; k > 0; --k) {
    if (!bkl_left_weight(out[k - 1], out[k], s)) {
      break;
    }
    if (img_identity(out[k])) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
}

}  // namespace

CanonicalFactor right_complement(CanonicalFactor const& f) {
  auto inv = f.permutation().inverse();
  return CanonicalFactor::from_permutation(
      inv.then(CanonicalFactor::delta(f.n()).permutation()));
}

CanonicalFactor delta_shift(CanonicalFactor const& f, int k) {
  int n = f.n();
  if (n == 0) {
    return f;
  }
  int sh = ((k % n) + n) % n;
  std::vector<int> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    up[static_cast<std::size_t>((x + sh) % n)] =
        (f.up()[static_cast<std::size_t>(x)] + sh) % n;
  }
  return CanonicalFactor::from_permutation(Permutation{std::move(up)});
}

BklNF bkl_nf(BandWord const& w) {
  w.validate();
  BklNF nf;
  nf.n = w.n;
  int const n = w.n;
  if (n <= 1) {
    return nf;
  }
  std::size_t len = w.letters.size();
  // a_ts^-1 = delta^-1 (delta a_ts^-1); pulling each delta^-1 to the front
  // conjugates the prefix by delta, which moves every point down by one.
  std::vector<int> downs_after(len + 1, 0);
  for (std::size_t k = len; k-- > 0;) {
    downs_after[k] = downs_after[k + 1] + (w.letters[k].sign < 0 ? 1 : 0);
  }
  nf.power = -static_cast<long>(downs_after[0]);
  std::vector<Img> factors;
  Scratch scratch;
  for (std::size_t k = 0; k < len; ++k) {
    auto const& l = w.letters[k];
    int s = l.s - 1;
    int t = l.t - 1;
    auto swap_st = [&](int x) { return x == s ? t : x == t ? s : x; };
    Img f(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      f[static_cast<std::size_t>(x)] =
          l.sign > 0 ? swap_st(x) : swap_st((x + 1) % n);
    }
    int down = downs_after[k + 1] % n;
    if (down != 0) {
      Img g(f.size());
      for (int x = 0; x < n; ++x) {
        g[static_cast<std::size_t>((x - down + n) % n)] =
            (f[static_cast<std::size_t>(x)] - down + n) % n;
      }
      f = std::move(g);
    }
    push_factor(factors, std::move(f), scratch);
  }
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
      if (bkl_left_weight(factors[k], factors[k + 1], scratch)) {
        again = true;
      }
    }
    std::erase_if(factors, [](Img const& f) { return img_identity(f); });
  }
  std::size_t lead = 0;
  while (lead < factors.size() && img_delta(factors[lead])) {
    ++lead;
  }
  nf.power += static_cast<long>(lead);
  for (std::size_t k = lead; k < factors.size(); ++k) {
    nf.factors.push_back(
        CanonicalFactor::from_permutation(Permutation{factors[k]}));
  }
  return nf;
}

BandWord to_word(BklNF const& nf) {
  BandWord d = band_delta_word(nf.n);
  BandWord out;
  out.n = nf.n;
  BandWord unit = nf.power >= 0 ? d : d.inverse();
  for (long r = 0; r < std::labs(nf.power); ++r) {
    out = out * unit;
  }
  for (auto const& f : nf.factors) {
    out = out * f.word();
  }
  return out;
}

bool band_equal(BandWord const& u, BandWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("band_equal: strand counts differ");
  }
  return bkl_nf(u) == bkl_nf(v);
}

std::string format_nf(BklNF const& nf) {
  std::string out = "d^" + std::to_string(nf.power);
  for (auto const& f : nf.factors) {
    out += " [" + to_string(f.word()) + "]";
  }
  return out;
}

}  // namespace braids
