#include "braids/singular_monoid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#ifdef BRAIDS_HAVE_OPENMP
#include <omp.h>
#endif

namespace braids {

SBandWord::SBandWord(int strands, std::vector<SLetter> ls)
    : n(strands), letters(std::move(ls)) {
  validate();
}

void SBandWord::validate() const {
  for (auto const& l : letters) {
    if (!(1 <= l.s && l.s < l.t && l.t <= n)) {
      throw std::invalid_argument(
          std::string(l.singular ? "b" : "a") + "(" + std::to_string(l.t)
          + "," + std::to_string(l.s) + ") out of range for n="
          + std::to_string(n));
    }
    if (l.sign != 1 && (l.singular || l.sign != -1)) {
      throw std::invalid_argument("b generators have no inverse");
    }
  }
}

bool SBandWord::positive() const {
  return std::all_of(letters.begin(), letters.end(),
                     [](SLetter const& l) { return l.sign > 0; });
}

SBandWord operator*(SBandWord const& u, SBandWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("strand counts differ");
  }
  SBandWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

void SingularWord::validate() const {
  for (auto const& t : letters) {
    bool ok = (t.gen == Gen::sigma || (t.gen == Gen::x && t.sign == 1))
              && 1 <= t.i && t.i < n;
    if (!ok) {
      throw std::invalid_argument("bad singular letter " + format_token(t)
                                  + " for n=" + std::to_string(n));
    }
  }
}

SBandWord sband_from_tokens(int n, std::vector<Token> const& toks) {
  SBandWord out;
  out.n = n;
  for (auto const& t : toks) {
    switch (t.gen) {
      case Gen::a:
        out.letters.push_back(a_gen(t.i, t.j, t.sign));
        break;
      case Gen::b:
        out.letters.push_back(b_gen(t.i, t.j));
        break;
      case Gen::sigma:
        out.letters.push_back(a_gen(t.i + 1, t.i, t.sign));
        break;
      case Gen::x:
        out.letters.push_back(b_gen(t.i + 1, t.i));
        break;
      default:
        throw std::invalid_argument("unexpected letter " + format_token(t));
    }
  }
  out.validate();
  return out;
}

SBandWord parse_sband(std::string_view text, int default_n) {
  auto p = parse_word(text);
  int n = p.n.value_or(default_n > 0 ? default_n
                                     : std::max(2, min_strands(p.tokens)));
  return sband_from_tokens(n, p.tokens);
}

SingularWord singular_from_tokens(int n, std::vector<Token> const& toks) {
  SingularWord out{n, toks};
  out.validate();
  return out;
}

SingularWord parse_singular(std::string_view text, int default_n) {
  auto p = parse_word(text);
  int n = p.n.value_or(default_n > 0 ? default_n
                                     : std::max(2, min_strands(p.tokens)));
  return singular_from_tokens(n, p.tokens);
}

std::vector<Token> to_tokens(SBandWord const& w) {
  std::vector<Token> out;
  for (auto const& l : w.letters) {
    out.push_back({l.singular ? Gen::b : Gen::a, l.t, l.s, l.sign});
  }
  return out;
}

std::string to_string(SBandWord const& w) {
  return format_tokens(to_tokens(w));
}

std::string to_string(SingularWord const& w) {
  return format_tokens(w.letters);
}

SBandWord from_band(BandWord const& w) {
  SBandWord out;
  out.n = w.n;
  for (auto const& l : w.letters) {
    out.letters.push_back(a_gen(l.t, l.s, l.sign));
  }
  return out;
}

SBandWord sband_delta(int n) { return from_band(band_delta_word(n)); }

SBandWord classical_to_band(SingularWord const& w) {
  w.validate();
  return sband_from_tokens(w.n, w.letters);
}

SingularWord band_to_classical(SBandWord const& w) {
  w.validate();
  SingularWord out;
  out.n = w.n;
  for (auto const& l : w.letters) {
    for (int i = l.t - 1; i > l.s; --i) {
      out.letters.push_back({Gen::sigma, i, 0, 1});
    }
    out.letters.push_back(l.singular ? Token{Gen::x, l.s, 0, 1}
                                     : Token{Gen::sigma, l.s, 0, l.sign});
    for (int i = l.s + 1; i < l.t; ++i) {
      out.letters.push_back({Gen::sigma, i, 0, -1});
    }
  }
  return out;
}

namespace {

SLetter shift_letter(SLetter l, int down, int n) {
  auto mv = [&](int p) { return ((p - 1 - down) % n + n) % n + 1; };
  int a = mv(l.t);
  int b = mv(l.s);
  l.t = std::max(a, b);
  l.s = std::min(a, b);
  return l;
}

}  // namespace

SBandWord delta_shift_down(SBandWord const& w, int k) {
  SBandWord out;
  out.n = w.n;
  for (auto const& l : w.letters) {
    out.letters.push_back(shift_letter(l, k, w.n));
  }
  return out;
}

SBandWord delta_cofactor(int n, int t, int s) {
  SBandWord out;
  out.n = n;
  for (int k = n; k >= t + 2; --k) {
    out.letters.push_back(a_gen(k, k - 1));
  }
  if (t < n) {
    out.letters.push_back(a_gen(t + 1, s));
  }
  for (int k = t; k >= s + 2; --k) {
    out.letters.push_back(a_gen(k, k - 1));
  }
  for (int k = s; k >= 2; --k) {
    out.letters.push_back(a_gen(k, k - 1));
  }
  return out;
}

namespace {

// Signed product from the commutation condition of the presentation.
long chord_product(int t, int s, int r, int q) {
  return static_cast<long>(t - r) * (t - q) * (s - r) * (s - q);
}

std::vector<SRelation> positive_relations(int n) {
  std::vector<SRelation> out;
  auto w2 = [n](SLetter x, SLetter y) { return SBandWord(n, {x, y}); };
  std::vector<std::pair<int, int>> chords;
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) {
      chords.emplace_back(t, s);
    }
  }
  // commuting pairs, listed once per unordered pair and family combination
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [t, s] = chords[i];
      auto [r, q] = chords[j];
      if (chord_product(t, s, r, q) <= 0) {
        continue;
      }
      out.push_back({w2(a_gen(t, s), a_gen(r, q)), w2(a_gen(r, q), a_gen(t, s))});
      out.push_back({w2(a_gen(t, s), b_gen(r, q)), w2(b_gen(r, q), a_gen(t, s))});
      out.push_back({w2(a_gen(r, q), b_gen(t, s)), w2(b_gen(t, s), a_gen(r, q))});
      out.push_back({w2(b_gen(t, s), b_gen(r, q)), w2(b_gen(r, q), b_gen(t, s))});
    }
  }
  for (auto [t, s] : chords) {
    out.push_back({w2(a_gen(t, s), b_gen(t, s)), w2(b_gen(t, s), a_gen(t, s))});
  }
  for (int t = 3; t <= n; ++t) {
    for (int s = 2; s < t; ++s) {
      for (int r = 1; r < s; ++r) {
        auto ts = a_gen(t, s);
        auto sr = a_gen(s, r);
        auto tr = a_gen(t, r);
        out.push_back({w2(ts, sr), w2(tr, ts)});
        out.push_back({w2(tr, ts), w2(sr, tr)});
        out.push_back({w2(ts, b_gen(s, r)), w2(b_gen(t, r), ts)});
        out.push_back({w2(sr, b_gen(t, r)), w2(b_gen(t, s), sr)});
        out.push_back({w2(tr, b_gen(t, s)), w2(b_gen(s, r), tr)});
      }
    }
  }
  return out;
}

enum class ChordRelation { same, commuting, sharing, crossing };

ChordRelation relate(SLetter const& x, SLetter const& y) {
  if (x.t == y.t && x.s == y.s) {
    return ChordRelation::same;
  }
  long p = chord_product(x.t, x.s, y.t, y.s);
  if (p > 0) {
    return ChordRelation::commuting;
  }
  if (p == 0) {
    return ChordRelation::sharing;
  }
  return ChordRelation::crossing;
}

// a_{p1 p2} a_{p2 p3} ... for points listed in decreasing order
SBandWord descending_delta(int n, std::vector<int> pts) {
  std::sort(pts.begin(), pts.end(), std::greater<>());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  SBandWord out;
  out.n = n;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    out.letters.push_back(a_gen(pts[k], pts[k + 1]));
  }
  return out;
}

std::optional<SBandWord> lcm_word(int n, SLetter const& x, SLetter const& y) {
  auto rel = relate(x, y);
  SBandWord xy(n, {x, y});
  if (rel == ChordRelation::same) {
    return xy;  // a_ts b_ts = b_ts a_ts
  }
  if (rel == ChordRelation::commuting) {
    return xy;
  }
  if (x.singular && y.singular) {
    return std::nullopt;
  }
  auto block = descending_delta(n, {x.t, x.s, y.t, y.s});
  if (!x.singular && !y.singular) {
    return block;
  }
  SLetter const& a = x.singular ? y : x;
  SLetter const& b = x.singular ? x : y;
  if (rel == ChordRelation::sharing) {
    std::set<int> pts{a.t, a.s, b.t, b.s};
    int lo = *pts.begin();
    int mid = *std::next(pts.begin());
    int hi = *pts.rbegin();
    // points hi > mid > lo; three of the six mixed pairs commute up to a
    // relabelling and have a length-two multiple
    auto is = [](SLetter const& l, int t, int s) {
      return l.t == t && l.s == s;
    };
    if (is(a, hi, mid) && is(b, hi, lo)) {
      return SBandWord(n, {a, b_gen(mid, lo)});
    }
    if (is(a, mid, lo) && is(b, hi, mid)) {
      return SBandWord(n, {a, b_gen(hi, lo)});
    }
    if (is(a, hi, lo) && is(b, mid, lo)) {
      return SBandWord(n, {a, b_gen(hi, mid)});
    }
  }
  return SBandWord(n, {b}) * block;
}

constexpr int kMaxClosureStrands = 16;

// Letter codes follow the deg-lex generator order.
struct Alphabet {
  int n = 0;
  int pairs = 0;
  std::vector<SLetter> letters;
  // moves[x * size + y]: replacements for the two-letter factor x y
  std::vector<std::vector<std::pair<unsigned char, unsigned char>>> moves;
  // complement[x * size + y] = (cx, cy) with x cx = y cy = lcm(x, y); empty
  // for inadmissible pairs
  std::vector<std::optional<std::pair<std::string, std::string>>> complement;

  int size() const { return 2 * pairs; }

  unsigned char code(SLetter const& l) const {
    int c = (l.t - 1) * (l.t - 2) / 2 + (l.s - 1);
    return static_cast<unsigned char>(l.singular ? pairs + c : c);
  }
};

std::vector<std::string> closure_serial(Alphabet const& al,
                                        std::string const& seed,
                                        std::size_t cap);

Alphabet const& alphabet(int n) {
  if (n < 2 || n > kMaxClosureStrands) {
    throw std::out_of_range("positive closure supports 2 <= n <= "
                            + std::to_string(kMaxClosureStrands));
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Alphabet>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (slot) {
    return *slot;
  }
  auto al = std::make_unique<Alphabet>();
  al->n = n;
  al->pairs = n * (n - 1) / 2;
  al->letters.resize(static_cast<std::size_t>(al->size()));
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) {
      al->letters[al->code(a_gen(t, s))] = a_gen(t, s);
      al->letters[al->code(b_gen(t, s))] = b_gen(t, s);
    }
  }
  auto g = static_cast<std::size_t>(al->size());
  al->moves.resize(g * g);
  for (auto const& rel : positive_relations(n)) {
    if (rel.lhs.size() != rel.rhs.size()) {
      throw std::logic_error("a positive relation changes word length");
    }
    auto l0 = al->code(rel.lhs.letters[0]);
    auto l1 = al->code(rel.lhs.letters[1]);
    auto r0 = al->code(rel.rhs.letters[0]);
    auto r1 = al->code(rel.rhs.letters[1]);
    al->moves[l0 * g + l1].emplace_back(r0, r1);
    al->moves[r0 * g + r1].emplace_back(l0, l1);
  }
  for (auto& m : al->moves) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  al->complement.resize(g * g);
  for (std::size_t x = 0; x < g; ++x) {
    for (std::size_t y = 0; y < g; ++y) {
      auto cx = static_cast<char>(x);
      auto cy = static_cast<char>(y);
      if (x == y) {
        al->complement[x * g + y].emplace();
        continue;
      }
      auto v = lcm_word(n, al->letters[x], al->letters[y]);
      if (!v) {
        continue;
      }
      std::string vc;
      for (auto const& l : v->letters) {
        vc.push_back(static_cast<char>(al->code(l)));
      }
      std::pair<std::string, std::string> comp;
      bool hx = false;
      bool hy = false;
      for (auto const& m : closure_serial(*al, vc, 1'000'000)) {
        if (!hx && m.front() == cx) {
          comp.first = m.substr(1);
          hx = true;
        }
        if (!hy && m.front() == cy) {
          comp.second = m.substr(1);
          hy = true;
        }
      }
      if (!hx || !hy) {
        throw std::logic_error("lcm template is not a common multiple");
      }
      al->complement[x * g + y] = std::move(comp);
    }
  }
  slot = std::move(al);
  return *slot;
}

std::string encode(Alphabet const& al, SBandWord const& w) {
  if (!w.positive()) {
    throw std::invalid_argument("positive word expected: " + to_string(w));
  }
  std::string out;
  out.reserve(w.size());
  for (auto const& l : w.letters) {
    out.push_back(static_cast<char>(al.code(l)));
  }
  return out;
}

SBandWord decode(Alphabet const& al, std::string_view code) {
  SBandWord out;
  out.n = al.n;
  out.letters.reserve(code.size());
  for (char c : code) {
    out.letters.push_back(
        al.letters[static_cast<std::size_t>(static_cast<unsigned char>(c))]);
  }
  return out;
}

template <class F>
void for_each_neighbor(Alphabet const& al, std::string const& w, F&& f) {
  auto g = static_cast<std::size_t>(al.size());
  std::string v = w;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    auto x = static_cast<unsigned char>(w[k]);
    auto y = static_cast<unsigned char>(w[k + 1]);
    for (auto [p, q] : al.moves[x * g + y]) {
      v[k] = static_cast<char>(p);
      v[k + 1] = static_cast<char>(q);
      f(v);
    }
    v[k] = w[k];
    v[k + 1] = w[k + 1];
  }
}

std::vector<std::string> closure_serial(Alphabet const& al,
                                        std::string const& seed,
                                        std::size_t cap) {
  std::unordered_set<std::string> seen{seed};
  std::vector<std::string> queue{seed};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    // copied: the callback grows the queue
    std::string const w = queue[head];
    for_each_neighbor(al, w, [&](std::string const& v) {
      if (seen.insert(v).second) {
        if (seen.size() > cap) {
          throw ClosureOverflow("positive class exceeds "
                                + std::to_string(cap) + " words");
        }
        queue.push_back(v);
      }
    });
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::string> closure_parallel(Alphabet const& al,
                                          std::string const& seed,
                                          std::size_t cap) {
  std::unordered_set<std::string> seen{seed};
  std::vector<std::string> all{seed};
  std::vector<std::string> frontier{seed};
  while (!frontier.empty()) {
    // Expansion reads `seen` only; merging below is serial, and sorting
    // the new frontier keeps the traversal independent of thread timing.
    std::vector<std::vector<std::string>> found;
#ifdef BRAIDS_HAVE_OPENMP
    found.resize(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
      auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
      for (std::ptrdiff_t i = 0;
           i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
        for_each_neighbor(al, frontier[static_cast<std::size_t>(i)],
                          [&](std::string const& v) {
                            if (!seen.contains(v)) {
                              mine.push_back(v);
                            }
                          });
      }
    }
#else
    found.resize(1);
    for (auto const& w : frontier) {
      for_each_neighbor(al, w, [&](std::string const& v) {
        if (!seen.contains(v)) {
          found[0].push_back(v);
        }
      });
    }
#endif
    std::vector<std::string> next;
    for (auto& part : found) {
      for (auto& v : part) {
        if (seen.insert(v).second) {
          if (seen.size() > cap) {
            throw ClosureOverflow("positive class exceeds "
                                  + std::to_string(cap) + " words");
          }
          next.push_back(std::move(v));
        }
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::string> closure_codes(Alphabet const& al,
                                       std::string const& seed,
                                       ClosureOptions const& opts) {
  // tiny classes are cheaper without a parallel region
  if (opts.parallel && seed.size() >= 8) {
    return closure_parallel(al, seed, opts.cap);
  }
  return closure_serial(al, seed, opts.cap);
}

std::string delta_code(Alphabet const& al) {
  return encode(al, sband_delta(al.n));
}

// Left division by one generator through the lcm table: x divides y W iff
// lcm(x, y) = y cy divides y W, i.e. iff cy divides W, and then
// y W = x cx (W / cy). Inadmissible pairs have no common multiple at all.
// Every recursive call is on a strictly shorter word.
class Divider {
 public:
  explicit Divider(Alphabet const& al) : al_(al) {}

  std::optional<std::string> letter(char x, std::string_view w) {
    if (w.empty()) {
      return std::nullopt;
    }
    if (w.front() == x) {
      return std::string(w.substr(1));
    }
    std::string key;
    key.reserve(w.size() + 1);
    key.push_back(x);
    key.append(w);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    auto g = static_cast<std::size_t>(al_.size());
    auto const& comp =
        al_.complement[static_cast<unsigned char>(x) * g
                       + static_cast<unsigned char>(w.front())];
    std::optional<std::string> out;
    if (comp) {
      if (auto rest = word(comp->second, w.substr(1))) {
        out = comp->first + *rest;
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  std::optional<std::string> word(std::string_view v, std::string_view w) {
    std::string rest(w);
    for (char c : v) {
      auto q = letter(c, rest);
      if (!q) {
        return std::nullopt;
      }
      rest = std::move(*q);
    }
    return rest;
  }

  // Deg-lex least word of the class: the least dividing letter, then the
  // least word for the quotient.
  std::string least(std::string w) {
    std::string out;
    out.reserve(w.size());
    while (!w.empty()) {
      bool found = false;
      for (int c = 0; c < al_.size() && !found; ++c) {
        if (auto q = letter(static_cast<char>(c), w)) {
          out.push_back(static_cast<char>(c));
          w = std::move(*q);
          found = true;
        }
      }
      if (!found) {
        throw std::logic_error("no generator divides a nonempty word");
      }
    }
    return out;
  }

 private:
  Alphabet const& al_;
  std::unordered_map<std::string, std::optional<std::string>> memo_;
};

// Letters are appended one at a time and delta is pulled out as soon as it
// divides, so the running word stays short. Pulling delta to the front is
// legal because it divides on the left.
SingularNF normalize_positive(int n, long power, SBandWord const& p) {
  SingularNF nf;
  nf.n = n;
  nf.power = power;
  nf.base = SBandWord(n);
  if (p.letters.empty()) {
    return nf;
  }
  auto const& al = alphabet(n);
  auto dc = delta_code(al);
  Divider div(al);
  std::string cur;
  for (char c : encode(al, p)) {
    cur.push_back(c);
    while (auto q = div.word(dc, cur)) {
      ++nf.power;
      cur = std::move(*q);
    }
  }
  nf.base = decode(al, div.least(cur));
  return nf;
}

}  // namespace

std::vector<SRelation> sbkl_relations(int n) {
  auto out = positive_relations(n);
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) {
      out.push_back({SBandWord(n, {a_gen(t, s), a_gen(t, s, -1)}),
                     SBandWord(n)});
      out.push_back({SBandWord(n, {a_gen(t, s, -1), a_gen(t, s)}),
                     SBandWord(n)});
    }
  }
  return out;
}

bool PositiveClass::contains(SBandWord const& w) const {
  return std::binary_search(members.begin(), members.end(), w, deglex_less);
}

PositiveClass positive_closure(SBandWord const& w, ClosureOptions opts) {
  w.validate();
  if (!w.positive()) {
    throw std::invalid_argument("positive_closure: inverse letter in "
                                + to_string(w));
  }
  PositiveClass pc;
  pc.n = w.n;
  if (w.letters.empty()) {
    pc.members.push_back(w);
    return pc;
  }
  auto const& al = alphabet(w.n);
  for (auto const& c : closure_codes(al, encode(al, w), opts)) {
    pc.members.push_back(decode(al, c));
  }
  return pc;
}

PositiveClass positive_closure_serial(SBandWord const& w, std::size_t cap) {
  return positive_closure(w, {cap, false});
}

bool positively_equivalent(SBandWord const& u, SBandWord const& v) {
  if (u.n != v.n || u.size() != v.size()) {
    return false;
  }
  return base(u) == base(v);
}

bool deglex_less(SBandWord const& u, SBandWord const& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  auto key = [](SLetter const& l) {
    return std::tuple(l.singular, l.t, l.s, -l.sign);
  };
  for (std::size_t k = 0; k < u.size(); ++k) {
    auto ku = key(u.letters[k]);
    auto kv = key(v.letters[k]);
    if (ku != kv) {
      return ku < kv;
    }
  }
  return false;
}

SBandWord base(SBandWord const& w) {
  w.validate();
  if (w.letters.empty()) {
    return w;
  }
  auto const& al = alphabet(w.n);
  return decode(al, Divider(al).least(encode(al, w)));
}

std::optional<SBandWord> delta_divide(SBandWord const& w) {
  w.validate();
  if (!w.positive()) {
    throw std::invalid_argument("delta_divide: positive word expected");
  }
  if (w.letters.empty()) {
    return std::nullopt;
  }
  auto const& al = alphabet(w.n);
  auto q = Divider(al).word(delta_code(al), encode(al, w));
  if (!q) {
    return std::nullopt;
  }
  return decode(al, *q);
}

SingularNF singular_nf(SBandWord const& w) {
  w.validate();
  if (w.n < 2) {
    return SingularNF{w.n, 0, w};
  }
  // Right to left, so `later` counts the delta^-1 factors to the right of
  // the current letter; each one conjugates the letter by delta on its way
  // to the front.
  std::vector<SLetter> rev;
  long later = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->sign > 0) {
      rev.push_back(shift_letter(*it, static_cast<int>(later % w.n), w.n));
      continue;
    }
    // a^-1 = D delta^-1, and D also passes its own delta^-1
    ++later;
    auto d = delta_cofactor(w.n, it->t, it->s);
    for (auto jt = d.letters.rbegin(); jt != d.letters.rend(); ++jt) {
      rev.push_back(shift_letter(*jt, static_cast<int>(later % w.n), w.n));
    }
  }
  SBandWord p;
  p.n = w.n;
  p.letters.assign(rev.rbegin(), rev.rend());
  return normalize_positive(w.n, -later, p);
}

SingularNF singular_nf(SingularWord const& w) {
  return singular_nf(classical_to_band(w));
}

SBandWord to_word(SingularNF const& nf) {
  SBandWord out;
  out.n = nf.n;
  auto d = sband_delta(nf.n);
  for (long r = 0; r < std::labs(nf.power); ++r) {
    if (nf.power > 0) {
      out = out * d;
    } else {
      SBandWord inv;
      inv.n = nf.n;
      for (auto it = d.letters.rbegin(); it != d.letters.rend(); ++it) {
        inv.letters.push_back(a_gen(it->t, it->s, -1));
      }
      out = out * inv;
    }
  }
  return out * nf.base;
}

std::string format_nf(SingularNF const& nf) {
  return "power=" + std::to_string(nf.power) + " base=" + to_string(nf.base);
}

bool singular_equal(SBandWord const& u, SBandWord const& v) {
  if (u.n != v.n) {
    throw std::invalid_argument("singular_equal: strand counts differ");
  }
  return singular_nf(u) == singular_nf(v);
}

bool singular_equal(SingularWord const& u, SingularWord const& v) {
  return singular_equal(classical_to_band(u), classical_to_band(v));
}

bool admissible(int n, SLetter const& x, SLetter const& y) {
  return x == y || lcm_word(n, x, y).has_value();
}

std::optional<LcmResult> pair_lcm(int n, SLetter const& x, SLetter const& y) {
  SBandWord(n, {x, y}).validate();
  if (x.sign < 0 || y.sign < 0) {
    throw std::invalid_argument("pair_lcm: positive generators expected");
  }
  if (x == y) {
    return LcmResult{SBandWord(n, {x}), SBandWord(n), SBandWord(n)};
  }
  auto v = lcm_word(n, x, y);
  if (!v) {
    return std::nullopt;
  }
  auto pc = positive_closure(*v);
  LcmResult out{*v, SBandWord(n), SBandWord(n)};
  bool hx = false;
  bool hy = false;
  for (auto const& m : pc.members) {
    if (!hx && m.letters.front() == x) {
      out.cx.letters.assign(m.letters.begin() + 1, m.letters.end());
      hx = true;
    }
    if (!hy && m.letters.front() == y) {
      out.cy.letters.assign(m.letters.begin() + 1, m.letters.end());
      hy = true;
    }
  }
  if (!hx || !hy) {
    throw std::logic_error("pair_lcm: template is not a common multiple");
  }
  return out;
}

SBandWord left_cancel(int n, SLetter const& x, SBandWord const& X,
                      SLetter const& y, SBandWord const& Y) {
  auto lhs = SBandWord(n, {x}) * X;
  auto rhs = SBandWord(n, {y}) * Y;
  if (!lhs.positive() || !rhs.positive()) {
    throw std::invalid_argument("left_cancel: positive words expected");
  }
  if (!positively_equivalent(lhs, rhs)) {
    throw LeftCancelError("left_cancel: x X and y Y are not equivalent");
  }
  auto l = pair_lcm(n, x, y);
  if (!l) {
    throw LeftCancelError("left_cancel: inadmissible pair with a common "
                          "multiple contradicts cancellativity");
  }
  auto const& al = alphabet(n);
  Divider div(al);
  auto z = div.word(encode(al, l->cx), encode(al, X));
  if (!z) {
    throw LeftCancelError("left_cancel: lcm does not divide x X");
  }
  return decode(al, div.least(*z));
}

SingularNF conjugate_by(SBandWord const& u, BandWord const& g) {
  if (u.n != g.n) {
    throw std::invalid_argument("conjugate_by: strand counts differ");
  }
  return singular_nf(from_band(g.inverse()) * u * from_band(g));
}

int b_count(SBandWord const& w) {
  return static_cast<int>(std::count_if(
      w.letters.begin(), w.letters.end(),
      [](SLetter const& l) { return l.singular; }));
}

int a_exponent_sum(SBandWord const& w) {
  int sum = 0;
  for (auto const& l : w.letters) {
    sum += l.singular ? 0 : l.sign;
  }
  return sum;
}

std::vector<SingularNF> positive_conjugates(SingularNF const& u,
                                            ConjugacyOptions opts) {
  if (u.power < 0) {
    throw std::invalid_argument("positive_conjugates: negative power");
  }
  int n = u.n;
  auto const& divisors = delta_divisors(n);
  std::set<SingularNF> seen{u};
  std::vector<SingularNF> frontier{u};
  while (!frontier.empty()) {
    std::vector<SingularNF> next;
    for (auto const& v : frontier) {
      for (auto const& g : divisors) {
        if (g.is_identity()) {
          continue;
        }
        // g^-1 delta^m B g = delta^(m-1) (delta h* delta^-1) B g, where
        // h = delta^-m g delta^m and h h* = delta
        auto h = delta_shift(g, static_cast<int>(v.power % n));
        auto hs = delta_shift(right_complement(h), -1);
        auto p = from_band(hs.word()) * v.base * from_band(g.word());
        auto c = normalize_positive(n, v.power - 1, p);
        if (c.power < 0) {
          continue;
        }
        if (seen.insert(c).second) {
          if (seen.size() > opts.max_set) {
            throw ClosureOverflow("C+ exceeds "
                                  + std::to_string(opts.max_set)
                                  + " elements");
          }
          next.push_back(std::move(c));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<SingularNF> positive_conjugates(SBandWord const& u,
                                            ConjugacyOptions opts) {
  if (!u.positive()) {
    throw std::invalid_argument("positive_conjugates: positive word expected");
  }
  return positive_conjugates(singular_nf(u), opts);
}

bool conjugacy_test(SBandWord const& u, SBandWord const& v,
                    ConjugacyOptions opts) {
  if (u.n != v.n) {
    throw std::invalid_argument("conjugacy_test: strand counts differ");
  }
  int n = u.n;
  auto nu = singular_nf(u);
  auto nv = singular_nf(v);
  // Smallest central delta^(nk) that makes both positive. Any larger k
  // gives the same verdict but C+ grows exponentially with the power.
  long deficit = std::max({0L, -nu.power, -nv.power});
  long k = (deficit + n - 1) / n;
  nu.power += n * k;
  nv.power += n * k;
  return positive_conjugates(nu, opts) == positive_conjugates(nv, opts);
}

}  // namespace braids
