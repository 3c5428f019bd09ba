#include "braids/presentations.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#ifdef BRAIDS_HAVE_OPENMP
#include <omp.h>
#endif

namespace braids {

// ---------------------------------------------------------------------------
// Presentation basics

int Presentation::gen(std::string_view label) const {
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].label == label) {
      return static_cast<int>(k);
    }
  }
  throw std::invalid_argument("unknown generator '" + std::string(label) + "'");
}

bool Presentation::has(std::string_view label) const {
  return std::any_of(gens.begin(), gens.end(),
                     [&](Generator const& g) { return g.label == label; });
}

int Presentation::add_generator(std::string label, bool invertible) {
  if (has(label)) {
    throw std::invalid_argument("duplicate generator '" + label + "'");
  }
  gens.push_back({std::move(label), invertible});
  return static_cast<int>(gens.size()) - 1;
}

namespace {

// "a'(4,2)" and "a(4,2)'" both name the inverse of a(4,2)
std::pair<std::string, bool> split_inverse(std::string_view tok) {
  if (tok.size() > 1 && tok.back() == '\'') {
    return {std::string(tok.substr(0, tok.size() - 1)), true};
  }
  if (auto p = tok.find("'("); p != std::string_view::npos) {
    std::string label(tok.substr(0, p));
    label.append(tok.substr(p + 1));
    return {label, true};
  }
  return {std::string(tok), false};
}

}  // namespace

PWord Presentation::word(std::string_view text) const {
  PWord out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      continue;
    }
    int exponent = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      auto digits = std::string_view(tok).substr(caret + 1);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad exponent in '" + tok + "'");
      }
      tok.resize(caret);
    }
    auto [label, inv] = split_inverse(tok);
    int g = gen(label);
    int sign = inv ? -1 : 1;
    if (exponent < 0) {
      sign = -sign;
      exponent = -exponent;
    }
    if (sign < 0 && exponent > 0 && !gens[static_cast<std::size_t>(g)].invertible) {
      throw std::invalid_argument("'" + std::string(label) + "' is not invertible");
    }
    for (int k = 0; k < exponent; ++k) {
      out.push_back({g, sign});
    }
  }
  return out;
}

bool Presentation::relate(PWord lhs, PWord rhs, std::string kind) {
  for (auto const& r : relations) {
    if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) {
      return false;
    }
  }
  relations.push_back({std::move(lhs), std::move(rhs), std::move(kind)});
  return true;
}

bool Presentation::relate(std::string_view lhs, std::string_view rhs,
                          std::string kind) {
  return relate(word(lhs), word(rhs), std::move(kind));
}

void Presentation::validate() const {
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a].label.empty()) {
      throw std::invalid_argument("empty generator label");
    }
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a].label == gens[b].label) {
        throw std::invalid_argument("duplicate generator '" + gens[a].label + "'");
      }
    }
  }
  auto check = [&](PWord const& w, std::size_t idx) {
    for (auto const& l : w) {
      if (l.gen < 0 || l.gen >= static_cast<int>(gens.size())) {
        throw std::invalid_argument("relation " + std::to_string(idx + 1)
                                    + " uses an undeclared generator");
      }
      if (l.sign != 1 && l.sign != -1) {
        throw std::invalid_argument("relation " + std::to_string(idx + 1)
                                    + " has a letter with sign "
                                    + std::to_string(l.sign));
      }
      if (l.sign < 0 && !gens[static_cast<std::size_t>(l.gen)].invertible) {
        throw std::invalid_argument(
            "relation " + std::to_string(idx + 1) + " inverts "
            + gens[static_cast<std::size_t>(l.gen)].label);
      }
    }
  };
  for (std::size_t k = 0; k < relations.size(); ++k) {
    check(relations[k].lhs, k);
    check(relations[k].rhs, k);
  }
}

PWord power(PWord const& w, int k) {
  PWord out;
  for (int j = 0; j < k; ++j) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

PWord concat(std::initializer_list<PWord> parts) {
  PWord out;
  for (auto const& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

PWord inverse(Presentation const& p, PWord const& w) {
  PWord out(w.rbegin(), w.rend());
  for (auto& l : out) {
    if (!p.gens[static_cast<std::size_t>(l.gen)].invertible) {
      throw std::invalid_argument("cannot invert "
                                  + p.gens[static_cast<std::size_t>(l.gen)].label);
    }
    l.sign = -l.sign;
  }
  return out;
}

std::string format_word(Presentation const& p, PWord const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& l : w) {
    if (!out.empty()) {
      out += ' ';
    }
    auto const& label = p.gens[static_cast<std::size_t>(l.gen)].label;
    if (l.sign > 0) {
      out += label;
    } else if (auto paren = label.find('('); paren != std::string::npos) {
      // band letters keep the token grammar: a'(4,2)
      out += label.substr(0, paren) + "'" + label.substr(paren);
    } else {
      out += label + "'";
    }
  }
  return out;
}

std::string format_relation(Presentation const& p, Relation const& r) {
  return format_word(p, r.lhs) + " = " + format_word(p, r.rhs);
}

std::string export_text(Presentation const& p) {
  std::string out;
  for (auto const& r : p.relations) {
    out += format_relation(p, r);
    out += '\n';
  }
  return out;
}

bool Assignment::covers(std::string_view label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

VerificationReport verify_homomorphism(Presentation const& p,
                                       Assignment const& a, bool parallel) {
  p.validate();
  VerificationReport report;
  report.model = a.model;
  report.verdicts.resize(p.relations.size());
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    report.verdicts[k].index = k;
  }
  if (!a.equal) {
    for (auto& v : report.verdicts) {
      v.verdict = Verdict::skipped;
    }
    report.skipped = static_cast<int>(p.relations.size());
    return report;
  }
  std::vector<char> used(p.gens.size(), 0);
  for (auto const& r : p.relations) {
    for (auto const& l : r.lhs) {
      used[static_cast<std::size_t>(l.gen)] = 1;
    }
    for (auto const& l : r.rhs) {
      used[static_cast<std::size_t>(l.gen)] = 1;
    }
  }
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    if (used[g] && !a.covers(p.gens[g].label)) {
      throw std::invalid_argument("assignment has no image for generator "
                                  + p.gens[g].label);
    }
  }
  auto count = static_cast<std::ptrdiff_t>(p.relations.size());
  auto check = [&](std::ptrdiff_t k) {
    auto const& r = p.relations[static_cast<std::size_t>(k)];
    bool ok = a.equal(p, r.lhs, r.rhs);
    auto& v = report.verdicts[static_cast<std::size_t>(k)];
    v.verdict = ok ? Verdict::holds : Verdict::fails;
    if (!ok) {
      v.witness = format_relation(p, r);
    }
  };
#ifdef BRAIDS_HAVE_OPENMP
  if (parallel && a.thread_safe) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      check(k);
    }
  } else {
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      check(k);
    }
  }
#else
  (void)parallel;
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    check(k);
  }
#endif
  for (auto const& v : report.verdicts) {
    (v.verdict == Verdict::holds ? report.holds : report.fails) += 1;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Builtin families

namespace {

std::string idx(std::string_view prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

std::string band(std::string_view letter, int t, int s) {
  return std::string(letter) + "(" + std::to_string(t) + "," + std::to_string(s) + ")";
}

void require(bool ok, std::string const& msg) {
  if (!ok) {
    throw std::invalid_argument(msg);
  }
}

// g_1 .. g_m, commuting when far apart and braiding when adjacent
void add_artin(Presentation& p, std::string_view prefix, int m, bool declare = true,
               bool invertible = true) {
  if (declare) {
    for (int i = 1; i <= m; ++i) {
      p.add_generator(idx(prefix, i), invertible);
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      p.relate(idx(prefix, i) + " " + idx(prefix, j),
               idx(prefix, j) + " " + idx(prefix, i), "far");
    }
  }
  for (int i = 1; i + 1 <= m; ++i) {
    auto a = idx(prefix, i);
    auto b = idx(prefix, i + 1);
    p.relate(a + " " + b + " " + a, b + " " + a + " " + b, "braid");
  }
}

void add_units(Presentation& p, std::string const& g) {
  p.relate(g + " " + g + "'", "1", "unit");
  p.relate(g + "' " + g, "1", "unit");
}

// "S^i g S^-i"
std::string conj(std::string const& S, int i, std::string const& g) {
  if (i == 0) {
    return g;
  }
  return S + "^" + std::to_string(i) + " " + g + " " + S + "^" + std::to_string(-i);
}

std::string rep(std::string const& w, int k) {
  std::string out;
  for (int j = 0; j < k; ++j) {
    out += (j ? " " : "") + w;
  }
  return out.empty() ? "1" : out;
}

// Two-generator relations on g1 and S = g_1 ... g_(n-1).
void add_two_gen(Presentation& p, std::string const& g1, std::string const& S,
                 int n) {
  for (int i = 2; i <= n / 2; ++i) {
    p.relate(g1 + " " + conj(S, i, g1), conj(S, i, g1) + " " + g1, "two-gen");
  }
  p.relate(rep(S, n), rep(S + " " + g1, n - 1), "two-gen");
}

// Balanced partial-identity relations between e_1..e_n and g_1..g_(n-1).
void add_eps_relations(Presentation& p, std::string_view g, int n,
                       bool squares) {
  for (int i = 1; i <= n - 1; ++i) {
    auto s = idx(g, i);
    auto ei = idx("e", i);
    auto ej = idx("e", i + 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        p.relate(idx("e", j) + " " + s, s + " " + idx("e", j), "eps");
      }
    }
    p.relate(ei + " " + s, s + " " + ej, "eps");
    p.relate(ej + " " + s, s + " " + ei, "eps");
    if (squares) {
      p.relate(ej + " " + s + "^2", s + "^2 " + ej, "eps");
      p.relate(s + "^2 " + ej, ej, "eps");
    }
    p.relate(ei + " " + ej + " " + s, s + " " + ei + " " + ej, "eps");
    p.relate(s + " " + ei + " " + ej, ei + " " + ej, "eps");
  }
}

void declare_eps(Presentation& p, int n) {
  for (int i = 1; i <= n; ++i) {
    p.add_generator(idx("e", i), false);
  }
  for (int i = 1; i <= n; ++i) {
    p.relate(idx("e", i), idx("e", i) + " " + idx("e", i), "idempotent");
  }
}

void add_bp_core(Presentation& p, int n, bool welded) {
  add_artin(p, "s", n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    p.add_generator(idx("xi", i), true);
  }
  for (int i = 1; i <= n - 1; ++i) {
    p.relate(idx("xi", i) + "^2", "1", "involution");
  }
  add_artin(p, "xi", n - 1, false);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) > 1) {
        p.relate(idx("s", i) + " " + idx("xi", j), idx("xi", j) + " " + idx("s", i),
                 "mixed");
      }
    }
  }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    auto si = idx("s", i);
    auto sj = idx("s", i + 1);
    auto xi = idx("xi", i);
    auto xj = idx("xi", i + 1);
    p.relate(xi + " " + xj + " " + si, sj + " " + xi + " " + xj, "mixed");
    if (welded) {
      p.relate(si + " " + sj + " " + xi, xj + " " + si + " " + sj, "mixed");
    }
  }
}

void add_xi_eps(Presentation& p, int n) {
  for (int i = 1; i <= n - 1; ++i) {
    auto x = idx("xi", i);
    auto ei = idx("e", i);
    auto ej = idx("e", i + 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        p.relate(idx("e", j) + " " + x, x + " " + idx("e", j), "eps-xi");
      }
    }
    p.relate(ei + " " + x, x + " " + ej, "eps-xi");
    p.relate(ej + " " + x, x + " " + ei, "eps-xi");
    p.relate(ei + " " + ej + " " + x, x + " " + ei + " " + ej, "eps-xi");
    p.relate(x + " " + ei + " " + ej, ei + " " + ej, "eps-xi");
  }
}

void add_inverse_relations(Presentation& p, int n) {
  // single-eps presentation; e1 plays the role of the lone idempotent
  for (int i = 1; i <= n - 1; ++i) {
    add_units(p, idx("s", i));
  }
  for (int i = 2; i <= n - 1; ++i) {
    p.relate("e1 " + idx("s", i), idx("s", i) + " e1", "eps");
  }
  if (n >= 2) {
    p.relate("e1 s1 e1", "s1 e1 s1 e1", "eps");
    p.relate("s1 e1 s1 e1", "e1 s1 e1 s1", "eps");
  }
  p.relate("e1", "e1 e1", "eps");
  if (n >= 2) {
    p.relate("e1 e1", "e1 s1^2", "eps");
    p.relate("e1 s1^2", "s1^2 e1", "eps");
  }
}

void add_sb_core(Presentation& p, int n) {
  for (int i = 1; i <= n - 1; ++i) {
    p.add_generator(idx("s", i), true);
  }
  for (int i = 1; i <= n - 1; ++i) {
    p.add_generator(idx("x", i), false);
  }
  add_artin(p, "s", n - 1, false);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      p.relate(idx("x", i) + " " + idx("x", j), idx("x", j) + " " + idx("x", i), "far");
    }
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) != 1) {
        p.relate(idx("x", i) + " " + idx("s", j), idx("s", j) + " " + idx("x", i),
                 "far");
      }
    }
  }
  for (int i = 1; i + 1 <= n - 1; ++i) {
    auto si = idx("s", i);
    auto sj = idx("s", i + 1);
    p.relate(si + " " + sj + " " + idx("x", i), idx("x", i + 1) + " " + si + " " + sj,
             "singular");
    p.relate(sj + " " + si + " " + idx("x", i + 1), idx("x", i) + " " + sj + " " + si,
             "singular");
  }
  for (int i = 1; i <= n - 1; ++i) {
    add_units(p, idx("s", i));
  }
}

void add_x_eps(Presentation& p, int n) {
  for (int i = 1; i <= n - 1; ++i) {
    auto x = idx("x", i);
    auto ei = idx("e", i);
    auto ej = idx("e", i + 1);
    for (int j = 1; j <= n; ++j) {
      if (j != i && j != i + 1) {
        p.relate(idx("e", j) + " " + x, x + " " + idx("e", j), "eps-x");
      }
    }
    p.relate(ei + " " + x, x + " " + ej, "eps-x");
    p.relate(ej + " " + x, x + " " + ei, "eps-x");
    p.relate(ei + " " + ej + " " + x, x + " " + ei + " " + ej, "eps-x");
    p.relate(x + " " + ei + " " + ej, ei + " " + ej, "eps-x");
  }
}

// d_1 .. d_(n-2) d_(n-1)^2 d_(n-2) .. d_1
std::string sphere_word(std::string_view g, int n) {
  std::string out;
  for (int i = 1; i <= n - 2; ++i) {
    out += idx(g, i) + " ";
  }
  out += idx(g, n - 1) + "^2";
  for (int i = n - 2; i >= 1; --i) {
    out += " " + idx(g, i);
  }
  return out;
}

// e alternating factors starting with a, b
std::string alternate(std::string const& a, std::string const& b, int count) {
  std::string out;
  for (int k = 0; k < count; ++k) {
    out += (k ? " " : "") + (k % 2 == 0 ? a : b);
  }
  return out;
}

using Builder = void (*)(Presentation&, FamilyParams const&);

struct FamilyEntry {
  FamilyInfo info;
  int min_n;
  Builder build;
};

std::vector<FamilyEntry> const& registry() {
  static std::vector<FamilyEntry> const entries{
      {{"artin", "Br_n, Artin generators s1..s(n-1)", true, false, true, false},
       1,
       [](Presentation& p, FamilyParams const& f) { add_artin(p, "s", f.n - 1); }},
      {{"artin-2gen", "Br_n on s1 and S = s1 s2 ... s(n-1)", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         add_two_gen(p, "s1", "S", f.n);
       }},
      {{"lin", "Br_n on s1 and B = S s1, with S read as B s1'", true, false, true,
        false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("B", true);
         auto S = [&](int k) {
           return k >= 0 ? rep("B s1'", k) : rep("s1 B'", -k);
         };
         for (int i = 2; i <= f.n / 2; ++i) {
           p.relate("B " + S(i - 1) + " B", S(i) + " B " + S(-i - 1) + " B " + S(i),
                    "special");
         }
         p.relate(S(f.n), rep("B", f.n - 1), "special");
       }},
      {{"type-b", "Br(B_n) on s1..s(n-1) and t", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         p.add_generator("t", true);
         for (int i = 2; i <= f.n - 1; ++i) {
           p.relate("t " + idx("s", i), idx("s", i) + " t", "type-b");
         }
         p.relate("t s1 t s1", "s1 t s1 t", "type-b");
       }},
      {{"type-b-3gen", "Br(B_n) on s1, S and t", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("t", true);
         add_two_gen(p, "s1", "S", f.n);
         // t commutes with s2 .. s(n-1), i.e. i = 1 .. n-2
         for (int i = 1; i <= f.n - 2; ++i) {
           p.relate("t " + conj("S", i, "s1"), conj("S", i, "s1") + " t", "type-b");
         }
         p.relate("t s1 t s1", "s1 t s1 t", "type-b");
       }},
      {{"type-d", "Br(D_n) on s1..s(n-1) and r", true, false, false, true},
       3,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         p.add_generator("r", true);
         for (int i = 1; i <= f.n - 1; ++i) {
           if (i != 2) {
             p.relate("r " + idx("s", i), idx("s", i) + " r", "type-d");
           }
         }
         p.relate("r s2 r", "s2 r s2", "type-d");
       }},
      {{"type-d-3gen", "Br(D_n) on s1, S and r", true, false, false, true},
       3,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("r", true);
         add_two_gen(p, "s1", "S", f.n);
         for (int i = 0; i <= f.n - 2; ++i) {
           if (i != 1) {
             p.relate("r " + conj("S", i, "s1"), conj("S", i, "s1") + " r", "type-d");
           }
         }
         auto s2 = conj("S", 1, "s1");
         p.relate("r " + s2 + " r", s2 + " r " + s2, "type-d");
       }},
      {{"e8", "Br(E_8) on s1, S and w", false, false, false, true},
       0,
       [](Presentation& p, FamilyParams const&) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("w", true);
         for (int i = 2; i <= 4; ++i) {
           p.relate("s1 " + conj("S", i, "s1"), conj("S", i, "s1") + " s1", "two-gen");
         }
         p.relate(rep("S", 8), rep("S s1", 7), "two-gen");
         for (int i : {0, 1, 3, 4, 5, 6}) {
           p.relate("w " + conj("S", i, "s1"), conj("S", i, "s1") + " w", "e8");
         }
         auto c = conj("S", 2, "s1");
         p.relate("w " + c + " w", c + " w " + c, "e8");
       }},
      {{"complex-b2ee", "B(2e,e,r) on t2, T, S and t2p (n = r >= 2, e >= 2)", true,
        true, false, true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         int r = f.n;
         p.add_generator("t2", true);
         p.add_generator("T", true);
         p.add_generator("S", true);
         p.add_generator("t2p", true);
         add_two_gen(p, "t2", "T", r);
         for (int i = 1; i <= r - 2; ++i) {
           p.relate("S " + conj("T", i, "t2"), conj("T", i, "t2") + " S", "complex");
         }
         p.relate("S t2p t2", "t2p t2 S", "complex");
         // T t2 T' is t3, which only exists from rank 3 on
         if (r >= 3) {
           auto c = conj("T", 1, "t2");
           p.relate("t2p " + c + " t2p", c + " t2p " + c, "complex");
           p.relate(c + " t2p t2 " + c + " t2p t2", "t2p t2 " + c + " t2p t2 " + c,
                    "complex");
         }
         p.relate("t2 S " + alternate("t2p", "t2", f.e - 1),
                  "S " + alternate("t2p", "t2", f.e), "complex");
       }},
      {{"complex-bee", "B(e,e,r) on t2, T and t2p (n = r >= 3, e >= 2)", true, true,
        false, true},
       3,
       [](Presentation& p, FamilyParams const& f) {
         int r = f.n;
         p.add_generator("t2", true);
         p.add_generator("T", true);
         p.add_generator("t2p", true);
         add_two_gen(p, "t2", "T", r);
         auto c = conj("T", 1, "t2");
         p.relate("t2p " + c + " t2p", c + " t2p " + c, "complex");
         p.relate(c + " t2p t2 " + c + " t2p t2", "t2p t2 " + c + " t2p t2 " + c,
                  "complex");
         p.relate(alternate("t2", "t2p", f.e), alternate("t2p", "t2", f.e), "complex");
       }},
      {{"g30", "Br(G30) on s1, S and t", false, false, false, true},
       0,
       [](Presentation& p, FamilyParams const&) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("t", true);
         p.relate("s1 " + conj("S", 2, "s1"), conj("S", 2, "s1") + " s1", "two-gen");
         p.relate(rep("S", 4), rep("S s1", 3), "two-gen");
         // t commutes with s2 and s3
         for (int i : {1, 2}) {
           p.relate("t " + conj("S", i, "s1"), conj("S", i, "s1") + " t", "g30");
         }
         p.relate("t s1 t s1 t", "s1 t s1 t s1", "g30");
       }},
      {{"g34", "Br(G34) on s, z and w", false, false, false, false},
       0,
       [](Presentation& p, FamilyParams const&) {
         p.add_generator("s", true);
         p.add_generator("z", true);
         p.add_generator("w", true);
         for (int i : {2, 3}) {
           p.relate("s " + conj("z", i, "s"), conj("z", i, "s") + " s", "two-gen");
         }
         p.relate(rep("z", 6), rep("z s", 5), "two-gen");
         // transcribed as printed, including the w^-i on the left
         for (int i : {0, 3, 4}) {
           auto lhs = i == 0 ? std::string("w s")
                             : "w z^" + std::to_string(i) + " s w^" + std::to_string(-i);
           p.relate(lhs, conj("z", i, "s") + " w", "g34");
         }
         for (int i : {1, 2}) {
           auto c = conj("z", i, "s");
           p.relate("w " + c + " w", c + " w " + c, "g34");
         }
         auto c1 = conj("z", 1, "s");
         auto c2 = conj("z", 2, "s");
         p.relate("w " + c2 + " w " + c1 + " w " + c2, c1 + " w " + c2 + " w " + c1 + " w",
                  "g34");
       }},
      {{"sphere", "Br_n(S^2) on d1..d(n-1)", true, false, false, true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "d", f.n - 1);
         p.relate(sphere_word("d", f.n), "1", "sphere");
       }},
      {{"sphere-2gen", "Br_n(S^2) on d1 and D", true, false, false, true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("d1", true);
         p.add_generator("D", true);
         add_two_gen(p, "d1", "D", f.n);
         p.relate(rep("D", f.n) + " " + rep("d1 D'", f.n - 1), "1", "sphere");
       }},
      {{"bp", "BP_n on s1..s(n-1) and xi1..xi(n-1)", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) { add_bp_core(p, f.n, true); }},
      {{"bp-3gen", "BP_n on s1, S and xi1", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("xi1", true);
         add_two_gen(p, "s1", "S", f.n);
         for (int i = 2; i <= f.n - 2; ++i) {
           p.relate("xi1 " + conj("S", i, "s1"), conj("S", i, "s1") + " xi1", "mixed");
         }
         for (int i = 2; i <= f.n - 2; ++i) {
           p.relate("xi1 " + conj("S", i, "xi1"), conj("S", i, "xi1") + " xi1", "mixed");
         }
         if (f.n >= 3) {
           p.relate("xi1 S xi1 S' s1", "S s1 S' xi1 S xi1 S'", "mixed");
           p.relate("xi1 S xi1 S' xi1", "S xi1 S' xi1 S xi1 S'", "mixed");
         }
         p.relate("xi1^2", "1", "involution");
       }},
      {{"sb", "SB_n on s1..s(n-1) and x1..x(n-1)", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) { add_sb_core(p, f.n); }},
      {{"sb-3gen", "SB_n on s1, S and x1", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("x1", false);
         add_two_gen(p, "s1", "S", f.n);
         for (int i = 0; i <= f.n - 2; ++i) {
           if (i != 1) {
             p.relate("x1 " + conj("S", i, "s1"), conj("S", i, "s1") + " x1", "singular");
           }
         }
         for (int i = 2; i <= f.n / 2; ++i) {
           p.relate("x1 " + conj("S", i, "x1"), conj("S", i, "x1") + " x1", "singular");
         }
         p.relate(rep("S", f.n) + " x1", "x1 " + rep("S", f.n), "singular");
         if (f.n >= 3) {
           p.relate("x1 S s1 S' s1", "S s1 S' s1 S x1 S'", "singular");
         }
         add_units(p, "s1");
         add_units(p, "S");
       }},
      {{"sb-bkl", "SB_n on a(t,s) and b(t,s)", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         int n = f.n;
         for (int t = 2; t <= n; ++t) {
           for (int s = 1; s < t; ++s) {
             p.add_generator(band("a", t, s), true);
           }
         }
         for (int t = 2; t <= n; ++t) {
           for (int s = 1; s < t; ++s) {
             p.add_generator(band("b", t, s), false);
           }
         }
         auto apart = [](int t, int s, int r, int q) {
           return static_cast<long>(t - r) * (t - q) * (s - r) * (s - q) > 0;
         };
         std::vector<std::pair<int, int>> chords;
         for (int t = 2; t <= n; ++t) {
           for (int s = 1; s < t; ++s) {
             chords.emplace_back(t, s);
           }
         }
         for (auto [t, s] : chords) {
           for (auto [r, q] : chords) {
             if (apart(t, s, r, q) && std::pair(t, s) < std::pair(r, q)) {
               p.relate(band("a", t, s) + " " + band("a", r, q),
                        band("a", r, q) + " " + band("a", t, s), "commute");
             }
           }
         }
         for (int t = 3; t <= n; ++t) {
           for (int s = 2; s < t; ++s) {
             for (int r = 1; r < s; ++r) {
               auto ats = band("a", t, s);
               auto asr = band("a", s, r);
               auto atr = band("a", t, r);
               p.relate(ats + " " + asr, atr + " " + ats, "band");
               p.relate(atr + " " + ats, asr + " " + atr, "band");
             }
           }
         }
         for (auto [t, s] : chords) {
           add_units(p, band("a", t, s));
         }
         for (auto [t, s] : chords) {
           for (auto [r, q] : chords) {
             if (apart(t, s, r, q)) {
               p.relate(band("a", t, s) + " " + band("b", r, q),
                        band("b", r, q) + " " + band("a", t, s), "commute");
             }
           }
         }
         for (auto [t, s] : chords) {
           p.relate(band("a", t, s) + " " + band("b", t, s),
                    band("b", t, s) + " " + band("a", t, s), "commute");
         }
         for (int t = 3; t <= n; ++t) {
           for (int s = 2; s < t; ++s) {
             for (int r = 1; r < s; ++r) {
               p.relate(band("a", t, s) + " " + band("b", s, r),
                        band("b", t, r) + " " + band("a", t, s), "singular");
               p.relate(band("a", s, r) + " " + band("b", t, r),
                        band("b", t, s) + " " + band("a", s, r), "singular");
               p.relate(band("a", t, r) + " " + band("b", t, s),
                        band("b", s, r) + " " + band("a", t, r), "singular");
             }
           }
         }
         for (auto [t, s] : chords) {
           for (auto [r, q] : chords) {
             if (apart(t, s, r, q) && std::pair(t, s) < std::pair(r, q)) {
               p.relate(band("b", t, s) + " " + band("b", r, q),
                        band("b", r, q) + " " + band("b", t, s), "commute");
             }
           }
         }
       }},
      {{"sb-annulus", "SB_n(Ann) on s_i, x_i and t (R1-R11)", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         int n = f.n;
         for (int i = 1; i <= n - 1; ++i) {
           p.add_generator(idx("s", i), true);
         }
         for (int i = 1; i <= n - 1; ++i) {
           p.add_generator(idx("x", i), false);
         }
         p.add_generator("t", true);
         for (int i = 1; i <= n - 1; ++i) {
           for (int j = i + 2; j <= n - 1; ++j) {
             p.relate(idx("s", i) + " " + idx("s", j), idx("s", j) + " " + idx("s", i),
                      "R1");
           }
         }
         for (int i = 1; i <= n - 1; ++i) {
           for (int j = i + 2; j <= n - 1; ++j) {
             p.relate(idx("x", i) + " " + idx("x", j), idx("x", j) + " " + idx("x", i),
                      "R2");
           }
         }
         for (int i = 1; i <= n - 1; ++i) {
           for (int j = 1; j <= n - 1; ++j) {
             if (std::abs(i - j) != 1) {
               p.relate(idx("x", i) + " " + idx("s", j),
                        idx("s", j) + " " + idx("x", i), "R3");
             }
           }
         }
         for (int i = 1; i + 1 <= n - 1; ++i) {
           auto si = idx("s", i);
           auto sj = idx("s", i + 1);
           p.relate(si + " " + sj + " " + si, sj + " " + si + " " + sj, "R4");
         }
         for (int i = 1; i + 1 <= n - 1; ++i) {
           auto si = idx("s", i);
           auto sj = idx("s", i + 1);
           p.relate(si + " " + sj + " " + idx("x", i),
                    idx("x", i + 1) + " " + si + " " + sj, "R5");
         }
         for (int i = 1; i + 1 <= n - 1; ++i) {
           auto si = idx("s", i);
           auto sj = idx("s", i + 1);
           p.relate(sj + " " + si + " " + idx("x", i + 1),
                    idx("x", i) + " " + sj + " " + si, "R6");
         }
         p.relate("t s1 t s1", "s1 t s1 t", "R7");
         p.relate("t s1 t x1", "x1 t s1 t", "R8");
         for (int i = 2; i <= n - 1; ++i) {
           p.relate("t " + idx("s", i), idx("s", i) + " t", "R9");
         }
         for (int i = 2; i <= n - 1; ++i) {
           p.relate("t " + idx("x", i), idx("x", i) + " t", "R10");
         }
         for (int i = 1; i <= n - 1; ++i) {
           p.relate(idx("s", i) + " " + idx("s", i) + "'", "1", "R11");
           p.relate(idx("s", i) + "' " + idx("s", i), "1", "R11");
         }
         p.relate("t t'", "1", "R11");
         p.relate("t' t", "1", "R11");
       }},
      {{"ib", "IB_n on s1..s(n-1) and e1", true, false, true, false},
       1,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         p.add_generator("e1", false);
         add_inverse_relations(p, f.n);
       }},
      {{"ib-balanced", "IB_n on s1..s(n-1) and e1..en", true, false, true, false},
       1,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         declare_eps(p, f.n);
         for (int i = 1; i <= f.n - 1; ++i) {
           add_units(p, idx("s", i));
         }
         add_eps_relations(p, "s", f.n, true);
       }},
      {{"ib-3gen", "IB_n on s1, S and e1", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         p.add_generator("s1", true);
         p.add_generator("S", true);
         p.add_generator("e1", false);
         add_units(p, "s1");
         add_units(p, "S");
         for (int i = 1; i <= f.n - 2; ++i) {
           p.relate("e1 " + conj("S", i, "s1"), conj("S", i, "s1") + " e1", "eps");
         }
         p.relate("e1 s1 e1", "s1 e1 s1 e1", "eps");
         p.relate("s1 e1 s1 e1", "e1 s1 e1 s1", "eps");
         p.relate("e1", "e1 e1", "eps");
         p.relate("e1 e1", "e1 s1^2", "eps");
         p.relate("e1 s1^2", "s1^2 e1", "eps");
         add_two_gen(p, "s1", "S", f.n);
       }},
      {{"in", "symmetric inverse monoid I_n on s1..s(n-1) and e1", true, false, true,
        false},
       1,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1, true, false);
         p.add_generator("e1", false);
         for (int i = 1; i <= f.n - 1; ++i) {
           p.relate(idx("s", i) + "^2", "1", "involution");
         }
         for (int i = 2; i <= f.n - 1; ++i) {
           p.relate("e1 " + idx("s", i), idx("s", i) + " e1", "eps");
         }
         if (f.n >= 2) {
           p.relate("e1 s1 e1", "s1 e1 s1 e1", "eps");
           p.relate("s1 e1 s1 e1", "e1 s1 e1 s1", "eps");
         }
         p.relate("e1", "e1 e1", "eps");
       }},
      {{"ib-sphere", "IB_n(S^2): IB_n plus the sphere relation", true, false, false,
        true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         p.add_generator("e1", false);
         add_inverse_relations(p, f.n);
         p.relate(sphere_word("s", f.n), "1", "sphere");
       }},
      {{"ib-typeb", "IB(B_n) on s_i, e_i and t", true, false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1);
         declare_eps(p, f.n);
         p.add_generator("t", true);
         for (int i = 1; i <= f.n - 1; ++i) {
           add_units(p, idx("s", i));
         }
         add_eps_relations(p, "s", f.n, true);
         for (int i = 2; i <= f.n - 1; ++i) {
           p.relate("t " + idx("s", i), idx("s", i) + " t", "type-b");
         }
         p.relate("t s1 t s1", "s1 t s1 t", "type-b");
         add_units(p, "t");
         p.relate("e1 t", "t e1", "type-b");
         p.relate("t e1", "e1", "type-b");
       }},
      {{"i-typeb", "I(B_n), partial signed permutations, on s_i, e_i and t", true,
        false, true, false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_artin(p, "s", f.n - 1, true, false);
         declare_eps(p, f.n);
         p.add_generator("t", false);
         for (int i = 1; i <= f.n - 1; ++i) {
           p.relate(idx("s", i) + "^2", "1", "involution");
         }
         add_eps_relations(p, "s", f.n, false);
         for (int i = 2; i <= f.n - 1; ++i) {
           p.relate("t " + idx("s", i), idx("s", i) + " t", "type-b");
         }
         p.relate("t s1 t s1", "s1 t s1 t", "type-b");
         p.relate("t^2", "1", "involution");
         p.relate("e1 t", "t e1", "type-b");
         p.relate("t e1", "e1", "type-b");
       }},
      {{"ibp", "IBP_n, partial welded braids, on s_i, xi_i and e_i", true, false, true,
        false},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_bp_core(p, f.n, true);
         declare_eps(p, f.n);
         for (int i = 1; i <= f.n - 1; ++i) {
           add_units(p, idx("s", i));
         }
         add_eps_relations(p, "s", f.n, true);
         add_xi_eps(p, f.n);
       }},
      {{"ivb", "IVB_n, partial virtual braids, on s_i, xi_i and e_i", true, false,
        false, true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_bp_core(p, f.n, false);
         declare_eps(p, f.n);
         for (int i = 1; i <= f.n - 1; ++i) {
           add_units(p, idx("s", i));
         }
         add_eps_relations(p, "s", f.n, true);
         add_xi_eps(p, f.n);
       }},
      {{"psb", "PSB_n, partial singular braids, on s_i, x_i and e_i", true, false,
        false, true},
       2,
       [](Presentation& p, FamilyParams const& f) {
         add_sb_core(p, f.n);
         declare_eps(p, f.n);
         add_eps_relations(p, "s", f.n, true);
         add_x_eps(p, f.n);
       }},
  };
  return entries;
}

FamilyEntry const& lookup(std::string_view family) {
  for (auto const& e : registry()) {
    if (e.info.name == family) {
      return e;
    }
  }
  throw std::invalid_argument("unknown presentation family '" + std::string(family)
                              + "'");
}

}  // namespace

std::vector<FamilyInfo> const& builtin_families() {
  static std::vector<FamilyInfo> const infos = [] {
    std::vector<FamilyInfo> out;
    for (auto const& e : registry()) {
      out.push_back(e.info);
    }
    return out;
  }();
  return infos;
}

Presentation builtin_presentation(std::string_view family,
                                  FamilyParams const& params) {
  auto const& entry = lookup(family);
  if (entry.info.needs_n) {
    require(params.n >= entry.min_n && params.n <= 64,
            std::string(family) + " needs n in " + std::to_string(entry.min_n)
                + "..64");
  }
  if (entry.info.needs_e) {
    require(params.e >= 2 && params.e <= 64, std::string(family) + " needs e >= 2");
  }
  Presentation p;
  p.family = entry.info.name;
  entry.build(p, params);
  p.validate();
  return p;
}

}  // namespace braids
