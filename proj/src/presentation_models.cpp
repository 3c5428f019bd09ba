#include <algorithm>
#include <cmath>
#include <numbers>

#include "braids/inverse_braid.hpp"
#include "braids/presentations.hpp"
#include "braids/singular_monoid.hpp"

namespace braids {

namespace {

std::string idx(std::string_view prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

BraidWord sigma(int n, int i, int sign = 1) { return BraidWord(n, {{i, sign}}); }

// s_from .. s_to in Br_n (empty when from > to)
BraidWord staircase(int n, int from, int to) {
  BraidWord w(n);
  for (int i = from; i <= to; ++i) {
    w.letters.push_back({i, 1});
  }
  return w;
}

using BraidImages = std::map<std::string, BraidWord>;

// Images of positive letters; inverse letters get the inverse braid.
Assignment braid_assignment(std::string model, int n, BraidImages images) {
  BraidImages inverses;
  for (auto const& [label, w] : images) {
    inverses.emplace(label, w.inverse());
  }
  return make_assignment(
      std::move(model), BraidWord(n), std::move(images), std::move(inverses),
      [](BraidWord const& u, BraidWord const& v) { return u * v; },
      [](BraidWord const& u, BraidWord const& v) { return braid_equal(u, v); });
}

BraidImages artin_images(int n) {
  BraidImages out;
  for (int i = 1; i <= n - 1; ++i) {
    out.emplace(idx("s", i), sigma(n, i));
  }
  return out;
}

// --- free group automorphisms

FreeAutomorphism swap_automorphism(int rank, int i) {
  auto a = FreeAutomorphism::identity(rank);
  std::swap(a.images[static_cast<std::size_t>(i - 1)],
            a.images[static_cast<std::size_t>(i)]);
  return a;
}

Assignment free_assignment(std::string model, int n,
                           std::map<std::string, FreeAutomorphism> images,
                           std::map<std::string, FreeAutomorphism> inverses) {
  return make_assignment(
      std::move(model), FreeAutomorphism::identity(n), std::move(images),
      std::move(inverses),
      [](FreeAutomorphism const& a, FreeAutomorphism const& b) { return a.then(b); },
      [](FreeAutomorphism const& a, FreeAutomorphism const& b) { return a == b; });
}

// --- singular braids

SingularWord singular_letter(int n, Gen g, int i, int sign = 1) {
  return SingularWord{n, {Token{g, i, 0, sign}}};
}

SingularWord singular_concat(SingularWord const& a, SingularWord const& b) {
  SingularWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

SingularWord singular_inverse(SingularWord const& w) {
  SingularWord out{w.n, {w.letters.rbegin(), w.letters.rend()}};
  for (auto& t : out.letters) {
    t.sign = -t.sign;
  }
  return out;
}

SingularWord to_singular(BraidWord const& w) {
  SingularWord out{w.n, {}};
  for (auto const& l : w.letters) {
    out.letters.push_back(Token{Gen::sigma, l.index, 0, l.sign});
  }
  return out;
}

Assignment singular_assignment(std::string model, int n,
                               std::map<std::string, SingularWord> images) {
  std::map<std::string, SingularWord> inverses;
  for (auto const& [label, w] : images) {
    bool invertible = std::all_of(w.letters.begin(), w.letters.end(),
                                  [](Token const& t) { return t.gen == Gen::sigma; });
    if (invertible) {
      inverses.emplace(label, singular_inverse(w));
    }
  }
  return make_assignment(
      std::move(model), SingularWord{n, {}}, std::move(images), std::move(inverses),
      singular_concat,
      [](SingularWord const& u, SingularWord const& v) { return singular_equal(u, v); });
}

// --- partial braids

Assignment partial_assignment(std::string model, int n,
                              std::map<std::string, PartialBraid> images,
                              std::map<std::string, PartialBraid> inverses) {
  return make_assignment(
      std::move(model), PartialBraid::identity(n), std::move(images),
      std::move(inverses), pb_multiply,
      [](PartialBraid const& a, PartialBraid const& b) { return a == b; });
}

void add_partial_braid(std::map<std::string, PartialBraid>& images,
                       std::map<std::string, PartialBraid>& inverses,
                       std::string const& label, BraidWord const& w) {
  images.emplace(label, PartialBraid::from_braid(w));
  inverses.emplace(label, PartialBraid::from_braid(w.inverse()));
}

Assignment ib_assignment(std::string const& family, int n, bool x_as_sigma) {
  std::map<std::string, PartialBraid> images;
  std::map<std::string, PartialBraid> inverses;
  for (int i = 1; i <= n - 1; ++i) {
    add_partial_braid(images, inverses, idx("s", i), sigma(n, i));
    if (x_as_sigma) {
      images.emplace(idx("x", i), PartialBraid::from_braid(sigma(n, i)));
    }
  }
  if (family == "ib-3gen") {
    add_partial_braid(images, inverses, "S", staircase(n, 1, n - 1));
  }
  for (int i = 1; i <= n; ++i) {
    images.emplace(idx("e", i), PartialBraid::eps(n, i));
  }
  return partial_assignment(x_as_sigma ? "IB_" + std::to_string(n) + " (x_i -> s_i)"
                                       : "IB_" + std::to_string(n),
                            n, std::move(images), std::move(inverses));
}

Assignment injection_assignment(int n) {
  std::map<std::string, PartialInjection> images;
  for (int i = 1; i <= n - 1; ++i) {
    images.emplace(idx("s", i), tau(PartialBraid::from_braid(sigma(n, i))));
  }
  // transpositions are their own inverses
  auto inverses = images;
  images.emplace("e1", tau(PartialBraid::eps(n, 1)));
  return make_assignment(
      "I_" + std::to_string(n), PartialInjection::identity(n), std::move(images),
      std::move(inverses),
      [](PartialInjection const& a, PartialInjection const& b) { return a.then(b); },
      [](PartialInjection const& a, PartialInjection const& b) { return a == b; });
}

IBWord ib_letter(int n, Gen g, int i, int sign = 1) {
  return ib_from_tokens(n, {Token{g, i, 0, sign}});
}

PartialFreeIso ibp_letter(int n, IBPLetter::Kind kind, int i, int sign = 1) {
  return ibp_model(IBPWord{n, {IBPLetter{kind, i, sign}}});
}

Assignment ibp_assignment(int n) {
  using K = IBPLetter::Kind;
  std::map<std::string, PartialFreeIso> images;
  std::map<std::string, PartialFreeIso> inverses;
  for (int i = 1; i <= n - 1; ++i) {
    images.emplace(idx("s", i), ibp_letter(n, K::sigma, i));
    inverses.emplace(idx("s", i), ibp_letter(n, K::sigma, i, -1));
    images.emplace(idx("xi", i), ibp_letter(n, K::xi, i));
    inverses.emplace(idx("xi", i), ibp_letter(n, K::xi, i));
  }
  for (int i = 1; i <= n; ++i) {
    images.emplace(idx("e", i), ibp_letter(n, K::eps, i));
  }
  return make_assignment(
      "partial isomorphisms of F_" + std::to_string(n), PartialFreeIso::identity(n),
      std::move(images), std::move(inverses),
      [](PartialFreeIso const& a, PartialFreeIso const& b) { return a.then(b); },
      [](PartialFreeIso const& a, PartialFreeIso const& b) { return a == b; });
}

// --- Coxeter groups, geometric representation

// Entries within this distance count as equal.
constexpr double coxeter_tolerance = 1e-9;

struct Matrix {
  int k = 0;
  std::vector<double> a;  // row-major

  static Matrix identity(int k) {
    Matrix m{k, std::vector<double>(static_cast<std::size_t>(k * k), 0.0)};
    for (int i = 0; i < k; ++i) {
      m.at(i, i) = 1.0;
    }
    return m;
  }
  double& at(int r, int c) { return a[static_cast<std::size_t>(r * k + c)]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r * k + c)]; }
};

// this applied first, then b: the matrix b * a
Matrix then(Matrix const& a, Matrix const& b) {
  Matrix out{a.k, std::vector<double>(a.a.size(), 0.0)};
  for (int r = 0; r < a.k; ++r) {
    for (int m = 0; m < a.k; ++m) {
      double x = b.at(r, m);
      if (x == 0.0) {
        continue;
      }
      for (int c = 0; c < a.k; ++c) {
        out.at(r, c) += x * a.at(m, c);
      }
    }
  }
  return out;
}

bool near(Matrix const& a, Matrix const& b) {
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    if (std::abs(a.a[i] - b.a[i]) > coxeter_tolerance) {
      return false;
    }
  }
  return true;
}

// Reflections s_i(v) = v - 2 B(e_i, v) e_i, B(e_i, e_j) = -cos(pi / m_ij).
std::vector<Matrix> coxeter_reflections(std::vector<std::vector<int>> const& m) {
  int k = static_cast<int>(m.size());
  auto bilinear = [&](int i, int j) {
    if (i == j) {
      return 1.0;
    }
    int mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return -std::cos(std::numbers::pi / mij);
  };
  std::vector<Matrix> out;
  for (int i = 0; i < k; ++i) {
    Matrix s = Matrix::identity(k);
    for (int c = 0; c < k; ++c) {
      s.at(i, c) -= 2.0 * bilinear(i, c);
    }
    out.push_back(s);
  }
  return out;
}

// Coxeter matrix with every pair commuting except the listed edges.
std::vector<std::vector<int>> coxeter_matrix(
    int k, std::vector<std::tuple<int, int, int>> const& edges) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(k),
                                  std::vector<int>(static_cast<std::size_t>(k), 2));
  for (int i = 0; i < k; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  }
  for (auto [i, j, mij] : edges) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = mij;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mij;
  }
  return m;
}

// labels map to words in the 0-based Coxeter generators
Assignment coxeter_assignment(std::string model, std::vector<std::vector<int>> const& m,
                              std::map<std::string, std::vector<int>> const& words) {
  auto refl = coxeter_reflections(m);
  int k = static_cast<int>(m.size());
  std::map<std::string, Matrix> images;
  std::map<std::string, Matrix> inverses;
  for (auto const& [label, w] : words) {
    Matrix fwd = Matrix::identity(k);
    Matrix back = Matrix::identity(k);
    for (int g : w) {
      fwd = then(fwd, refl[static_cast<std::size_t>(g)]);
    }
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      back = then(back, refl[static_cast<std::size_t>(*it)]);
    }
    images.emplace(label, fwd);
    inverses.emplace(label, back);
  }
  return make_assignment(std::move(model), Matrix::identity(k), std::move(images),
                         std::move(inverses), then, near);
}

std::vector<int> chain_word(int from, int to) {
  std::vector<int> w;
  for (int i = from; i <= to; ++i) {
    w.push_back(i);
  }
  return w;
}

Assignment type_d_quotient(std::string const& family, int n) {
  // nodes 0..n-2 carry s_1..s_(n-1); node n-1 is r, attached to s_2
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i + 1 <= n - 2; ++i) {
    edges.emplace_back(i, i + 1, 3);
  }
  edges.emplace_back(n - 1, 1, 3);
  std::map<std::string, std::vector<int>> words;
  if (family == "type-d") {
    for (int i = 1; i <= n - 1; ++i) {
      words.emplace(idx("s", i), std::vector<int>{i - 1});
    }
  } else {
    words.emplace("s1", std::vector<int>{0});
    words.emplace("S", chain_word(0, n - 2));
  }
  words.emplace("r", std::vector<int>{n - 1});
  return coxeter_assignment("W(D_" + std::to_string(n) + ")",
                            coxeter_matrix(n, edges), words);
}

Assignment e8_quotient() {
  std::vector<std::tuple<int, int, int>> edges;
  for (int i = 0; i + 1 <= 6; ++i) {
    edges.emplace_back(i, i + 1, 3);
  }
  edges.emplace_back(7, 2, 3);
  return coxeter_assignment("W(E_8)", coxeter_matrix(8, edges),
                            {{"s1", {0}}, {"S", chain_word(0, 6)}, {"w", {7}}});
}

Assignment h4_quotient() {
  auto m = coxeter_matrix(4, {{0, 1, 3}, {1, 2, 3}, {3, 0, 5}});
  return coxeter_assignment("W(H_4)", m,
                            {{"s1", {0}}, {"S", chain_word(0, 2)}, {"t", {3}}});
}

// --- monomial reflection groups G(m, p, r)

// e_j -> zeta^exps[j] e_perm[j], zeta a primitive m-th root of unity
struct Monomial {
  int m = 1;
  std::vector<int> perm;
  std::vector<int> exps;

  static Monomial identity(int m, int r) {
    Monomial out{m, std::vector<int>(static_cast<std::size_t>(r)),
                 std::vector<int>(static_cast<std::size_t>(r), 0)};
    for (int j = 0; j < r; ++j) {
      out.perm[static_cast<std::size_t>(j)] = j;
    }
    return out;
  }
  Monomial then(Monomial const& b) const {
    Monomial out = identity(m, static_cast<int>(perm.size()));
    for (std::size_t j = 0; j < perm.size(); ++j) {
      auto mid = static_cast<std::size_t>(perm[j]);
      out.perm[j] = b.perm[mid];
      out.exps[j] = (exps[j] + b.exps[mid]) % m;
    }
    return out;
  }
  Monomial inverse() const {
    Monomial out = identity(m, static_cast<int>(perm.size()));
    for (std::size_t j = 0; j < perm.size(); ++j) {
      auto to = static_cast<std::size_t>(perm[j]);
      out.perm[to] = static_cast<int>(j);
      out.exps[to] = (m - exps[j]) % m;
    }
    return out;
  }
  friend bool operator==(Monomial const&, Monomial const&) = default;
};

Monomial transposition(int m, int r, int j, int twist = 0) {
  auto out = Monomial::identity(m, r);
  out.perm[static_cast<std::size_t>(j)] = j + 1;
  out.perm[static_cast<std::size_t>(j + 1)] = j;
  out.exps[static_cast<std::size_t>(j)] = twist % m;
  out.exps[static_cast<std::size_t>(j + 1)] = (m - twist % m) % m;
  return out;
}

// B(2e,e,r) -> G(de,e,r) and B(e,e,r) -> G(e,e,r). t2p swaps the first two
// coordinates with twist zeta_m; S scales the first coordinate by zeta_d^-1.
Assignment monomial_quotient(std::string const& family, FamilyParams const& f) {
  int r = f.n;
  int e = f.e;
  bool with_s = family == "complex-b2ee";
  int d = with_s ? (f.d > 0 ? f.d : 2) : 1;
  int m = d * e;
  int twist = 1;
  std::map<std::string, Monomial> images;
  images.emplace("t2", transposition(m, r, 0));
  auto T = Monomial::identity(m, r);
  for (int j = 0; j + 1 < r; ++j) {
    T = T.then(transposition(m, r, j));
  }
  images.emplace("T", T);
  images.emplace("t2p", transposition(m, r, 0, twist));
  if (with_s) {
    auto S = Monomial::identity(m, r);
    S.exps[0] = (d - 1) * e;
    images.emplace("S", S);
  }
  std::map<std::string, Monomial> inverses;
  for (auto const& [label, x] : images) {
    inverses.emplace(label, x.inverse());
  }
  std::string name = "G(" + std::to_string(m) + "," + std::to_string(e) + ","
                     + std::to_string(r) + ")";
  return make_assignment(
      name, Monomial::identity(m, r), std::move(images), std::move(inverses),
      [](Monomial const& a, Monomial const& b) { return a.then(b); },
      [](Monomial const& a, Monomial const& b) { return a == b; });
}

Assignment symmetric_quotient(std::string const& family, int n) {
  std::map<std::string, Permutation> images;
  std::map<std::string, Permutation> inverses;
  auto add = [&](std::string const& label, BraidWord const& w) {
    auto p = permutation_of(w);
    images.emplace(label, p);
    inverses.emplace(label, p.inverse());
  };
  if (family == "sphere-2gen") {
    add("d1", sigma(n, 1));
    add("D", staircase(n, 1, n - 1));
  } else {
    for (int i = 1; i <= n - 1; ++i) {
      add(idx("d", i), sigma(n, i));
    }
  }
  return make_assignment(
      "S_" + std::to_string(n), Permutation::identity(n), std::move(images),
      std::move(inverses),
      [](Permutation const& a, Permutation const& b) { return a.then(b); },
      [](Permutation const& a, Permutation const& b) { return a == b; });
}

}  // namespace

std::optional<Assignment> builtin_model(std::string_view family_view,
                                        FamilyParams const& f) {
  std::string family(family_view);
  builtin_presentation(family, f);  // validates the parameters
  int n = f.n;
  std::string br = "Br_" + std::to_string(n);
  if (family == "artin") {
    return braid_assignment(br, n, artin_images(n));
  }
  if (family == "artin-2gen") {
    return braid_assignment(br, n, {{"s1", sigma(n, 1)}, {"S", staircase(n, 1, n - 1)}});
  }
  if (family == "lin") {
    return braid_assignment(
        br, n, {{"s1", sigma(n, 1)}, {"B", staircase(n, 1, n - 1) * sigma(n, 1)}});
  }
  if (family == "type-b" || family == "type-b-3gen") {
    int m = n + 1;
    BraidImages images{{"t", pow(sigma(m, 1), 2)}};
    if (family == "type-b") {
      for (int i = 1; i <= n - 1; ++i) {
        images.emplace(idx("s", i), sigma(m, i + 1));
      }
    } else {
      images.emplace("s1", sigma(m, 2));
      images.emplace("S", staircase(m, 2, n));
    }
    return braid_assignment("Br_" + std::to_string(m) + " (t -> s1^2)", m,
                            std::move(images));
  }
  if (family == "bp" || family == "bp-3gen") {
    std::map<std::string, FreeAutomorphism> images;
    std::map<std::string, FreeAutomorphism> inverses;
    auto add_braid = [&](std::string const& label, BraidWord const& w) {
      images.emplace(label, act_free(w));
      inverses.emplace(label, act_free(w.inverse()));
    };
    if (family == "bp") {
      for (int i = 1; i <= n - 1; ++i) {
        add_braid(idx("s", i), sigma(n, i));
        images.emplace(idx("xi", i), swap_automorphism(n, i));
        inverses.emplace(idx("xi", i), swap_automorphism(n, i));
      }
    } else {
      add_braid("s1", sigma(n, 1));
      add_braid("S", staircase(n, 1, n - 1));
      images.emplace("xi1", swap_automorphism(n, 1));
      inverses.emplace("xi1", swap_automorphism(n, 1));
    }
    return free_assignment("Aut(F_" + std::to_string(n) + ")", n, std::move(images),
                           std::move(inverses));
  }
  if (family == "sb" || family == "sb-3gen" || family == "sb-annulus") {
    int m = family == "sb-annulus" ? n + 1 : n;
    int shift = m - n;
    std::map<std::string, SingularWord> images;
    if (family == "sb-3gen") {
      images.emplace("s1", singular_letter(m, Gen::sigma, 1));
      images.emplace("S", to_singular(staircase(m, 1, m - 1)));
      images.emplace("x1", singular_letter(m, Gen::x, 1));
    } else {
      for (int i = 1; i <= n - 1; ++i) {
        images.emplace(idx("s", i), singular_letter(m, Gen::sigma, i + shift));
        images.emplace(idx("x", i), singular_letter(m, Gen::x, i + shift));
      }
    }
    if (family == "sb-annulus") {
      images.emplace("t", to_singular(pow(sigma(m, 1), 2)));
    }
    return singular_assignment(
        "SB_" + std::to_string(m) + (shift ? " (t -> s1^2)" : ""), m, std::move(images));
  }
  if (family == "sb-bkl") {
    std::map<std::string, SBandWord> images;
    std::map<std::string, SBandWord> inverses;
    for (int t = 2; t <= n; ++t) {
      for (int s = 1; s < t; ++s) {
        auto suffix = "(" + std::to_string(t) + "," + std::to_string(s) + ")";
        images.emplace("a" + suffix, SBandWord(n, {a_gen(t, s)}));
        inverses.emplace("a" + suffix, SBandWord(n, {a_gen(t, s, -1)}));
        images.emplace("b" + suffix, SBandWord(n, {b_gen(t, s)}));
      }
    }
    return make_assignment(
        "SB_" + std::to_string(n) + " (band generators)", SBandWord(n),
        std::move(images), std::move(inverses),
        [](SBandWord const& u, SBandWord const& v) { return u * v; },
        [](SBandWord const& u, SBandWord const& v) { return singular_equal(u, v); });
  }
  if (family == "ib" || family == "ib-balanced" || family == "ib-3gen") {
    return ib_assignment(family, n, false);
  }
  if (family == "in") {
    return injection_assignment(n);
  }
  if (family == "ib-typeb") {
    std::map<std::string, PartialBraid> images;
    std::map<std::string, PartialBraid> inverses;
    for (int i = 1; i <= n - 1; ++i) {
      images.emplace(idx("s", i), typeb_embed(ib_letter(n, Gen::sigma, i)));
      inverses.emplace(idx("s", i), typeb_embed(ib_letter(n, Gen::sigma, i, -1)));
    }
    for (int i = 1; i <= n; ++i) {
      images.emplace(idx("e", i), typeb_embed(ib_letter(n, Gen::eps, i)));
    }
    images.emplace("t", typeb_embed(ib_letter(n, Gen::tau, 1)));
    inverses.emplace("t", typeb_embed(ib_letter(n, Gen::tau, 1, -1)));
    return partial_assignment("IB_" + std::to_string(n + 1) + " (t -> s1^2)", n + 1,
                              std::move(images), std::move(inverses));
  }
  if (family == "i-typeb") {
    std::map<std::string, SignedPartialPermutation> images;
    for (int i = 1; i <= n - 1; ++i) {
      images.emplace(idx("s", i), rho_b(ib_letter(n, Gen::sigma, i)));
    }
    for (int i = 1; i <= n; ++i) {
      images.emplace(idx("e", i), rho_b(ib_letter(n, Gen::eps, i)));
    }
    images.emplace("t", rho_b(ib_letter(n, Gen::tau, 1)));
    return make_assignment(
        "partial signed permutations of " + std::to_string(n), SignedPartialPermutation::identity(n),
        std::move(images), std::map<std::string, SignedPartialPermutation>{},
        [](SignedPartialPermutation const& a, SignedPartialPermutation const& b) {
          return a.then(b);
        },
        [](SignedPartialPermutation const& a, SignedPartialPermutation const& b) {
          return a == b;
        });
  }
  if (family == "ibp") {
    return ibp_assignment(n);
  }
  return std::nullopt;
}

std::optional<Assignment> builtin_quotient(std::string_view family_view,
                                           FamilyParams const& f) {
  std::string family(family_view);
  builtin_presentation(family, f);
  if (family == "sphere" || family == "sphere-2gen") {
    return symmetric_quotient(family, f.n);
  }
  if (family == "type-d" || family == "type-d-3gen") {
    return type_d_quotient(family, f.n);
  }
  if (family == "e8") {
    return e8_quotient();
  }
  if (family == "g30") {
    return h4_quotient();
  }
  if (family == "complex-b2ee" || family == "complex-bee") {
    return monomial_quotient(family, f);
  }
  if (family == "ivb") {
    return ibp_assignment(f.n);
  }
  if (family == "psb") {
    return ib_assignment(family, f.n, true);
  }
  if (family == "ib-sphere") {
    return injection_assignment(f.n);
  }
  return std::nullopt;
}

}  // namespace braids
