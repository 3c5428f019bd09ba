#include "braids/inverse_braid.hpp"

#include <algorithm>
#include <stdexcept>

namespace braids {

namespace {

Permutation core_permutation(GarsideNF const& core) {
  return permutation_of(to_word(core));
}

GarsideNF trivial_core(int k) { return garside_nf(BraidWord(k)); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) {
    out.push_back(p);
  }
  return out;
}

}  // namespace

PartialBraid PartialBraid::identity(int n) {
  return {n, range(1, n), range(1, n), trivial_core(n)};
}

PartialBraid PartialBraid::empty(int n) { return {n, {}, {}, trivial_core(0)}; }

PartialBraid PartialBraid::from_braid(BraidWord const& w) {
  return {w.n, range(1, w.n), range(1, w.n), garside_nf(w)};
}

PartialBraid PartialBraid::eps(int n, int i) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("e" + std::to_string(i) + " out of range for n="
                                + std::to_string(n));
  }
  auto pts = range(1, n);
  pts.erase(pts.begin() + (i - 1));
  return {n, pts, pts, trivial_core(n - 1)};
}

void IBWord::validate(bool type_b) const {
  for (auto const& t : letters) {
    bool ok = false;
    switch (t.gen) {
      case Gen::sigma:
        ok = 1 <= t.i && t.i < n;
        break;
      case Gen::eps:
        ok = 1 <= t.i && t.i <= n && t.sign == 1;
        break;
      case Gen::tau:
        ok = type_b;
        break;
      default:
        break;
    }
    if (!ok) {
      throw std::invalid_argument("bad letter " + format_token(t) + " for n="
                                  + std::to_string(n));
    }
  }
}

IBWord ib_from_tokens(int n, std::vector<Token> const& toks) {
  IBWord w{n, toks};
  bool type_b = std::any_of(toks.begin(), toks.end(),
                            [](Token const& t) { return t.gen == Gen::tau; });
  w.validate(type_b);
  return w;
}

IBWord parse_ib(std::string_view text, int default_n) {
  auto p = parse_word(text);
  int n = p.n.value_or(default_n > 0 ? default_n : min_strands(p.tokens));
  return ib_from_tokens(n, p.tokens);
}

std::string to_string(IBWord const& w) { return format_tokens(w.letters); }

PartialBraid pb_multiply(PartialBraid const& a, PartialBraid const& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("pb_multiply: strand counts differ");
  }
  auto in = [](std::vector<int> const& v, int p) {
    return std::binary_search(v.begin(), v.end(), p);
  };
  auto pa = core_permutation(a.core);
  auto pb = core_permutation(b.core);
  PartialBraid out;
  out.n = a.n;
  BraidWord wa = to_word(a.core);
  for (int r = a.k(); r-- > 0;) {
    auto ur = static_cast<std::size_t>(r);
    int bottom = a.J[static_cast<std::size_t>(pa.image[ur])];
    if (!in(b.I, bottom)) {
      wa = delete_strand(wa, r + 1);
    }
  }
  BraidWord wb = to_word(b.core);
  for (int q = b.k(); q-- > 0;) {
    auto uq = static_cast<std::size_t>(q);
    if (in(a.J, b.I[uq])) {
      out.J.push_back(b.J[static_cast<std::size_t>(pb.image[uq])]);
    } else {
      wb = delete_strand(wb, q + 1);
    }
  }
  for (int r = 0; r < a.k(); ++r) {
    auto ur = static_cast<std::size_t>(r);
    if (in(b.I, a.J[static_cast<std::size_t>(pa.image[ur])])) {
      out.I.push_back(a.I[ur]);
    }
  }
  std::sort(out.J.begin(), out.J.end());
  out.core = garside_nf(wa * wb);
  return out;
}

PartialBraid pb_inverse(PartialBraid const& a) {
  return {a.n, a.J, a.I, garside_nf(to_word(a.core).inverse())};
}

PartialBraid pb_from_word(IBWord const& w) {
  w.validate();
  auto out = PartialBraid::identity(w.n);
  for (auto const& t : w.letters) {
    if (t.gen == Gen::eps) {
      out = pb_multiply(out, PartialBraid::eps(w.n, t.i));
    } else {
      out = pb_multiply(out,
                        PartialBraid::from_braid(BraidWord(w.n, {{t.i, t.sign}})));
    }
  }
  return out;
}

IBWord pb_to_word(PartialBraid const& a) {
  IBWord w;
  w.n = a.n;
  auto sigma = [&](int i, int sign) {
    w.letters.push_back({Gen::sigma, i, 0, sign});
  };
  int k = a.k();
  for (int r = 0; r < k; ++r) {
    // the r-th survivor sits at I[r]; survivors to its left are packed
    for (int p = a.I[static_cast<std::size_t>(r)]; p > r + 1; --p) {
      sigma(p - 1, 1);
    }
  }
  for (int p = k + 1; p <= a.n; ++p) {
    w.letters.push_back({Gen::eps, p, 0, 1});
  }
  for (auto const& l : to_word(a.core).letters) {
    sigma(l.index, l.sign);
  }
  for (int r = k; r-- > 0;) {
    for (int p = r + 1; p < a.J[static_cast<std::size_t>(r)]; ++p) {
      sigma(p, 1);
    }
  }
  return w;
}

std::string format_pb(PartialBraid const& a) {
  auto list = [](std::vector<int> const& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "]";
  };
  return "I=" + list(a.I) + " J=" + list(a.J) + " core=" + format_nf(a.core);
}

namespace {

PartialFreeIso phi_eps(int n, int i) {
  auto p = PartialFreeIso::identity(n);
  auto ui = static_cast<std::size_t>(i - 1);
  p.target[ui] = 0;
  p.images[ui] = FreeWord{n, {}};
  return p;
}

PartialFreeIso phi_sigma(int n, int i, int sign) {
  return PartialFreeIso::from(act_free(BraidWord(n, {{i, sign}})));
}

}  // namespace

PartialFreeIso phi(IBWord const& w) {
  w.validate();
  auto out = PartialFreeIso::identity(w.n);
  for (auto const& t : w.letters) {
    out = out.then(t.gen == Gen::eps ? phi_eps(w.n, t.i)
                                     : phi_sigma(w.n, t.i, t.sign));
  }
  return out;
}

PartialFreeIso phi(PartialBraid const& a) { return phi(pb_to_word(a)); }

PartialInjection PartialInjection::identity(int n) { return {n, range(1, n)}; }

PartialInjection PartialInjection::then(PartialInjection const& other) const {
  PartialInjection out{n, std::vector<int>(image.size(), 0)};
  for (std::size_t p = 0; p < image.size(); ++p) {
    if (image[p] != 0) {
      out.image[p] = other.image[static_cast<std::size_t>(image[p] - 1)];
    }
  }
  return out;
}

PartialInjection tau(PartialBraid const& a) {
  PartialInjection out{a.n, std::vector<int>(static_cast<std::size_t>(a.n), 0)};
  auto perm = core_permutation(a.core);
  for (std::size_t r = 0; r < a.I.size(); ++r) {
    out.image[static_cast<std::size_t>(a.I[r] - 1)] =
        a.J[static_cast<std::size_t>(perm.image[r])];
  }
  return out;
}

std::string to_string(PartialInjection const& p) {
  std::string s;
  for (int x = 1; x <= p.n; ++x) {
    int y = p.image[static_cast<std::size_t>(x - 1)];
    if (y != 0) {
      s += (s.empty() ? "" : " ") + std::to_string(x) + "->" + std::to_string(y);
    }
  }
  return s.empty() ? "{}" : s;
}

bool brunnian_test(BraidWord const& b, int i) {
  auto e = PartialBraid::eps(b.n, i);
  return pb_multiply(e, PartialBraid::from_braid(b)) == e;
}

bool brunnian_test(BraidWord const& b) {
  for (int i = 1; i <= b.n; ++i) {
    if (!brunnian_test(b, i)) {
      return false;
    }
  }
  return true;
}

std::vector<BraidWord> brunnian_free_generators(int n) {
  if (n < 2) {
    throw std::invalid_argument("brunnian generators need n >= 2");
  }
  std::vector<BraidWord> out;
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord w(n);
    for (int j = i - 1; j >= 1; --j) {
      w.letters.push_back({j, -1});
    }
    w.letters.push_back({1, 1});
    w.letters.push_back({1, 1});
    for (int j = 1; j <= i - 1; ++j) {
      w.letters.push_back({j, 1});
    }
    out.push_back(w);
  }
  return out;
}

std::vector<BraidWord> standard_brunnian_generators(int n) {
  if (n < 2) {
    throw std::invalid_argument("brunnian generators need n >= 2");
  }
  std::vector<BraidWord> out;
  for (int j = 2; j <= n; ++j) {
    BraidWord w(n);
    for (int i = j - 1; i >= 2; --i) {
      w.letters.push_back({i, 1});
    }
    w.letters.push_back({1, 1});
    w.letters.push_back({1, 1});
    for (int i = 2; i <= j - 1; ++i) {
      w.letters.push_back({i, -1});
    }
    out.push_back(w);
  }
  return out;
}

AbelianImage abelianize(IBWord const& w) {
  AbelianImage out;
  for (auto const& t : w.letters) {
    switch (t.gen) {
      case Gen::eps:
        out.eps = true;
        break;
      case Gen::tau:
        out.z_tau += t.sign;
        break;
      default:
        out.z += t.sign;
        break;
    }
  }
  if (out.eps) {
    out.z = 0;
    out.z_tau = 0;
  }
  return out;
}

AbelianImage abelianize(PartialBraid const& a) {
  if (!a.total()) {
    return {true, 0, 0};
  }
  long z = a.core.power * a.n * (a.n - 1) / 2;
  for (auto const& f : a.core.factors) {
    z += static_cast<long>(permutation_braid_word(f).size());
  }
  return {false, z, 0};
}

PartialBraid typeb_embed(IBWord const& w) {
  w.validate(true);
  int m = w.n + 1;
  auto out = PartialBraid::identity(m);
  for (auto const& t : w.letters) {
    switch (t.gen) {
      case Gen::eps:
        out = pb_multiply(out, PartialBraid::eps(m, t.i + 1));
        break;
      case Gen::tau:
        out = pb_multiply(out, PartialBraid::from_braid(
                                   BraidWord(m, {{1, t.sign}, {1, t.sign}})));
        break;
      default:
        out = pb_multiply(out, PartialBraid::from_braid(
                                   BraidWord(m, {{t.i + 1, t.sign}})));
        break;
    }
  }
  return out;
}

SignedPartialPermutation SignedPartialPermutation::identity(int n) {
  return {n, range(1, n)};
}

SignedPartialPermutation SignedPartialPermutation::then(
    SignedPartialPermutation const& other) const {
  SignedPartialPermutation out{n, std::vector<int>(image.size(), 0)};
  for (std::size_t p = 0; p < image.size(); ++p) {
    int y = image[p];
    if (y == 0) {
      continue;
    }
    int z = other.image[static_cast<std::size_t>(std::abs(y) - 1)];
    out.image[p] = y > 0 ? z : -z;
  }
  return out;
}

bool SignedPartialPermutation::total() const {
  return std::none_of(image.begin(), image.end(),
                      [](int y) { return y == 0; });
}

SignedPartialPermutation rho_b(IBWord const& w) {
  w.validate(true);
  auto out = SignedPartialPermutation::identity(w.n);
  for (auto const& t : w.letters) {
    auto g = SignedPartialPermutation::identity(w.n);
    switch (t.gen) {
      case Gen::eps:
        g.image[static_cast<std::size_t>(t.i - 1)] = 0;
        break;
      case Gen::tau:
        g.image[0] = -1;
        break;
      default:
        std::swap(g.image[static_cast<std::size_t>(t.i - 1)],
                  g.image[static_cast<std::size_t>(t.i)]);
        break;
    }
    out = out.then(g);
  }
  return out;
}

std::string to_string(SignedPartialPermutation const& p) {
  std::string s;
  for (int x = 1; x <= p.n; ++x) {
    int y = p.image[static_cast<std::size_t>(x - 1)];
    if (y != 0) {
      s += (s.empty() ? "" : " ") + std::to_string(x) + "->" + std::to_string(y);
    }
  }
  return s.empty() ? "{}" : s;
}

PartialFreeIso ibp_model(IBPWord const& w) {
  auto out = PartialFreeIso::identity(w.n);
  for (auto const& l : w.letters) {
    int bound = l.kind == IBPLetter::Kind::eps ? w.n : w.n - 1;
    if (l.i < 1 || l.i > bound) {
      throw std::invalid_argument("ibp letter index out of range");
    }
    switch (l.kind) {
      case IBPLetter::Kind::sigma:
        out = out.then(phi_sigma(w.n, l.i, l.sign));
        break;
      case IBPLetter::Kind::eps:
        out = out.then(phi_eps(w.n, l.i));
        break;
      case IBPLetter::Kind::xi: {
        auto x = PartialFreeIso::identity(w.n);
        auto u = static_cast<std::size_t>(l.i - 1);
        std::swap(x.target[u], x.target[u + 1]);
        std::swap(x.images[u], x.images[u + 1]);
        out = out.then(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace braids
