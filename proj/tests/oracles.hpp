#pragma once

// Random generators and brute-force oracles shared by the unit tests and
// the acceptance suite. Nothing here calls the normal-form code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "braids/braid_core.hpp"

namespace oracle {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline braids::BraidWord random_braid(Rng& rng, int n, int max_len) {
  braids::BraidWord w;
  w.n = n;
  if (n < 2) {
    return w;
  }
  int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    w.letters.push_back({uniform(rng, 1, n - 1), uniform(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

// Applies a random braid relation (or inserts a cancelling pair) so the
// result is the same element as w.
inline braids::BraidWord random_equal_move(Rng& rng,
                                           braids::BraidWord const& w) {
  using braids::Letter;
  auto out = w;
  auto& ls = out.letters;
  int n = w.n;
  if (n < 2) {
    return out;
  }
  for (int attempt = 0; attempt < 32; ++attempt) {
    int kind = uniform(rng, 0, 3);
    if (kind == 0) {
      auto pos = static_cast<std::size_t>(
          uniform(rng, 0, static_cast<int>(ls.size())));
      int i = uniform(rng, 1, n - 1);
      int s = uniform(rng, 0, 1) ? 1 : -1;
      ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(pos),
                {Letter{i, s}, Letter{i, -s}});
      return out;
    }
    if (ls.size() < 2) {
      continue;
    }
    auto k = static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(ls.size()) - 2));
    if (kind == 1 && std::abs(ls[k].index - ls[k + 1].index) > 1) {
      std::swap(ls[k], ls[k + 1]);
      return out;
    }
    if (kind == 2 && ls[k].index == ls[k + 1].index
        && ls[k].sign == -ls[k + 1].sign) {
      ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(k),
               ls.begin() + static_cast<std::ptrdiff_t>(k + 2));
      return out;
    }
    if (kind == 3 && k + 2 < ls.size() && ls[k] == ls[k + 2]
        && std::abs(ls[k].index - ls[k + 1].index) == 1
        && ls[k].sign == ls[k + 1].sign) {
      auto a = ls[k];
      auto b = ls[k + 1];
      ls[k] = b;
      ls[k + 1] = a;
      ls[k + 2] = b;
      return out;
    }
  }
  return out;
}

// Free reduction by cancelling randomly chosen adjacent pairs until none
// remain; confluence says the result never depends on the choices.
inline std::vector<int> reduce_random_order(std::vector<int> w, Rng& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == -w[k + 1]) {
        spots.push_back(k);
      }
    }
    if (spots.empty()) {
      return w;
    }
    auto k = spots[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(spots.size()) - 1))];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(k),
            w.begin() + static_cast<std::ptrdiff_t>(k + 2));
  }
}

// Free-group action oracle for Artin faithfulness checks, written
// independently of act_free: letters are applied one by one to explicit
// image words, reducing with a plain stack.
inline std::vector<std::vector<int>> artin_action(braids::BraidWord const& w) {
  int n = w.n;
  std::vector<std::vector<int>> img(static_cast<std::size_t>(n));
  for (int g = 1; g <= n; ++g) {
    img[static_cast<std::size_t>(g - 1)] = {g};
  }
  auto reduce = [](std::vector<int> const& v) {
    std::vector<int> st;
    for (int x : v) {
      if (!st.empty() && st.back() == -x) {
        st.pop_back();
      } else {
        st.push_back(x);
      }
    }
    return st;
  };
  for (auto const& l : w.letters) {
    int i = l.index;
    auto image_of = [&](int g) -> std::vector<int> {
      int a = std::abs(g);
      std::vector<int> r;
      if (l.sign > 0) {
        if (a == i) {
          r = {i + 1};
        } else if (a == i + 1) {
          r = {-(i + 1), i, i + 1};
        } else {
          r = {a};
        }
      } else {
        if (a == i) {
          r = {i, i + 1, -i};
        } else if (a == i + 1) {
          r = {i};
        } else {
          r = {a};
        }
      }
      if (g < 0) {
        std::reverse(r.begin(), r.end());
        for (int& x : r) {
          x = -x;
        }
      }
      return r;
    };
    for (auto& word : img) {
      std::vector<int> next;
      for (int g : word) {
        auto r = image_of(g);
        next.insert(next.end(), r.begin(), r.end());
      }
      word = reduce(next);
    }
  }
  return img;
}

}  // namespace oracle
