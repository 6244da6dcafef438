// Copyright 2026 The cliffgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffgraph/structure.hpp"

#include <algorithm>
#include <string>

#include "cliffgraph/error.hpp"
#include "cliffgraph/gf2.hpp"

namespace cliffgraph {

namespace {

std::string power_of_two(int e) {
  unsigned __int128 v = static_cast<unsigned __int128>(1) << e;
  std::string digits;
  do {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v != 0);
  std::reverse(digits.begin(), digits.end());
  return digits;
}

SignedMonomial generator(int v) { return {Phase::one(), Monomial{std::uint64_t{1} << v}}; }

std::string pair_name(int i, int j) { return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}"; }

}  // namespace

std::string StructureReport::center_dim() const { return power_of_two(m); }

std::string StructureReport::summary() const {
  return "⊕_" + power_of_two(m) + " Mat(" + power_of_two(k) + ")";
}

StructureReport classify(const Graph& g) {
  StructureReport r;
  r.n = g.order();
  r.rank = gf2::rank(gf2::adjacency(g));
  r.k = r.rank / 2;
  r.m = r.n - r.rank;
  return r;
}

bool same_class(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::kParameter, "Clifford classes compare graphs with the same number of vertices (" +
                                           std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
  return classify(a).rank == classify(b).rank;
}

ValidationResult validate_witness(const IsomorphismWitness& w) {
  const Graph& src = w.source;
  const int n = w.target.order();
  auto fail = [](std::string why) { return ValidationResult{false, std::move(why)}; };
  if (src.order() != n) {
    return fail("source has " + std::to_string(src.order()) + " vertices, target has " + std::to_string(n));
  }
  if (static_cast<int>(w.images.size()) != n) {
    return fail("witness lists " + std::to_string(w.images.size()) + " images for " + std::to_string(n) +
                " target generators");
  }
  for (int i = 0; i < n; ++i) {
    const SignedMonomial& x = w.images[static_cast<std::size_t>(i)];
    if (x.monomial.mask & ~src.vertex_mask()) {
      return fail("image of e_" + std::to_string(i + 1) + " uses a generator outside the source");
    }
    if (multiply(src, x, x) != SignedMonomial{Phase::minus_one(), Monomial{}}) {
      return fail("image of e_" + std::to_string(i + 1) + " does not square to -1");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool anti = !commutes(src, w.images[static_cast<std::size_t>(i)].monomial,
                                  w.images[static_cast<std::size_t>(j)].monomial);
      if (anti != w.target.has_edge(i, j)) {
        return fail("images of " + pair_name(i, j) + (anti ? " anticommute but the target has no such edge"
                                                           : " commute but the target has this edge"));
      }
    }
  }
  std::vector<std::uint64_t> masks;
  for (const auto& x : w.images) masks.push_back(x.monomial.mask);
  if (gf2::rank(gf2::BitMatrix::from_rows(masks)) != n) {
    return fail("image monomials are linearly dependent over GF(2); the map is not onto");
  }
  return {true, {}};
}

Phase attachment_phase(AttachmentCase c) {
  return c == AttachmentCase::kNeither ? Phase::one() : Phase::i();
}

Reduction reduce_to_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<SignedMonomial> current;
  for (int v = 0; v < n; ++v) current.push_back(generator(v));
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = v;

  auto anticommute = [&](int a, int b) {
    return !commutes(g, current[static_cast<std::size_t>(a)].monomial, current[static_cast<std::size_t>(b)].monomial);
  };

  std::vector<SignedMonomial> images;
  while (true) {
    int u = -1;
    int v = -1;
    for (std::size_t x = 0; x < active.size() && u < 0; ++x) {
      for (std::size_t y = x + 1; y < active.size(); ++y) {
        if (anticommute(active[x], active[y])) {
          u = active[x];
          v = active[y];
          break;
        }
      }
    }
    if (u < 0) break;

    const SignedMonomial first = current[static_cast<std::size_t>(u)];
    const SignedMonomial second = current[static_cast<std::size_t>(v)];
    images.push_back(first);
    images.push_back(second);
    std::erase_if(active, [&](int x) { return x == u || x == v; });

    for (const int i : active) {
      const bool to_first = anticommute(i, u);
      const bool to_second = anticommute(i, v);
      SignedMonomial& e = current[static_cast<std::size_t>(i)];
      if (to_first && to_second) {
        e = multiply(g, multiply(g, e, second), first);
        e.phase = e.phase * attachment_phase(AttachmentCase::kBoth);
      } else if (to_first) {
        e = multiply(g, e, second);
        e.phase = e.phase * attachment_phase(AttachmentCase::kFirstOnly);
      } else if (to_second) {
        e = multiply(g, e, first);
        e.phase = e.phase * attachment_phase(AttachmentCase::kSecondOnly);
      }
    }
  }
  const int k = static_cast<int>(images.size()) / 2;
  for (const int i : active) images.push_back(current[static_cast<std::size_t>(i)]);

  Graph target = gkm_graph(k, n - 2 * k);
  return {target, IsomorphismWitness{g, target, std::move(images)}};
}

SignedMonomial pull_back(const IsomorphismWitness& w, const SignedMonomial& x) {
  if (x.monomial.mask & ~w.target.vertex_mask()) {
    throw Error(ErrorKind::kAmbient, "monomial outside the witness target algebra");
  }
  SignedMonomial out{x.phase, Monomial{}};
  std::uint64_t rest = x.monomial.mask;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    out = multiply(w.source, out, w.images[static_cast<std::size_t>(j)]);
  }
  return out;
}

IsomorphismWitness named_isomorphism(NamedIsomorphism kind, int n, Direction direction) {
  if (n < 2) throw Error(ErrorKind::kParameter, "named isomorphisms require n >= 2");
  const bool forward = direction == Direction::kForward;
  std::vector<SignedMonomial> images;

  if (kind == NamedIsomorphism::kPathComplete) {
    const Graph complete = complete_graph(n);
    const Graph path = path_graph(n);
    if (forward) {
      // e'_1 = e_1, e'_i = e_{i-1} e_i.
      images.push_back(generator(0));
      for (int i = 1; i < n; ++i) images.push_back(multiply(complete, generator(i - 1), generator(i)));
      return {complete, path, std::move(images)};
    }
    // e_i = e'_i e'_{i-1} ... e'_1.
    for (int i = 0; i < n; ++i) {
      SignedMonomial x = generator(i);
      for (int j = i - 1; j >= 0; --j) x = multiply(path, x, generator(j));
      images.push_back(x);
    }
    return {path, complete, std::move(images)};
  }

  const Graph star = star_graph(n);
  const Graph one_edge = gkm_graph(1, n - 2);
  const Graph& source = forward ? star : one_edge;
  // Forward: e'_1 = e_1, e'_2 = e_1 e_2, e'_i = i e_2 e_i.
  // Inverse: e_1 = e'_1, e_2 = e'_1 e'_2, e_i = i e'_i e'_1 e'_2.
  images.push_back(generator(0));
  images.push_back(multiply(source, generator(0), generator(1)));
  for (int i = 2; i < n; ++i) {
    SignedMonomial x = forward ? multiply(source, generator(1), generator(i))
                               : multiply(source, multiply(source, generator(i), generator(0)), generator(1));
    x.phase = x.phase * Phase::i();
    images.push_back(x);
  }
  if (forward) return {star, one_edge, std::move(images)};
  return {one_edge, star, std::move(images)};
}

std::optional<NamedIsomorphism> parse_named_isomorphism(const std::string& name) {
  if (name == "path_complete") return NamedIsomorphism::kPathComplete;
  if (name == "star_oneedge") return NamedIsomorphism::kStarOneEdge;
  return std::nullopt;
}

}  // namespace cliffgraph
