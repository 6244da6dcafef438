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

#include "cliffgraph/clifford.hpp"

#include <bit>
#include <string>

#include "cliffgraph/error.hpp"
#include "cliffgraph/gf2.hpp"

namespace cliffgraph {

Monomial Monomial::of(std::initializer_list<int> vertices) {
  Monomial m;
  for (int v : vertices) m.mask |= std::uint64_t{1} << v;
  return m;
}

int Monomial::length() const noexcept { return std::popcount(mask); }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Coefficient& c) {
  std::string out = "(" + to_string(c.re());
  if (c.im().numerator() < 0) {
    out += "-" + to_string(-c.im());
  } else {
    out += "+" + to_string(c.im());
  }
  return out + " i)";
}

Coefficient Phase::coefficient() const {
  switch (q_) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

std::string Phase::symbol() const {
  static constexpr const char* kSymbols[] = {"1", "i", "-1", "-i"};
  return kSymbols[q_];
}

Phase Phase::parse(const std::string& symbol) {
  for (int q = 0; q < 4; ++q) {
    if (Phase(q).symbol() == symbol) return Phase(q);
  }
  throw Error(ErrorKind::kParse, "coefficient '" + symbol + "' is not one of 1, -1, i, -i");
}

namespace {

void require_fits(const Graph& g, Monomial m) {
  if (m.mask & ~g.vertex_mask()) {
    throw Error(ErrorKind::kAmbient, "monomial " + monomial_name(m) + " names a vertex outside the " +
                                         std::to_string(g.order()) + "-vertex graph");
  }
}

}  // namespace

SignedMonomial monomial_mul(const Graph& g, Monomial a, Monomial b) {
  require_fits(g, a);
  require_fits(g, b);
  int swaps = std::popcount(a.mask & b.mask);
  std::uint64_t rest = b.mask;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint64_t above = j == 63 ? 0 : ~((std::uint64_t{2} << j) - 1);
    swaps += std::popcount(a.mask & g.row(j) & above);
  }
  return {(swaps & 1) ? Phase::minus_one() : Phase::one(), Monomial{a.mask ^ b.mask}};
}

SignedMonomial multiply(const Graph& g, const SignedMonomial& a, const SignedMonomial& b) {
  SignedMonomial p = monomial_mul(g, a.monomial, b.monomial);
  p.phase = p.phase * a.phase * b.phase;
  return p;
}

bool commutes(const Graph& g, Monomial a, Monomial b) noexcept {
  int crossings = 0;
  std::uint64_t rest = b.mask;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    crossings += std::popcount(a.mask & g.row(j));
  }
  return (crossings & 1) == 0;
}

AlgebraElement::AlgebraElement(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {
  if (!graph_) throw Error(ErrorKind::kAmbient, "algebra element without an ambient graph");
}

AlgebraElement AlgebraElement::one(std::shared_ptr<const Graph> graph) {
  return term(std::move(graph), Monomial{}, 1);
}

AlgebraElement AlgebraElement::term(std::shared_ptr<const Graph> graph, Monomial m, Coefficient c) {
  AlgebraElement x(std::move(graph));
  require_fits(x.graph(), m);
  x.accumulate(m.mask, c);
  return x;
}

AlgebraElement AlgebraElement::generator(std::shared_ptr<const Graph> graph, int vertex) {
  if (vertex < 0 || vertex >= graph->order()) {
    throw Error(ErrorKind::kAmbient, "generator e_" + std::to_string(vertex + 1) + " outside the graph");
  }
  return term(std::move(graph), Monomial{std::uint64_t{1} << vertex});
}

Coefficient AlgebraElement::coefficient(Monomial m) const {
  const auto it = terms_.find(m.mask);
  return it == terms_.end() ? Coefficient{} : it->second;
}

void AlgebraElement::accumulate(std::uint64_t mask, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::require_same_ambient(const AlgebraElement& o) const {
  if (graph_ != o.graph_ && !(*graph_ == *o.graph_)) {
    throw Error(ErrorKind::kAmbient, "elements belong to algebras of different graphs");
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_ambient(o);
  for (const auto& [mask, c] : o.terms_) accumulate(mask, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_ambient(o);
  for (const auto& [mask, c] : o.terms_) accumulate(mask, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Coefficient& c) const {
  AlgebraElement out(graph_);
  if (c.is_zero()) return out;
  for (const auto& [mask, v] : terms_) out.terms_.emplace(mask, v * c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_ambient(b);
  AlgebraElement out(a.graph_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const SignedMonomial p = monomial_mul(*a.graph_, Monomial{ma}, Monomial{mb});
      Coefficient c = ca * cb;
      if (p.phase == Phase::minus_one()) c = -c;
      out.accumulate(p.monomial.mask, c);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return *a.graph_ == *b.graph_ && a.terms_ == b.terms_;
}

std::string monomial_name(Monomial m) {
  if (m.mask == 0) return "1";
  std::string out;
  std::uint64_t rest = m.mask;
  while (rest) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    out += "e_" + std::to_string(v + 1);
  }
  return out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (mask != 0) out += " " + monomial_name(Monomial{mask});
  }
  return out;
}

bool is_central_monomial(const Graph& g, Monomial a) {
  require_fits(g, a);
  for (int i = 0; i < g.order(); ++i) {
    if (std::popcount(g.row(i) & a.mask) & 1) return false;
  }
  return true;
}

CenterBasis center_basis(const Graph& g, CenterMode mode) {
  const gf2::Kernel kernel = gf2::nullspace(gf2::adjacency(g));
  CenterBasis out;
  out.mode = mode;
  out.dimension_log2 = kernel.dimension();
  if (mode == CenterMode::kBasis) {
    for (const std::uint64_t v : kernel.basis) out.monomials.push_back(Monomial{v});
    return out;
  }
  if (g.order() > 32) {
    throw Error(ErrorKind::kCapacity, "explicit center listing limited to n <= 32; use basis mode");
  }
  if (kernel.dimension() > 24) {
    throw Error(ErrorKind::kCapacity, "explicit center listing limited to 2^24 monomials; use basis mode");
  }
  for (const std::uint64_t v : gf2::span_of(kernel.basis)) out.monomials.push_back(Monomial{v});
  return out;
}

AlgebraElement central_idempotent(std::shared_ptr<const Graph> g, Monomial a) {
  if (a.mask == 0) {
    throw Error(ErrorKind::kPrecondition, "the empty monomial gives the trivial idempotent 1");
  }
  if (!is_central_monomial(*g, a)) {
    throw Error(ErrorKind::kPrecondition, "monomial " + monomial_name(a) + " is not central");
  }
  const SignedMonomial square = monomial_mul(*g, a, a);
  const Coefficient half{Rational(1, 2)};
  Coefficient f_scale = half;
  if (square.phase == Phase::minus_one()) f_scale = half * Coefficient::i();
  AlgebraElement c = AlgebraElement::one(g).scaled(half);
  c += AlgebraElement::term(g, a, f_scale);
  return c;
}

}  // namespace cliffgraph
