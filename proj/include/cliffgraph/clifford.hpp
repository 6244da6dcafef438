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

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cliffgraph/graph.hpp"

namespace cliffgraph {

using Rational = boost::rational<std::int64_t>;

/// Basis monomial e_a of the graph algebra: the increasing-order product of
/// the generators whose bits are set in `mask`.
struct Monomial {
  std::uint64_t mask = 0;

  static Monomial of(std::initializer_list<int> vertices);  // 0-based
  int length() const noexcept;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact Gaussian rational re + im*i.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational re, Rational im = Rational(0)) : re_(re), im_(im) {}
  Coefficient(std::int64_t re) : re_(re) {}  // NOLINT: integer literals promote

  static Coefficient i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.numerator() == 0 && im_.numerator() == 0; }

  Coefficient operator-() const { return {-re_, -im_}; }
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// "p/q" or "p".
std::string to_string(const Rational& r);
/// "(re+im i)", e.g. "(1/2+0 i)", "(0-1 i)".
std::string to_string(const Coefficient& c);

/// Fourth root of unity i^quarter_turns.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase from_quarter_turns(int q) { return Phase(q); }
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int quarter_turns() const noexcept { return q_; }
  Coefficient coefficient() const;
  /// "1", "i", "-1", "-i".
  std::string symbol() const;
  static Phase parse(const std::string& symbol);

  constexpr Phase operator*(Phase o) const { return Phase(q_ + o.q_); }
  constexpr Phase conj() const { return Phase(4 - q_); }
  friend constexpr bool operator==(Phase, Phase) = default;

 private:
  constexpr explicit Phase(int q) : q_(static_cast<std::uint8_t>(((q % 4) + 4) % 4)) {}
  std::uint8_t q_ = 0;
};

struct SignedMonomial {
  Phase phase;
  Monomial monomial;
  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

/// e_a * e_b = (+/-1) e_{a xor b}. The sign counts, for each j in b, the
/// generators i in a with i > j joined to j by an edge (each such
/// transposition anticommutes), plus one -1 per collision e_j e_j.
/// Throws kAmbient when a mask names a vertex outside g.
SignedMonomial monomial_mul(const Graph& g, Monomial a, Monomial b);
SignedMonomial multiply(const Graph& g, const SignedMonomial& a, const SignedMonomial& b);

/// Parity of edges between the two vertex sets; true iff e_a e_b = e_b e_a.
bool commutes(const Graph& g, Monomial a, Monomial b) noexcept;

/// Element of the graph algebra A_G: sparse exact combination of monomials.
class AlgebraElement {
 public:
  using Terms = std::map<std::uint64_t, Coefficient>;

  explicit AlgebraElement(std::shared_ptr<const Graph> graph);

  static AlgebraElement one(std::shared_ptr<const Graph> graph);
  static AlgebraElement term(std::shared_ptr<const Graph> graph, Monomial m, Coefficient c = 1);
  static AlgebraElement generator(std::shared_ptr<const Graph> graph, int vertex);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(Monomial m) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement scaled(const Coefficient& c) const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  void accumulate(std::uint64_t mask, const Coefficient& c);
  void require_same_ambient(const AlgebraElement& o) const;

  std::shared_ptr<const Graph> graph_;
  Terms terms_;
};

/// Terms by ascending mask: "(1/2+0 i) + (0+1/2 i) e_1e_3e_5e_7"; the
/// empty monomial renders as the bare coefficient, zero as "0".
std::string to_string(const AlgebraElement& x);

/// popcount(row_i & a) even for every vertex i.
bool is_central_monomial(const Graph& g, Monomial a);

enum class CenterMode { kExplicit, kBasis };

struct CenterBasis {
  CenterMode mode = CenterMode::kBasis;
  int dimension_log2 = 0;             // dim Z(A_G) = 2^dimension_log2
  std::vector<Monomial> monomials;    // all 2^d central monomials, or a d-element GF(2) basis
};

/// kExplicit requires n <= 32 and nullity <= 24 (kCapacity otherwise).
CenterBasis center_basis(const Graph& g, CenterMode mode);

/// c = (1 + f_a) / 2 with f_a = e_a when e_a^2 = 1 and f_a = i e_a when
/// e_a^2 = -1. Throws kPrecondition if a is not central or is empty.
AlgebraElement central_idempotent(std::shared_ptr<const Graph> g, Monomial a);

/// 1-based generator list "e_1e_3"; the empty monomial renders as "1".
std::string monomial_name(Monomial m);

}  // namespace cliffgraph
