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

#include "cliffgraph/render.hpp"

#include <bit>
#include <charconv>
#include <sstream>

#include "cliffgraph/error.hpp"
#include "cliffgraph/graph6.hpp"

namespace cliffgraph::render {

using nlohmann::json;

namespace {

json vertex_list(std::uint64_t mask) {
  json out = json::array();
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::string vertex_text(std::uint64_t mask) {
  std::string out;
  while (mask) {
    if (!out.empty()) out += ',';
    out += std::to_string(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out.empty() ? "-" : out;
}

json center_dim_json(const StructureReport& r) {
  if (r.m < 64) return std::uint64_t{1} << r.m;
  return r.center_dim();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json witness_to_json(const IsomorphismWitness& w) {
  json images = json::array();
  for (std::size_t i = 0; i < w.images.size(); ++i) {
    images.push_back({{"generator", i + 1},
                      {"coefficient", w.images[i].phase.symbol()},
                      {"mask", vertex_list(w.images[i].monomial.mask)}});
  }
  return {{"source", to_graph6(w.source)}, {"target", to_graph6(w.target)}, {"images", images}};
}

IsomorphismWitness witness_from_json(const json& doc) {
  try {
    IsomorphismWitness w{parse_graph6(doc.at("source").get<std::string>()),
                         parse_graph6(doc.at("target").get<std::string>()),
                         {}};
    const auto& images = doc.at("images");
    if (!images.is_array()) throw Error(ErrorKind::kParse, "witness 'images' must be an array");
    w.images.resize(images.size(), SignedMonomial{});
    std::vector<bool> seen(images.size(), false);
    for (const auto& entry : images) {
      const int gen = entry.at("generator").get<int>();
      if (gen < 1 || gen > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(gen - 1)]) {
        throw Error(ErrorKind::kParse, "witness generator numbers must be 1..n without repeats");
      }
      seen[static_cast<std::size_t>(gen - 1)] = true;
      SignedMonomial x{Phase::parse(entry.at("coefficient").get<std::string>()), Monomial{}};
      for (const auto& v : entry.at("mask")) {
        const int vertex = v.get<int>();
        if (vertex < 1 || vertex > w.source.order()) {
          throw Error(ErrorKind::kParse, "witness mask vertex " + std::to_string(vertex) + " outside the source");
        }
        x.monomial.mask |= std::uint64_t{1} << (vertex - 1);
      }
      w.images[static_cast<std::size_t>(gen - 1)] = x;
    }
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("witness document: ") + e.what());
  }
}

IsomorphismWitness witness_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("witness JSON: ") + e.what());
  }
  return witness_from_json(doc);
}

std::string analysis(const Graph& g, Format f) {
  const StructureReport r = classify(g);
  switch (f) {
    case Format::kJson:
      return dump({{"graph6", to_graph6(g)},
                   {"n", r.n},
                   {"rank", r.rank},
                   {"k", r.k},
                   {"m", r.m},
                   {"center_dim", center_dim_json(r)},
                   {"summary", r.summary()}});
    case Format::kTsv:
      return "graph6\tn\trank\tk\tm\tcenter_dim\tsummary\n" + to_graph6(g) + "\t" + std::to_string(r.n) + "\t" +
             std::to_string(r.rank) + "\t" + std::to_string(r.k) + "\t" + std::to_string(r.m) + "\t" +
             r.center_dim() + "\t" + r.summary() + "\n";
    case Format::kText:
      break;
  }
  std::ostringstream os;
  os << "graph6:     " << to_graph6(g) << "\n"
     << "vertices:   " << r.n << "\n"
     << "gf2 rank:   " << r.rank << "\n"
     << "k, m:       " << r.k << ", " << r.m << "\n"
     << "center dim: " << r.center_dim() << "\n"
     << "structure:  " << r.summary() << "\n";
  return os.str();
}

std::string center(const Graph& g, CenterMode mode, Format f) {
  const CenterBasis c = center_basis(g, mode);
  const char* mode_name = mode == CenterMode::kExplicit ? "explicit" : "basis";
  if (f == Format::kJson) {
    json monomials = json::array();
    for (const Monomial m : c.monomials) monomials.push_back(vertex_list(m.mask));
    return dump({{"graph6", to_graph6(g)},
                 {"mode", mode_name},
                 {"dimension_log2", c.dimension_log2},
                 {"monomials", monomials}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "index\tmonomial\tvertices\n";
    for (std::size_t i = 0; i < c.monomials.size(); ++i) {
      os << i + 1 << "\t" << monomial_name(c.monomials[i]) << "\t" << vertex_text(c.monomials[i].mask) << "\n";
    }
    return os.str();
  }
  os << "center of A_G has dimension 2^" << c.dimension_log2 << " (" << mode_name << " listing, "
     << c.monomials.size() << " monomials)\n";
  for (const Monomial m : c.monomials) os << "  " << monomial_name(m) << "\n";
  return os.str();
}

std::string idempotent(const Graph& g, Monomial a, Format f) {
  auto graph = std::make_shared<const Graph>(g);
  const AlgebraElement c = central_idempotent(graph, a);
  const bool squares = c * c == c;
  bool central = true;
  for (int v = 0; v < g.order(); ++v) {
    const AlgebraElement e = AlgebraElement::generator(graph, v);
    central = central && (c * e == e * c);
  }
  const std::string square = monomial_mul(g, a, a).phase.symbol();
  if (f == Format::kJson) {
    json terms = json::array();
    for (const auto& [mask, coef] : c.terms()) {
      terms.push_back({{"mask", vertex_list(mask)}, {"re", to_string(coef.re())}, {"im", to_string(coef.im())}});
    }
    return dump({{"graph6", to_graph6(g)},
                 {"monomial", vertex_list(a.mask)},
                 {"monomial_square", square},
                 {"element", {{"terms", terms}, {"text", to_string(c)}}},
                 {"checks", {{"idempotent", squares}, {"central", central}}}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "monomial\tre\tim\n";
    for (const auto& [mask, coef] : c.terms()) {
      os << monomial_name(Monomial{mask}) << "\t" << to_string(coef.re()) << "\t" << to_string(coef.im()) << "\n";
    }
    return os.str();
  }
  os << "monomial:   " << monomial_name(a) << " (squares to " << square << ")\n"
     << "idempotent: " << to_string(c) << "\n"
     << "c*c == c:   " << yes_no(squares) << "\n"
     << "central:    " << yes_no(central) << "\n";
  return os.str();
}

std::string reduction(const Reduction& r, Format f) {
  const StructureReport s = classify(r.target);
  const ValidationResult v = validate_witness(r.witness);
  if (f == Format::kJson) {
    return dump({{"source", to_graph6(r.witness.source)},
                 {"target", to_graph6(r.target)},
                 {"k", s.k},
                 {"m", s.m},
                 {"valid", v.ok},
                 {"witness", witness_to_json(r.witness)}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "generator\tcoefficient\tvertices\n";
    for (std::size_t i = 0; i < r.witness.images.size(); ++i) {
      os << i + 1 << "\t" << r.witness.images[i].phase.symbol() << "\t"
         << vertex_text(r.witness.images[i].monomial.mask) << "\n";
    }
    return os.str();
  }
  os << "target: G(" << s.k << "," << s.m << ") " << to_graph6(r.target) << "\n";
  for (std::size_t i = 0; i < r.witness.images.size(); ++i) {
    const auto& x = r.witness.images[i];
    os << "  e'_" << i + 1 << " = " << x.phase.symbol() << " " << monomial_name(x.monomial) << "\n";
  }
  os << "witness: " << (v.ok ? "valid" : "INVALID: " + v.diagnostic) << "\n";
  return os.str();
}

std::string validation(const IsomorphismWitness& w, const ValidationResult& v, Format f) {
  if (f == Format::kJson) {
    return dump({{"source", to_graph6(w.source)},
                 {"target", to_graph6(w.target)},
                 {"valid", v.ok},
                 {"diagnostic", v.diagnostic}});
  }
  if (f == Format::kTsv) return "valid\tdiagnostic\n" + std::string(v.ok ? "true" : "false") + "\t" + v.diagnostic + "\n";
  return v.ok ? "valid\n" : "invalid: " + v.diagnostic + "\n";
}

std::string census(const std::vector<census::CensusTable>& tables, Format f) {
  if (f == Format::kJson) {
    json out = json::array();
    for (const auto& t : tables) {
      json rows = json::array();
      for (const auto& [p, count] : t.rows) {
        rows.push_back({{"rank", p.rank},
                        {"det_parity", p.det_odd ? "odd" : "even"},
                        {"det_nonzero", p.det_nonzero},
                        {"mating", p.mating},
                        {"isolated", p.isolated},
                        {"count", count}});
      }
      json cliff = json::array();
      for (const auto& [dim, count] : census::cliff_counts(t)) cliff.push_back({{"center_dim", dim}, {"count", count}});
      out.push_back({{"n", t.n}, {"total", t.total()}, {"rows", rows}, {"cliff_counts", cliff}});
    }
    return dump({{"tables", out}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "n\trank\tdet_parity\tdet_nonzero\tmating\tisolated\tcount\n";
    for (const auto& t : tables) {
      for (const auto& [p, count] : t.rows) {
        os << t.n << "\t" << p.rank << "\t" << (p.det_odd ? "odd" : "even") << "\t" << (p.det_nonzero ? 1 : 0) << "\t"
           << (p.mating ? 1 : 0) << "\t" << p.isolated << "\t" << count << "\n";
      }
    }
    return os.str();
  }
  for (const auto& t : tables) {
    os << "n = " << t.n << ": " << t.total() << " isomorphism classes\n  Cliff:";
    for (const auto& [dim, count] : census::cliff_counts(t)) os << " Cliff_" << dim << "(" << t.n << ") = " << count << ";";
    os << "\n  rank  det  det!=0  mating  isolated  count\n";
    for (const auto& [p, count] : t.rows) {
      os << "  " << p.rank << "     " << (p.det_odd ? "odd " : "even") << " " << (p.det_nonzero ? "yes   " : "no    ")
         << "  " << (p.mating ? "yes   " : "no    ") << "  " << p.isolated << "         " << count << "\n";
    }
  }
  return os.str();
}

namespace {

std::string provenance(census::SequenceId id, const census::SequenceTerm& t) {
  if (t.cited) return t.matches() ? "computed; matches cited value" : "computed; MISMATCH with cited value";
  if (id == census::SequenceId::kA141040) return "computed; uncertified stretch term (no cited value)";
  return "computed; no cited value";
}

}  // namespace

std::string sequences(const std::vector<census::SequenceId>& ids, const std::vector<census::CensusTable>& tables,
                      Format f, bool* all_match) {
  bool ok = true;
  const auto identities = census::check_identities(tables);
  for (const auto& c : identities) ok = ok && c.holds;
  json doc = json::array();
  std::ostringstream text;
  std::ostringstream tsv;
  tsv << "id\tindex\tvertices\tvalue\tcited\tprovenance\n";
  for (const auto id : ids) {
    const auto terms = census::sequence(id, tables);
    json jterms = json::array();
    text << to_string(id) << " (" << describe(id) << "):";
    std::string sep = " ";
    for (const auto& t : terms) {
      ok = ok && t.matches();
      jterms.push_back({{"index", t.index},
                        {"vertices", t.vertices},
                        {"value", t.value},
                        {"cited", t.cited ? json(*t.cited) : json(nullptr)},
                        {"provenance", provenance(id, t)}});
      tsv << to_string(id) << "\t" << t.index << "\t" << t.vertices << "\t" << t.value << "\t"
          << (t.cited ? std::to_string(*t.cited) : "-") << "\t" << provenance(id, t) << "\n";
      text << sep << t.value << (t.cited ? (t.matches() ? "" : "(!)") : "*");
      sep = ", ";
    }
    text << "\n";
    doc.push_back({{"id", to_string(id)}, {"description", describe(id)}, {"terms", jterms}});
  }
  if (all_match) *all_match = ok;
  if (f == Format::kJson) {
    json jid = json::array();
    for (const auto& c : identities) jid.push_back({{"statement", c.statement}, {"holds", c.holds}});
    return dump({{"max_vertices", tables.size()}, {"sequences", doc}, {"identities", jid}, {"all_match", ok}});
  }
  if (f == Format::kTsv) return tsv.str();
  std::size_t holding = 0;
  for (const auto& c : identities) holding += c.holds ? 1 : 0;
  text << "difference identities: " << holding << "/" << identities.size() << " hold\n";
  text << "(* = no cited value, (!) = disagrees with cited value)\n";
  return text.str();
}

std::string dynkin(const std::vector<DynkinRow>& rows, Format f) {
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.matches();
  if (f == Format::kJson) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"diagram", r.name}, {"center_dim", r.center_dim}, {"expected", r.expected}, {"matches", r.matches()}});
    }
    return dump({{"rows", out}, {"all_match", ok}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "diagram\tcenter_dim\texpected\tmatches\n";
    for (const auto& r : rows) os << r.name << "\t" << r.center_dim << "\t" << r.expected << "\t" << (r.matches() ? 1 : 0) << "\n";
    return os.str();
  }
  os << "diagram  center dim  expected\n";
  for (const auto& r : rows) {
    os << r.name << std::string(9 - std::min<std::size_t>(8, r.name.size()), ' ') << r.center_dim << "           "
       << r.expected << (r.matches() ? "" : "  MISMATCH") << "\n";
  }
  os << (ok ? "all rows follow A_{2k}:1 A_{2k-1}:2 D_{2k}:4 D_{2k-1}:2 E6:1 E7:2 E8:1\n" : "table MISMATCH\n");
  return os.str();
}

std::string hierarchy(const census::HierarchyReport& r, Format f) {
  json even = json::array();
  for (const auto& g : r.invertible_even) even.push_back(to_graph6(g));
  json mating = json::array();
  for (const auto& g : r.mating_not_odd) mating.push_back(to_graph6(g));
  if (f == Format::kJson) {
    return dump({{"n", r.n},
                 {"classes", r.classes},
                 {"odd_determinant", r.odd_determinant},
                 {"invertible", r.invertible},
                 {"mating", r.mating},
                 {"odd_subset_invertible", r.odd_subset_invertible},
                 {"invertible_subset_mating", r.invertible_subset_mating},
                 {"invertible_even", even},
                 {"mating_not_odd", mating}});
  }
  std::ostringstream os;
  if (f == Format::kTsv) {
    os << "set\tgraph6\n";
    for (const auto& g : r.invertible_even) os << "invertible_even\t" << to_graph6(g) << "\n";
    for (const auto& g : r.mating_not_odd) os << "mating_not_odd\t" << to_graph6(g) << "\n";
    return os.str();
  }
  os << "n = " << r.n << ": " << r.classes << " classes, " << r.odd_determinant << " odd-determinant, " << r.invertible
     << " invertible, " << r.mating << " mating\n"
     << "odd-determinant within invertible: " << yes_no(r.odd_subset_invertible) << "\n"
     << "invertible within mating:          " << yes_no(r.invertible_subset_mating) << "\n"
     << "invertible with even determinant (" << r.invertible_even.size() << "):";
  for (const auto& g : r.invertible_even) os << " " << to_graph6(g);
  os << "\nmating but not odd-determinant (" << r.mating_not_odd.size() << "):";
  for (const auto& g : r.mating_not_odd) os << " " << to_graph6(g);
  os << "\n";
  return os.str();
}

Monomial parse_monomial(const std::string& text, int n) {
  Monomial m;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) throw ParseError(pos, "expected a vertex number");
    if (v < 1 || v > n) throw ParseError(pos, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    m.mask |= std::uint64_t{1} << (v - 1);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError(pos, "expected ','");
      ++pos;
    }
  }
  return m;
}

}  // namespace cliffgraph::render
