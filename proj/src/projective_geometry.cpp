#include "afer/projective_geometry.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "afer/gf.hpp"

namespace afer {

namespace {

const GF& field(Int q) {
  static std::map<Int, GF> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, GF((int)q)).first;
  return it->second;
}

}  // namespace

ProjPoint normalize_point(Int q, std::vector<uint8_t> coords) {
  const GF& f = field(q);
  size_t lead = 0;
  while (lead < coords.size() && coords[lead] == 0) ++lead;
  if (lead == coords.size()) throw std::invalid_argument("projective point must be nonzero");
  uint8_t inv = f.inv(coords[lead]);
  for (size_t i = lead; i < coords.size(); ++i) coords[i] = f.mul(coords[i], inv);
  return ProjPoint{std::move(coords)};
}

Int PointMultiset::cardinality() const {
  Int total = 0;
  for (const auto& [p, m] : mult) total += m;
  return total;
}

Int PointMultiset::max_multiplicity() const {
  Int best = 0;
  for (const auto& [p, m] : mult) best = std::max(best, m);
  return best;
}

std::vector<ProjPoint> enumerate_points(Int k, Int q) {
  if (k < 1) throw std::invalid_argument("enumerate_points: k >= 1 required");
  if (!GF::supported((int)q)) throw std::invalid_argument("unsupported field size");
  std::vector<ProjPoint> out;
  std::vector<uint8_t> v((size_t)k, 0);
  // lexicographic sweep over all vectors whose first nonzero entry is 1
  Int total = ipow(q, k);
  for (Int idx = 1; idx < total; ++idx) {
    Int rem = idx;
    for (Int i = k - 1; i >= 0; --i) { v[(size_t)i] = (uint8_t)(rem % q); rem /= q; }
    size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    out.push_back(ProjPoint{v});
  }
  if ((Int)out.size() != projective_point_count(k, q))
    throw std::logic_error("point count mismatch");
  return out;
}

PointMultiset subspace_points(const std::vector<Int>& a, Int k, Int q) {
  if (a.empty()) throw std::invalid_argument("subspace_points: empty support");
  for (Int c : a)
    if (c < 1 || c > k) throw std::invalid_argument("subspace_points: coordinate out of range");
  PointMultiset m{k, q, {}};
  Int t = (Int)a.size();
  for (const auto& p : enumerate_points(t, q)) {
    std::vector<uint8_t> v((size_t)k, 0);
    for (Int i = 0; i < t; ++i) v[(size_t)(a[(size_t)i] - 1)] = p.coords[(size_t)i];
    m.mult[normalize_point(q, std::move(v))] = 1;
  }
  return m;
}

PointMultiset subspace_points_range(Int a, Int b, Int k, Int q) {
  if (a > b) throw std::invalid_argument("subspace_points_range: empty range");
  std::vector<Int> coords;
  for (Int c = a; c <= b; ++c) coords.push_back(c);
  return subspace_points(coords, k, q);
}

PointMultiset identity_points(Int t, Int k, Int q) {
  if (t < 1 || t > k) throw std::invalid_argument("identity_points: need 1 <= t <= k");
  PointMultiset m{k, q, {}};
  for (Int i = 0; i < t; ++i) {
    std::vector<uint8_t> v((size_t)k, 0);
    v[(size_t)i] = 1;
    m.mult[ProjPoint{std::move(v)}] = 1;
  }
  return m;
}

PointMultiset t_frame_points(Int t, Int k, Int q) {
  PointMultiset m = identity_points(t, k, q);
  std::vector<uint8_t> ones((size_t)k, 0);
  for (Int i = 0; i < t; ++i) ones[(size_t)i] = 1;
  m.mult[normalize_point(q, std::move(ones))] += 1;
  return m;
}

PointMultiset t4_prime_points(Int k, Int q) {
  if (k < 4) throw std::invalid_argument("t4_prime_points: k >= 4 required");
  PointMultiset m = identity_points(4, k, q);
  std::vector<uint8_t> p1((size_t)k, 0), p2((size_t)k, 0);
  p1[0] = 1; p1[2] = 1; p1[3] = 1;  // (1,0,1,1)
  p2[1] = 1; p2[2] = 1; p2[3] = 1;  // (0,1,1,1)
  m.mult[normalize_point(q, std::move(p1))] += 1;
  m.mult[normalize_point(q, std::move(p2))] += 1;
  return m;
}

PointMultiset scale(Int s, const PointMultiset& m) {
  if (s < 0) throw std::invalid_argument("scale: negative multiplier");
  PointMultiset out{m.k, m.q, {}};
  if (s == 0) return out;
  for (const auto& [p, c] : m.mult) out.mult[p] = s * c;
  return out;
}

PointMultiset add(const PointMultiset& m1, const PointMultiset& m2) {
  if (m1.k != m2.k || m1.q != m2.q)
    throw std::invalid_argument("add: ambient parameters differ");
  PointMultiset out = m1;
  for (const auto& [p, c] : m2.mult) out.mult[p] += c;
  return out;
}

PointMultiset subtract(const PointMultiset& m1, const PointMultiset& m2) {
  if (m1.k != m2.k || m1.q != m2.q)
    throw std::invalid_argument("subtract: ambient parameters differ");
  PointMultiset out = m1;
  for (const auto& [p, c] : m2.mult) {
    Int have = out.mult.count(p) ? out.mult[p] : 0;
    if (have < c) {
      std::ostringstream msg;
      msg << "subtract: multiplicity underflow at point (";
      for (size_t i = 0; i < p.coords.size(); ++i)
        msg << (i ? "," : "") << (int)p.coords[i];
      msg << ")";
      throw std::invalid_argument(msg.str());
    }
    out.mult[p] = have - c;
    if (out.mult[p] == 0) out.mult.erase(p);
  }
  return out;
}

GenMatrix to_generator_matrix(const PointMultiset& m) {
  if (m.cardinality() < 1) throw std::invalid_argument("to_generator_matrix: empty multiset");
  std::vector<std::vector<uint8_t>> rows((size_t)m.k);
  for (const auto& [p, c] : m.mult)
    for (Int rep = 0; rep < c; ++rep)
      for (Int i = 0; i < m.k; ++i) rows[(size_t)i].push_back(p.coords[(size_t)i]);
  return GenMatrix(m.q, m.k, m.cardinality(), std::move(rows));
}

PointMultiset from_generator_matrix(const GenMatrix& g) {
  PointMultiset m{g.k(), g.q(), {}};
  for (Int j = 0; j < g.n(); ++j) {
    std::vector<uint8_t> col((size_t)g.k());
    bool zero = true;
    for (Int i = 0; i < g.k(); ++i) {
      col[(size_t)i] = g.rows()[(size_t)i][(size_t)j];
      if (col[(size_t)i]) zero = false;
    }
    if (zero) continue;  // zero columns carry no projective point
    m.mult[normalize_point(g.q(), std::move(col))] += 1;
  }
  return m;
}

HyperplaneProfile hyperplane_profile(const PointMultiset& m) {
  if (m.k < 2) throw std::invalid_argument("hyperplane_profile: k >= 2 required");
  const GF& f = field(m.q);
  HyperplaneProfile prof;
  bool first = true;
  for (const auto& h : enumerate_points(m.k, m.q)) {
    Int count = 0;
    for (const auto& [p, c] : m.mult) {
      uint8_t dot = 0;
      for (Int i = 0; i < m.k; ++i)
        dot = f.add(dot, f.mul(h.coords[(size_t)i], p.coords[(size_t)i]));
      if (dot == 0) count += c;
    }
    if (first) {
      prof.min_count = prof.max_count = count;
      prof.achieving_min = prof.achieving_max = 1;
      first = false;
      continue;
    }
    if (count < prof.min_count) { prof.min_count = count; prof.achieving_min = 1; }
    else if (count == prof.min_count) ++prof.achieving_min;
    if (count > prof.max_count) { prof.max_count = count; prof.achieving_max = 1; }
    else if (count == prof.max_count) ++prof.achieving_max;
  }
  return prof;
}

PointMultiset complement_arc(const PointMultiset& m, Int s) {
  if (s < m.max_multiplicity())
    throw std::invalid_argument("complement_arc: level below the maximum multiplicity");
  PointMultiset out{m.k, m.q, {}};
  for (const auto& p : enumerate_points(m.k, m.q)) {
    auto it = m.mult.find(p);
    Int have = it == m.mult.end() ? 0 : it->second;
    if (s - have > 0) out.mult[p] = s - have;
  }
  return out;
}

Int multiset_rank(const PointMultiset& m) {
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& [p, c] : m.mult) rows.push_back(p.coords);
  if (rows.empty()) return 0;
  return matrix_rank(m.q, std::move(rows));
}

RankScaling rank_scaling_check(const PointMultiset& m) {
  Int kp = multiset_rank(m);
  if (kp >= m.k) throw std::invalid_argument("rank_scaling_check: full-rank multiset");
  if (kp < 1) throw std::invalid_argument("rank_scaling_check: empty multiset");

  // basis of the span in reduced row-echelon form; each point's
  // coordinates in that basis are its entries at the pivot columns
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& [p, c] : m.mult) rows.push_back(p.coords);
  auto basis = row_reduce(m.q, rows);
  std::vector<size_t> pivots;
  for (const auto& b : basis) {
    size_t j = 0;
    while (b[j] == 0) ++j;
    pivots.push_back(j);
  }

  PointMultiset reduced{kp, m.q, {}};
  const GF& f = field(m.q);
  for (const auto& [p, c] : m.mult) {
    std::vector<uint8_t> coeff((size_t)kp);
    for (Int i = 0; i < kp; ++i) coeff[(size_t)i] = p.coords[pivots[(size_t)i]];
    // confirm the point really lies in the span
    std::vector<uint8_t> recon(p.coords.size(), 0);
    for (Int i = 0; i < kp; ++i)
      for (size_t j = 0; j < recon.size(); ++j)
        recon[j] = f.add(recon[j], f.mul(coeff[(size_t)i], basis[(size_t)i][j]));
    if (recon != p.coords) throw std::logic_error("rank_scaling_check: point outside span");
    reduced.mult[normalize_point(m.q, std::move(coeff))] += c;
  }

  RankScaling rs;
  rs.k_prime = kp;
  rs.e_full = hyperplane_profile(m).minihyper_e();
  rs.e_reduced = kp >= 2 ? hyperplane_profile(reduced).minihyper_e() : 1;
  if (rs.e_full != ipow(m.q, m.k - kp) * rs.e_reduced)
    throw std::logic_error("rank_scaling_check: scaling factor mismatch");
  return rs;
}

PointMultiset ss_minihyper(const std::vector<std::vector<Int>>& supports, Int k, Int q) {
  if (supports.empty()) throw std::invalid_argument("ss_minihyper: no subspaces");
  for (size_t i = 1; i < supports.size(); ++i)
    if (supports[i - 1].size() < supports[i].size())
      throw std::invalid_argument("ss_minihyper: supports must be ordered by size");
  PointMultiset m{k, q, {}};
  for (const auto& a : supports) m = add(m, subspace_points(a, k, q));
  return m;
}

PointMultiset belov_minihyper(const std::vector<std::vector<Int>>& supports,
                              BelovVariant variant, Int k, Int q,
                              std::optional<ProjPoint> extra) {
  if (supports.empty()) throw std::invalid_argument("belov_minihyper: no subspaces");
  for (size_t i = 1; i < supports.size(); ++i)
    if (supports[i - 1].size() < supports[i].size())
      throw std::invalid_argument("belov_minihyper: supports must be ordered by size");
  Int t = (Int)supports.back().size();
  if (t < 4) throw std::invalid_argument("belov_minihyper: smallest subspace must have size >= 4");

  PointMultiset m{k, q, {}};
  for (size_t i = 0; i + 1 < supports.size(); ++i)
    m = add(m, subspace_points(supports[i], k, q));

  // frame points of the last subspace: its unit directions plus their sum
  const auto& ah = supports.back();
  PointMultiset frame{k, q, {}};
  std::vector<uint8_t> ones((size_t)k, 0);
  for (Int c : ah) {
    std::vector<uint8_t> v((size_t)k, 0);
    v[(size_t)(c - 1)] = 1;
    frame.mult[ProjPoint{std::move(v)}] = 1;
    ones[(size_t)(c - 1)] = 1;
  }
  frame.mult[normalize_point(q, std::move(ones))] += 1;
  m = add(m, subtract(subspace_points(ah, k, q), frame));

  if (variant == BelovVariant::BV2) {
    if (!extra) throw std::invalid_argument("belov_minihyper: BV2 requires the extra point");
    m.mult[*extra] += 1;
  }
  return m;
}

SsTwoSubspace ss_two_subspace_error_coefficient(Int k, Int a1, Int a2, Int cap) {
  if (!(1 <= a2 && a2 <= a1 && a1 < k))
    throw std::invalid_argument("ss_two_subspace_error_coefficient: need 1 <= |A2| <= |A1| < k");
  if (cap < std::max<Int>(0, a1 + a2 - k) || cap > a2)
    throw std::invalid_argument("ss_two_subspace_error_coefficient: infeasible intersection");
  // expanded so every exponent stays nonnegative even when a1+a2 > k
  auto value_at = [&](Int c) {
    return ipow(2, k) + ipow(2, k - a1 - a2 + c) - ipow(2, k - a1) - ipow(2, k - a2);
  };
  SsTwoSubspace out;
  out.value = value_at(cap);
  out.minimizer_cap = std::max<Int>(0, a1 + a2 - k);
  out.minimum = value_at(out.minimizer_cap);
  return out;
}

ClassificationVerdict classification_predicates(const std::vector<int>& lambda, Int k, Int s) {
  ClassificationVerdict v;
  Int weighted = 0;
  for (size_t i = 0; i < lambda.size(); ++i) weighted += lambda[i] * ((Int)i + 1);
  v.ss_excluded = weighted > k * s;
  for (Int kbv = 4; kbv <= (Int)lambda.size(); ++kbv) {
    if (lambda[(size_t)(kbv - 1)] != 0) continue;
    bool shape = true;
    for (Int i = 1; i <= kbv - 2; ++i)
      if (lambda[(size_t)i] != 1) { shape = false; break; }
    if (shape) { v.belov_shape = kbv; break; }
  }
  return v;
}

namespace {

// --- construction grammar ---------------------------------------------

struct Parser {
  std::string text;
  size_t pos = 0;
  Int k, q;

  void skip() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream msg;
    msg << "construction parse error at position " << pos << ": " << what;
    throw std::invalid_argument(msg.str());
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }

  Int integer() {
    skip();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }

  PointMultiset atom() {
    skip();
    if (pos >= text.size() || text[pos] != 'P') fail("expected an atom 'P'");
    ++pos;
    if (eat('[')) {
      Int a = integer();
      Int b = a;
      skip();
      if (pos + 1 < text.size() && text[pos] == '.' && text[pos + 1] == '.') {
        pos += 2;
        b = integer();
      } else {
        b = a;
        a = 1;  // P[b] abbreviates P[1..b]
      }
      if (!eat(']')) fail("expected ']'");
      return subspace_points_range(a, b, k, q);
    }
    if (eat('{')) {
      skip();
      if (pos >= text.size()) fail("unterminated atom");
      char tag = text[pos++];
      if (tag == 'I') {
        Int t = integer();
        if (!eat('}')) fail("expected '}'");
        return identity_points(t, k, q);
      }
      if (tag == 'T') {
        skip();
        if (pos + 1 < text.size() && text[pos] == '4' && text[pos + 1] == '\'') {
          pos += 2;
          if (!eat('}')) fail("expected '}'");
          return t4_prime_points(k, q);
        }
        Int t = integer();
        if (!eat('}')) fail("expected '}'");
        return t_frame_points(t, k, q);
      }
      fail("unknown atom tag");
    }
    fail("expected '[' or '{' after 'P'");
  }

  PointMultiset factor() {
    skip();
    if (eat('(')) {
      PointMultiset m = expr();
      if (!eat(')')) fail("expected ')'");
      return m;
    }
    if (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
      Int s = integer();
      if (!eat('*')) fail("expected '*' after a scalar");
      return scale(s, factor());
    }
    return atom();
  }

  PointMultiset expr() {
    PointMultiset m = factor();
    for (;;) {
      skip();
      if (eat('+')) m = add(m, factor());
      else if (eat('-')) m = subtract(m, factor());
      else return m;
    }
  }
};

std::string substitute_s(const std::string& spec, Int s) {
  // allow 's' and parenthesized 's+N' scalars in templates
  std::string out = std::regex_replace(
      spec, std::regex(R"(\(\s*s\s*\+\s*(\d+)\s*\))"), "@PLUS$1@");
  std::string replaced;
  std::regex plus("@PLUS(\\d+)@");
  auto begin = std::sregex_iterator(out.begin(), out.end(), plus);
  auto end = std::sregex_iterator();
  size_t last = 0;
  for (auto it = begin; it != end; ++it) {
    replaced += out.substr(last, (size_t)it->position() - last);
    replaced += std::to_string(s + std::stoll((*it)[1].str()));
    last = (size_t)(it->position() + it->length());
  }
  replaced += out.substr(last);
  replaced = std::regex_replace(replaced, std::regex(R"(\bs\b)"), std::to_string(s));
  return replaced;
}

}  // namespace

PointMultiset parse_construction(const std::string& spec, Int k, Int q, Int s) {
  Parser p{substitute_s(spec, s), 0, k, q};
  PointMultiset m = p.expr();
  p.skip();
  if (p.pos != p.text.size()) p.fail("trailing input");
  return m;
}

Int infer_construction_dimension(const std::string& spec) {
  // the largest coordinate named by any atom
  Int k = 1;
  std::regex range(R"(P\[(?:(\d+)\.\.)?(\d+)\])");
  std::regex braced(R"(P\{[IT](\d+)'?\})");
  for (auto it = std::sregex_iterator(spec.begin(), spec.end(), range);
       it != std::sregex_iterator(); ++it)
    k = std::max(k, (Int)std::stoll((*it)[2].str()));
  for (auto it = std::sregex_iterator(spec.begin(), spec.end(), braced);
       it != std::sregex_iterator(); ++it)
    k = std::max(k, (Int)std::stoll((*it)[1].str()));
  return k;
}

namespace {

GenMatrix build_from_spec(const std::string& spec, Int k, Int q, Int s) {
  return to_generator_matrix(parse_construction(spec, k, q, s));
}

GenMatrix build_juxtaposed(Int s, const std::string& fixtures_dir, const std::string& fixture) {
  GenMatrix fixed = GenMatrix::read_file(fixtures_dir + "/" + fixture);
  if (s == 0) return fixed;
  GenMatrix simplex = to_generator_matrix(scale(s, subspace_points_range(1, 5, 5, 2)));
  return juxtapose({simplex, fixed});
}

TableRow grammar_row(std::string table, Int k, Int nc, Int no, Int dc, Int dof, Int e,
                     Int s_min, std::string constr, std::string tcase) {
  TableRow row;
  row.table = std::move(table);
  row.k = k;
  row.n_coef = nc; row.n_off = no;
  row.d_coef = dc; row.d_off = dof;
  row.e = e;
  row.s_min = s_min;
  row.construction = constr;
  row.theorem_case = std::move(tcase);
  row.build = [constr, k](Int s, const std::string&) {
    return build_from_spec(constr, k, 2, s);
  };
  return row;
}

TableRow fixture_row(std::string table, Int k, Int n, Int d, Int e, std::string fixture,
                     std::string tcase, bool griesmer) {
  TableRow row;
  row.table = std::move(table);
  row.k = k;
  row.n_off = n;
  row.d_off = d;
  row.e = e;
  row.fixed = true;
  row.griesmer = griesmer;
  row.construction = fixture;
  row.theorem_case = std::move(tcase);
  row.build = [fixture](Int, const std::string& fixtures_dir) {
    return GenMatrix::read_file(fixtures_dir + "/" + fixture);
  };
  return row;
}

TableRow juxtaposed_row(std::string table, Int nc, Int no, Int dc, Int dof, Int e,
                        Int s_min, std::string fixture, std::string tcase) {
  TableRow row;
  row.table = std::move(table);
  row.k = 5;
  row.n_coef = nc; row.n_off = no;
  row.d_coef = dc; row.d_off = dof;
  row.e = e;
  row.s_min = s_min;
  row.construction = "juxtapose(s*P[5], " + fixture + ")";
  row.theorem_case = std::move(tcase);
  // the fixture contributes one P[5] block beyond its offset when s_min = 1
  row.build = [fixture, s_min](Int s, const std::string& dir) {
    return build_juxtaposed(s - s_min, dir, fixture);
  };
  return row;
}

std::vector<TableRow> make_catalogue() {
  std::vector<TableRow> rows;

  // dimension 3
  rows.push_back(grammar_row("I", 3, 7, 0, 4, 0, 7, 1, "s*P[3]", "1"));
  rows.push_back(grammar_row("I", 3, 7, 1, 4, 0, 3, 1, "s*P[3] + P{I1}", "1"));
  rows.push_back(grammar_row("I", 3, 7, 2, 4, 0, 1, 1, "s*P[3] + P{I2}", "1"));
  rows.push_back(grammar_row("I", 3, 7, 3, 4, 1, 3, 0, "s*P[3] + P{I3}", "1"));
  rows.push_back(grammar_row("I", 3, 7, 4, 4, 2, 6, 0, "(s+1)*P[3] - P[2]", "3"));
  rows.push_back(grammar_row("I", 3, 7, 5, 4, 2, 2, 0, "(s+1)*P[3] - P{I2}", "2"));
  rows.push_back(grammar_row("I", 3, 7, 6, 4, 3, 4, 0, "(s+1)*P[3] - P{I1}", "1"));

  // dimension 4
  rows.push_back(grammar_row("II", 4, 15, 0, 8, 0, 15, 1, "s*P[4]", "1"));
  rows.push_back(grammar_row("II", 4, 15, 1, 8, 0, 7, 1, "s*P[4] + P{I1}", "1"));
  rows.push_back(grammar_row("II", 4, 15, 2, 8, 0, 3, 1, "s*P[4] + P{I2}", "1"));
  rows.push_back(grammar_row("II", 4, 15, 3, 8, 0, 1, 1, "s*P[4] + P{I3}", "1"));
  rows.push_back(grammar_row("II", 4, 15, 4, 8, 1, 4, 0, "s*P[4] + P{I4}", "1"));
  rows.push_back(grammar_row("II", 4, 15, 5, 8, 2, 10, 0, "s*P[4] + P{T4}", "3"));
  rows.push_back(grammar_row("II", 4, 15, 6, 8, 2, 3, 0, "s*P[4] + P{T4'}", "2"));
  rows.push_back(grammar_row("II", 4, 15, 7, 8, 3, 7, 0, "(s+1)*P[4] - (P[3] + P[4..4])", "1"));
  rows.push_back(grammar_row("II", 4, 15, 8, 8, 4, 14, 0, "(s+1)*P[4] - P[3]", "3"));
  rows.push_back(grammar_row("II", 4, 15, 9, 8, 4, 6, 0, "(s+1)*P[4] - (P[3] - P{I1})", "2"));
  rows.push_back(grammar_row("II", 4, 15, 10, 8, 4, 2, 0, "(s+1)*P[4] - (P[3] - P{I2})", "2"));
  rows.push_back(grammar_row("II", 4, 15, 11, 8, 5, 6, 0, "(s+1)*P[4] - (P[3] - P{I3})", "5"));
  rows.push_back(grammar_row("II", 4, 15, 12, 8, 6, 12, 0, "(s+1)*P[4] - P[2]", "4"));
  rows.push_back(grammar_row("II", 4, 15, 13, 8, 6, 4, 0, "(s+1)*P[4] - P{I2}", "2"));
  rows.push_back(grammar_row("II", 4, 15, 14, 8, 7, 8, 0, "(s+1)*P[4] - P{I1}", "1"));

  // dimension 5
  rows.push_back(fixture_row("III", 5, 8, 2, 1, "G_8_5_2.txt", "1", false));
  rows.push_back(fixture_row("III", 5, 12, 4, 1, "G_12_5_4.txt", "1", false));
  rows.push_back(fixture_row("III", 5, 9, 3, 4, "G_9_5_3.txt", "1", false));
  rows.push_back(grammar_row("III", 5, 31, 0, 16, 0, 31, 1, "s*P[5]", "1"));
  rows.push_back(grammar_row("III", 5, 31, 1, 16, 0, 15, 1, "s*P[5] + P{I1}", "1"));
  rows.push_back(grammar_row("III", 5, 31, 2, 16, 0, 7, 1, "s*P[5] + P{I2}", "1"));
  rows.push_back(grammar_row("III", 5, 31, 3, 16, 0, 3, 1, "s*P[5] + P{I3}", "1"));
  rows.push_back(grammar_row("III", 5, 31, 4, 16, 0, 1, 1, "s*P[5] + P{I4}", "1"));
  rows.push_back(grammar_row("III", 5, 31, 5, 16, 1, 5, 0, "s*P[5] + P{I5}", "1"));
  rows.push_back(grammar_row("III", 5, 31, 6, 16, 2, 15, 0, "s*P[5] + P{T5}", "3"));
  rows.push_back(juxtaposed_row("III", 31, 10, 16, 4, 10, 0, "G_10_5_4.txt", "2"));
  rows.push_back(juxtaposed_row("III", 31, 11, 16, 4, 3, 1, "G_42_5_20.txt", "2"));
  rows.push_back(juxtaposed_row("III", 31, 14, 16, 6, 7, 0, "G_14_5_6.txt", "2"));
  rows.push_back(grammar_row("III", 5, 31, 15, 16, 7, 15, 0, "(s+1)*P[5] - (P[4] + P[5..5])", "1"));
  rows.push_back(grammar_row("III", 5, 31, 16, 16, 8, 30, 0, "(s+1)*P[5] - P[4]", "3"));
  rows.push_back(grammar_row("III", 5, 31, 17, 16, 8, 14, 0, "(s+1)*P[5] - (P[4] - P{I1})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 18, 16, 8, 6, 0, "(s+1)*P[5] - (P[4] - P{I2})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 19, 16, 8, 2, 0, "(s+1)*P[5] - (P[4] - P{I3})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 22, 16, 10, 6, 0, "(s+1)*P[5] - (P[4] - P{T4'})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 24, 16, 12, 28, 0, "(s+1)*P[5] - P[3]", "4"));
  rows.push_back(grammar_row("III", 5, 31, 25, 16, 12, 12, 0, "(s+1)*P[5] - (P[3] - P{I1})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 26, 16, 12, 4, 0, "(s+1)*P[5] - (P[3] - P{I2})", "2"));
  rows.push_back(grammar_row("III", 5, 31, 27, 16, 13, 12, 0, "(s+1)*P[5] - (P[2] + P[3..3])", "4"));
  rows.push_back(grammar_row("III", 5, 31, 28, 16, 14, 24, 0, "(s+1)*P[5] - P[2]", "4"));
  rows.push_back(grammar_row("III", 5, 31, 29, 16, 14, 8, 0, "(s+1)*P[5] - P{I2}", "2"));
  rows.push_back(grammar_row("III", 5, 31, 30, 16, 15, 16, 0, "(s+1)*P[5] - P{I1}", "1"));

  // dimension 5, not reachable by the combined bound alone
  rows.push_back(fixture_row("IV", 5, 11, 4, 4, "G_11_5_4.txt", "-", false));
  rows.push_back(fixture_row("IV", 5, 13, 5, 3, "G_13_5_5.txt", "-", false));
  rows.push_back(juxtaposed_row("IV", 31, 7, 16, 2, 5, 0, "G_7_5_2.txt", "-"));
  rows.push_back(juxtaposed_row("IV", 31, 8, 16, 3, 13, 1, "G_39_5_19.txt", "-"));
  rows.push_back(grammar_row("IV", 5, 31, 9, 16, 4, 27, 1, "(s+1)*P[5] - (P[4] + P[3..5])", "-"));
  rows.push_back(juxtaposed_row("IV", 31, 12, 16, 5, 11, 1, "G_43_5_21.txt", "-"));
  rows.push_back(grammar_row("IV", 5, 31, 13, 16, 6, 23, 1, "(s+1)*P[5] - (P[4] + P[4..5])", "-"));
  rows.push_back(grammar_row("IV", 5, 31, 20, 16, 9, 8, 0, "(s+1)*P[5] - (P[4] - P{I4})", "-"));
  rows.push_back(grammar_row("IV", 5, 31, 21, 16, 10, 20, 0, "(s+1)*P[5] - (P[4] - P{T4})", "-"));
  rows.push_back(grammar_row("IV", 5, 31, 23, 16, 11, 14, 0, "(s+1)*P[5] - (P[3] + P[4..4])", "-"));

  return rows;
}

}  // namespace

const std::vector<TableRow>& table_catalogue() {
  static const std::vector<TableRow> rows = make_catalogue();
  return rows;
}

GenMatrix table_construction(const TableRow& row, Int s, const std::string& fixtures_dir) {
  if (!row.fixed && s < row.s_min)
    throw std::invalid_argument("table_construction: s below the row's valid range");
  GenMatrix g = row.build(s, fixtures_dir);
  Int want_n = row.fixed ? row.n_off : row.n_coef * s + row.n_off;
  Int want_d = row.fixed ? row.d_off : row.d_coef * s + row.d_off;
  auto wd = weight_distribution(g);
  if (g.n() != want_n || g.k() != row.k || wd.min_distance() != want_d ||
      wd.error_coefficient() != row.e) {
    std::ostringstream msg;
    msg << "table row " << row.table << " length " << want_n
        << ": constructed [" << g.n() << "," << g.k() << "," << wd.min_distance()
        << ";" << wd.error_coefficient() << "] but expected [" << want_n << ","
        << row.k << "," << want_d << ";" << row.e << "]";
    throw std::logic_error(msg.str());
  }
  return g;
}

}  // namespace afer
