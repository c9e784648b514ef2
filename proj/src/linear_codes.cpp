#include "afer/linear_codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <set>
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

std::vector<int> message_digits(Int index, Int k, Int q) {
  std::vector<int> d(k);
  for (Int i = 0; i < k; ++i) { d[i] = (int)(index % q); index /= q; }
  return d;
}

}  // namespace

Int WeightDistribution::min_distance() const {
  for (size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > 0) return (Int)i;
  throw std::logic_error("zero code has no minimum distance");
}

Int WeightDistribution::error_coefficient() const {
  return counts[(size_t)min_distance()];
}

void WeightDistribution::check_invariants(Int k, Int q) const {
  if (counts.empty() || counts[0] != 1)
    throw std::logic_error("weight distribution must have A_0 = 1");
  Int total = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) throw std::logic_error("negative weight count");
    if (i >= 1 && counts[i] % (q - 1) != 0)
      throw std::logic_error("q-1 must divide every A_i, i >= 1");
    total += counts[i];
  }
  if (total != ipow(q, k))
    throw std::logic_error("weight counts must sum to q^k");
}

GenMatrix::GenMatrix(Int q, Int k, Int n, std::vector<std::vector<uint8_t>> rows)
    : q_(q), k_(k), n_(n), rows_(std::move(rows)) {
  if (!GF::supported((int)q)) throw std::invalid_argument("unsupported field size");
  if (k < 1 || n < k) throw std::invalid_argument("need 1 <= k <= n");
  if ((Int)rows_.size() != k) throw std::invalid_argument("row count must equal k");
  for (const auto& r : rows_) {
    if ((Int)r.size() != n) throw std::invalid_argument("ragged row");
    for (uint8_t x : r)
      if (x >= q) throw std::invalid_argument("entry outside GF(q)");
  }
  if (matrix_rank(q, rows_) != k)
    throw std::invalid_argument("generator rows must be linearly independent");
}

std::vector<uint8_t> GenMatrix::codeword(Int message_index) const {
  const GF& f = field(q_);
  auto digits = message_digits(message_index, k_, q_);
  std::vector<uint8_t> w(n_, 0);
  for (Int i = 0; i < k_; ++i) {
    if (digits[i] == 0) continue;
    for (Int j = 0; j < n_; ++j)
      w[j] = f.add(w[j], f.mul((uint8_t)digits[i], rows_[i][j]));
  }
  return w;
}

bool GenMatrix::contains(const std::vector<uint8_t>& word) const {
  if ((Int)word.size() != n_) return false;
  auto rows = rows_;
  rows.push_back(word);
  return matrix_rank(q_, rows) == k_;
}

GenMatrix GenMatrix::read(std::istream& in) {
  Int q, k, n;
  if (!(in >> q >> k >> n)) throw std::runtime_error("matrix header must be 'q k n'");
  std::vector<std::vector<uint8_t>> rows;
  for (Int i = 0; i < k; ++i) {
    std::string line;
    if (!(in >> line)) throw std::runtime_error("missing matrix row");
    if ((Int)line.size() != n) throw std::runtime_error("ragged matrix row");
    std::vector<uint8_t> row;
    for (char c : line) {
      if (c < '0' || c >= '0' + q) throw std::runtime_error("matrix entry outside GF(q)");
      row.push_back((uint8_t)(c - '0'));
    }
    rows.push_back(std::move(row));
  }
  return GenMatrix(q, k, n, std::move(rows));
}

GenMatrix GenMatrix::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read(in);
}

void GenMatrix::write(std::ostream& out) const {
  out << q_ << ' ' << k_ << ' ' << n_ << '\n';
  for (const auto& r : rows_) {
    for (uint8_t x : r) out << (char)('0' + x);
    out << '\n';
  }
}

void GenMatrix::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write(out);
}

WeightDistribution weight_distribution(const GenMatrix& g, Int cap) {
  Int total = ipow(g.q(), g.k());
  if (total > cap) {
    std::ostringstream msg;
    msg << "enumeration of " << total << " codewords exceeds the cap of " << cap;
    throw std::runtime_error(msg.str());
  }
  WeightDistribution wd;
  wd.counts.assign((size_t)g.n() + 1, 0);
  if (g.q() == 2) {
    // packed rows, Gray-code stepping: message m -> m^1 flips one row
    Int words = (g.n() + 63) / 64;
    std::vector<std::vector<uint64_t>> packed(g.k(), std::vector<uint64_t>(words, 0));
    for (Int i = 0; i < g.k(); ++i)
      for (Int j = 0; j < g.n(); ++j)
        if (g.rows()[i][j]) packed[i][j / 64] |= uint64_t(1) << (j % 64);
    std::vector<uint64_t> cur(words, 0);
    wd.counts[0] = 1;
    uint64_t prev_gray = 0;
    for (Int m = 1; m < total; ++m) {
      uint64_t gray = (uint64_t)m ^ ((uint64_t)m >> 1);
      int bit = std::countr_zero(gray ^ prev_gray);
      prev_gray = gray;
      Int w = 0;
      for (Int j = 0; j < words; ++j) {
        cur[j] ^= packed[bit][j];
        w += std::popcount(cur[j]);
      }
      wd.counts[(size_t)w]++;
    }
  } else {
    wd.counts[0] = 1;
    for (Int m = 1; m < total; ++m) {
      auto w = g.codeword(m);
      Int weight = (Int)std::count_if(w.begin(), w.end(), [](uint8_t x) { return x != 0; });
      wd.counts[(size_t)weight]++;
    }
  }
  wd.check_invariants(g.k(), g.q());
  return wd;
}

SupportInfo support_and_effective_length(const GenMatrix& g) {
  SupportInfo info;
  for (Int j = 0; j < g.n(); ++j) {
    bool nonzero = false;
    for (Int i = 0; i < g.k(); ++i)
      if (g.rows()[i][j]) { nonzero = true; break; }
    if (nonzero) info.support.push_back(j);
  }
  info.effective_length = (Int)info.support.size();
  return info;
}

GenMatrix restrict_to_support(const GenMatrix& g) {
  auto info = support_and_effective_length(g);
  std::vector<Int> drop;
  std::set<Int> keep(info.support.begin(), info.support.end());
  for (Int j = 0; j < g.n(); ++j)
    if (!keep.count(j)) drop.push_back(j);
  return puncture(g, drop);
}

std::vector<std::vector<uint8_t>> row_reduce(Int q, std::vector<std::vector<uint8_t>> rows) {
  const GF& f = field(q);
  if (rows.empty()) return rows;
  size_t n = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    uint8_t inv = f.inv(rows[pivot_row][col]);
    for (size_t j = col; j < n; ++j) rows[pivot_row][j] = f.mul(rows[pivot_row][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      uint8_t factor = rows[i][col];
      for (size_t j = col; j < n; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[pivot_row][j]));
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);  // drop the zero rows
  return rows;
}

Int matrix_rank(Int q, std::vector<std::vector<uint8_t>> rows) {
  return (Int)row_reduce(q, std::move(rows)).size();
}

GenMatrix puncture(const GenMatrix& g, const std::vector<Int>& a) {
  std::set<Int> drop(a.begin(), a.end());
  for (Int j : drop)
    if (j < 0 || j >= g.n()) throw std::invalid_argument("puncture: coordinate out of range");
  if ((Int)drop.size() >= g.n()) throw std::invalid_argument("puncture: cannot delete every coordinate");
  std::vector<std::vector<uint8_t>> rows(g.k());
  for (Int i = 0; i < g.k(); ++i)
    for (Int j = 0; j < g.n(); ++j)
      if (!drop.count(j)) rows[(size_t)i].push_back(g.rows()[i][j]);
  Int n2 = g.n() - (Int)drop.size();
  auto reduced = row_reduce(g.q(), rows);
  Int k2 = (Int)reduced.size();
  return GenMatrix(g.q(), k2, n2, std::move(reduced));
}

GenMatrix shorten(const GenMatrix& g, const std::vector<Int>& a) {
  std::set<Int> drop(a.begin(), a.end());
  // basis of the subcode vanishing on `a`: row-reduce with the dropped
  // coordinates moved to the front, keep the rows with no pivot there
  std::vector<Int> order(drop.begin(), drop.end());
  for (Int j = 0; j < g.n(); ++j)
    if (!drop.count(j)) order.push_back(j);
  std::vector<std::vector<uint8_t>> perm(g.k(), std::vector<uint8_t>(g.n()));
  for (Int i = 0; i < g.k(); ++i)
    for (Int j = 0; j < g.n(); ++j) perm[(size_t)i][(size_t)j] = g.rows()[i][(size_t)order[(size_t)j]];
  auto reduced = row_reduce(g.q(), perm);
  std::vector<std::vector<uint8_t>> rows;
  Int front = (Int)drop.size();
  for (auto& r : reduced) {
    bool zero_front = true;
    for (Int j = 0; j < front; ++j)
      if (r[(size_t)j]) { zero_front = false; break; }
    if (zero_front) rows.emplace_back(r.begin() + front, r.end());
  }
  if (rows.empty()) throw std::invalid_argument("shorten: resulting code is trivial");
  Int n2 = g.n() - front;
  Int k2 = (Int)rows.size();
  return GenMatrix(g.q(), k2, n2, std::move(rows));
}

GenMatrix residual(const GenMatrix& g, const std::vector<uint8_t>& c) {
  if (!g.contains(c)) throw std::invalid_argument("residual: codeword not in the code");
  bool nonzero = std::any_of(c.begin(), c.end(), [](uint8_t x) { return x != 0; });
  if (!nonzero) throw std::invalid_argument("residual: codeword must be nonzero");
  std::vector<Int> supp;
  for (Int j = 0; j < g.n(); ++j)
    if (c[(size_t)j]) supp.push_back(j);
  return puncture(g, supp);
}

GenMatrix extend(const GenMatrix& g) {
  if (g.q() != 2) throw std::invalid_argument("extend: binary only");
  auto rows = g.rows();
  for (auto& r : rows) {
    int parity = 0;
    for (uint8_t x : r) parity ^= x;
    r.push_back((uint8_t)parity);
  }
  return GenMatrix(2, g.k(), g.n() + 1, std::move(rows));
}

GenMatrix juxtapose(const std::vector<GenMatrix>& parts) {
  if (parts.empty()) throw std::invalid_argument("juxtapose: need at least one part");
  Int k = parts[0].k(), q = parts[0].q();
  std::vector<std::vector<uint8_t>> rows((size_t)k);
  Int n = 0;
  for (const auto& p : parts) {
    if (p.k() != k || p.q() != q)
      throw std::invalid_argument("juxtapose: parts must share dimension and field");
    for (Int i = 0; i < k; ++i)
      rows[(size_t)i].insert(rows[(size_t)i].end(), p.rows()[i].begin(), p.rows()[i].end());
    n += p.n();
  }
  return GenMatrix(q, k, n, std::move(rows));
}

WeightDistribution coset_weights(const GenMatrix& g, const std::vector<uint8_t>& v) {
  if ((Int)v.size() != g.n()) throw std::invalid_argument("coset_weights: leader length mismatch");
  const GF& f = field(g.q());
  WeightDistribution wd;
  wd.counts.assign((size_t)g.n() + 1, 0);
  Int total = ipow(g.q(), g.k());
  for (Int m = 0; m < total; ++m) {
    auto w = g.codeword(m);
    Int weight = 0;
    for (Int j = 0; j < g.n(); ++j)
      if (f.add(w[(size_t)j], v[(size_t)j])) ++weight;
    wd.counts[(size_t)weight]++;
  }
  return wd;
}

ExtendabilityReport check_nonextendable_even(const GenMatrix& g) {
  if (g.q() != 2) throw std::invalid_argument("check_nonextendable_even: binary only");
  auto wd = weight_distribution(g);
  Int d = wd.min_distance();
  if (d % 2 != 0) throw std::invalid_argument("check_nonextendable_even: even distance required");

  // residual criterion: exact residual distances d/2 everywhere force
  // non-extendability (the converse does not hold)
  bool all_exact = true;
  Int total = ipow(2, g.k());
  std::vector<Int> min_messages;
  for (Int m = 1; m < total; ++m) {
    auto w = g.codeword(m);
    Int weight = (Int)std::count_if(w.begin(), w.end(), [](uint8_t x) { return x != 0; });
    if (weight == d) min_messages.push_back(m);
  }
  for (Int m : min_messages) {
    auto r = residual(g, g.codeword(m));
    if (weight_distribution(r).min_distance() != d / 2) { all_exact = false; break; }
  }

  // exhaustive extension-column search: appending x raises d iff every
  // minimum-weight message has inner product 1 with x
  std::optional<std::vector<uint8_t>> witness;
  for (Int x = 0; x < total; ++x) {
    bool raises = true;
    for (Int m : min_messages) {
      int dot = std::popcount((uint64_t)(m & x)) & 1;
      if (dot == 0) { raises = false; break; }
    }
    if (raises) {
      std::vector<uint8_t> col((size_t)g.k());
      for (Int i = 0; i < g.k(); ++i) col[(size_t)i] = (uint8_t)((x >> i) & 1);
      witness = col;
      break;
    }
  }

  if (all_exact && witness.has_value())
    throw std::logic_error("extendability criteria disagree");
  return {!witness.has_value(), witness};
}

SubcodeChain find_griesmer_subcode_chain(const GenMatrix& g) {
  auto wd = weight_distribution(g);
  Int d = wd.min_distance();
  auto gm = gamma(g.n(), g.k(), d, g.q());
  Int levels = std::min(gm.value, g.k() - 1);

  SubcodeChain chain;
  std::vector<std::vector<uint8_t>> basis;  // chosen codewords
  Int total = ipow(g.q(), g.k());
  for (Int level = 1; level <= levels; ++level) {
    Int best_len = -1;
    std::vector<uint8_t> best;
    for (Int m = 1; m < total; ++m) {
      auto w = g.codeword(m);
      auto trial = basis;
      trial.push_back(w);
      if (matrix_rank(g.q(), trial) != (Int)trial.size()) continue;
      // effective length of the span
      auto reduced = row_reduce(g.q(), trial);
      Int len = 0;
      for (Int j = 0; j < g.n(); ++j) {
        for (const auto& r : reduced)
          if (r[(size_t)j]) { ++len; break; }
      }
      if (best_len < 0 || len < best_len) { best_len = len; best = w; }
    }
    if (best_len < 0) break;
    basis.push_back(best);
    chain.generators.push_back(best);
    chain.effective_lengths.push_back(best_len);
  }
  chain.griesmer_at_each_level = true;
  for (size_t j = 0; j < chain.effective_lengths.size(); ++j)
    if (chain.effective_lengths[j] != griesmer_length((Int)j + 1, d, g.q()))
      chain.griesmer_at_each_level = false;
  return chain;
}

Int exhaustive_two_dim_oracle(Int n, Int q) {
  if (n > 8 || (q != 2 && q != 3))
    throw std::invalid_argument("exhaustive_two_dim_oracle: supported for n <= 8, q in {2,3}");
  if (n < 2) throw std::invalid_argument("exhaustive_two_dim_oracle: n >= 2 required");
  const GF& f = field(q);
  // points of PG(1,q): (1,a) for a in GF(q), and (0,1)
  std::vector<std::array<uint8_t, 2>> points;
  for (int a = 0; a < q; ++a) points.push_back({1, (uint8_t)a});
  points.push_back({0, 1});
  Int v2 = (Int)points.size();

  Int best_d = -1, best_e = -1;
  std::vector<Int> mult((size_t)v2, 0);
  auto evaluate = [&]() {
    Int used = 0;
    for (Int m : mult)
      if (m > 0) ++used;
    if (used < 2) return;  // rank below 2
    // weight of message (a,b): n minus the columns orthogonal to (a,b)
    Int d = -1, e = 0;
    for (int a = 0; a < q; ++a)
      for (int b = (a == 0 ? 1 : 0); b < q; ++b) {
        Int zero = 0;
        for (size_t i = 0; i < points.size(); ++i) {
          uint8_t val = f.add(f.mul((uint8_t)a, points[i][0]), f.mul((uint8_t)b, points[i][1]));
          if (val == 0) zero += mult[i];
        }
        Int w = n - zero;
        if (d < 0 || w < d) { d = w; e = 1; }
        else if (w == d) ++e;
      }
    if (d > best_d) { best_d = d; best_e = e; }
    else if (d == best_d && e < best_e) best_e = e;
  };
  // enumerate all multiplicity vectors summing to n
  std::function<void(Int, Int)> rec = [&](Int idx, Int left) {
    if (idx == v2 - 1) { mult[(size_t)idx] = left; evaluate(); return; }
    for (Int m = 0; m <= left; ++m) {
      mult[(size_t)idx] = m;
      rec(idx + 1, left - m);
    }
  };
  rec(0, n);
  return best_e;
}

bool residual_coset_cap_check(const GenMatrix& g, const std::vector<uint8_t>& c) {
  auto wd = weight_distribution(g);
  Int d = wd.min_distance();
  if (d % g.q() != 0) throw std::invalid_argument("residual_coset_cap_check: q | d required");
  auto gm = gamma(g.n(), g.k(), d, g.q());
  if (gm.value < 2) throw std::invalid_argument("residual_coset_cap_check: gamma >= 2 required");
  Int cw = 0;
  for (uint8_t x : c)
    if (x) ++cw;
  if (cw != d || !g.contains(c))
    throw std::invalid_argument("residual_coset_cap_check: c must be a minimum-weight codeword");

  auto r = residual(g, c);
  auto rwd = weight_distribution(r);
  Int lhs = rwd.counts[(size_t)(d / g.q())];

  // find the message of c
  Int total = ipow(g.q(), g.k());
  Int mc = -1;
  for (Int m = 1; m < total; ++m)
    if (g.codeword(m) == c) { mc = m; break; }

  // every supplementary subcode is the kernel of a functional f with
  // f(mc) != 0; check the cap against each of them
  const GF& f = field(g.q());
  for (Int fn = 1; fn < total; ++fn) {
    auto fd = message_digits(fn, g.k(), g.q());
    auto dot = [&](Int m) {
      auto md = message_digits(m, g.k(), g.q());
      uint8_t s = 0;
      for (Int i = 0; i < g.k(); ++i)
        s = f.add(s, f.mul((uint8_t)fd[(size_t)i], (uint8_t)md[(size_t)i]));
      return s;
    };
    if (dot(mc) == 0) continue;
    // A_d over the kernel subcode and each coset kernel + alpha*c
    std::vector<Int> a_d((size_t)g.q(), 0);
    for (Int m = 0; m < total; ++m) {
      uint8_t cls = dot(m);
      auto w = g.codeword(m);
      Int weight = (Int)std::count_if(w.begin(), w.end(), [](uint8_t x) { return x != 0; });
      if (weight == d) a_d[cls]++;
    }
    // cosets are indexed by the functional value, alpha = cls here
    Int cap = a_d[0];
    for (Int cls = 1; cls < g.q(); ++cls) cap = std::min(cap, a_d[(size_t)cls]);
    if (lhs > cap) return false;
  }
  return true;
}

}  // namespace afer
