#include "mfl/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfl/theorem_sets.hpp"

namespace mfl {

Tableau::Tableau(std::vector<IndexSet> columns, TableauKind kind, int ell)
    : columns_(std::move(columns)), kind_(kind), ell_(kind == TableauKind::ssyt ? 0 : ell) {
  if (columns_.empty()) throw std::invalid_argument("tableau needs at least one column");
  for (std::size_t c = 1; c < columns_.size(); ++c) {
    if (columns_[c].ambient() != columns_[0].ambient()) throw std::invalid_argument("ambient size mismatch");
    if (columns_[c].size() > columns_[c - 1].size())
      throw std::invalid_argument("column sizes must weakly decrease");
  }
  if (kind_ == TableauKind::matching_field) BlockDiagonalMF(n(), ell_);
}

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& c : columns_) s.push_back(c.size());
  return s;
}

std::vector<std::vector<int>> Tableau::displays() const {
  std::vector<std::vector<int>> d;
  if (kind_ == TableauKind::ssyt) {
    for (const auto& c : columns_) d.push_back(c.members());
  } else {
    const BlockDiagonalMF mf(n(), ell_);
    for (const auto& c : columns_) d.push_back(column_display(mf, c));
  }
  return d;
}

std::vector<std::vector<int>> Tableau::rows() const {
  const auto d = displays();
  std::vector<std::vector<int>> r(columns_.front().size());
  for (const auto& col : d)
    for (std::size_t i = 0; i < col.size(); ++i) r[i].push_back(col[i]);
  for (auto& row : r) std::sort(row.begin(), row.end());
  return r;
}

bool Tableau::is_semistandard() const {
  for (std::size_t c = 1; c < columns_.size(); ++c) {
    auto left = columns_[c - 1].members(), right = columns_[c].members();
    for (std::size_t r = 0; r < right.size(); ++r)
      if (left[r] > right[r]) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> Tableau::to_json_columns() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& col : displays()) {
    std::vector<std::string> c;
    for (int v : col) c.push_back(std::to_string(v));
    out.push_back(std::move(c));
  }
  return out;
}

std::string Tableau::render() const {
  const auto d = displays();
  int width = 1;
  for (const auto& col : d)
    for (int v : col) width = std::max<int>(width, static_cast<int>(std::to_string(v).size()));
  auto cells_in_row = [&](std::size_t r) {
    std::size_t k = 0;
    while (k < d.size() && d[k].size() > r) ++k;
    return k;
  };
  auto border = [&](std::size_t k) {
    std::string s = "+";
    for (std::size_t i = 0; i < k; ++i) s += std::string(width + 2, '-') + "+";
    return s + "\n";
  };
  std::string out;
  const std::size_t height = d.front().size();
  for (std::size_t r = 0; r < height; ++r) {
    out += border(std::max(cells_in_row(r), r ? cells_in_row(r - 1) : 0));
    out += "|";
    for (std::size_t c = 0; c < cells_in_row(r); ++c) {
      std::string v = std::to_string(d[c][r]);
      out += " " + std::string(width - v.size(), ' ') + v + " |";
    }
    out += "\n";
  }
  return out + border(cells_in_row(height - 1));
}

bool columns_below(const Tableau& T, const Permutation& w) {
  for (const auto& c : T.columns())
    if (vanishes(c, w)) return false;
  return true;
}

std::vector<Tableau> enumerate_ssyt1(int n, const std::optional<Permutation>& w) {
  std::vector<Tableau> out;
  for (const auto& I : all_index_sets(n))
    if (!w || !vanishes(I, *w)) out.emplace_back(std::vector<IndexSet>{I}, TableauKind::ssyt);
  return out;
}

std::vector<Tableau> enumerate_ssyt2(int n, const std::optional<Permutation>& w) {
  std::vector<Tableau> out;
  const auto sets = all_index_sets(n);
  for (const auto& I : sets) {
    if (w && vanishes(I, *w)) continue;
    const auto im = I.members();
    for (const auto& J : sets) {
      if (J.size() > I.size() || (w && vanishes(J, *w))) continue;
      const auto jm = J.members();
      bool ok = true;
      for (std::size_t r = 0; r < jm.size() && ok; ++r) ok = im[r] <= jm[r];
      if (ok) out.emplace_back(std::vector<IndexSet>{I, J}, TableauKind::ssyt);
    }
  }
  return out;
}

Tableau gamma(const Tableau& T, int ell) {
  if (T.kind() != TableauKind::ssyt || T.columns().size() != 2 || !T.is_semistandard())
    throw std::invalid_argument("gamma takes a two-column semistandard tableau");
  const int n = T.n();
  auto a = T.columns()[0].members();
  auto b = T.columns()[1].members();
  const std::size_t t = a.size(), s = b.size();
  auto low = [ell](int x) { return x <= ell; };
  std::vector<int> left = a, right = b;

  if (s == 1 && t >= 2) {
    bool rest_high = !low(b[0]);
    for (std::size_t k = 1; k < t; ++k) rest_high = rest_high && !low(a[k]);
    if (low(a[0]) && rest_high) {
      if (a[1] < b[0] && (t < 3 || b[0] < a[2])) {
        left[1] = b[0];
        right = {a[1]};
      } else if (b[0] < a[1]) {
        left[0] = b[0];
        right = {a[0]};
      }
    }
  } else if (s >= 2) {
    // Only the first two rows move; the pattern is read off a1, a2, b1, b2.
    const bool la1 = low(a[0]), la2 = low(a[1]), lb1 = low(b[0]), lb2 = low(b[1]);
    const bool only_a1 = la1 && !la2 && !lb1 && !lb2;
    const bool three_low = la1 && la2 && lb1 && !lb2;
    if ((only_a1 || three_low) && b[0] < a[1]) {
      left[0] = b[0];
      right[0] = a[0];
    }
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return Tableau({IndexSet::from_members(n, left), IndexSet::from_members(n, right)}, TableauKind::matching_field,
                 ell);
}

bool row_equal(const Tableau& a, const Tableau& b) {
  if (a.shape() != b.shape()) return false;
  return a.rows() == b.rows();
}

long long standard_monomial_count_deg2(int n, int ell, const Permutation& w) {
  if (w.size() != n) throw std::invalid_argument("permutation length differs from n");
  const BlockDiagonalMF mf(n, ell);
  std::vector<IndexSet> alive;
  for (const auto& J : all_index_sets(n))
    if (!vanishes(J, w)) alive.push_back(J);
  std::set<std::map<GridCell, int>> images;
  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t j = i; j < alive.size(); ++j) {
      const IndexSet pair[] = {alive[i], alive[j]};
      images.insert(phi(mf, pair).exponents());
    }
  return static_cast<long long>(images.size());
}

namespace {

Permutation blocks(const std::vector<std::vector<int>>& parts, int n) {
  std::vector<int> e;
  std::vector<bool> used(n + 1, false);
  for (auto p : parts) {
    std::sort(p.begin(), p.end());
    for (int v : p) {
      e.push_back(v);
      used[v] = true;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) e.push_back(v);
  return Permutation(std::move(e));
}

void check_chain_input(const Tableau& T, int n) {
  if (T.kind() != TableauKind::ssyt || !T.is_semistandard())
    throw std::invalid_argument("defining chains are built for semistandard tableaux");
  if (T.n() != n) throw std::invalid_argument("ambient size mismatch");
  if (T.columns().size() > 2) throw CapabilityError("defining chains are computed for at most two columns");
}

// The element of `cands` lying below all others, if there is one.
std::optional<std::size_t> bruhat_minimum(const std::vector<Permutation>& cands) {
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < cands.size() && below_all; ++j) below_all = bruhat_leq(cands[i], cands[j]);
    if (below_all) return i;
  }
  return std::nullopt;
}

}  // namespace

DefiningChain min_defining_chain2_exhaustive(const Tableau& T, int n) {
  check_chain_input(T, n);
  const auto I = T.columns()[0].members();
  DefiningChain chain;
  chain.perms.push_back(blocks({I}, n));
  if (T.columns().size() == 1) return chain;
  const IndexSet& Jset = T.columns()[1];
  const auto J = Jset.members();
  std::vector<int> pool;
  for (int v : I)
    if (!Jset.contains(v)) pool.push_back(v);
  std::vector<Permutation> cands;
  std::vector<std::vector<int>> tildes;
  for (std::uint32_t sub = 0; sub < (1u << pool.size()); ++sub) {
    std::vector<int> tilde;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (sub >> k & 1u) tilde.push_back(pool[k]);
    Permutation v = blocks({J, tilde}, n);
    if (!bruhat_leq(chain.perms[0], v)) continue;
    if (std::find(cands.begin(), cands.end(), v) != cands.end()) continue;
    cands.push_back(v);
    tildes.push_back(tilde);
  }
  auto m = bruhat_minimum(cands);
  if (!m) throw std::logic_error("no minimum defining chain found");
  chain.perms.push_back(cands[*m]);
  chain.tilde_I = tildes[*m];
  return chain;
}

DefiningChain min_defining_chain2(const Tableau& T, int n) {
  check_chain_input(T, n);
  const auto I = T.columns()[0].members();
  DefiningChain chain;
  chain.perms.push_back(blocks({I}, n));
  if (T.columns().size() == 1) return chain;
  const auto J = T.columns()[1].members();
  if (J.size() == I.size()) {
    chain.perms.push_back(blocks({J}, n));
    return chain;
  }
  if (J.size() > 1) return min_defining_chain2_exhaustive(T, n);
  // Single-entry right column: v_2 = (j_1, I \ i_s, rest) with i_s the
  // largest entry of I not exceeding j_1.
  const int j1 = J[0];
  std::size_t s = 0;
  for (std::size_t k = 0; k < I.size(); ++k)
    if (I[k] <= j1) s = k;
  std::vector<int> tilde;
  for (std::size_t k = 0; k < I.size(); ++k)
    if (k != s) tilde.push_back(I[k]);
  chain.perms.push_back(blocks({J, tilde}, n));
  chain.tilde_I = tilde;
  return chain;
}

bool is_standard(const Tableau& T, const Permutation& w) {
  if (T.columns().size() > 2) throw CapabilityError("standardness is decided for at most two columns");
  const auto chain = min_defining_chain2(T, w.size());
  return bruhat_leq(chain.perms.back(), w);
}

BijectionReport verify_bijection(int n, int ell, const Permutation& w) {
  if (w.size() != n) throw std::invalid_argument("permutation length differs from n");
  const BlockDiagonalMF mf(n, ell);
  BijectionReport rep;
  rep.w_in_P = in_P(w, ell);
  auto fail = [&](const std::string& what) {
    rep.pass = false;
    if (rep.failures.size() < 20) rep.failures.push_back(what);
  };
  auto image_key = [&](const Tableau& M) { return phi(mf, M.columns()).exponents(); };

  // Shape, content and the rows below the second are kept; images are
  // distinct row classes.
  std::map<std::map<GridCell, int>, Tableau> preimage;
  for (const auto& T : enumerate_ssyt2(n)) {
    const Tableau G = gamma(T, ell);
    if (G.shape() != T.shape()) fail("shape changed for " + T.render());
    std::vector<int> before, after;
    for (const auto& c : T.columns()) for (int v : c.members()) before.push_back(v);
    for (const auto& c : G.columns()) for (int v : c.members()) after.push_back(v);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    if (before != after) fail("content changed for " + T.render());
    const auto tr = T.rows(), gr = G.rows();
    for (std::size_t r = 2; r < tr.size(); ++r)
      if (tr[r] != gr[r]) fail("row " + std::to_string(r + 1) + " changed for " + T.render());
    auto [it, fresh] = preimage.emplace(image_key(G), T);
    if (!fresh) fail("two tableaux share a row class:\n" + it->second.render() + T.render());
  }

  // Every two-column matching-field tableau is row-equal to some image.
  const auto sets = all_index_sets(n);
  std::map<std::map<GridCell, int>, bool> classes;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i; j < sets.size(); ++j) {
      const IndexSet pair[] = {sets[i], sets[j]};
      auto key = phi(mf, pair).exponents();
      if (!preimage.count(key)) fail("row class of P_" + sets[i].to_string() + "*P_" + sets[j].to_string() + " not hit");
      const bool alive = !vanishes(sets[i], w) && !vanishes(sets[j], w);
      classes[key] = classes[key] || alive;
    }

  rep.ssyt_count = static_cast<long long>(enumerate_ssyt2(n, w).size());
  rep.row_class_count = standard_monomial_count_deg2(n, ell, w);
  for (const auto& T : enumerate_ssyt2(n))
    if (is_standard(T, w)) ++rep.standard_count;
  if (!rep.w_in_P) return rep;

  for (const auto& [key, T] : preimage) {
    const Tableau G = gamma(T, ell);
    if (columns_below(T, w) != columns_below(G, w))
      fail("columns below " + w.to_string() + " not preserved for " + T.render());
  }
  for (const auto& [key, alive] : classes)
    if (alive && preimage.count(key) && !columns_below(preimage.at(key), w))
      fail("surviving row class has a preimage not below " + w.to_string() + ":\n" + preimage.at(key).render());
  if (rep.ssyt_count != rep.row_class_count)
    fail("count mismatch: " + std::to_string(rep.ssyt_count) + " tableaux vs " +
         std::to_string(rep.row_class_count) + " row classes");
  return rep;
}

}  // namespace mfl
