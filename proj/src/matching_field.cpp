#include "mfl/matching_field.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfl {

BlockDiagonalMF::BlockDiagonalMF(int n, int ell) : n_(n), ell_(ell) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  if (ell < 0 || ell > n - 1) throw std::invalid_argument("ell must lie in 0..n-1");
}

int BlockDiagonalMF::low_count(const IndexSet& J) const {
  return std::popcount(J.mask() & ((1u << ell_) - 1u));
}

ColumnOrder corrected_rule(const BlockDiagonalMF& mf, const IndexSet& J) {
  return (J.size() >= 2 && mf.low_count(J) == 1) ? ColumnOrder::swap12 : ColumnOrder::identity;
}

ColumnOrder printed_rule(const BlockDiagonalMF& mf, const IndexSet& J) {
  return (J.size() == 1 || mf.low_count(J) >= 2) ? ColumnOrder::identity : ColumnOrder::swap12;
}

ColumnSigma sigma(const BlockDiagonalMF& mf, const IndexSet& J) {
  ColumnOrder o = corrected_rule(mf, J);
  return {o, o == ColumnOrder::swap12 ? -1 : 1};
}

namespace {
std::vector<int> display_for(ColumnOrder o, const IndexSet& J) {
  std::vector<int> d = J.members();
  if (o == ColumnOrder::swap12) std::swap(d[0], d[1]);
  return d;
}
}  // namespace

std::vector<int> column_display(const BlockDiagonalMF& mf, const IndexSet& J) {
  return display_for(corrected_rule(mf, J), J);
}

std::string display_string(const BlockDiagonalMF& mf, const IndexSet& J) {
  std::string s;
  auto d = column_display(mf, J);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (mf.n() > 9 && i) s += ',';
    s += std::to_string(d[i]);
  }
  return s;
}

std::string WeightMatrix::to_csv() const {
  std::ostringstream out;
  out << "row";
  for (int j = 1; j <= n_; ++j) out << ",c" << j;
  out << '\n';
  for (int r = 1; r <= n_; ++r) {
    out << r;
    for (int j = 1; j <= n_; ++j) out << ',' << at(r, j);
    out << '\n';
  }
  return out.str();
}

WeightMatrix weight_matrix(const BlockDiagonalMF& mf) {
  const int n = mf.n(), ell = mf.ell();
  WeightMatrix m(n);
  for (int j = 1; j <= n; ++j) {
    m.at(2, j) = j <= ell ? ell + 1 - j : n + ell + 1 - j;
    for (int r = 3; r <= n; ++r) m.at(r, j) = (r - 1) * (n + 1 - j);
  }
  return m;
}

int plucker_weight(const BlockDiagonalMF& mf, const IndexSet& J) {
  const int n = mf.n(), ell = mf.ell();
  auto j = J.members();
  const int s = static_cast<int>(j.size());
  if (s == 1) return 0;
  int tail = 0;
  for (int k = 3; k <= s; ++k) tail += (k - 1) * (n + 1 - j[k - 1]);
  switch (mf.low_count(J)) {
    case 0: return (n + ell + 1 - j[1]) + tail;
    case 1: return (ell + 1 - j[0]) + tail;
    default: return (ell + 1 - j[1]) + tail;
  }
}

namespace {
int placement_weight(const WeightMatrix& m, const std::vector<int>& placed) {
  int w = 0;
  for (std::size_t r = 0; r < placed.size(); ++r) w += m.at(static_cast<int>(r) + 1, placed[r]);
  return w;
}
}  // namespace

int plucker_weight_min(const BlockDiagonalMF& mf, const IndexSet& J) {
  const WeightMatrix m = weight_matrix(mf);
  std::vector<int> p = J.members();
  int best = INT_MAX;
  do best = std::min(best, placement_weight(m, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

CoherenceReport verify_coherence(const BlockDiagonalMF& mf, const SigmaRule& rule) {
  CoherenceReport rep;
  const WeightMatrix m = weight_matrix(mf);
  for (const auto& J : all_index_sets(mf.n())) {
    ++rep.checked;
    const std::vector<int> chosen = display_for(rule(mf, J), J);
    std::vector<int> p = J.members();
    int best = INT_MAX, hits = 0;
    std::vector<int> argmin;
    do {
      int w = placement_weight(m, p);
      if (w < best) {
        best = w;
        hits = 1;
        argmin = p;
      } else if (w == best) {
        ++hits;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    if (hits != 1 || argmin != chosen) {
      rep.pass = false;
      rep.counterexample = J;
      std::ostringstream d;
      d << "J=" << J.to_string() << " min weight " << best;
      if (hits != 1) d << " attained " << hits << " times";
      d << ", minimum at (";
      for (std::size_t i = 0; i < argmin.size(); ++i) d << (i ? "," : "") << argmin[i];
      d << "), rule gives (";
      for (std::size_t i = 0; i < chosen.size(); ++i) d << (i ? "," : "") << chosen[i];
      d << ") weight " << placement_weight(m, chosen);
      rep.detail = d.str();
      return rep;
    }
  }
  return rep;
}

void GridMonomial::multiply(GridCell cell, int exponent) {
  if (exponent <= 0) return;
  exponents_[cell] += exponent;
}

GridMonomial GridMonomial::operator*(const GridMonomial& o) const {
  GridMonomial r = *this;
  for (const auto& [c, e] : o.exponents_) r.exponents_[c] += e;
  r.sign_ = sign_ * o.sign_;
  return r;
}

int GridMonomial::degree() const {
  int d = 0;
  for (const auto& [c, e] : exponents_) d += e;
  return d;
}

std::vector<std::string> GridMonomial::factors() const {
  std::vector<std::string> out;
  for (const auto& [c, e] : exponents_)
    out.push_back("x[" + std::to_string(c.row) + "][" + std::to_string(c.col) + "]^" + std::to_string(e));
  return out;
}

std::string GridMonomial::to_string() const {
  std::string s = sign_ < 0 ? "-" : "";
  auto f = factors();
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "*" : "") + f[i];
  return f.empty() ? s + "1" : s;
}

GridMonomial phi(const BlockDiagonalMF& mf, const IndexSet& J) {
  if (J.ambient() != mf.n()) throw std::invalid_argument("ambient size mismatch");
  GridMonomial g;
  auto d = column_display(mf, J);
  for (std::size_t r = 0; r < d.size(); ++r) g.multiply({static_cast<int>(r) + 1, d[r]});
  if (sigma(mf, J).sign < 0) g.negate();
  return g;
}

GridMonomial phi(const BlockDiagonalMF& mf, std::span<const IndexSet> monomial) {
  GridMonomial g;
  for (const auto& J : monomial) g = g * phi(mf, J);
  return g;
}

}  // namespace mfl
