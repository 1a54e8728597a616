#include "cochain/koszul.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <sstream>

namespace cochain {

// ---------------------------------------------------------------- NcPoly

NcPoly NcPoly::word(Word w, Integer c) {
  NcPoly p;
  p.add(w, c);
  return p;
}

void NcPoly::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

NcPoly operator*(const Integer& c, const NcPoly& a) {
  NcPoly out;
  for (const auto& [w, x] : a.terms) out.add(w, c * x);
  return out;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, x] : a.terms)
    for (const auto& [v, y] : b.terms) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, x * y);
    }
  return out;
}

// ---------------------------------------------------------------- FreeDga

FreeDga::FreeDga(std::vector<Generator> gens, std::vector<NcPoly> diff)
    : gens_(std::move(gens)), diff_(std::move(diff)) {
  if (gens_.size() != diff_.size())
    throw DimensionError("one differential per generator is required");
  for (const auto& g : gens_)
    if (g.weight < 1) throw DomainError("generator " + g.name + " has weight < 1");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (const auto& [w, c] : diff_[i].terms) {
      for (int k : w)
        if (k < 0 || std::size_t(k) >= gens_.size())
          throw DimensionError("differential of " + gens_[i].name + " uses an unknown generator");
      if (weight(w) != gens_[i].weight || topdeg(w) != gens_[i].topdeg - 1)
        throw GradingError("d(" + gens_[i].name + ") is not in bidegree (" +
                           std::to_string(gens_[i].topdeg - 1) + "," +
                           std::to_string(gens_[i].weight) + ")");
    }
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!differential(diff_[i]).is_zero())
      throw ValidationError("d^2 = 0", "d(d(" + gens_[i].name + ")) = " +
                                           to_string(differential(diff_[i])));
}

int FreeDga::topdeg(const Word& w) const {
  int t = 0;
  for (int k : w) t += gens_[std::size_t(k)].topdeg;
  return t;
}

int FreeDga::weight(const Word& w) const {
  int t = 0;
  for (int k : w) t += gens_[std::size_t(k)].weight;
  return t;
}

std::pair<int, int> FreeDga::bidegree(const NcPoly& x) const {
  if (x.is_zero()) throw GradingError("zero has no bidegree");
  std::pair<int, int> b{topdeg(x.terms.begin()->first), weight(x.terms.begin()->first)};
  for (const auto& [w, c] : x.terms)
    if (topdeg(w) != b.first || weight(w) != b.second)
      throw GradingError("element is not homogeneous: " + to_string(x));
  return b;
}

NcPoly FreeDga::differential(const NcPoly& x) const {
  if (!x.is_zero()) bidegree(x);
  NcPoly out;
  for (const auto& [w, c] : x.terms) {
    int sign_exp = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const NcPoly& dg = diff_[std::size_t(w[i])];
      const Integer s = (sign_exp % 2 == 0) ? c : Integer(-c);
      for (const auto& [v, y] : dg.terms) {
        Word t(w.begin(), w.begin() + std::ptrdiff_t(i));
        t.insert(t.end(), v.begin(), v.end());
        t.insert(t.end(), w.begin() + std::ptrdiff_t(i) + 1, w.end());
        out.add(t, s * y);
      }
      sign_exp += gens_[std::size_t(w[i])].topdeg;
    }
  }
  return out;
}

std::map<int, std::vector<Word>> FreeDga::words(int w) const {
  std::map<int, std::vector<Word>> out;
  if (w < 0) return out;
  Word cur;
  auto rec = [&](auto&& self, int left, int t) -> void {
    if (left == 0) {
      out[t].push_back(cur);
      return;
    }
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (gens_[k].weight > left) continue;
      cur.push_back(int(k));
      self(self, left - gens_[k].weight, t + gens_[k].topdeg);
      cur.pop_back();
    }
  };
  rec(rec, w, 0);
  return out;
}

IntMatrix FreeDga::differential_matrix(int t, int w) const {
  auto W = words(w);
  const auto& cols = W[t];
  const auto& rows = W[t - 1];
  std::map<Word, Index> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = Index(i);
  IntMatrix m = int_zeros(Index(rows.size()), Index(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [v, c] : differential(NcPoly::word(cols[j])).terms) m(index.at(v), Index(j)) += c;
  return m;
}

std::string FreeDga::to_string(const NcPoly& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms) {
    Integer a = abs_value(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || w.empty()) os << a.str();
    if (a != 1 && !w.empty()) os << "*";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << gens_[std::size_t(w[i])].name;
  }
  return os.str();
}

bool operator==(const FreeDga& a, const FreeDga& b) {
  if (a.gens_.size() != b.gens_.size()) return false;
  for (std::size_t i = 0; i < a.gens_.size(); ++i)
    if (a.gens_[i].topdeg != b.gens_[i].topdeg || a.gens_[i].weight != b.gens_[i].weight) return false;
  return a.diff_ == b.diff_;
}

FreeDga lambda_n(int n) {
  if (n < 1) throw DomainError("lambda_n needs n >= 1, got " + std::to_string(n));
  std::vector<Generator> gens;
  std::vector<NcPoly> diff;
  for (int k = 1; k <= n; ++k) {
    gens.push_back({"e" + std::to_string(k), k - 1, k});
    NcPoly d;
    for (int i = 1; i < k; ++i) d.add({i - 1, k - i - 1}, (i % 2 == 1) ? 1 : -1);
    diff.push_back(d);
  }
  return FreeDga(gens, diff);
}

// ---------------------------------------------------------------- homology

IntVector StrandHomology::class_of(const NcPoly& cycle) const {
  IntVector v = int_zero_vector(Index(basis.size()));
  for (const auto& [w, c] : cycle.terms) {
    auto it = std::find(basis.begin(), basis.end(), w);
    if (it == basis.end()) throw GradingError("element does not lie in this strand");
    v(it - basis.begin()) += c;
  }
  return presentation.reduce(v);
}

StrandHomology bigraded_homology(const FreeDga& A, int t, int w) {
  StrandHomology H;
  auto W = A.words(w);
  H.basis = W[t];
  H.presentation = homology_presentation(A.differential_matrix(t + 1, w), A.differential_matrix(t, w));
  H.group = H.presentation.group;
  IntMatrix reps = H.presentation.representatives();
  for (Index j = 0; j < reps.cols(); ++j) {
    NcPoly p;
    for (Index i = 0; i < reps.rows(); ++i) p.add(H.basis[std::size_t(i)], reps(i, j));
    H.representatives.push_back(p);
  }
  return H;
}

BigradedTable homology_table(const FreeDga& A, int max_weight) {
  BigradedTable out;
  for (int w = 0; w <= max_weight; ++w) {
    auto W = A.words(w);
    if (W.empty()) continue;
    const int t0 = W.begin()->first, t1 = W.rbegin()->first;
    for (int t = t0; t <= t1; ++t) {
      FgAbGroup g = homology_at(A.differential_matrix(t + 1, w), A.differential_matrix(t, w));
      if (!g.is_trivial()) out[{t, w}] = g;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Massey powers

NcPoly massey_power_element(int n) {
  if (n < 2) throw DomainError("Massey power needs n >= 2, got " + std::to_string(n));
  NcPoly r;
  for (int i = 1; i < n; ++i) r.add({i - 1, n - i - 1}, (i % 2 == 1) ? 1 : -1);
  return r;
}

MasseyReport massey_power(int n) {
  MasseyReport R;
  R.n = n;
  R.r = massey_power_element(n);
  FreeDga before = lambda_n(n - 1);
  R.is_cycle = before.differential(R.r).is_zero();
  StrandHomology H = bigraded_homology(before, n - 2, n);
  R.group = H.group;
  if (R.is_cycle) {
    R.class_coordinates = H.class_of(R.r);
    R.generates = H.group == FgAbGroup::free(1) && R.class_coordinates.size() == 1 &&
                  abs_value(R.class_coordinates(0)) == 1;
  }
  FreeDga after = lambda_n(n);
  R.equals_d_en = after.d_generator(n - 1) == R.r;
  if (R.is_cycle) {
    StrandHomology H2 = bigraded_homology(after, n - 2, n);
    R.vanishes_after = is_zero(H2.class_of(R.r));
  }
  return R;
}

}  // namespace cochain
