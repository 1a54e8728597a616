#include "cochain/barcobar.hpp"

#include "cochain/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace cochain {

namespace {

void add_to(SparseVec& v, int k, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

template <class Key>
void add_to(std::map<Key, Integer>& v, const Key& k, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = v.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// Nonzero homology of a weight-graded complex given on a basis, plus a unit
// line in (0,0) when `with_unit`.
BigradedTable strand_table(const std::vector<BasisElement>& basis, const std::vector<SparseVec>& diff,
                           int max_weight, bool with_unit) {
  BigradedTable out;
  if (with_unit) out[{0, 0}] = FgAbGroup::free(1);
  std::map<std::pair<int, int>, std::vector<int>> strands;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].weight <= max_weight) strands[{basis[i].topdeg, basis[i].weight}].push_back(int(i));
  auto matrix = [&](int t, int w) {
    auto src = strands.find({t, w});
    auto tgt = strands.find({t - 1, w});
    const std::vector<int> none;
    const auto& cols = src == strands.end() ? none : src->second;
    const auto& rows = tgt == strands.end() ? none : tgt->second;
    IntMatrix m = int_zeros(Index(rows.size()), Index(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, c] : diff[std::size_t(cols[j])]) {
        auto it = std::find(rows.begin(), rows.end(), k);
        if (it == rows.end()) throw GradingError("differential leaves its strand");
        m(it - rows.begin(), Index(j)) += c;
      }
    return m;
  };
  for (const auto& [tw, idx] : strands) {
    auto [t, w] = tw;
    FgAbGroup g = homology_at(matrix(t + 1, w), matrix(t, w));
    if (!g.is_trivial()) out[tw] = g;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- AlgebraData

SparseVec AlgebraData::product(int a, int b) const {
  auto it = mult.find({a, b});
  return it == mult.end() ? SparseVec{} : it->second;
}

void AlgebraData::validate() const {
  const int N = int(basis.size());
  if (diff.size() != basis.size()) throw ValidationError("algebra shape", "one differential per basis element");
  for (const auto& b : basis)
    if (b.weight < 1 || b.weight > max_weight)
      throw ValidationError("formally connected", "basis element " + b.name + " has weight outside [1, cutoff]");
  for (int a = 0; a < N; ++a)
    for (const auto& [k, c] : diff[std::size_t(a)])
      if (basis[std::size_t(k)].topdeg != basis[std::size_t(a)].topdeg - 1 ||
          basis[std::size_t(k)].weight != basis[std::size_t(a)].weight)
        throw GradingError("d(" + basis[std::size_t(a)].name + ") is not homogeneous of degree -1");
  auto d_of = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [k, c] : v)
      for (const auto& [j, x] : diff[std::size_t(k)]) add_to(out, j, c * x);
    return out;
  };
  auto mul = [&](const SparseVec& u, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, x] : u)
      for (const auto& [j, y] : v)
        for (const auto& [k, z] : product(i, j)) add_to(out, k, x * y * z);
    return out;
  };
  for (int a = 0; a < N; ++a)
    if (!d_of(diff[std::size_t(a)]).empty())
      throw ValidationError("d^2 = 0", "fails on " + basis[std::size_t(a)].name);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto& A = basis[std::size_t(a)];
      const auto& B = basis[std::size_t(b)];
      if (A.weight + B.weight > max_weight) continue;
      for (const auto& [k, c] : product(a, b))
        if (basis[std::size_t(k)].topdeg != A.topdeg + B.topdeg ||
            basis[std::size_t(k)].weight != A.weight + B.weight)
          throw GradingError("product " + A.name + "*" + B.name + " is not homogeneous");
      SparseVec lhs = d_of(product(a, b));
      SparseVec rhs = mul(diff[std::size_t(a)], SparseVec{{b, 1}});
      for (const auto& [k, c] : mul(SparseVec{{a, 1}}, diff[std::size_t(b)]))
        add_to(rhs, k, parity_sign(A.topdeg) * c);
      if (lhs != rhs) throw ValidationError("Leibniz rule", "fails on " + A.name + ", " + B.name);
      for (int c = 0; c < N; ++c) {
        if (A.weight + B.weight + basis[std::size_t(c)].weight > max_weight) continue;
        if (mul(product(a, b), SparseVec{{c, 1}}) != mul(SparseVec{{a, 1}}, product(b, c)))
          throw ValidationError("associativity", "fails on " + A.name + ", " + B.name + ", " +
                                                     basis[std::size_t(c)].name);
      }
    }
}

AlgebraData AlgebraData::trivial(int max_weight) {
  AlgebraData A;
  A.max_weight = max_weight;
  return A;
}

AlgebraData AlgebraData::exterior(int max_weight) {
  AlgebraData A;
  A.max_weight = max_weight;
  if (max_weight >= 1) {
    A.basis.push_back({"e", 0, 1});
    A.diff.emplace_back();
  }
  return A;
}

AlgebraData AlgebraData::from_free_dga(const FreeDga& D, int max_weight) {
  AlgebraData A;
  A.max_weight = max_weight;
  std::map<Word, int> index;
  std::vector<Word> words;
  for (int w = 1; w <= max_weight; ++w)
    for (const auto& [t, ws] : D.words(w))
      for (const auto& word : ws) {
        index[word] = int(words.size());
        words.push_back(word);
        A.basis.push_back({D.to_string(NcPoly::word(word)), t, w});
      }
  for (const auto& word : words) {
    SparseVec v;
    for (const auto& [u, c] : D.differential(NcPoly::word(word)).terms) add_to(v, index.at(u), c);
    A.diff.push_back(v);
  }
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (A.basis[a].weight + A.basis[b].weight > max_weight) continue;
      Word w = words[a];
      w.insert(w.end(), words[b].begin(), words[b].end());
      A.mult[{int(a), int(b)}] = SparseVec{{index.at(w), 1}};
    }
  return A;
}

BigradedTable homology_table(const AlgebraData& A) {
  return strand_table(A.basis, A.diff, A.max_weight, true);
}

// ---------------------------------------------------------------- CoalgebraData

void CoalgebraData::validate() const {
  const int N = int(basis.size());
  if (coproduct.size() != basis.size() || diff.size() != basis.size())
    throw ValidationError("coalgebra shape", "one coproduct and differential per basis element");
  for (const auto& b : basis)
    if (b.weight < 1) throw ValidationError("formally connected", b.name + " has weight < 1");
  auto ex = [&](int k) -> const BasisElement& { return basis[std::size_t(k)]; };
  for (int c = 0; c < N; ++c) {
    for (const auto& [k, x] : diff[std::size_t(c)])
      if (ex(k).topdeg != ex(c).topdeg - 1 || ex(k).weight != ex(c).weight)
        throw GradingError("d(" + ex(c).name + ") is not homogeneous of degree -1");
    for (const auto& [ij, x] : coproduct[std::size_t(c)])
      if (ex(ij.first).topdeg + ex(ij.second).topdeg != ex(c).topdeg ||
          ex(ij.first).weight + ex(ij.second).weight != ex(c).weight)
        throw GradingError("coproduct of " + ex(c).name + " is not homogeneous");
  }
  for (int c = 0; c < N; ++c) {
    SparseVec dd;
    for (const auto& [k, x] : diff[std::size_t(c)])
      for (const auto& [j, y] : diff[std::size_t(k)]) add_to(dd, j, x * y);
    if (!dd.empty()) throw ValidationError("d^2 = 0", "fails on " + ex(c).name);

    std::map<std::tuple<int, int, int>, Integer> left, right;
    for (const auto& [ij, x] : coproduct[std::size_t(c)]) {
      for (const auto& [ab, y] : coproduct[std::size_t(ij.first)])
        add_to(left, std::tuple{ab.first, ab.second, ij.second}, x * y);
      for (const auto& [ab, y] : coproduct[std::size_t(ij.second)])
        add_to(right, std::tuple{ij.first, ab.first, ab.second}, x * y);
    }
    if (left != right) throw ValidationError("coassociativity", "fails on " + ex(c).name);

    std::map<std::pair<int, int>, Integer> lhs, rhs;
    for (const auto& [k, x] : diff[std::size_t(c)])
      for (const auto& [ij, y] : coproduct[std::size_t(k)]) add_to(lhs, ij, x * y);
    for (const auto& [ij, x] : coproduct[std::size_t(c)]) {
      for (const auto& [k, y] : diff[std::size_t(ij.first)]) add_to(rhs, std::pair{k, ij.second}, x * y);
      for (const auto& [k, y] : diff[std::size_t(ij.second)])
        add_to(rhs, std::pair{ij.first, k}, parity_sign(ex(ij.first).topdeg) * x * y);
    }
    if (lhs != rhs) throw ValidationError("coderivation", "fails on " + ex(c).name);
  }
}

bool operator==(const CoalgebraData& a, const CoalgebraData& b) {
  if (a.basis.size() != b.basis.size()) return false;
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    if (a.basis[i].topdeg != b.basis[i].topdeg || a.basis[i].weight != b.basis[i].weight) return false;
  return a.coproduct == b.coproduct && a.diff == b.diff;
}

CoalgebraData skeleton_coalgebra(int n) {
  if (n < 0) throw DomainError("skeleton coalgebra needs n >= 0");
  CoalgebraData C;
  for (int k = 1; k <= n; ++k) {
    C.basis.push_back({"x" + std::to_string(k), k, k});
    std::map<std::pair<int, int>, Integer> delta;
    for (int i = 1; i < k; ++i) delta[{i - 1, k - i - 1}] = 1;
    C.coproduct.push_back(delta);
    C.diff.emplace_back();
  }
  C.validate();
  return C;
}

// ---------------------------------------------------------------- bar / cobar

CoalgebraData bar(const AlgebraData& A, int max_weight) {
  if (max_weight > A.max_weight)
    throw DomainError("bar cutoff " + std::to_string(max_weight) + " exceeds the algebra cutoff " +
                      std::to_string(A.max_weight));
  A.validate();
  const auto& ab = A.basis;
  std::vector<Word> tensors;
  Word cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (!cur.empty()) tensors.push_back(cur);
    for (std::size_t k = 0; k < ab.size(); ++k) {
      if (ab[k].weight > left) continue;
      cur.push_back(int(k));
      self(self, left - ab[k].weight);
      cur.pop_back();
    }
  };
  rec(rec, max_weight);
  auto weight = [&](const Word& t) {
    int w = 0;
    for (int k : t) w += ab[std::size_t(k)].weight;
    return w;
  };
  auto topdeg = [&](const Word& t) {
    int d = 0;
    for (int k : t) d += ab[std::size_t(k)].topdeg + 1;
    return d;
  };
  std::sort(tensors.begin(), tensors.end(), [&](const Word& x, const Word& y) {
    return std::tuple(weight(x), topdeg(x), x) < std::tuple(weight(y), topdeg(y), y);
  });
  std::map<Word, int> index;
  for (std::size_t i = 0; i < tensors.size(); ++i) index[tensors[i]] = int(i);

  CoalgebraData C;
  for (const auto& t : tensors) {
    std::string name = "[";
    for (std::size_t i = 0; i < t.size(); ++i) name += (i ? "|" : "") + ab[std::size_t(t[i])].name;
    C.basis.push_back({name + "]", topdeg(t), weight(t)});

    SparseVec d;
    int eps = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const int s = parity_sign(eps);
      for (const auto& [b, c] : A.diff[std::size_t(t[i])]) {
        Word u = t;
        u[i] = b;
        add_to(d, index.at(u), -s * c);
      }
      if (i + 1 < t.size())
        for (const auto& [b, c] : A.product(t[i], t[i + 1])) {
          Word u(t.begin(), t.begin() + std::ptrdiff_t(i));
          u.push_back(b);
          u.insert(u.end(), t.begin() + std::ptrdiff_t(i) + 2, t.end());
          add_to(d, index.at(u), s * parity_sign(ab[std::size_t(t[i])].topdeg + 1) * c);
        }
      eps += ab[std::size_t(t[i])].topdeg + 1;
    }
    C.diff.push_back(d);

    std::map<std::pair<int, int>, Integer> delta;
    for (std::size_t cut = 1; cut < t.size(); ++cut) {
      Word l(t.begin(), t.begin() + std::ptrdiff_t(cut)), r(t.begin() + std::ptrdiff_t(cut), t.end());
      add_to(delta, std::pair{index.at(l), index.at(r)}, Integer(1));
    }
    C.coproduct.push_back(delta);
  }
  C.validate();
  return C;
}

CoalgebraData bar(const AlgebraData& A) { return bar(A, A.max_weight); }

FreeDga cobar(const CoalgebraData& C) {
  C.validate();
  std::vector<Generator> gens;
  std::vector<NcPoly> diff;
  for (const auto& b : C.basis) gens.push_back({"s^-1" + b.name, b.topdeg - 1, b.weight});
  for (std::size_t c = 0; c < C.basis.size(); ++c) {
    NcPoly d;
    for (const auto& [k, x] : C.diff[c]) d.add({k}, -x);
    for (const auto& [ij, x] : C.coproduct[c])
      d.add({ij.first, ij.second}, parity_sign(C.basis[std::size_t(ij.first)].topdeg - 1) * x);
    diff.push_back(d);
  }
  return FreeDga(gens, diff);
}

BigradedTable bar_homology_table(const CoalgebraData& C, int max_weight) {
  return strand_table(C.basis, C.diff, max_weight, true);
}

BarCobarReport bar_cobar_homology_check(const AlgebraData& A, int max_weight) {
  BarCobarReport R;
  R.max_weight = max_weight;
  for (const auto& [tw, g] : homology_table(A))
    if (tw.second <= max_weight) R.algebra[tw] = g;
  R.cobar_bar = homology_table(cobar(bar(A, max_weight)), max_weight);
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, g] : R.algebra) keys.insert(k);
  for (const auto& [k, g] : R.cobar_bar) keys.insert(k);
  for (const auto& k : keys) {
    auto a = R.algebra.find(k), b = R.cobar_bar.find(k);
    FgAbGroup ga = a == R.algebra.end() ? FgAbGroup{} : a->second;
    FgAbGroup gb = b == R.cobar_bar.end() ? FgAbGroup{} : b->second;
    if (!(ga == gb)) R.mismatches.push_back(k);
  }
  return R;
}

}  // namespace cochain
