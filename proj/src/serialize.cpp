#include "cochain/serialize.hpp"

#include "cochain/errors.hpp"

#include <set>

namespace cochain {

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~')
      k += "~0";
    else if (c == '/')
      k += "~1";
    else
      k += c;
  }
  return ptr + "/" + k;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw InputError(ptr, "expected an object");
}

void expect_array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw InputError(ptr, "expected an array");
}

const json& require(const json& j, const std::string& key, const std::string& ptr) {
  expect_object(j, ptr);
  auto it = j.find(key);
  if (it == j.end()) throw InputError(child(ptr, key), "missing required field");
  return *it;
}

int int_from_json(const json& j, const std::string& ptr) {
  Integer v = integer_from_json(j, ptr);
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw InputError(ptr, "integer out of range");
  return int(v);
}

int int_key(const std::string& key, const std::string& ptr) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InputError(child(ptr, key), "key is not an integer");
  }
}

Bidegree pair_key(const std::string& key, const std::string& ptr) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw InputError(child(ptr, key), "key must look like \"a,b\"");
  return {int_key(key.substr(0, comma), child(ptr, key)), int_key(key.substr(comma + 1), child(ptr, key))};
}

std::string pair_str(const Bidegree& b) { return std::to_string(b.first) + "," + std::to_string(b.second); }

template <class F>
auto rethrow_invalid(const std::string& ptr, F&& body) {
  try {
    return body();
  } catch (const NotAComplexError& e) {
    throw ValidationError("d^2 = 0", std::string(ptr.empty() ? "/" : ptr) + ": " + e.what());
  } catch (const DimensionError& e) {
    throw InputError(ptr, e.what());
  } catch (const ContainmentError& e) {
    throw InputError(ptr, e.what());
  }
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- scalars, matrices, groups

json to_json(const Integer& v) { return v.str(); }

Integer integer_from_json(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(ptr, e.what());
    }
  }
  throw InputError(ptr, "expected an integer (number or decimal string)");
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j, Index rows, Index cols, const std::string& ptr) {
  expect_array(j, ptr);
  if (Index(j.size()) != rows)
    throw InputError(ptr, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  IntMatrix m = int_zeros(rows, cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = child(ptr, i);
    expect_array(j[i], rp);
    if (Index(j[i].size()) != cols)
      throw InputError(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(j[i].size()));
    for (std::size_t k = 0; k < j[i].size(); ++k) m(Index(i), Index(k)) = integer_from_json(j[i][k], child(rp, k));
  }
  return m;
}

json to_json(const FgAbGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(d.str());
  return json{{"rank", g.free_rank}, {"torsion", t}};
}

FgAbGroup group_from_json(const json& j, const std::string& ptr) {
  const int rank = int_from_json(require(j, "rank", ptr), child(ptr, "rank"));
  if (rank < 0) throw InputError(child(ptr, "rank"), "rank must be >= 0");
  std::vector<Integer> tors;
  if (j.contains("torsion")) {
    const json& t = j["torsion"];
    expect_array(t, child(ptr, "torsion"));
    for (std::size_t i = 0; i < t.size(); ++i) {
      Integer d = integer_from_json(t[i], child(child(ptr, "torsion"), i));
      if (d < 2) throw InputError(child(child(ptr, "torsion"), i), "torsion entries must be >= 2");
      if (!tors.empty() && d % tors.back() != 0)
        throw InputError(child(child(ptr, "torsion"), i), "torsion must form a divisor chain");
      tors.push_back(d);
    }
  }
  return FgAbGroup{rank, tors};
}

json to_json(const GradedGroup& G) {
  json o = json::object();
  for (const auto& [n, g] : G) o[std::to_string(n)] = to_json(g);
  return o;
}

GradedGroup graded_group_from_json(const json& j, const std::string& ptr) {
  expect_object(j, ptr);
  GradedGroup G;
  for (const auto& [k, v] : j.items()) G[int_key(k, ptr)] = group_from_json(v, child(ptr, k));
  return G;
}

// ---------------------------------------------------------------- complexes

json to_json(const Complex& C) {
  json ranks = json::object(), diffs = json::object();
  if (!C.empty())
    for (int n = C.lo(); n <= C.hi(); ++n) {
      ranks[std::to_string(n)] = C.rank(n);
      if (n < C.hi()) diffs[std::to_string(n)] = to_json(C.d(n));
    }
  return json{{"support", json::array({C.lo(), C.hi()})}, {"ranks", ranks}, {"differentials", diffs}};
}

Complex complex_from_json(const json& j, const std::string& ptr) {
  const json& sup = require(j, "support", ptr);
  const std::string sp = child(ptr, "support");
  expect_array(sup, sp);
  if (sup.size() != 2) throw InputError(sp, "support must be [lo, hi]");
  const int lo = int_from_json(sup[0], child(sp, 0)), hi = int_from_json(sup[1], child(sp, 1));
  if (hi < lo) {
    if (j.contains("ranks") && !j["ranks"].empty()) throw InputError(child(ptr, "ranks"), "empty support with ranks");
    return {};
  }
  std::vector<Index> ranks(std::size_t(hi - lo + 1), 0);
  if (j.contains("ranks")) {
    const std::string rp = child(ptr, "ranks");
    expect_object(j["ranks"], rp);
    for (const auto& [k, v] : j["ranks"].items()) {
      const int n = int_key(k, rp);
      if (n < lo || n > hi) throw InputError(child(rp, k), "degree outside the support");
      const int r = int_from_json(v, child(rp, k));
      if (r < 0) throw InputError(child(rp, k), "rank must be >= 0");
      ranks[std::size_t(n - lo)] = r;
    }
  }
  std::vector<IntMatrix> diffs;
  for (int n = lo; n < hi; ++n) diffs.push_back(int_zeros(ranks[std::size_t(n + 1 - lo)], ranks[std::size_t(n - lo)]));
  if (j.contains("differentials")) {
    const std::string dp = child(ptr, "differentials");
    expect_object(j["differentials"], dp);
    for (const auto& [k, v] : j["differentials"].items()) {
      const int n = int_key(k, dp);
      if (n < lo || n >= hi) throw InputError(child(dp, k), "differential outside the support");
      diffs[std::size_t(n - lo)] =
          matrix_from_json(v, ranks[std::size_t(n + 1 - lo)], ranks[std::size_t(n - lo)], child(dp, k));
    }
  }
  return rethrow_invalid(ptr, [&] {
    Complex C(lo, ranks, diffs);
    C.validate();
    return C;
  });
}

json to_json(const ComplexMap& f, bool with_endpoints) {
  json comps = json::object();
  for (const auto& [n, m] : f.components) comps[std::to_string(n)] = to_json(m);
  json o = json::object();
  if (with_endpoints) {
    o["source"] = to_json(f.source);
    o["target"] = to_json(f.target);
  }
  o["components"] = comps;
  return o;
}

ComplexMap map_from_json(const json& j, const Complex& source, const Complex& target, const std::string& ptr) {
  std::map<int, IntMatrix> comps;
  if (j.contains("components")) {
    const std::string cp = child(ptr, "components");
    expect_object(j["components"], cp);
    for (const auto& [k, v] : j["components"].items()) {
      const int n = int_key(k, cp);
      comps[n] = matrix_from_json(v, target.rank(n), source.rank(n), child(cp, k));
    }
  }
  return rethrow_invalid(ptr, [&] {
    ComplexMap f(source, target, comps);
    f.validate();
    return f;
  });
}

ComplexMap map_from_json(const json& j, const std::string& ptr) {
  Complex s = complex_from_json(require(j, "source", ptr), child(ptr, "source"));
  Complex t = complex_from_json(require(j, "target", ptr), child(ptr, "target"));
  return map_from_json(j, s, t, ptr);
}

// ---------------------------------------------------------------- filtrations

json to_json(const FilteredComplex& F) {
  json o = to_json(F.ambient());
  json levels = json::object();
  const Complex& C = F.ambient();
  for (int p = F.p_min(); p <= F.p_max(); ++p) {
    json lv = json::object();
    if (!C.empty())
      for (int n = C.lo(); n <= C.hi(); ++n) {
        const IntMatrix B = F.level(p, n).basis();
        json cols = json::array();
        for (Index c = 0; c < B.cols(); ++c) {
          json col = json::array();
          for (Index i = 0; i < B.rows(); ++i) col.push_back(B(i, c).str());
          cols.push_back(col);
        }
        lv[std::to_string(n)] = cols;
      }
    levels[std::to_string(p)] = lv;
  }
  o["levels"] = levels;
  return o;
}

FilteredComplex filtered_from_json(const json& j, const std::string& ptr) {
  Complex C = complex_from_json(j, ptr);
  const json& L = require(j, "levels", ptr);
  const std::string lp = child(ptr, "levels");
  expect_object(L, lp);
  if (L.empty()) throw InputError(lp, "at least one filtration level is required");
  std::map<int, std::string> keys;
  for (const auto& [k, v] : L.items()) keys[int_key(k, lp)] = k;
  const int p0 = keys.begin()->first, p1 = keys.rbegin()->first;
  std::vector<std::vector<Subgroup>> levels;
  for (int p = p0; p <= p1; ++p) {
    auto kit = keys.find(p);
    if (kit == keys.end()) throw InputError(lp, "filtration level " + std::to_string(p) + " is missing");
    const json& lv = L[kit->second];
    const std::string pp = child(lp, kit->second);
    expect_object(lv, pp);
    std::vector<Subgroup> row;
    if (!C.empty())
      for (int n = C.lo(); n <= C.hi(); ++n) {
        const Index r = C.rank(n);
        IntMatrix gens = int_zeros(r, 0);
        auto it = lv.find(std::to_string(n));
        if (it != lv.end()) {
          const std::string np = child(pp, std::to_string(n));
          expect_array(*it, np);
          gens = int_zeros(r, Index(it->size()));
          for (std::size_t c = 0; c < it->size(); ++c) {
            const std::string cp = child(np, c);
            expect_array((*it)[c], cp);
            if (Index((*it)[c].size()) != r)
              throw InputError(cp, "basis vector must have length " + std::to_string(r));
            for (std::size_t i = 0; i < (*it)[c].size(); ++i)
              gens(Index(i), Index(c)) = integer_from_json((*it)[c][i], child(cp, i));
          }
        }
        row.push_back(Subgroup(r, gens));
      }
    for (const auto& [k, v] : lv.items()) {
      const int n = int_key(k, pp);
      if (C.empty() || n < C.lo() || n > C.hi()) throw InputError(child(pp, k), "degree outside the support");
    }
    levels.push_back(row);
  }
  FilteredComplex F(C, p0, levels);
  F.validate();
  return F;
}

json to_json(const DoubleComplex& D) {
  json cols = json::object(), hor = json::object();
  for (const auto& [i, C] : D.columns) cols[std::to_string(i)] = to_json(C);
  for (const auto& [i, f] : D.horizontal) hor[std::to_string(i)] = to_json(f, false);
  return json{{"columns", cols}, {"horizontal", hor}};
}

DoubleComplex double_from_json(const json& j, const std::string& ptr) {
  DoubleComplex D;
  const json& cols = require(j, "columns", ptr);
  const std::string cp = child(ptr, "columns");
  expect_object(cols, cp);
  for (const auto& [k, v] : cols.items()) D.columns[int_key(k, cp)] = complex_from_json(v, child(cp, k));
  if (j.contains("horizontal")) {
    const std::string hp = child(ptr, "horizontal");
    expect_object(j["horizontal"], hp);
    for (const auto& [k, v] : j["horizontal"].items()) {
      const int i = int_key(k, hp);
      if (!D.columns.count(i) || !D.columns.count(i + 1))
        throw InputError(child(hp, k), "horizontal map needs columns i and i+1");
      D.horizontal[i] = map_from_json(v, D.columns[i], D.columns[i + 1], child(hp, k));
    }
  }
  D.validate();
  return D;
}

json to_json(const GenFilteredComplex& G) {
  json tower = json::object(), maps = json::object();
  for (std::size_t k = 0; k < G.levels.size(); ++k) tower[std::to_string(G.p_min + int(k))] = to_json(G.levels[k]);
  for (std::size_t k = 0; k < G.maps.size(); ++k) maps[std::to_string(G.p_min + int(k))] = to_json(G.maps[k], false);
  return json{{"tower", tower}, {"maps", maps}, {"top", G.constant_top ? "constant" : "zero"}};
}

GenFilteredComplex gen_filtered_from_json(const json& j, const std::string& ptr) {
  GenFilteredComplex G;
  const json& tower = require(j, "tower", ptr);
  const std::string tp = child(ptr, "tower");
  expect_object(tower, tp);
  if (tower.empty()) throw InputError(tp, "tower needs at least one level");
  std::map<int, std::string> keys;
  for (const auto& [k, v] : tower.items()) keys[int_key(k, tp)] = k;
  G.p_min = keys.begin()->first;
  for (int p = G.p_min; p <= keys.rbegin()->first; ++p) {
    if (!keys.count(p)) throw InputError(tp, "tower level " + std::to_string(p) + " is missing");
    G.levels.push_back(complex_from_json(tower[keys[p]], child(tp, keys[p])));
  }
  const std::string mp = child(ptr, "maps");
  const json empty = json::object();
  const json& maps = j.contains("maps") ? j["maps"] : empty;
  expect_object(maps, mp);
  for (int p = G.p_min; p < G.p_max(); ++p) {
    const std::string key = std::to_string(p);
    const auto& s = G.levels[std::size_t(p + 1 - G.p_min)];
    const auto& t = G.levels[std::size_t(p - G.p_min)];
    G.maps.push_back(maps.contains(key) ? map_from_json(maps[key], s, t, child(mp, key)) : ComplexMap::zero(s, t));
  }
  if (j.contains("top")) {
    const json& top = j["top"];
    if (top == "constant")
      G.constant_top = true;
    else if (top != "zero")
      throw InputError(child(ptr, "top"), "top must be \"constant\" or \"zero\"");
  }
  rethrow_invalid(ptr, [&] {
    G.validate();
    return 0;
  });
  return G;
}

// ---------------------------------------------------------------- pages and reports

bool operator==(const PageTable& a, const PageTable& b) {
  if (a.r != b.r || a.entries != b.entries || a.differentials.size() != b.differentials.size()) return false;
  for (const auto& [k, v] : a.differentials) {
    auto it = b.differentials.find(k);
    if (it == b.differentials.end() || it->second.first != v.first || !same_matrix(it->second.second, v.second))
      return false;
  }
  return true;
}

PageTable page_table(const Page& E) {
  PageTable T;
  T.r = E.r;
  for (const auto& [pq, Q] : E.entries) T.entries[pq] = Q.group;
  for (const auto& [pq, h] : E.differentials)
    T.differentials[pq] = {E.target(pq.first, pq.second), h.target.normalize(h.matrix)};
  return T;
}

json to_json(const PageTable& T) {
  json entries = json::object(), diffs = json::object();
  for (const auto& [pq, g] : T.entries) entries[pair_str(pq)] = to_json(g);
  for (const auto& [pq, d] : T.differentials)
    diffs[pair_str(pq)] = json{{"target", pair_str(d.first)}, {"matrix", to_json(d.second)}};
  return json{{"r", T.r}, {"entries", entries}, {"differentials", diffs}};
}

json to_json(const Page& E) { return to_json(page_table(E)); }

PageTable page_table_from_json(const json& j, const std::string& ptr) {
  PageTable T;
  T.r = int_from_json(require(j, "r", ptr), child(ptr, "r"));
  const std::string ep = child(ptr, "entries");
  const json& entries = require(j, "entries", ptr);
  expect_object(entries, ep);
  for (const auto& [k, v] : entries.items()) T.entries[pair_key(k, ep)] = group_from_json(v, child(ep, k));
  if (j.contains("differentials")) {
    const std::string dp = child(ptr, "differentials");
    expect_object(j["differentials"], dp);
    for (const auto& [k, v] : j["differentials"].items()) {
      const Bidegree src = pair_key(k, dp);
      const std::string kp = child(dp, k);
      const json& tj = require(v, "target", kp);
      if (!tj.is_string()) throw InputError(child(kp, "target"), "expected \"p,q\"");
      const Bidegree tgt = pair_key(tj.get<std::string>(), kp);
      auto gs = T.entries.find(src), gt = T.entries.find(tgt);
      if (gs == T.entries.end() || gt == T.entries.end())
        throw InputError(kp, "differential between positions without entries");
      T.differentials[src] = {tgt, matrix_from_json(require(v, "matrix", kp), gt->second.generators(),
                                                    gs->second.generators(), child(kp, "matrix"))};
    }
  }
  return T;
}

bool operator==(const ConvergenceTable& a, const ConvergenceTable& b) {
  if (a.stabilization != b.stabilization || a.infinity_page != b.infinity_page || a.converges != b.converges ||
      !(a.e_infinity == b.e_infinity) || a.rows.size() != b.rows.size())
    return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto &x = a.rows[i], &y = b.rows[i];
    if (x.n != y.n || x.p != y.p || !(x.e_infinity == y.e_infinity) || !(x.graded_homology == y.graded_homology) ||
        x.match != y.match)
      return false;
  }
  return true;
}

ConvergenceTable convergence_table(const ConvergenceReport& R) {
  return {R.stabilization, R.infinity_page, R.converges(), page_table(R.e_infinity), R.rows};
}

json to_json(const ConvergenceTable& T) {
  json rows = json::array();
  for (const auto& r : T.rows)
    rows.push_back(json{{"n", r.n},
                        {"p", r.p},
                        {"e_infinity", to_json(r.e_infinity)},
                        {"graded_homology", to_json(r.graded_homology)},
                        {"match", r.match}});
  return json{{"stabilization", T.stabilization},
              {"infinity_page", T.infinity_page},
              {"converges", T.converges},
              {"e_infinity", to_json(T.e_infinity)},
              {"rows", rows}};
}

json to_json(const ConvergenceReport& R) { return to_json(convergence_table(R)); }

ConvergenceTable convergence_table_from_json(const json& j, const std::string& ptr) {
  ConvergenceTable T;
  T.stabilization = int_from_json(require(j, "stabilization", ptr), child(ptr, "stabilization"));
  T.infinity_page = int_from_json(require(j, "infinity_page", ptr), child(ptr, "infinity_page"));
  const json& c = require(j, "converges", ptr);
  if (!c.is_boolean()) throw InputError(child(ptr, "converges"), "expected a boolean");
  T.converges = c.get<bool>();
  T.e_infinity = page_table_from_json(require(j, "e_infinity", ptr), child(ptr, "e_infinity"));
  const json& rows = require(j, "rows", ptr);
  const std::string rp = child(ptr, "rows");
  expect_array(rows, rp);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string ip = child(rp, i);
    ConvergenceRow r;
    r.n = int_from_json(require(rows[i], "n", ip), child(ip, "n"));
    r.p = int_from_json(require(rows[i], "p", ip), child(ip, "p"));
    r.e_infinity = group_from_json(require(rows[i], "e_infinity", ip), child(ip, "e_infinity"));
    r.graded_homology = group_from_json(require(rows[i], "graded_homology", ip), child(ip, "graded_homology"));
    const json& m = require(rows[i], "match", ip);
    if (!m.is_boolean()) throw InputError(child(ip, "match"), "expected a boolean");
    r.match = m.get<bool>();
    T.rows.push_back(r);
  }
  return T;
}

json to_json(const BigradedTable& T) {
  json o = json::object();
  for (const auto& [tw, g] : T) o[pair_str(tw)] = to_json(g);
  return o;
}

BigradedTable table_from_json(const json& j, const std::string& ptr) {
  expect_object(j, ptr);
  BigradedTable T;
  for (const auto& [k, v] : j.items()) T[pair_key(k, ptr)] = group_from_json(v, child(ptr, k));
  return T;
}

// ---------------------------------------------------------------- dgas

json to_json(const FreeDga& A, const NcPoly& x) {
  json out = json::array();
  for (const auto& [w, c] : x.terms) {
    json word = json::array();
    for (int k : w) word.push_back(A.generators()[std::size_t(k)].name);
    out.push_back(json{{"word", word}, {"coeff", c.str()}});
  }
  return out;
}

NcPoly ncpoly_from_json(const FreeDga& A, const json& j, const std::string& ptr) {
  std::map<std::string, int> names;
  for (std::size_t i = 0; i < A.generators().size(); ++i) names[A.generators()[i].name] = int(i);
  expect_array(j, ptr);
  NcPoly x;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = child(ptr, t);
    const json& wj = require(j[t], "word", tp);
    expect_array(wj, child(tp, "word"));
    Word w;
    for (std::size_t i = 0; i < wj.size(); ++i) {
      const std::string ip = child(child(tp, "word"), i);
      if (!wj[i].is_string()) throw InputError(ip, "expected a generator name");
      auto it = names.find(wj[i].get<std::string>());
      if (it == names.end()) throw InputError(ip, "unknown generator '" + wj[i].get<std::string>() + "'");
      w.push_back(it->second);
    }
    x.add(w, integer_from_json(require(j[t], "coeff", tp), child(tp, "coeff")));
  }
  return x;
}

json to_json(const FreeDga& A) {
  json gens = json::array();
  for (std::size_t i = 0; i < A.generators().size(); ++i) {
    const auto& g = A.generators()[i];
    gens.push_back(json{{"name", g.name},
                        {"topdeg", g.topdeg},
                        {"weight", g.weight},
                        {"d", to_json(A, A.d_generator(int(i)))}});
  }
  return json{{"generators", gens}};
}

FreeDga dga_from_json(const json& j, const std::string& ptr) {
  const json& gj = require(j, "generators", ptr);
  const std::string gp = child(ptr, "generators");
  expect_array(gj, gp);
  std::vector<Generator> gens;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string ip = child(gp, i);
    const json& nj = require(gj[i], "name", ip);
    if (!nj.is_string()) throw InputError(child(ip, "name"), "expected a string");
    Generator g{nj.get<std::string>(), int_from_json(require(gj[i], "topdeg", ip), child(ip, "topdeg")),
                int_from_json(require(gj[i], "weight", ip), child(ip, "weight"))};
    if (g.weight < 1) throw InputError(child(ip, "weight"), "weights must be >= 1");
    if (!seen.insert(g.name).second) throw InputError(child(ip, "name"), "duplicate generator name");
    gens.push_back(g);
  }
  std::vector<NcPoly> zero(gens.size());
  FreeDga names_only(gens, zero);
  std::vector<NcPoly> diff;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string ip = child(gp, i);
    diff.push_back(gj[i].contains("d") ? ncpoly_from_json(names_only, gj[i]["d"], child(ip, "d")) : NcPoly{});
  }
  return FreeDga(gens, diff);
}

json to_json(const BeilinsonComplex& B) {
  json entries = json::object(), diffs = json::object();
  for (const auto& [i, g] : B.entries) entries[std::to_string(i)] = to_json(g);
  for (const auto& [i, h] : B.differentials) diffs[std::to_string(i)] = to_json(h.target.normalize(h.matrix));
  return json{{"n", B.n}, {"entries", entries}, {"differentials", diffs}};
}

}  // namespace cochain
