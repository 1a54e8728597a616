// cochain: batch front end. Reads JSON descriptions, runs one computation,
// writes JSON (default) or a plain table to stdout.
//
// Exit codes: 0 ok, 1 verification failure, 2 input or validation error.

#include "cochain/acceptance.hpp"
#include "cochain/errors.hpp"
#include "cochain/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cochain;

namespace {

struct Options {
  std::vector<std::string> inputs;
  int r_max = 4;
  int max_weight = 6;
  int n = 2;
  std::string format = "json";
  std::string alg = "exterior";
  std::uint64_t seed = SuiteOptions{}.seed;
  std::vector<std::string> only;
};

json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw InputError("", "exactly one --input is required");
  return o.inputs.front();
}

// A filtered complex, or a double complex taken with its column filtration.
FilteredComplex filtered_input(const std::string& path) {
  json j = read_input(path);
  if (j.is_object() && j.contains("columns")) return piling(double_from_json(j));
  return filtered_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_page(const Page& E) {
  std::cout << "E_" << E.r << "\n";
  if (E.entries.empty()) std::cout << "  (zero)\n";
  for (const auto& [pq, Q] : E.entries)
    std::cout << "  (" << pq.first << "," << pq.second << ")  " << Q.group.to_string() << "\n";
  for (const auto& [pq, h] : E.differentials) {
    auto t = E.target(pq.first, pq.second);
    std::cout << "  d_" << E.r << " (" << pq.first << "," << pq.second << ") -> (" << t.first << "," << t.second
              << ")  " << to_string(h.target.normalize(h.matrix)) << "\n";
  }
}

void print_table(const BigradedTable& T) {
  if (T.empty()) std::cout << "(zero)\n";
  for (const auto& [tw, g] : T) std::cout << "(" << tw.first << "," << tw.second << ")  " << g.to_string() << "\n";
}

void print_graded(const GradedGroup& G) {
  if (G.empty()) std::cout << "(zero)\n";
  for (const auto& [n, g] : G) std::cout << "H^" << n << "  " << g.to_string() << "\n";
}

void emit_pages(const FilteredComplex& F, const Options& o) {
  const auto P = pages(F, o.r_max);
  if (o.format == "table") {
    for (const auto& E : P) print_page(E);
    return;
  }
  json arr = json::array();
  for (const auto& E : P) arr.push_back(to_json(E));
  emit(json{{"pages", arr}});
}

AlgebraData algebra(const Options& o) {
  if (o.alg == "exterior") return AlgebraData::exterior(o.max_weight);
  if (o.alg == "trivial") return AlgebraData::trivial(o.max_weight);
  if (o.alg == "free1") {
    FreeDga A({{"x", 0, 1}}, {NcPoly{}});
    return AlgebraData::from_free_dga(A, o.max_weight);
  }
  return AlgebraData::from_free_dga(lambda_n(2), o.max_weight);
}

int run(CLI::App& app, const Options& o) {
  auto used = [&](const char* a, const char* b = nullptr) {
    auto* s = app.get_subcommand(a);
    if (!s->parsed()) return false;
    return b == nullptr || s->get_subcommand(b)->parsed();
  };

  if (used("ss", "pages")) {
    emit_pages(filtered_input(single_input(o)), o);
  } else if (used("ss", "decalage")) {
    FilteredComplex D = decalage(filtered_input(single_input(o)));
    if (o.format == "table")
      emit_pages(D, o);
    else
      emit(to_json(D));
  } else if (used("ss", "converge")) {
    const ConvergenceReport R = e_infinity_and_convergence(filtered_input(single_input(o)));
    if (o.format == "table") {
      std::cout << "stabilizes at E_" << R.stabilization << " (support bound " << R.infinity_page << ")\n";
      print_page(R.e_infinity);
      for (const auto& row : R.rows)
        std::cout << "n=" << row.n << " p=" << row.p << "  E_inf " << row.e_infinity.to_string() << "  gr H "
                  << row.graded_homology.to_string() << (row.match ? "" : "  MISMATCH") << "\n";
      std::cout << (R.converges() ? "converges" : "does not converge") << "\n";
    } else {
      emit(to_json(R));
    }
    if (!R.converges()) return 1;
  } else if (used("tot")) {
    const DoubleComplex D = double_from_json(read_input(single_input(o)));
    const Complex T = total_complex(D);
    const GradedGroup H = homology(T);
    if (o.format == "table")
      print_graded(H);
    else
      emit(json{{"total", to_json(T)}, {"homology", to_json(H)}});
  } else if (used("day")) {
    if (o.inputs.size() != 2) throw InputError("", "day needs two --input files");
    const FilteredComplex F = filtered_from_json(read_input(o.inputs[0]));
    const FilteredComplex G = filtered_from_json(read_input(o.inputs[1]));
    const FilteredComplex FG = day_convolution(F, G);
    if (o.format == "table") {
      for (int p = FG.p_min(); p <= FG.p_max(); ++p) {
        std::cout << "gr^" << p << "\n";
        print_graded(homology(graded_piece(FG, p)));
      }
    } else {
      emit(to_json(FG));
    }
  } else if (used("koszul", "lambda")) {
    const BigradedTable T = homology_table(lambda_n(o.n), o.max_weight);
    o.format == "table" ? print_table(T) : emit(to_json(T));
  } else if (used("koszul", "homology")) {
    const BigradedTable T = homology_table(dga_from_json(read_input(single_input(o))), o.max_weight);
    o.format == "table" ? print_table(T) : emit(to_json(T));
  } else if (used("koszul", "massey")) {
    const MasseyReport R = massey_power(o.n);
    const FreeDga A = lambda_n(std::max(o.n - 1, 1));
    if (o.format == "table") {
      std::cout << "r_" << R.n << " = " << A.to_string(R.r) << "\n"
                << "cycle: " << (R.is_cycle ? "yes" : "no") << "\n"
                << "H_(" << R.n - 2 << "," << R.n << ") = " << R.group.to_string() << "\n"
                << "generates: " << (R.generates ? "yes" : "no") << "\n"
                << "d(e_" << R.n << ") = r_" << R.n << ": " << (R.equals_d_en ? "yes" : "no") << "\n"
                << "vanishes after adjoining e_" << R.n << ": " << (R.vanishes_after ? "yes" : "no") << "\n";
    } else {
      emit(json{{"n", R.n},
                {"r", to_json(lambda_n(o.n), R.r)},
                {"is_cycle", R.is_cycle},
                {"group", to_json(R.group)},
                {"generates", R.generates},
                {"equals_d_en", R.equals_d_en},
                {"vanishes_after", R.vanishes_after}});
    }
    if (!R.ok()) return 1;
  } else if (used("barcobar", "bar")) {
    const BigradedTable T = bar_homology_table(bar(algebra(o), o.max_weight), o.max_weight);
    o.format == "table" ? print_table(T) : emit(to_json(T));
  } else if (used("barcobar", "cobar")) {
    const FreeDga A = cobar(skeleton_coalgebra(o.n));
    if (o.format == "table") {
      for (std::size_t i = 0; i < A.generators().size(); ++i)
        std::cout << "d(" << A.generators()[i].name << ") = " << A.to_string(A.d_generator(int(i))) << "\n";
    } else {
      emit(to_json(A));
    }
  } else if (used("barcobar", "roundtrip")) {
    const BarCobarReport R = bar_cobar_homology_check(algebra(o), o.max_weight);
    if (o.format == "table") {
      std::cout << "H(A):\n";
      print_table(R.algebra);
      std::cout << "H(Cobar(Bar(A))):\n";
      print_table(R.cobar_bar);
      std::cout << (R.ok() ? "equal" : "MISMATCH") << "\n";
    } else {
      json mism = json::array();
      for (const auto& [t, w] : R.mismatches) mism.push_back(std::to_string(t) + "," + std::to_string(w));
      emit(json{{"max_weight", R.max_weight},
                {"algebra", to_json(R.algebra)},
                {"cobar_bar", to_json(R.cobar_bar)},
                {"mismatches", mism}});
    }
    if (!R.ok()) return 1;
  } else if (used("verify")) {
    SuiteOptions s;
    s.seed = o.seed;
    s.only = o.only;
    std::vector<CriterionResult> res;
    try {
      res = run_acceptance(s, std::cout);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    int failed = 0;
    for (const auto& r : res) failed += !r.passed;
    std::cout << (failed ? std::to_string(failed) + " of " + std::to_string(res.size()) + " criteria failed"
                         : "all " + std::to_string(res.size()) + " criteria passed")
              << "\n";
    return failed ? 1 : 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological algebra over the integers"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c) { c->add_option("--input", o.inputs, "JSON input file (repeatable)"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* ss = app.add_subcommand("ss", "Spectral sequence of a filtered or double complex");
  ss->require_subcommand(1);
  for (auto [name, help] : {std::pair{"pages", "Pages E_1..E_r"}, std::pair{"decalage", "Deligne decalage"},
                            std::pair{"converge", "E_infinity against graded homology"}}) {
    auto* c = ss->add_subcommand(name, help);
    add_input(c);
    add_format(c);
    c->add_option("--r-max", o.r_max, "Last page")->check(CLI::Range(1, 64));
  }

  auto* tot = app.add_subcommand("tot", "Total complex and its homology");
  add_input(tot);
  add_format(tot);

  auto* day = app.add_subcommand("day", "Day convolution of two split filtered complexes");
  add_input(day);
  add_format(day);

  auto* koszul = app.add_subcommand("koszul", "Free dgas, Lambda^(n) and Massey powers");
  koszul->require_subcommand(1);
  for (auto [name, help] : {std::pair{"lambda", "Bigraded homology of Lambda^(n)"},
                            std::pair{"homology", "Bigraded homology of a dga from --input"},
                            std::pair{"massey", "Massey power verdicts for r_n"}}) {
    auto* c = koszul->add_subcommand(name, help);
    add_format(c);
    if (std::string(name) == "homology")
      add_input(c);
    else
      c->add_option("--n", o.n, "n")->check(CLI::Range(std::string(name) == "massey" ? 2 : 1, 12));
    if (std::string(name) != "massey")
      c->add_option("--max-weight", o.max_weight, "Weight cutoff")->check(CLI::Range(0, 16));
  }

  auto* bc = app.add_subcommand("barcobar", "Bar and cobar constructions");
  bc->require_subcommand(1);
  for (auto [name, help] : {std::pair{"bar", "Homology of the bar construction"},
                            std::pair{"cobar", "Cobar of the n-skeleton coalgebra"},
                            std::pair{"roundtrip", "Homology of Cobar(Bar(A)) against A"}}) {
    auto* c = bc->add_subcommand(name, help);
    add_format(c);
    if (std::string(name) == "cobar") {
      c->add_option("--n", o.n, "n")->check(CLI::Range(0, 12));
    } else {
      c->add_option("--alg", o.alg, "Algebra")->check(CLI::IsMember({"exterior", "trivial", "free1", "lambda2"}));
      c->add_option("--max-weight", o.max_weight, "Weight cutoff")->check(CLI::Range(0, 12));
    }
  }

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--seed", o.seed, "Seed for the randomized suites");
  verify->add_option("--only", o.only, "Run only these criteria (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app, o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
