#pragma once

// JSON forms. Integers are written as decimal strings; on input plain JSON
// numbers are accepted too. Parse failures raise InputError with a JSON
// pointer to the offending value.

#include "cochain/barcobar.hpp"
#include "cochain/specseq.hpp"

#include "json.hpp"

namespace cochain {

using json = nlohmann::ordered_json;

json to_json(const Integer& v);
Integer integer_from_json(const json& j, const std::string& ptr);

json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, Index rows, Index cols, const std::string& ptr);

json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const json& j, const std::string& ptr = "");

json to_json(const Complex& C);
Complex complex_from_json(const json& j, const std::string& ptr = "");

json to_json(const ComplexMap& f, bool with_endpoints = true);
ComplexMap map_from_json(const json& j, const Complex& source, const Complex& target,
                         const std::string& ptr = "");
ComplexMap map_from_json(const json& j, const std::string& ptr = "");

json to_json(const FilteredComplex& F);
FilteredComplex filtered_from_json(const json& j, const std::string& ptr = "");

json to_json(const DoubleComplex& D);
DoubleComplex double_from_json(const json& j, const std::string& ptr = "");

json to_json(const GenFilteredComplex& G);
GenFilteredComplex gen_filtered_from_json(const json& j, const std::string& ptr = "");

json to_json(const GradedGroup& G);
GradedGroup graded_group_from_json(const json& j, const std::string& ptr = "");

/// Page dump: {"r", "entries": {"p,q": group}, "differentials": {"p,q": {"target", "matrix"}}}.
json to_json(const Page& E);

/// Plain-data view of a page dump, for re-ingesting emitted pages.
struct PageTable {
  int r = 1;
  std::map<Bidegree, FgAbGroup> entries;
  std::map<Bidegree, std::pair<Bidegree, IntMatrix>> differentials;
  friend bool operator==(const PageTable& a, const PageTable& b);
};
PageTable page_table(const Page& E);
json to_json(const PageTable& T);
PageTable page_table_from_json(const json& j, const std::string& ptr = "");

json to_json(const ConvergenceReport& R);
/// Rows and stabilization data of a report (E_∞ entries come back as a PageTable).
struct ConvergenceTable {
  int stabilization = 1, infinity_page = 1;
  bool converges = false;
  PageTable e_infinity;
  std::vector<ConvergenceRow> rows;
  friend bool operator==(const ConvergenceTable& a, const ConvergenceTable& b);
};
ConvergenceTable convergence_table(const ConvergenceReport& R);
json to_json(const ConvergenceTable& T);
ConvergenceTable convergence_table_from_json(const json& j, const std::string& ptr = "");

/// Tables keyed "t,w".
json to_json(const BigradedTable& T);
BigradedTable table_from_json(const json& j, const std::string& ptr = "");

/// Sorted [{"word": [names], "coeff": "c"}].
json to_json(const FreeDga& A, const NcPoly& x);
NcPoly ncpoly_from_json(const FreeDga& A, const json& j, const std::string& ptr = "");

/// {"generators": [{"name", "topdeg", "weight", "d": NcPoly}]}.
json to_json(const FreeDga& A);
FreeDga dga_from_json(const json& j, const std::string& ptr = "");

json to_json(const BeilinsonComplex& B);

/// Parse text; syntax errors become InputError at the root pointer.
json parse_json_text(const std::string& text);

}  // namespace cochain
