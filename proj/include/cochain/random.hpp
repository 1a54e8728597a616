#pragma once

// Seeded generators for the property suites. Everything is driven by one
// std::mt19937_64, so a seed fixes every instance.

#include "cochain/filtered.hpp"

#include <random>
#include <vector>

namespace cochain {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
IntMatrix random_matrix(Rng& rng, Index rows, Index cols, int lo, int hi);

/// Unimodular U with its inverse, built from `steps` elementary operations.
std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, Index n, int steps);

struct ComplexShape {
  int max_support = 5;
  int max_rank = 4;
  int max_entry = 5;
};

/// Each d(n) is a random combination of left-annihilator rows of d(n-1),
/// so d^2 = 0 by construction; entries stay within max_entry.
Complex random_complex(Rng& rng, const ComplexShape& shape = {});

struct DoubleShape {
  int max_columns = 4;
  int max_support = 4;
  int max_pieces = 5;
};

/// Direct sum of dots, arrows and commuting squares, conjugated by
/// unimodular changes of basis at every position.
DoubleComplex random_double_complex(Rng& rng, const DoubleShape& shape = {});
DoubleComplex random_double_complex(Rng& rng, int columns, const DoubleShape& shape);

struct FiltrationShape {
  int max_support = 5;
  int max_rank = 3;
  int max_length = 4;
  int max_entry = 5;
};

/// Filtration by subcomplexes, each level the d-closure of random elements
/// of the previous one (sometimes doubled, so graded pieces can have torsion).
FilteredComplex random_mono_filtration(Rng& rng, const FiltrationShape& shape = {});
/// Same with every level saturated, so all graded pieces are free.
FilteredComplex random_split_filtration(Rng& rng, const FiltrationShape& shape = {});

/// a composable maps with zero consecutive composites, read off the
/// horizontal maps of a random double complex with a+1 columns.
std::vector<ComplexMap> random_spine(Rng& rng, int a);

}  // namespace cochain
