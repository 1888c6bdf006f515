#ifndef MCLEX_MCLEX_HPP
#define MCLEX_MCLEX_HPP

/// Umbrella header: lexicographic multicriteria decision procedures.
///
/// - matrix.hpp / matrix_io.hpp: decision matrices, validation, CSV/JSON
/// - cascade.hpp: crisp lexicographic comparison, ranking, best set
/// - convolution.hpp: diapasons, importance weights, linear convolution
/// - relations.hpp / relation_io.hpp: crisp relation stacks and composition
/// - fuzzy.hpp: fuzzy relation stacks, cascade, convolution, scale theorem

#include "mclex/cascade.hpp"
#include "mclex/convolution.hpp"
#include "mclex/fuzzy.hpp"
#include "mclex/matrix.hpp"
#include "mclex/matrix_io.hpp"
#include "mclex/outcome.hpp"
#include "mclex/rational.hpp"
#include "mclex/relation_io.hpp"
#include "mclex/relations.hpp"

#endif  // MCLEX_MCLEX_HPP
