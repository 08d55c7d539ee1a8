#pragma once

#include <optional>
#include <string_view>

#include "spine/coset_ring.hpp"
#include "spine/model.hpp"
#include "spine/spine_semigroup.hpp"
#include "spine/subspace.hpp"
#include "spine/topology.hpp"

namespace spine {

// Text literals. Every parser consumes the whole input (surrounding
// whitespace allowed) and reports malformed text as SyntaxError with a
// 1-based line and column; well-formed text describing an impossible object
// raises Error(semantic) or the library's own error kinds. Each parser is a
// left inverse of the matching to_string.

// "compact" | "R" | "Z" | "R^n" | "Z^n" | "Q" | "axb" | "minWAP" | "Q_p".
Model parse_model(std::string_view text);

// "[1/2,-3]".
RationalVector parse_vector(std::string_view text);

// "[[1,0],[0,1]]"; rows must have equal length.
Matrix parse_matrix(std::string_view text);

// "span[[1,0],[0,1]]" or "span[]". The ambient dimension is taken from the
// generators unless given; "span[]" needs it.
RationalSubspace parse_subspace(std::string_view text, std::optional<std::size_t> dim = {});

// Grade of the model: span[...] (plus the aliases ap / full) for ℝⁿ and ℤⁿ,
// ap / realline / full for ax+b, ap / full for the two-point models,
// {R,2,3} / {} / TOP for ℚ (a bare "R" or prime is a one-generator set).
TopologyGrade parse_grade(Model const& m, std::string_view text);

// "(L=span[[1,0]], v=[1/2,3])" for ℝⁿ / ℤⁿ, "(g=realline, v=(2,5))" for
// ax+b, "(g=full, v=e)" for compact / minWAP, "(g=ap, v=1/2)" otherwise.
SpineElement parse_spine(Model const& m, std::string_view text);

// Coset-ring expressions over ℤᵐ, left-associative with | (union),
// & (intersection) and \ (difference) at equal precedence. Leaves:
//   "kZ", "kZ^m", "Z", "lattice[[2,1],[0,3]]", each optionally preceded by
//   an offset "t+" with t an integer (m = 1) or an integer vector.
CosetRingExpr parse_coset_expr(std::string_view text);

}  // namespace spine
