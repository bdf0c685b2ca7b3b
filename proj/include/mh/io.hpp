#pragma once

#include <iosfwd>
#include <string>

#include "mh/space.hpp"

namespace mh {

/// Header row of labels, then one row of distances per point. Cells are
/// integers, "p/q" or "inf". Throws ParseError (1-based line and column) or
/// AxiomViolation.
QuasiMetricSpace read_distance_csv(std::istream& in);
void write_distance_csv(std::ostream& out, const QuasiMetricSpace& space);

/// One edge "u v" per line with 0-based vertex indices; '#' starts a comment.
/// The vertex count is one more than the largest index seen.
QuasiMetricSpace read_edge_list(std::istream& in, bool directed);

/// {"labels": [...], "dist": [[...]], "directed": bool}; cells as in the CSV
/// format, numbers are also accepted.
QuasiMetricSpace read_space_json(std::istream& in);
void write_space_json(std::ostream& out, const QuasiMetricSpace& space);

/// Distance matrix file: JSON when the name ends in ".json", CSV otherwise.
QuasiMetricSpace load_matrix_file(const std::string& path);
QuasiMetricSpace load_edge_file(const std::string& path, bool directed);

}  // namespace mh
