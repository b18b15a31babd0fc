#pragma once

#include <string>
#include <vector>

#include "seidel/seidel_matrix.hpp"

namespace seidel {

/// Census files are newline-delimited s6 records; a record may be followed
/// on its line by TAB-separated annotation columns, which are preserved on
/// read and ignored by consumers that do not ask for them.
struct CensusEntry {
  SeidelMatrix matrix;
  std::vector<std::string> annotations;
};

std::vector<CensusEntry> read_census(const std::string& path);
std::vector<SeidelMatrix> read_census_matrices(const std::string& path);

/// Order shared by all entries; throws std::invalid_argument when mixed.
int census_order(const std::vector<SeidelMatrix>& census);

void write_census(const std::string& path, const std::vector<SeidelMatrix>& census);
void write_census(const std::string& path, const std::vector<CensusEntry>& census);

}  // namespace seidel
