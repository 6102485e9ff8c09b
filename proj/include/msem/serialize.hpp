#ifndef MSEM_SERIALIZE_HPP
#define MSEM_SERIALIZE_HPP

#include <json.hpp>
#include <ostream>
#include <string>

#include "msem/hodge.hpp"
#include "msem/mimetic.hpp"
#include "msem/topology.hpp"

namespace msem {

using json = nlohmann::json;

json to_json(const CellComplex& c);
json to_json(const Chain& chain);
json to_json(const Cochain& cochain);
json to_json(const DiscreteForm& df);
json to_json(const CochainSplit& split);

// coordinate-list text: one "i j v" line per entry, 0-based
void write_coordinate_list(std::ostream& os, const Eigen::SparseMatrix<int>& m);

// full-precision scientific CSV row
void write_csv_row(std::ostream& os, const std::vector<double>& values);
std::string format_full(double v);

}  // namespace msem

#endif
