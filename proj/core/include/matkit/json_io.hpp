#ifndef MATKIT_JSON_IO_HPP
#define MATKIT_JSON_IO_HPP

#include <string>

#include "matkit/catalog.hpp"
#include "matkit/matrix.hpp"
#include "matkit/matroid.hpp"
#include "matkit/report.hpp"

namespace matkit {

/// {"name":..., "ground":[...], "rank":..., "bases":[[...],...]} with bases
/// sorted lexicographically for byte-stable output.
std::string matroid_to_json(const Matroid& m, const std::string& name);

/// Parses and fully validates a matroid document; rejects on any invariant
/// violation (duplicate labels, size cap, rank mismatch, exchange failure).
Matroid matroid_from_json(const std::string& text, std::string* name_out = nullptr);

/// {"q":..., "rows":..., "columns":[...], "entries":[[...],...]}.
std::string matrix_to_json(const MatrixRep& a);
MatrixRep matrix_from_json(const std::string& text);

PoolSpec pool_spec_from_json(const std::string& text);
std::string pool_entry_to_json(const PoolEntry& e);

std::string report_to_json(const VerificationReport& r);

}  // namespace matkit

#endif
