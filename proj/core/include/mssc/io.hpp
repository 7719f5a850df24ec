#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mssc/centroid_system.hpp"
#include "mssc/certify.hpp"
#include "mssc/clustering.hpp"
#include "mssc/dataset.hpp"
#include "mssc/dc_decomposition.hpp"
#include "mssc/oracle.hpp"
#include "mssc/stability.hpp"

namespace mssc {

// CSV ingestion: one point per row, comma-separated decimal fields. A
// first row containing any non-numeric field is treated as a header and
// skipped. Ragged or non-numeric rows past the header fail with the
// 1-based row number. Row order defines data indices.
DataSet read_dataset(const std::string& path, double eps_tie = kDefaultEpsTie);
DataSet parse_dataset_csv(std::istream& in, double eps_tie = kDefaultEpsTie);

// Shell-safe centroid literal: semicolon-separated points,
// comma-separated coordinates, e.g. "0,0.5;1,0".
CentroidSystem parse_centroid_literal(const std::string& literal);

// All report serializers emit a deterministic key-ordered JSON document
// with a top-level "schema_version": 1, floating-point values printed
// with 17 significant digits, centroid systems canonicalized (aligned
// index sets permuted with them), and data/slot indices 1-based.
// Non-finite values (an infinite slack on a one-slot certificate)
// serialize as null.
std::string to_json(const CertificationReport& report);
std::string to_json(const KMeansResult& result, double epsilon, std::size_t max_iter);
std::string to_json(const GlobalSolveResult& result);
std::string to_json(const DcCheckResult& result, const CentroidSystem& x);
std::string to_json(const std::vector<CoreLocalSolution>& solutions,
                    const std::optional<std::vector<LocalFamily>>& families);
std::string to_json(const std::vector<StabilityProbeReport>& probes, std::uint64_t seed);

// Writes the document (with a trailing newline) to the path, or to
// standard output when no path is given.
void write_report(const std::string& json, const std::optional<std::string>& path);

}  // namespace mssc
