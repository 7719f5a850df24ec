#include "mssc/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mssc/error.hpp"

namespace mssc {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

bool parse_number(const std::string& field, double& out) {
  const std::string t = trim(field);
  if (t.empty()) return false;
  const char* begin = t.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + t.size() && std::isfinite(out);
}

// Minimal streaming JSON writer. Key order is insertion order, which the
// serializers keep fixed, so identical inputs give byte-identical
// documents.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    separator();
    out_ += '{';
    fresh_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    out_ += '}';
    fresh_.pop_back();
    return *this;
  }
  JsonWriter& begin_array() {
    separator();
    out_ += '[';
    fresh_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    out_ += ']';
    fresh_.pop_back();
    return *this;
  }
  JsonWriter& key(const char* name) {
    separator();
    append_string(name);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }
  JsonWriter& value(double v) {
    separator();
    if (!std::isfinite(v)) {
      out_ += "null";
      return *this;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out_ += buf;
    return *this;
  }
  JsonWriter& value(std::uint64_t v) {
    separator();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(int v) {
    separator();
    out_ += std::to_string(v);
    return *this;
  }
  JsonWriter& value(bool v) {
    separator();
    out_ += v ? "true" : "false";
    return *this;
  }
  JsonWriter& value(const std::string& v) {
    separator();
    append_string(v.c_str());
    return *this;
  }
  JsonWriter& null() {
    separator();
    out_ += "null";
    return *this;
  }
  const std::string& str() const { return out_; }

 private:
  void separator() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (!fresh_.empty()) {
      if (!fresh_.back()) out_ += ',';
      fresh_.back() = false;
    }
  }
  void append_string(const char* s) {
    out_ += '"';
    for (const char* p = s; *p; ++p) {
      switch (*p) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\r': out_ += "\\r"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(*p) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", *p);
            out_ += buf;
          } else {
            out_ += *p;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> fresh_;
  bool pending_value_ = false;
};

void append_point(JsonWriter& w, const Vec& p) {
  w.begin_array();
  for (double c : p) w.value(c);
  w.end_array();
}

void append_points(JsonWriter& w, const std::vector<Vec>& pts) {
  w.begin_array();
  for (const Vec& p : pts) append_point(w, p);
  w.end_array();
}

// Clusters as 1-based data indices.
void append_partition(JsonWriter& w, const ClusterPartition& part) {
  w.begin_array();
  for (std::size_t j = 0; j < part.cluster_count(); ++j) {
    w.begin_array();
    for (std::size_t i : part.cluster(j)) w.value(i + 1);
    w.end_array();
  }
  w.end_array();
}

void append_optional_index(JsonWriter& w, const std::optional<std::size_t>& idx) {
  if (idx) {
    w.value(*idx + 1);
  } else {
    w.null();
  }
}

// The certification body, shared between the standalone document and
// nested reports. Slot and data indices are 1-based.
void append_certification_body(JsonWriter& w, const CertificationReport& r) {
  w.key("verdict").value(verdict_name(r.verdict));
  w.key("objective").value(r.objective);
  w.key("centroids");
  append_points(w, r.centroids ? r.centroids->centroids() : std::vector<Vec>{});

  w.key("c1").begin_object();
  w.key("holds").value(r.c1_holds);
  w.key("min_gap").value(r.c1_min_gap);
  w.end_object();

  w.key("singleton_nearest").begin_object();
  w.key("holds").value(r.singleton_ji);
  w.key("witness");
  append_optional_index(w, r.ji_witness);
  w.key("min_slack").value(r.ji_min_slack);
  w.end_object();

  w.key("barycenter").begin_object();
  w.key("holds").value(r.barycenter_ok);
  w.key("witness");
  append_optional_index(w, r.barycenter_witness);
  w.key("residuals").begin_array();
  for (const auto& res : r.barycenter_residuals) {
    if (res) {
      w.value(*res);
    } else {
      w.null();
    }
  }
  w.end_array();
  w.end_object();

  w.key("exclusion").begin_object();
  w.key("holds").value(r.exclusion_ok);
  w.key("witness");
  if (r.exclusion_witness) {
    w.begin_object();
    w.key("slot").value(r.exclusion_witness->slot_j + 1);
    w.key("point").value(r.exclusion_witness->point_p + 1);
    w.key("other_slot").value(r.exclusion_witness->slot_q + 1);
    w.key("margin").value(r.exclusion_witness->margin);
    w.end_object();
  } else {
    w.null();
  }
  w.key("margins").begin_array();
  for (const ExclusionMargin& m : r.exclusion_margins) {
    w.begin_object();
    w.key("slot").value(m.slot_j + 1);
    w.key("point").value(m.point_p + 1);
    w.key("other_slot").value(m.slot_q + 1);
    w.key("margin").value(m.margin);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  w.key("strict_slack").value(r.strict_slack);
  w.key("duplicated_data_warning").value(r.duplicated_data_warning);

  w.key("oracle").begin_object();
  w.key("ran").value(r.oracle_ran);
  w.key("optimal_value");
  if (r.optimal_value) {
    w.value(*r.optimal_value);
  } else {
    w.null();
  }
  w.key("gap");
  if (r.optimal_value_gap) {
    w.value(*r.optimal_value_gap);
  } else {
    w.null();
  }
  w.key("note").value(r.oracle_note);
  w.end_object();
}

}  // namespace

DataSet parse_dataset_csv(std::istream& in, double eps_tie) {
  std::vector<Vec> points;
  std::string line;
  std::size_t row = 0;
  std::size_t dim = 0;
  bool first_content_row = true;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split(line, ',');
    Vec point;
    point.reserve(fields.size());
    bool numeric = true;
    for (const std::string& field : fields) {
      double v = 0.0;
      if (!parse_number(field, v)) {
        numeric = false;
        break;
      }
      point.push_back(v);
    }
    if (!numeric) {
      if (first_content_row) {
        first_content_row = false;  // header row, skipped
        continue;
      }
      throw input_error("row " + std::to_string(row) + ": non-numeric field");
    }
    if (dim == 0) {
      dim = point.size();
    } else if (point.size() != dim) {
      throw input_error("row " + std::to_string(row) + ": expected " + std::to_string(dim) +
                        " fields, found " + std::to_string(point.size()));
    }
    first_content_row = false;
    points.push_back(std::move(point));
  }
  if (points.empty()) throw input_error("no data rows found");
  return DataSet::from_points(std::move(points), eps_tie);
}

DataSet read_dataset(const std::string& path, double eps_tie) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file: " + path);
  return parse_dataset_csv(in, eps_tie);
}

CentroidSystem parse_centroid_literal(const std::string& literal) {
  std::vector<Vec> centroids;
  for (const std::string& chunk : split(literal, ';')) {
    if (trim(chunk).empty()) {
      throw input_error("empty centroid in literal \"" + literal + "\"");
    }
    Vec point;
    for (const std::string& field : split(chunk, ',')) {
      double v = 0.0;
      if (!parse_number(field, v)) {
        throw input_error("non-numeric coordinate \"" + trim(field) + "\" in centroid literal");
      }
      point.push_back(v);
    }
    centroids.push_back(std::move(point));
  }
  return CentroidSystem::from_centroids(std::move(centroids));
}

std::string to_json(const CertificationReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("certification"));
  append_certification_body(w, report);
  w.end_object();
  return w.str();
}

std::string to_json(const KMeansResult& result, double epsilon, std::size_t max_iter) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("kmeans_result"));
  w.key("converged").value(result.trace.converged);
  w.key("iterations_used").value(result.trace.iterations_used);
  w.key("epsilon").value(epsilon);
  w.key("max_iter").value(max_iter);

  const std::vector<std::size_t> perm = canonical_permutation(result.final_centroids);
  w.key("objective").value(result.trace.iterations.empty()
                               ? 0.0
                               : result.trace.iterations.back().objective);
  w.key("centroids");
  append_points(w, canonicalize(result.final_centroids).centroids());
  w.key("clusters");
  if (!result.trace.iterations.empty()) {
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t j : perm) sets.push_back(result.trace.iterations.back().clusters.cluster(j));
    append_partition(w, ClusterPartition::from_sets(std::move(sets)));
  } else {
    w.begin_array().end_array();
  }

  w.key("trace").begin_array();
  for (const KMeansIteration& it : result.trace.iterations) {
    const std::vector<std::size_t> it_perm = canonical_permutation(it.centroids);
    w.begin_object();
    w.key("centroids");
    append_points(w, canonicalize(it.centroids).centroids());
    w.key("clusters");
    {
      std::vector<std::vector<std::size_t>> sets;
      for (std::size_t j : it_perm) sets.push_back(it.clusters.cluster(j));
      append_partition(w, ClusterPartition::from_sets(std::move(sets)));
    }
    w.key("objective").value(it.objective);
    w.key("max_centroid_shift").value(it.max_centroid_shift);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string to_json(const GlobalSolveResult& result) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("global_solve"));
  w.key("optimal_value").value(result.optimal_value);
  w.key("candidates_evaluated").value(result.candidates_evaluated);
  w.key("solutions").begin_array();
  for (std::size_t s = 0; s < result.global_solutions.size(); ++s) {
    w.begin_object();
    w.key("centroids");
    append_points(w, result.global_solutions[s].centroids());
    w.key("clusters");
    append_partition(w, result.partition_of_each[s]);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string to_json(const DcCheckResult& result, const CentroidSystem& x) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("dc_check"));
  w.key("holds").value(result.holds);
  w.key("witness");
  append_optional_index(w, result.witness);
  w.key("centroids");
  append_points(w, canonicalize(x).centroids());
  w.end_object();
  return w.str();
}

std::string to_json(const std::vector<CoreLocalSolution>& solutions,
                    const std::optional<std::vector<LocalFamily>>& families) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("local_enumeration"));
  w.key("optimal_value");
  if (!solutions.empty() && solutions.front().report.optimal_value) {
    w.value(*solutions.front().report.optimal_value);
  } else {
    w.null();
  }
  w.key("solutions").begin_array();
  for (const CoreLocalSolution& s : solutions) {
    w.begin_object();
    w.key("centroids");
    append_points(w, s.centroids.centroids());
    w.key("clusters");
    append_partition(w, s.partition);
    w.key("report").begin_object();
    append_certification_body(w, s.report);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.key("families");
  if (families) {
    w.begin_array();
    for (const LocalFamily& f : *families) {
      w.begin_object();
      w.key("core");
      append_points(w, f.core.centroids());
      w.key("balls").begin_array();
      for (const LocalFamily::Ball& b : f.balls) {
        w.begin_object();
        w.key("point").value(b.point_index + 1);
        w.key("center");
        append_point(w, b.center);
        w.key("radius").value(b.radius);
        w.end_object();
      }
      w.end_array();
      w.end_object();
    }
    w.end_array();
  } else {
    w.null();
  }
  w.end_object();
  return w.str();
}

std::string to_json(const std::vector<StabilityProbeReport>& probes, std::uint64_t seed) {
  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value(1);
  w.key("kind").value(std::string("stability_report"));
  w.key("seed").value(seed);
  w.key("probes").begin_array();
  for (const StabilityProbeReport& p : probes) {
    w.begin_object();
    w.key("kind").value(probe_kind_name(p.kind));
    w.key("trials").value(p.trials);
    w.key("delta").value(p.delta);
    w.key("max_ratio").value(p.max_ratio);
    w.key("violations").value(p.violations);
    w.key("skipped").value(p.skipped);
    w.key("reference_count").value(p.reference_count);
    w.key("constructed_points").value(p.constructed_points);
    w.key("certified_points").value(p.certified_points);
    w.key("worst_matched_reference");
    append_optional_index(w, p.worst_matched_reference);
    w.key("norm").value(p.norm);
    w.key("worst_pair").begin_object();
    w.key("numerator").value(p.worst_numerator);
    w.key("denominator").value(p.worst_denominator);
    w.key("first");
    append_points(w, p.worst_first);
    w.key("second");
    append_points(w, p.worst_second);
    w.end_object();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

void write_report(const std::string& json, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << json << "\n";
    std::cout.flush();
    return;
  }
  std::ofstream out(*path);
  if (!out) throw input_error("cannot open output file: " + *path);
  out << json << "\n";
  if (!out) throw input_error("failed writing output file: " + *path);
}

}  // namespace mssc
