#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gelfand/chartab.hpp"
#include "gelfand/engine.hpp"
#include "gelfand/group.hpp"
#include "gelfand/plancherel.hpp"
#include "gelfand/presets.hpp"

namespace gelfand {

using Json = nlohmann::ordered_json;

// { "degree": n, "generators": ["(1 2)", ...], "name": "..." }
struct GroupSpec {
  int degree = 0;
  std::vector<Permutation> generators;
  std::string name;
};

// Throws ParseError on malformed JSON or cycle strings.
GroupSpec parse_group_spec(std::string_view text);
GroupSpec load_group_spec(const std::string& path);
GroupPtr group_from_spec(const GroupSpec& spec, std::size_t cap = default_cap());

// "S<n>" (either case) or a path to a group spec file.
GroupPtr resolve_group(std::string_view spec, std::size_t cap = default_cap());

Json complex_json(Complex z);
Json partition_json(const Partition& p);
Json pair_label_json(const PairLabel& l);
// Partition, {"i","lambda"} object or cycle string, depending on the preset.
Json coset_label_json(const CosetLabels& labels, std::size_t coset);

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string str() const;
};

struct Rendered {
  Json json;
  Csv csv;
};

Rendered render_classes(const GroupTable& g);
Rendered render_chartable(const CharTable& t);
Rendered render_cosets(const PairInstance& inst, const DoubleCosetPartition& dc);
Rendered render_gelfand(const PairInstance& inst, const PairData& pair);
Rendered render_zonal(const PairInstance& inst, const PairData& pair);

// Either table may be null; with both, entries carry both values.
Rendered render_coeffs(const PairInstance& inst, const PairData& pair, const CoeffTable* formula,
                       const CoeffTable* oracle);

struct MomentRow {
  int cls = 0;
  int m = 0;
  MomentValue direct;
  Rational structural;
  bool equal = false;
};

Rendered render_moments(const GroupTable& g, const std::vector<MomentRow>& rows);
Rendered render_checks(const std::string& subject, const std::vector<CheckResult>& checks);

}  // namespace gelfand
