#pragma once

// JSON and CSV renderings of pipeline results. Output is deterministic:
// maps are ordered and no timestamps are written.

#include <string>

#include <json.hpp>

#include "lensdga/dga.hpp"
#include "lensdga/lagrangian.hpp"
#include "lensdga/loops.hpp"

namespace lensdga {

using Json = nlohmann::ordered_json;

Json spec_json(const GridOneSpec& spec);
Json diagram_json(const LabeledDiagram& diagram);
Json capping_json(const CappingPath& path);
Json loop_json(const LoopPath& loop);
Json word_counts_json(const WordCounts& counts);
Json loop_count_json(const LoopCount& count);
Json fragment_json(const DifferentialFragment& fragment);
Json search_json(const SearchResult& result);
Json theorem1_json(const Theorem1Report& report);
Json theorem2_json(const Theorem2Report& report);

/// p,p_mod_12,k_S,k_N,S_parity,N_parity,exists,predicate,agree
std::string scan_csv_header();
std::string scan_csv_row(const Theorem2Report& report);

}  // namespace lensdga
