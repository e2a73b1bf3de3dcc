#pragma once

#include "hyperthresh/absorbing.hpp"
#include "hyperthresh/auxgraph.hpp"
#include "hyperthresh/extremal.hpp"
#include "hyperthresh/io.hpp"
#include "hyperthresh/lemmas.hpp"
#include "hyperthresh/matching.hpp"

namespace hyperthresh {

// Serializers with a fixed key order. Vertex sets become sorted index arrays.

Json to_json(const ExtremalSpec& spec);
Json to_json(HalfInteger h);
Json to_json(const ThresholdReport& report);
Json to_json(const ParityCertificate& cert);
Json to_json(const Matching& m);
Json to_json(const SearchResult& result);
Json to_json(const AbsorberList<KAbsorber>& list);
Json to_json(const AbsorberList<TwoKAbsorber>& list);
Json to_json(const AbsorbingMatching& am);

/// Phase timings are wall-clock and vary run to run; they are left out unless asked for.
Json to_json(const PipelineReport& report, bool timings);

Json to_json(const StructureReport& report);
Json to_json(const DerivedPartition& dp);
Json to_json(const Number& x);
Json to_json(const CheckReport& report);

} // namespace hyperthresh
