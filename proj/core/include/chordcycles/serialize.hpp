#pragma once

#include <string>

#include "chordcycles/chordsearch.hpp"
#include "chordcycles/cycle.hpp"
#include "chordcycles/extraction.hpp"
#include "chordcycles/gadgets.hpp"
#include "chordcycles/graph.hpp"
#include "chordcycles/numtheory.hpp"

namespace chordcycles {

// Canonical JSON emission (stable key order, 2-space indent) for the witness
// and report objects exchanged over the CLI.

std::string cycle_witness_json(const Graph& g, const Cycle& c);
std::string path_witness_json(const Graph& g, const PathWitness& p);
std::string spectrum_json(const Graph& g, const ChordSpectrumReport& report);
std::string wheel_witness_json(const Graph& g, const WheelWitness& w);
std::string square_decomposition_json(const SquareDecomposition& d);
std::string pronic_decomposition_json(const PronicDecomposition& d);
std::string extraction_chain_json(const ExtractionChain& chain);
std::string blueprint_json(const GadgetBlueprint& bp);
std::string edge_bound_certificate_json(const EdgeBoundCertificate& cert);

}  // namespace chordcycles
