#pragma once

#include <string>

#include "qgadget/embed.hpp"
#include "qgadget/gadget_graph.hpp"
#include "qgadget/hardware.hpp"

namespace qgadget {

// Auxiliary vertices are filled red.
std::string export_dot(const GadgetGraph& g);

// Without an embedding every element is drawn plainly. With one, qubits and
// couplers the embedding does not use are grey, couplers inside a chain are
// thick, and qubits carrying an auxiliary guest vertex are red.
std::string export_dot(const HostGraph& host, const Embedding* e = nullptr,
                       const GadgetGraph* guest = nullptr);

}  // namespace qgadget
