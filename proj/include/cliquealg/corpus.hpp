#ifndef CLIQUEALG_CORPUS_HPP
#define CLIQUEALG_CORPUS_HPP

#include <string>
#include <vector>

#include "cliquealg/graph.hpp"

namespace cliquealg {

// Built-in example graphs, addressable as `corpus:<name>`.
std::vector<std::string> corpus_names();
WeightedGraph corpus_graph(const std::string& name);

// `corpus:<name>`, or a path to a JSON / text graph document.
WeightedGraph load_graph(const std::string& spec);

}  // namespace cliquealg

#endif
