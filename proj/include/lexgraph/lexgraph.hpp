#ifndef LEXGRAPH_LEXGRAPH_HPP
#define LEXGRAPH_LEXGRAPH_HPP

#include "lexgraph/category.hpp"
#include "lexgraph/enumerate.hpp"
#include "lexgraph/functors.hpp"
#include "lexgraph/graph.hpp"
#include "lexgraph/io.hpp"
#include "lexgraph/morphism.hpp"
#include "lexgraph/path_order.hpp"
#include "lexgraph/traversal.hpp"
#include "lexgraph/verify.hpp"

#endif  // LEXGRAPH_LEXGRAPH_HPP
