#ifndef CHARPOLY_CHARPOLY_HPP
#define CHARPOLY_CHARPOLY_HPP

#include "charpoly/analysis.hpp"
#include "charpoly/builtins.hpp"
#include "charpoly/cli.hpp"
#include "charpoly/constructors.hpp"
#include "charpoly/graph.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/lattice.hpp"
#include "charpoly/linalg.hpp"
#include "charpoly/polytope.hpp"
#include "charpoly/rational.hpp"
#include "charpoly/verify.hpp"

#endif  // CHARPOLY_CHARPOLY_HPP
