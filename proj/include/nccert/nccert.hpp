#pragma once

#include "nccert/cliques.hpp"
#include "nccert/graph.hpp"
#include "nccert/inequality.hpp"
#include "nccert/isomorphism.hpp"
#include "nccert/linalg.hpp"
#include "nccert/polytope.hpp"
#include "nccert/quantum.hpp"
#include "nccert/rational.hpp"
#include "nccert/rng.hpp"
#include "nccert/search.hpp"
#include "nccert/simplex.hpp"
#include "nccert/simulate.hpp"
#include "nccert/theta.hpp"
