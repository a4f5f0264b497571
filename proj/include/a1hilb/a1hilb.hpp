// Everything at once.
#pragma once

#include "a1hilb/exactlin.hpp"
#include "a1hilb/geom/cone.hpp"
#include "a1hilb/geom/decomposition.hpp"
#include "a1hilb/geom/lattice.hpp"
#include "a1hilb/geom/polytope.hpp"
#include "a1hilb/geom/standard.hpp"
#include "a1hilb/geom/triangulation.hpp"
#include "a1hilb/ghilb/catalog.hpp"
#include "a1hilb/ghilb/chart.hpp"
#include "a1hilb/ghilb/presentations.hpp"
#include "a1hilb/ghilb/verify.hpp"
#include "a1hilb/grobner.hpp"
#include "a1hilb/io.hpp"
#include "a1hilb/toricideal.hpp"
