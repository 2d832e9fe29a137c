#pragma once

// Everything in one include.
#include "kecs/blossom.hpp"
#include "kecs/coloring.hpp"
#include "kecs/decompose.hpp"
#include "kecs/error.hpp"
#include "kecs/factor.hpp"
#include "kecs/generators.hpp"
#include "kecs/graph.hpp"
#include "kecs/io.hpp"
#include "kecs/meta.hpp"
#include "kecs/oracle.hpp"
#include "kecs/patterns.hpp"
#include "kecs/psi_engine.hpp"
#include "kecs/rational.hpp"
#include "kecs/subcubic.hpp"
#include "kecs/vizing.hpp"
