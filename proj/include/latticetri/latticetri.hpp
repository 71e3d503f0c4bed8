#pragma once

// Umbrella header: exact decision procedures for ideal-triangularizability
// of nonnegative matrices and finitely generated matrix semigroups.

#include "latticetri/charpoly.hpp"
#include "latticetri/diagonal.hpp"
#include "latticetri/digraph.hpp"
#include "latticetri/errors.hpp"
#include "latticetri/fixtures.hpp"
#include "latticetri/generator.hpp"
#include "latticetri/ideal.hpp"
#include "latticetri/idempotent.hpp"
#include "latticetri/matrix.hpp"
#include "latticetri/partitions.hpp"
#include "latticetri/permutation.hpp"
#include "latticetri/rational.hpp"
#include "latticetri/reducibility.hpp"
#include "latticetri/semigroup.hpp"
#include "latticetri/triangularize.hpp"
#include "latticetri/version.hpp"
