#pragma once

#include "qca/bases.hpp"
#include "qca/ccmap.hpp"
#include "qca/error.hpp"
#include "qca/finrep.hpp"
#include "qca/fp_linalg.hpp"
#include "qca/int_matrix.hpp"
#include "qca/io.hpp"
#include "qca/lattice.hpp"
#include "qca/qtorus.hpp"
#include "qca/scalars.hpp"
#include "qca/seeds.hpp"
#include "qca/verify.hpp"
