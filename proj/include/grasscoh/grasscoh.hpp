#pragma once

#include "grasscoh/numeric.hpp"
#include "grasscoh/partition.hpp"
#include "grasscoh/qpoly.hpp"
#include "grasscoh/qseries.hpp"
#include "grasscoh/tableaux.hpp"
#include "grasscoh/exact_linalg.hpp"
#include "grasscoh/schur_ring.hpp"
#include "grasscoh/report.hpp"
#include "grasscoh/filtration.hpp"
#include "grasscoh/lefschetz.hpp"
#include "grasscoh/endo.hpp"
#include "grasscoh/oracles.hpp"
