#pragma once

#include "nilmult/bigint.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/groups.hpp"
#include "nilmult/hall.hpp"
#include "nilmult/lattice.hpp"
#include "nilmult/oracle.hpp"
#include "nilmult/params.hpp"
#include "nilmult/theory.hpp"
#include "nilmult/word.hpp"
