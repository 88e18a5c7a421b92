#pragma once

// Umbrella header: exact counting of grading isomorphism classes on matrix
// and upper block-triangular matrix algebras, with brute-force oracles and
// inverse-problem tooling.

#include "gradcount/bigint.hpp"
#include "gradcount/division.hpp"
#include "gradcount/elementary.hpp"
#include "gradcount/errors.hpp"
#include "gradcount/full.hpp"
#include "gradcount/group.hpp"
#include "gradcount/io.hpp"
#include "gradcount/numtheory.hpp"
#include "gradcount/orbit.hpp"
#include "gradcount/polynomial.hpp"
#include "gradcount/reconstruction.hpp"
#include "gradcount/subgroup.hpp"
