#pragma once

// Umbrella header: the whole library except the CLI driver (cli.hpp), which
// pulls in the argument parser and is only needed by front ends.

#include "algebra_io.hpp"
#include "coadjoint.hpp"
#include "derivations.hpp"
#include "expr_parser.hpp"
#include "family.hpp"
#include "fourier_motzkin.hpp"
#include "gradings.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "repro.hpp"
#include "scalar.hpp"
