#pragma once

/// Umbrella header: the whole library, with the everyday names hoisted into
/// the top-level namespace.

#include "apolarity.hpp"
#include "experiments.hpp"
#include "fields.hpp"
#include "graded.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "secants.hpp"
#include "zerodim.hpp"

namespace superfat {

using exactcore::BigInt;
using exactcore::Fp;
using exactcore::GaussianRational;
using exactcore::Matrix;
using exactcore::Rational;

using polyring::GradedPiece;
using polyring::Ideal;
using polyring::Polynomial;
using polyring::PolyRing;
using polyring::RingPtr;

} // namespace superfat
