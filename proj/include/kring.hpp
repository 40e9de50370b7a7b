#ifndef KRING_HPP
#define KRING_HPP

// Umbrella header: combinatorial K-ring presentations for torus manifolds
// given by a shellable nerve and a characteristic integer matrix.

#include "kring/char_matrix.hpp"
#include "kring/examples.hpp"
#include "kring/face.hpp"
#include "kring/groebner.hpp"
#include "kring/integer.hpp"
#include "kring/pipeline.hpp"
#include "kring/polynomial.hpp"
#include "kring/presentation.hpp"
#include "kring/quotient.hpp"
#include "kring/report.hpp"
#include "kring/shelling.hpp"
#include "kring/simplicial_complex.hpp"
#include "kring/smith.hpp"
#include "kring/spec_io.hpp"

#endif  // KRING_HPP
