#pragma once

// Umbrella header. Most users can include just this file; wittlab/io.hpp is
// kept separate because it pulls in the vendored JSON dependency.

#include "wittlab/bigint.hpp"
#include "wittlab/cohomology.hpp"
#include "wittlab/cyclo.hpp"
#include "wittlab/dualtop.hpp"
#include "wittlab/fgabelian.hpp"
#include "wittlab/grouplambda.hpp"
#include "wittlab/intmat.hpp"
#include "wittlab/kummer.hpp"
#include "wittlab/poly.hpp"
#include "wittlab/random.hpp"
#include "wittlab/rational.hpp"
#include "wittlab/ring.hpp"
#include "wittlab/witt.hpp"
#include "wittlab/wittrat.hpp"
