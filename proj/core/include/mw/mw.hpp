// Umbrella header: the arithmetic, batches, linear algebra, polynomials and roots.

#ifndef MW_MW_HPP
#define MW_MW_HPP

#include "mw/arith.hpp"
#include "mw/batch.hpp"
#include "mw/complex.hpp"
#include "mw/convert.hpp"
#include "mw/linalg.hpp"
#include "mw/poly.hpp"
#include "mw/roots.hpp"

#endif  // MW_MW_HPP
