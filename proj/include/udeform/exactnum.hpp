#pragma once

// Umbrella header for exact arithmetic: integers, rationals, dense integer
// polynomials, reduced rational functions and truncated power series.

#include "udeform/scalar.hpp"
#include "udeform/ring_poly.hpp"
#include "udeform/rational_function.hpp"
#include "udeform/truncated_series.hpp"
