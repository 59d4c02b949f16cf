#pragma once

#include "ajforge/error.hpp"
#include "ajforge/rational.hpp"
#include "ajforge/polynomial.hpp"
#include "ajforge/cyclotomic.hpp"
#include "ajforge/scalar.hpp"
#include "ajforge/comb.hpp"
#include "ajforge/series.hpp"
#include "ajforge/io.hpp"
#include "ajforge/aj.hpp"
#include "ajforge/groups.hpp"
#include "ajforge/flows.hpp"
