#pragma once

#include "qgelfand/errors.hpp"
#include "qgelfand/scalar.hpp"
#include "qgelfand/poly.hpp"
#include "qgelfand/matrix.hpp"
#include "qgelfand/linalg.hpp"
#include "qgelfand/check.hpp"
#include "qgelfand/rmatrix.hpp"
#include "qgelfand/hecke.hpp"
#include "qgelfand/representation.hpp"
#include "qgelfand/central.hpp"
#include "qgelfand/suite.hpp"
#include "qgelfand/cli.hpp"
