#pragma once

#include "wirt/bounds.hpp"
#include "wirt/coloring.hpp"
#include "wirt/csv.hpp"
#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"
#include "wirt/gauss_code.hpp"
#include "wirt/search.hpp"
#include "wirt/tabulate.hpp"
#include "wirt/verify.hpp"
