#pragma once

#include "thue/abssolver.hpp"
#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/oracle.hpp"
#include "thue/poly.hpp"
#include "thue/quadfield.hpp"
#include "thue/reducer.hpp"
#include "thue/rootbounds.hpp"
#include "thue/theorem.hpp"
