#pragma once

// Geometry core. The scene and cli headers additionally need json.hpp and CLI11.hpp.

#include "curve.hpp"
#include "errors.hpp"
#include "expr.hpp"
#include "frenet.hpp"
#include "hermite.hpp"
#include "jet.hpp"
#include "linalg.hpp"
#include "meshio.hpp"
#include "pencil.hpp"
#include "tolerances.hpp"
#include "vec3.hpp"
