#pragma once

#include "persuade/densities/grid_density.hpp"
#include "persuade/densities/orders.hpp"
#include "persuade/densities/parametric_density.hpp"
#include "persuade/densities/polarization.hpp"
#include "persuade/densities/shape.hpp"
