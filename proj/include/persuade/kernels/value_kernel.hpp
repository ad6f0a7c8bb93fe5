#pragma once

#include <cstddef>
#include <vector>

#include "persuade/core/beliefs.hpp"
#include "persuade/core/joint_density.hpp"

// Value-function kernels. The serial loop is the reference; the OpenMP loop
// evaluates the same per-node expression with a fixed summation order over
// prior rows, so both produce bitwise identical columns.
namespace persuade::kernels {

struct ValueColumns {
    std::vector<double> v;
    std::vector<double> h;
};

ValueColumns value_function_serial(const JointDensityCP& f, Prior p_s, std::size_t n);
ValueColumns value_function_parallel(const JointDensityCP& f, Prior p_s, std::size_t n);

}  // namespace persuade::kernels
