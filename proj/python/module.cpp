#include <pybind11/pybind11.h>
PYBIND11_MODULE(_sudecomp, m) { m.doc() = "placeholder"; }
