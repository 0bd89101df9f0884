#pragma once

#include <string>

#include "dra/dyn_polynomial.hpp"
#include "dra/pbw.hpp"

namespace dra {

struct PrintOptions {
    bool unicode = false;
};

std::string print_generator(Gen g, const PrintOptions &opts = {});
std::string print_element(const AlgebraElement &a, const PrintOptions &opts = {});
std::string print_dyn_polynomial(const DynPolynomial &p, const PrintOptions &opts = {});

} // namespace dra
