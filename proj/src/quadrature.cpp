#include "fractrans/quadrature.hpp"

#include <stdexcept>

namespace fractrans {

namespace {

constexpr double g3x[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double g3w[] = {0.55555555555555569, 0.88888888888888884,
                          0.55555555555555569};

constexpr double g7x[] = {-0.94910791234275849, -0.74153118559939446,
                          -0.40584515137739718, 0.0,
                          0.40584515137739718,  0.74153118559939446,
                          0.94910791234275849};
constexpr double g7w[] = {0.12948496616887065, 0.27970539148927659,
                          0.38183005050511831, 0.41795918367346896,
                          0.38183005050511831, 0.27970539148927659,
                          0.12948496616887065};

constexpr double g12x[] = {-0.98156063424671924, -0.9041172563704748,
                           -0.76990267419430469, -0.58731795428661748,
                           -0.36783149899818018, -0.12523340851146891,
                           0.12523340851146891,  0.36783149899818018,
                           0.58731795428661748,  0.76990267419430469,
                           0.9041172563704748,   0.98156063424671924};
constexpr double g12w[] = {0.047175336386512022, 0.10693932599531888,
                           0.16007832854334611,  0.20316742672306565,
                           0.23349253653835464,  0.24914704581340269,
                           0.24914704581340269,  0.23349253653835464,
                           0.20316742672306565,  0.16007832854334611,
                           0.10693932599531888,  0.047175336386512022};

} // namespace

GaussRule gauss_rule(int n) {
    switch (n) {
    case 3:
        return {g3x, g3w, 3};
    case 7:
        return {g7x, g7w, 7};
    case 12:
        return {g12x, g12w, 12};
    default:
        throw std::invalid_argument("gauss_rule: unsupported point count");
    }
}

} // namespace fractrans
