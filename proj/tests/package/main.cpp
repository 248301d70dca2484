#include <cmath>

#include "hlag/closed_forms.hpp"
#include "hlag/lagrangian.hpp"

int main() {
    const double v = hlag::solve(hlag::complete_graph(5, 3)).value;
    return std::abs(v - hlag::complete_lagrangian(5, 3)) < 1e-9 ? 0 : 1;
}
