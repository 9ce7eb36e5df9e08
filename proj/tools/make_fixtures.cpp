// Regenerates tests/fixtures/bessel_oracle.csv from the quadrature oracle.
#include <iostream>

#include "oracles/bessel_quadrature.hpp"
#include "synge/bessel.hpp"

int main() {
    using namespace synge;
    std::cout << "order,gamma,value,scaled,oracle_value\n";
    for (double g : log_grid(1e-3, 500, 25)) {
        for (int j = 0; j <= 3; ++j) {
            const double o = static_cast<double>(oracle::bessel_k_quadrature(j, g));
            std::cout << j << ',' << format17(g) << ',' << format17(bessel_k(j, g)) << ','
                      << format17(bessel_k_scaled(j, g)) << ',' << format17(o) << '\n';
        }
    }
}
