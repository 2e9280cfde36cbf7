// Splits the type-C parallelepiped into its half-open hypersimplex slices and
// shows that the slice h*-polynomials add up to Psi_C.
#include <cstdlib>
#include <iostream>

#include <hyplab/ehrhart.hpp>
#include <hyplab/eulerian.hpp>
#include <hyplab/xn_poset.hpp>

int main(int argc, char **argv)
{
    using namespace hyplab;
    const int n = argc > 1 ? std::atoi(argv[1]) : 4;
    try {
        const auto census = basc_census(n);
        IntPolynomial total;
        for (int k = 1; k <= 2 * n - 1; ++k) {
            const IntPolynomial &h = census[static_cast<std::size_t>(k)];
            std::cout << "k=" << k << "  h* = " << h << "  volume " << volume(n, k) << '\n';
            total += h;
        }
        const IntPolynomial psi = psi_c_from_recurrence(n);
        std::cout << "sum   = " << total << "\nPsi_C = " << psi << '\n' << (total == psi ? "equal" : "different") << '\n';
        return total == psi ? 0 : 1;
    } catch (const Error &e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
