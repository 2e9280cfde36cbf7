#ifndef HYPLAB_REFERENCE_DATA_HPP
#define HYPLAB_REFERENCE_DATA_HPP

#include <vector>

#include <hyplab/polynomial.hpp>

// Published values used as golden data by the verification suites. Polynomial
// coefficients are listed from t^0 upwards.
namespace hyplab::reference
{

// [n][k], 1 <= k <= 2n-1: h* of the half-open slices of the type C parallelepiped.
inline const std::vector<std::vector<std::vector<long long>>> &half_open_hstar_reference()
{
    static const std::vector<std::vector<std::vector<long long>>> t = {
        {},
        {{}, {1}},
        {{}, {1}, {0, 2}, {0, 1}},
        {{}, {1}, {0, 5, 1}, {0, 5, 5}, {0, 3, 3}, {0, 1}},
        {{}, {1}, {0, 9, 5}, {0, 13, 30, 4}, {0, 13, 42, 13}, {0, 9, 29, 9}, {0, 4, 9, 1}, {0, 1}},
        {{}, {1}, {0, 14, 15, 1}, {0, 26, 106, 43, 1}, {0, 35, 223, 178, 14}, {0, 35, 268, 268, 35}, {0, 26, 199, 199, 26}, {0, 14, 88, 69, 5}, {0, 5, 19, 6}, {0, 1}},
        {{}, {1}, {0, 20, 35, 7}, {0, 45, 287, 238, 27}, {0, 75, 796, 1211, 304, 6}, {0, 96, 1334, 2681, 1006, 45}, {0, 96, 1505, 3410, 1505, 96}, {0, 75, 1175, 2662, 1175, 75}, {0, 45, 622, 1243, 462, 20}, {0, 20, 206, 301, 69, 1}, {0, 6, 34, 21, 1}, {0, 1}},
        {{}, {1}, {0, 27, 70, 28, 1}, {0, 71, 658, 932, 257, 8}, {0, 140, 2261, 5689, 3013, 278, 1}, {0, 216, 4838, 16481, 12485, 1920, 27}, {0, 267, 7245, 29221, 26813, 5446, 140}, {0, 267, 7930, 34549, 34549, 7930, 267}, {0, 216, 6413, 27937, 27937, 6413, 216}, {0, 140, 3786, 15229, 13928, 2813, 71}, {0, 71, 1568, 5261, 3900, 575, 7}, {0, 27, 415, 981, 468, 35}, {0, 7, 55, 56, 8}, {0, 1}},
    };
    return t;
}

// [n][k]: h* of the closed slices.
inline const std::vector<std::vector<std::vector<long long>>> &closed_hstar_reference()
{
    static const std::vector<std::vector<std::vector<long long>>> t = {
        {},
        {{}, {1}},
        {{}, {1}, {1, 1}, {1}},
        {{}, {1}, {1, 4, 1}, {1, 6, 3}, {1, 4, 1}, {1}},
        {{}, {1}, {1, 8, 5}, {1, 17, 26, 3}, {1, 21, 39, 7}, {1, 17, 26, 3}, {1, 8, 5}, {1}},
        {{}, {1}, {1, 13, 15, 1}, {1, 34, 102, 38, 1}, {1, 55, 237, 147, 10}, {1, 64, 306, 216, 19}, {1, 55, 237, 147, 10}, {1, 34, 102, 38, 1}, {1, 13, 15, 1}, {1}},
        {{}, {1}, {1, 19, 35, 7}, {1, 58, 288, 224, 26}, {1, 113, 878, 1134, 261, 5}, {1, 164, 1590, 2572, 805, 30}, {1, 185, 1920, 3320, 1135, 51}, {1, 164, 1590, 2572, 805, 30}, {1, 113, 878, 1134, 261, 5}, {1, 58, 288, 224, 26}, {1, 19, 35, 7}, {1}},
        {{}, {1}, {1, 26, 70, 28, 1}, {1, 90, 673, 904, 250, 8}, {1, 203, 2519, 5612, 2795, 251, 1}, {1, 348, 5789, 16832, 11380, 1596, 21}, {1, 475, 9248, 30824, 24265, 4229, 90}, {1, 526, 10765, 37436, 30877, 5746, 141}, {1, 475, 9248, 30824, 24265, 4229, 90}, {1, 348, 5789, 16832, 11380, 1596, 21}, {1, 203, 2519, 5612, 2795, 251, 1}, {1, 90, 673, 904, 250, 8}, {1, 26, 70, 28, 1}, {1}},
    };
    return t;
}

// [n]: h* of the whole parallelepiped, which is Psi_C.
inline const std::vector<std::vector<long long>> &parallelepiped_hstar_reference()
{
    static const std::vector<std::vector<long long>> t = {
        {},
        {1},
        {1, 3},
        {1, 14, 9},
        {1, 49, 115, 27},
        {1, 156, 918, 764, 81},
        {1, 479, 5994, 11774, 4549, 243},
        {1, 1450, 35239, 136364, 123359, 25418, 729},
    };
    return t;
}

// [n], 3 <= n <= 6: Psi for types B and D.
inline const std::vector<std::vector<long long>> &psi_b_reference()
{
    static const std::vector<std::vector<long long>> t = {
        {},
        {},
        {},
        {1, 15, 7, 1},
        {1, 56, 102, 32, 1},
        {1, 189, 898, 706, 125, 1},
        {1, 610, 6351, 10876, 4751, 450, 1},
    };
    return t;
}

inline const std::vector<std::vector<long long>> &psi_d_reference()
{
    static const std::vector<std::vector<long long>> t = {
        {},
        {},
        {},
        {1, 4, 1},
        {1, 22, 18, 6, 1},
        {1, 85, 222, 138, 33, 1},
        {1, 294, 1895, 2380, 1047, 142, 1},
    };
    return t;
}

// Claimed real-rootedness of Psi_B for n = 3..6 (index n).
inline const std::vector<int> &psi_b_real_rooted_claim()
{
    static const std::vector<int> t = {-1, -1, -1, 0, 1, 1, 1};
    return t;
}

inline const std::vector<long long> &eulerian_b3()
{
    static const std::vector<long long> t = {1, 23, 23, 1};
    return t;
}

inline const std::vector<long long> &eulerian_d4()
{
    static const std::vector<long long> t = {1, 44, 102, 44, 1};
    return t;
}

inline IntPolynomial poly(const std::vector<long long> &c)
{
    return IntPolynomial::from_counts(c);
}

} // namespace hyplab::reference

#endif
