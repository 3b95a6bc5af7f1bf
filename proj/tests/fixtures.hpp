#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Frozen reference data shared by the unit and acceptance suites.
namespace hosoya::testdata {

// Rows 1..14 of the triangle.
inline const std::vector<std::vector<long long>>& triangle_rows_14() {
    static const std::vector<std::vector<long long>> rows = {
        {0},
        {1, 1},
        {1, 3, 1},
        {2, 4, 4, 2},
        {3, 7, 5, 7, 3},
        {5, 11, 9, 9, 11, 5},
        {8, 18, 14, 16, 14, 18, 8},
        {13, 29, 23, 25, 25, 23, 29, 13},
        {21, 47, 37, 41, 39, 41, 37, 47, 21},
        {34, 76, 60, 66, 64, 64, 66, 60, 76, 34},
        {55, 123, 97, 107, 103, 105, 103, 107, 97, 123, 55},
        {89, 199, 157, 173, 167, 169, 169, 167, 173, 157, 199, 89},
        {144, 322, 254, 280, 270, 274, 272, 274, 270, 280, 254, 322, 144},
        {233, 521, 411, 453, 437, 443, 441, 441, 443, 437, 453, 411, 521, 233},
    };
    return rows;
}

using ClassSet = std::set<std::pair<std::uint64_t, std::uint64_t>>;

// Residue classes (r, k) mod d_p with p | entry, per prime.
inline const std::map<std::uint64_t, ClassSet>& zero_class_sets() {
    static const std::map<std::uint64_t, ClassSet> sets = {
        {3, {{3, 2}, {1, 1}, {2, 3}, {2, 0}}},
        {5, {{0, 3}, {1, 1}, {3, 4}, {3, 0}}},
        {7,
         {{5, 2}, {5, 4}, {7, 3}, {7, 5}, {1, 1}, {3, 6}, {6, 7}, {6, 0}}},
        {11,
         {{6, 2}, {6, 5}, {0, 4}, {0, 7}, {1, 1}, {5, 8}, {8, 9}, {8, 0}}},
        {13,
         {{8, 1},
          {8, 8},
          {9, 5},
          {12, 6},
          {12, 7},
          {1, 1},
          {1, 8},
          {2, 5},
          {2, 12},
          {5, 6},
          {5, 7},
          {5, 13},
          {5, 0},
          {9, 12},
          {12, 13},
          {12, 0}}},
        {17,
         {{1, 1},
          {10, 1},
          {10, 10},
          {13, 7},
          {16, 8},
          {16, 9},
          {1, 10},
          {4, 7},
          {4, 16},
          {7, 8},
          {7, 9},
          {7, 17},
          {7, 0},
          {13, 16},
          {16, 0},
          {16, 17}}},
        {19,
         {{1, 1},
          {10, 2},
          {10, 9},
          {14, 5},
          {14, 10},
          {15, 3},
          {15, 13},
          {16, 17},
          {16, 0},
          {0, 7},
          {0, 12},
          {4, 8},
          {4, 15},
          {13, 16},
          {17, 4},
          {17, 14}}},
    };
    return sets;
}

// H(50, 1..25).
inline const std::vector<long long>& row50_half() {
    static const std::vector<long long> v = {
        7778742049LL,  17393796001LL, 13721172195LL, 15123989661LL,
        14588161069LL, 14792829379LL, 14714653041LL, 14744513745LL,
        14733107971LL, 14737464589LL, 14735800509LL, 14736436131LL,
        14736193345LL, 14736286081LL, 14736250659LL, 14736264189LL,
        14736259021LL, 14736260995LL, 14736260241LL, 14736260529LL,
        14736260419LL, 14736260461LL, 14736260445LL, 14736260451LL,
        14736260449LL};
    return v;
}

// Asserted divisors of specific row-50 entries: k -> divisor.
inline const std::vector<std::pair<long long, long long>>& row50_divisors() {
    static const std::vector<std::pair<long long, long long>> v = {
        {3, 3},  {13, 5}, {14, 11}, {1, 13}, {5, 19},
        {2, 29}, {25, 233}, {6, 109}, {9, 89}};
    return v;
}

// Distinct primes in first-appearance order. The first 20 values stop
// mid-row-14; the row continues with 521 and 443.
inline const std::vector<long long>& distinct_primes_14_head20() {
    static const std::vector<long long> v = {
        3,  2,   7,   5,   11,  13,  29,  23,  47,  37,
        41, 97,  107, 103, 89,  199, 157, 173, 167, 233};
    return v;
}

// All 100 distinct primes among rows 1..50, in order of first appearance.
inline const std::vector<long long>& distinct_primes_50() {
    static const std::vector<long long> v = {
        3,          2,          7,          5,          11,
        13,         29,         23,         47,         37,
        41,         97,         107,        103,        89,
        199,        157,        173,        167,        233,
        521,        443,        733,        2207,       1741,
        1877,       1867,       1871,       1597,       3571,
        3037,       9349,       7841,       7951,       7919,
        11933,      12823,      33503,      28657,      50549,
        55717,      54497,      54319,      54277,      54293,
        54287,      142099,     214129,     236021,     229963,
        560597,     601187,     514229,     974249,     3010349,
        2617513,    2546669,    2549863,    2550329,    2550407,
        4128959,    4126697,    10695127,   10803367,   16276621,
        17477021,   17482189,   17480681,   17480791,   54018521,
        45940907,   45765017,   45765227,   75998029,   74091163,
        74050573,   74049641,   74049683,   180510493,  198965423,
        193866917,  193864477,  193864603,  370248451,  314883661,
        313678093,  433494437,  820019509,  821683589,  821047967,
        821290753,  821223569,  1328726303, 1328767757, 3478800673,
        3478759199, 2971215073, 6643838879, 5620497329, 5628750833};
    return v;
}

struct DensityFixture {
    long long n;
    unsigned long long distinct_entries;
    unsigned long long distinct_primes;
    unsigned long long primes_below;
};

inline const std::vector<DensityFixture>& density_rows() {
    static const std::vector<DensityFixture> v = {
        {10, 27, 11, 9},       {20, 107, 35, 28},  {30, 237, 54, 51},
        {50, 647, 100, 118},   {100, 2547, 194, 372}};
    return v;
}

inline const DensityFixture& density_row_500() {
    static const DensityFixture v = {500, 62747, 929, 6297};
    return v;
}

// Prime-free rows <= 1000 that are composite, not 1 (mod 3), with r + 2
// prime: the sporadic class.
inline const std::vector<long long>& sporadic_prime_free_1000() {
    static const std::vector<long long> v = {329, 351, 519, 539, 591,
                                             605, 749, 807, 965, 975};
    return v;
}

// Leading prime values of the F(r) + L(r+1) search.
inline const std::vector<long long>& fl_plus_prefix() {
    static const std::vector<long long> v = {5,    23,    37,    97,
                                             157,  1741,  11933, 50549};
    return v;
}

// (minus value, plus value) at the shared indices r = 2 and r = 6.
inline const std::vector<std::pair<long long, long long>>& fl_neighbor_pairs() {
    static const std::vector<std::pair<long long, long long>> v = {{2, 5},
                                                                   {19, 37}};
    return v;
}

// Prime columns (k >= 3) of three deep spot rows, cross-checked against
// two independent probable-prime implementations.
inline const std::map<long long, std::vector<long long>>& deep_row_prime_cols() {
    static const std::map<long long, std::vector<long long>> v = {
        {1000, {}},
        {2000, {526, 710, 820}},
        {3000, {780, 1331}},
    };
    return v;
}

}  // namespace hosoya::testdata
