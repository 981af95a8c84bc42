#include "apdecomp/golden.hpp"

#include <algorithm>

namespace apd::golden {

bool matches(const ApDecomposition& d, const Dec& g) {
    if (d.n != g.n || d.factors.size() != 3) return false;
    auto gens = d.generators();
    auto ords = d.orders();
    auto eq_fwd = [&] {
        for (int i = 0; i < 3; ++i)
            if (gens[i] != g.gens[i] || ords[i] != g.orders[i]) return false;
        return true;
    };
    auto eq_rev = [&] {
        for (int i = 0; i < 3; ++i)
            if (gens[2 - i] != g.gens[i] || ords[2 - i] != g.orders[i]) return false;
        return true;
    };
    return eq_fwd() || eq_rev();
}

bool matches4(const ApDecomposition& d, const Dec4& g) {
    if (d.n != g.n || d.factors.size() != 4) return false;
    auto gens = d.generators();
    auto ords = d.orders();
    auto eq = [&](bool rev) {
        for (int i = 0; i < 4; ++i) {
            int j = rev ? 3 - i : i;
            if (gens[j] != g.gens[i] || ords[j] != g.orders[i]) return false;
        }
        return true;
    };
    return eq(false) || eq(true);
}

const std::vector<std::pair<i64, i64>> d_table = {
    {1, 10},  {2, 18},  {4, 96},  {6, 182},  {8, 288},  {10, 262},
    {12, 496}, {16, 384}, {18, 276}, {20, 204}, {24, 540}, {36, 2088},
};

const std::vector<i64> nonexistent = {71, 127, 139, 223, 277};

const std::vector<Dec> coverage_involution = {
    {31, {25, 30, 4}, {3, 2, 5}},     {43, {6, 42, 35}, {3, 2, 7}},
    {79, {55, 78, 22}, {3, 2, 13}},   {211, {196, 210, 13}, {3, 2, 35}},
    {463, {21, 462, 440}, {3, 2, 77}}, {571, {109, 570, 460}, {3, 2, 95}},
    {751, {678, 750, 71}, {3, 2, 125}}, {907, {522, 906, 383}, {3, 2, 151}},
};

// the 967 row prints order 162; 162 does not divide 966, recomputation gives 161
const std::vector<Dec> coverage_cube = {
    {67, {59, 29, 66}, {11, 3, 2}},     {103, {10, 46, 102}, {17, 3, 2}},
    {151, {86, 118, 150}, {25, 3, 2}},  {367, {200, 283, 366}, {61, 3, 2}},
    {439, {343, 171, 438}, {73, 3, 2}}, {499, {279, 139, 498}, {83, 3, 2}},
    {619, {505, 252, 618}, {103, 3, 2}}, {643, {355, 177, 642}, {107, 3, 2}},
    {727, {563, 281, 726}, {121, 3, 2}}, {787, {28, 407, 786}, {131, 3, 2}},
    {967, {682, 824, 966}, {162, 3, 2}},
};

const std::vector<std::pair<Dec, int>> coverage_residual = {
    {{31, {5, 2, 30}, {3, 5, 2}}, 1},      {{67, {29, 14, 66}, {3, 11, 2}}, 2},
    {{103, {56, 79, 102}, {3, 17, 2}}, 1}, {{151, {32, 91, 150}, {3, 25, 2}}, 1},
    {{211, {196, 203, 210}, {3, 35, 2}}, 2}, {{283, {44, 163, 282}, {3, 47, 2}}, 2},
    {{691, {437, 218, 690}, {3, 115, 2}}, 2}, {{787, {407, 203, 786}, {3, 131, 2}}, 2},
    {{823, {648, 735, 822}, {3, 137, 2}}, 1}, {{907, {522, 714, 906}, {3, 151, 2}}, 2},
};

const std::vector<i64> order23m_uncovered = {139, 223, 331, 547, 607, 859};

const std::array<i64, 4> counts_1e5 = {1614, 494, 476, 476};

const std::vector<std::pair<Dec, i64>> coverage_ascending = {
    {{61, {13, 11, 9}, {3, 4, 5}}, 15},
    {{349, {122, 213, 304}, {3, 4, 29}}, 58},
    {{661, {364, 106, 509}, {3, 4, 55}}, 66},
    {{661, {364, 555, 85}, {3, 4, 55}}, 66},
};

const std::vector<std::pair<Dec, i64>> coverage_centered = {
    {{157, {153, 12, 28}, {13, 3, 4}}, 39},
    {{229, {161, 134, 107}, {19, 3, 4}}, 228},
    {{349, {31, 122, 213}, {29, 3, 4}}, 58},
    {{373, {91, 284, 104}, {31, 3, 4}}, 93},
    {{997, {226, 692, 161}, {83, 3, 4}}, 498},
};

const std::vector<i64> order34m_uncovered = {277, 421, 709, 733, 853, 877};

const std::vector<Dec> type_a = {
    {31, {4, 30, 25}, {5, 2, 3}},      {191, {39, 190, 150}, {5, 2, 19}},
    {191, {184, 190, 5}, {5, 2, 19}},  {271, {10, 270, 259}, {5, 2, 27}},
    {271, {244, 270, 25}, {5, 2, 27}}, {431, {405, 430, 24}, {5, 2, 43}},
    {691, {89, 690, 600}, {5, 2, 69}}, {991, {799, 990, 190}, {5, 2, 99}},
};

const std::vector<Dec> type_b = {
    {31, {5, 2, 30}, {3, 5, 2}},        {131, {107, 53, 130}, {13, 5, 2}},
    {311, {13, 6, 310}, {31, 5, 2}},    {311, {105, 52, 310}, {31, 5, 2}},
    {491, {203, 101, 490}, {49, 5, 2}}, {811, {330, 570, 810}, {81, 5, 2}},
    {991, {395, 197, 990}, {99, 5, 2}},
};

const std::vector<Dec> type_c = {
    {271, {10, 140, 270}, {5, 27, 2}},  {691, {132, 411, 690}, {5, 69, 2}},
    {971, {803, 401, 970}, {5, 97, 2}}, {991, {197, 98, 990}, {5, 99, 2}},
};

const std::vector<i64> order25n_uncovered = {71, 211, 331, 571, 631, 911};

const std::vector<std::pair<Dec, Dec>> double_barrelled_1 = {
    {{67, {29, 14, 66}, {3, 11, 2}}, {67, {59, 29, 66}, {11, 3, 2}}},
    {{211, {210, 203, 196}, {2, 35, 3}}, {211, {13, 210, 196}, {35, 2, 3}}},
    {{271, {270, 140, 10}, {2, 27, 5}}, {271, {259, 270, 10}, {27, 2, 5}}},
    {{331, {167, 83, 330}, {11, 15, 2}}, {331, {4, 167, 330}, {15, 11, 2}}},
    {{379, {378, 119, 239}, {2, 7, 27}}, {379, {138, 378, 239}, {7, 2, 27}}},
    {{661, {364, 391, 418}, {3, 20, 11}}, {661, {310, 364, 418}, {20, 3, 11}}},
    {{787, {407, 203, 786}, {3, 131, 2}}, {787, {28, 407, 786}, {131, 3, 2}}},
    {{907, {906, 714, 522}, {2, 151, 3}}, {907, {383, 906, 522}, {151, 2, 3}}},
};

const std::vector<std::pair<Dec, Dec>> double_barrelled_2 = {
    {{349, {31, 122, 213}, {29, 3, 4}}, {349, {122, 213, 304}, {3, 4, 29}}},
    {{599, {578, 598, 19}, {23, 2, 13}}, {599, {598, 19, 39}, {2, 13, 23}}},
};

const std::vector<std::pair<Dec, Dec>> pq_pair_rows = {
    {{91, {33, 16, 90}, {12, 3, 2}}, {91, {58, 74, 90}, {12, 3, 2}}},
    {{133, {61, 30, 132}, {18, 3, 2}}, {133, {72, 102, 132}, {18, 3, 2}}},
    {{217, {135, 67, 216}, {30, 3, 2}}, {217, {82, 149, 216}, {30, 3, 2}}},
    {{247, {137, 68, 246}, {36, 3, 2}}, {247, {110, 178, 246}, {36, 3, 2}}},
    {{247, {175, 87, 246}, {36, 3, 2}}, {247, {72, 159, 246}, {36, 3, 2}}},
    {{301, {271, 135, 300}, {42, 3, 2}}, {301, {30, 165, 300}, {42, 3, 2}}},
    {{403, {228, 315, 402}, {60, 3, 2}}, {403, {175, 87, 402}, {60, 3, 2}}},
    {{469, {142, 305, 468}, {66, 3, 2}}, {469, {327, 163, 468}, {66, 3, 2}}},
    {{553, {205, 102, 552}, {78, 3, 2}}, {553, {348, 450, 552}, {78, 3, 2}}},
    {{559, {202, 380, 558}, {84, 3, 2}}, {559, {357, 178, 558}, {84, 3, 2}}},
    {{589, {547, 273, 588}, {90, 3, 2}}, {589, {42, 315, 588}, {90, 3, 2}}},
    {{679, {26, 352, 678}, {96, 3, 2}}, {679, {653, 326, 678}, {96, 3, 2}}},
    {{721, {422, 571, 720}, {102, 3, 2}}, {721, {299, 149, 720}, {102, 3, 2}}},
    {{763, {236, 499, 762}, {108, 3, 2}}, {763, {527, 263, 762}, {108, 3, 2}}},
    {{763, {345, 172, 762}, {108, 3, 2}}, {763, {418, 590, 762}, {108, 3, 2}}},
    {{817, {357, 178, 816}, {126, 3, 2}}, {817, {460, 638, 816}, {126, 3, 2}}},
    {{871, {59, 29, 870}, {132, 3, 2}}, {871, {812, 841, 870}, {132, 3, 2}}},
    {{871, {410, 640, 870}, {132, 3, 2}}, {871, {461, 230, 870}, {132, 3, 2}}},
    {{889, {674, 781, 888}, {126, 3, 2}}, {889, {215, 107, 888}, {126, 3, 2}}},
};

const std::vector<i64> pq_pair_uncovered = {259, 427, 511, 973};

const std::vector<PqNeg3> pq_neg3_rows = {
    {7, 5, {35, {11, 34, 22}, {3, 2, 4}}},
    {7, 11, {77, {67, 76, 8}, {3, 2, 10}}},
    {19, 5, {95, {16, 94, 77}, {9, 2, 4}}},
    {7, 17, {119, {18, 118, 99}, {3, 2, 16}}},
    {31, 5, {155, {121, 154, 32}, {15, 2, 4}}},
    {7, 23, {161, {116, 160, 43}, {3, 2, 22}}},
    {7, 29, {203, {88, 202, 113}, {3, 2, 28}}},
    {19, 11, {209, {111, 208, 96}, {9, 2, 10}}},
    {43, 5, {215, {126, 214, 87}, {21, 2, 4}}},
};

// types: 0 = A, 1 = B, 2 = C, 3 = '-'
const std::vector<WeakLift> weak_lift_rows = {
    {5, 13, {65, {27, 44, 61}, {4, 4, 3}}, 0, 0},
    {5, 13, {65, {53, 57, 61}, {4, 4, 3}}, 0, 0},
    {5, 13, {65, {53, 16, 44}, {4, 3, 4}}, 0, 2},
    {5, 29, {145, {88, 12, 81}, {4, 4, 7}}, 0, 0},
    {5, 29, {145, {117, 99, 81}, {4, 4, 7}}, 0, 0},
    {5, 37, {185, {43, 112, 181}, {4, 4, 9}}, 1, 1},
    {5, 37, {185, {38, 16, 179}, {4, 9, 4}}, 0, 2},
    {5, 53, {265, {213, 201, 189}, {4, 13, 4}}, 0, 2},
    {5, 61, {305, {123, 56, 294}, {4, 15, 4}}, 0, 2},
    {5, 61, {305, {62, 24, 291}, {4, 20, 3}}, 0, 3},
    {5, 61, {305, {273, 62, 156}, {12, 4, 5}}, 1, 3},
    {13, 29, {377, {262, 99, 313}, {12, 4, 7}}, 0, 0},
    {29, 13, {377, {287, 57, 203}, {28, 4, 3}}, 0, 0},
    {29, 13, {377, {14, 146, 278}, {28, 3, 4}}, 0, 2},
    {29, 13, {377, {222, 146, 70}, {28, 3, 4}}, 0, 2},
    {29, 13, {377, {235, 146, 57}, {28, 3, 4}}, 0, 2},
    {5, 101, {505, {102, 394, 181}, {4, 4, 25}}, 0, 0},
    {5, 101, {505, {102, 414, 221}, {4, 4, 25}}, 0, 0},
    {5, 101, {505, {203, 192, 181}, {4, 4, 25}}, 0, 0},
    {5, 101, {505, {203, 212, 221}, {4, 4, 25}}, 0, 0},
    {5, 101, {505, {203, 56, 414}, {4, 25, 4}}, 0, 2},
    {5, 109, {545, {33, 437, 296}, {4, 4, 27}}, 1, 1},
    {5, 109, {545, {403, 437, 471}, {4, 4, 27}}, 1, 1},
    {13, 53, {689, {319, 625, 242}, {12, 13, 4}}, 0, 2},
    {53, 13, {689, {209, 317, 425}, {52, 4, 3}}, 0, 0},
    {53, 13, {689, {469, 447, 425}, {52, 4, 3}}, 0, 0},
    {53, 13, {689, {456, 107, 447}, {52, 3, 4}}, 0, 2},
    {53, 13, {689, {586, 107, 317}, {52, 3, 4}}, 0, 2},
    {5, 149, {745, {193, 597, 256}, {4, 4, 37}}, 1, 1},
    {5, 149, {745, {403, 597, 46}, {4, 4, 37}}, 1, 1},
    {5, 157, {785, {158, 757, 571}, {4, 4, 39}}, 0, 0},
    {5, 157, {785, {472, 129, 571}, {4, 4, 39}}, 0, 0},
    {5, 157, {785, {443, 472, 501}, {4, 4, 39}}, 1, 1},
    {5, 157, {785, {158, 207, 256}, {4, 12, 13}}, 0, 3},
    {5, 157, {785, {158, 326, 494}, {4, 3, 52}}, 0, 3},
    {5, 173, {865, {693, 566, 439}, {4, 43, 4}}, 0, 3},
    {5, 181, {905, {363, 316, 269}, {4, 5, 36}}, 0, 3},
    {5, 197, {985, {183, 592, 16}, {4, 4, 49}}, 1, 1},
};

const std::vector<T3> table3 = {
    {175, 6, 3, 3, 0, false, false},    {245, 6, 3, 3, 0, false, false},
    {275, 68, 0, 8, 60, false, false},  {325, 20, 12, 8, 0, false, false},
    {425, 8, 0, 8, 0, false, false},    {475, 6, 3, 3, 0, false, false},
    {539, 12, 9, 3, 0, false, false},   {575, 2, 0, 2, 0, false, false},
    {605, 0, 0, 0, 0, false, true},     {637, 126, 108, 18, 0, false, false},
    {725, 30, 18, 12, 0, false, false}, {775, 188, 32, 24, 132, false, false},
    {845, 20, 12, 8, 0, false, false},  {847, 0, 0, 0, 0, true, true},
    {925, 10, 6, 4, 0, false, false},   {931, 182, 156, 26, 0, false, false},
};

const std::vector<Dec> weak_six_rows = {
    {43, {1, 4, 7}, {1, 7, 6}},       {67, {1, 30, 59}, {1, 6, 11}},
    {79, {1, 52, 24}, {1, 13, 6}},    {103, {1, 47, 93}, {1, 6, 17}},
    {139, {97, 1, 44}, {6, 1, 23}},   {223, {1, 132, 40}, {1, 37, 6}},
    {223, {184, 1, 41}, {6, 1, 37}},  {283, {45, 1, 240}, {6, 1, 47}},
};

const std::vector<Quartet> quartet_rows = {
    {105, 12, {38, 71, 104, 32}, {17, 29, 41, 53}},
    {165, 20, {113, 56, 164, 107}, {47, 89, 131, 8}},
    {285, 36, {98, 191, 284, 92}, {212, 134, 56, 263}},
    {357, 48, {122, 239, 356, 116}, {269, 50, 188, 326}},
    {465, 60, {158, 311, 464, 152}, {437, 404, 371, 338}},
    {231, 30, {80, 155, 230, 74}, {179, 188, 197, 206}},
    {483, 66, {164, 323, 482, 158}, {95, 461, 344, 227}},
};

const Dec4 quartet_counterexample = {315, {8, 131, 254, 62}, {4, 6, 6, 4}};

const std::vector<FieldPoly> field_polys = {
    {11, 2, {2, 7, 1, 0}},  {11, 3, {9, 2, 0, 1}},  {19, 2, {2, -1, 1, 0}},
    {19, 3, {-2, 4, 0, 1}}, {23, 2, {5, -2, 1, 0}}, {29, 2, {2, -5, 1, 0}},
};

const std::vector<FieldDec> field_decs = {
    {11, 2, {72, 15, 80}, {5, 8, 3}},
    {11, 3, {570, 532, 595}, {7, 5, 38}},
    {11, 3, {665, 1008, 570}, {2, 95, 7}},
    {19, 2, {144, 320, 135}, {5, 9, 8}},
    {19, 3, {3429, 2970, 5588}, {2, 127, 27}},
    {23, 2, {176, 192, 429}, {3, 11, 16}},
    {29, 2, {280, 720, 609}, {3, 7, 40}},
    {29, 2, {120, 504, 385}, {7, 5, 24}},
};

const std::vector<Dec4> fourap_104 = {
    {104, {31, 81, 27, 77}, {4, 3, 2, 2}},
    {104, {77, 79, 81, 83}, {2, 2, 3, 4}},
};

const Dec4 fourap_3613_weak = {3613, {3528, 1148, 2381, 1}, {4, 129, 7, 1}};

const Dec eq2 = {7, {4, 6, 1}, {3, 2, 1}};
const Dec eq3 = {49, {18, 48, 29}, {3, 2, 7}};
const Dec u343 = {343, {18, 342, 323}, {3, 2, 49}};

const std::vector<Dec> u961_lifts = {
    {961, {521, 960, 438}, {3, 2, 155}},
    {961, {521, 526, 531}, {3, 62, 5}},
    {961, {428, 960, 531}, {93, 2, 5}},
};

const std::vector<Dec> u275_strong_lifts = {
    {275, {274, 166, 58}, {2, 5, 20}},
    {275, {274, 56, 113}, {2, 5, 20}},
    {275, {274, 221, 168}, {2, 5, 20}},
    {275, {274, 111, 223}, {2, 5, 20}},
};

const std::vector<Dec> u155_pair = {
    {155, {56, 154, 97}, {3, 2, 20}},
    {155, {87, 154, 66}, {12, 2, 5}},
};

const Dec eq4 = {379, {239, 378, 138}, {27, 2, 7}};
const Dec eq5 = {11, {10, 1, 3}, {2, 1, 5}};
const Dec eq6 = {461, {1, 48, 95}, {1, 4, 115}};
const Dec eq7 = {55, {54, 1, 3}, {2, 1, 20}};
const Dec eq8 = {55, {52, 54, 1}, {20, 2, 1}};

const std::array<i64, 3> eq4_special_lifts = {8956, 143640, 134683};

const std::vector<Dec> intro_examples = {
    {61, {9, 11, 13}, {5, 4, 3}},
    {911, {196, 550, 904}, {13, 10, 7}},
    {455, {92, 93, 94}, {4, 12, 6}},
    {91, {9, 18, 27}, {3, 12, 2}},
    {91, {87, 83, 79}, {6, 4, 3}},
    {65, {61, 57, 53}, {3, 4, 4}},
    {703, {700, 701, 702}, {9, 36, 2}},
    {31, {30, 2, 5}, {2, 5, 3}},
    {275, {136, 274, 137}, {5, 2, 20}},
    {775, {386, 774, 387}, {15, 2, 20}},
};

} // namespace apd::golden
