#pragma once

// Published coefficient lists, ascending, transcribed verbatim.

#include <vector>

namespace refdata {

// e
inline const std::vector<long long> kSeriesE = {
    1, 1, 1, 1, 1, 1, -1, 0, 2, -3, 1, 2, -1, -2, -7, 32, -36, -25, 86, 40, -351, 297, 802, -2528, 3422,
    -4226, 10375, -24836, 32704, -408, -96389, 266726, -603941, 1426546, -3149939, 5686426, -7795364, 6880187,
    2141014, -32473209
};

// pi
inline const std::vector<long long> kSeriesPi = {
    1, 1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 2, -3, 1, 0, 0, 0, 0, 0, 4, -8, 5, -1, 0, 0, 0, -2, 17, -40, 52, -62,
    90, -144, 233, -385, 666, -1133, 1829, -2904, 4656
};

// golden ratio as printed
inline const std::vector<long long> kSeriesGoldenPrinted = {
    1, 1, -1, 2, -5, 14, -42, 132, -429, 1430, -4861, 16778, -58598, 206516, -732825, 2613834, -9358677,
    33602822, -120902914, 435668420
};

// [1,1,1,...]_q
inline const std::vector<long long> kQSeriesGolden = {
    1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185, -423, 978, -2283, 5373, -12735, 30372, -72832, 175502, -424748,
    1032004
};

// [7/5]
inline const std::vector<long long> kSeries7_5 = {1, 1, -1, 0, 2, -4, 4, 0, -8, 16, -16, 0, 32, -64, 64};

// [19/31]
inline const std::vector<long long> kSeries19_31 = {
    1, -1, 2, -5, 14, -42, 130, -406, 1268, -3952, 12296, -38220, 118752, -368928, 1146152
};

// [19/31]_q as printed
inline const std::vector<long long> kQSeries19_31 = {
    0, 1, -4, 14, -34, 77, -173, 384, -847, 1864, -4091, 8959, -19599, 42851, -93648
};

// [7/5]_q
inline const std::vector<long long> kQSeries7_5 = {1, 0, 0, 1, 0, -2, 1, 3, -3, -4, 7, 4, -14};

// [17/2] under (p,1;0,1)
inline const std::vector<long long> kSeries17_2 = {1, -1, 13, -65, 283, -1233, 5465, -24273, 107594};

}  // namespace refdata
