#ifndef BELLORBIT_REFERENCE_HPP_INCLUDED
#define BELLORBIT_REFERENCE_HPP_INCLUDED

// Frozen reference values for the published four- and three-party
// constructions, used by the unit and acceptance suites.

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bellorbit/linalg.hpp"

namespace bellorbit::reference {

inline Matrix four_party_gram_256() {
    const double r = std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    Matrix m(6, 6);
    m << 44.0, -2.0 - r + i * r, -2.0 - r + i * r, -r - i * (2.0 + r),
        4.0 - 3.0 * r + i * (r - 2.0), 4.0 - 4.0 * i,
        //
        -2.0 - r - i * r, 44.0, 8.0 + 4.0 * r, 4.0 * r * i, 8.0 * i, -r + i * (2.0 - r),
        //
        -2.0 - r - i * r, 8.0 + 4.0 * r, 44.0, 0.0, 0.0, -r + i * (2.0 - r),
        //
        -r + i * (2.0 + r), -4.0 * r * i, 0.0, 44.0, 0.0, -2.0 + r - i * r,
        //
        4.0 - 3.0 * r - i * (r - 2.0), -8.0 * i, 0.0, 0.0, 44.0,
        2.0 + r + i * (4.0 + 3.0 * r),
        //
        4.0 + 4.0 * i, -r - i * (2.0 - r), -r - i * (2.0 - r), -2.0 + r + i * r,
        2.0 + r - i * (4.0 + 3.0 * r), 44.0;
    return m;
}

inline Matrix three_party_gram_64() {
    const double r = std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    Matrix m(4, 4);
    m << 12.0, i * r, 2.0 * i, 1.0 + i,
        //
        -i * r, 12.0, -1.0 - i, r,
        //
        -2.0 * i, -1.0 + i, 12.0, 2.0 * i + i * r,
        //
        1.0 - i, r, -2.0 * i - i * r, 12.0;
    return m;
}

// (question, win outcomes) rows of the four-party winning-condition table.
// The two rows marked below are corrected relative to the printed table,
// consistently with the published Gram matrix and the 48-event sum.
inline std::set<std::pair<std::string, std::set<std::string>>> four_party_table() {
    return {
        {"0001", {"0001", "1112", "2223", "3330"}},
        {"1110", {"0002", "1113", "2220", "3331"}},
        {"0110", {"0000", "1111", "2222", "3333"}},
        {"1001", {"0110", "1221", "2332", "3003"}},
        {"0101", {"0000", "1111", "2222", "3333"}},
        {"1010", {"0101", "1212", "2323", "3030"}},
        {"1100", {"0303", "1010", "2121", "3232"}},
        {"0011", {"0332", "1003", "2110", "3221"}},
        {"0110", {"0110", "1221", "2332", "3003"}},  // corrected (printed: 0111,...)
        {"1001", {"0220", "1331", "2002", "3113"}},  // corrected (printed: 0221,...)
        {"0100", {"0220", "1331", "2002", "3113"}},
        {"1011", {"0320", "1031", "2102", "3213"}},
    };
}

inline std::set<std::pair<std::string, std::set<std::string>>> three_party_table() {
    return {
        {"011", {"000", "111", "222", "333"}},
        {"100", {"011", "122", "233", "300"}},
        {"110", {"030", "101", "212", "323"}},
        {"001", {"033", "100", "211", "322"}},
        {"011", {"011", "122", "233", "300"}},
        {"100", {"022", "133", "200", "311"}},
        {"010", {"022", "133", "200", "311"}},
        {"101", {"032", "103", "210", "321"}},
    };
}

}  // namespace bellorbit::reference

#endif
