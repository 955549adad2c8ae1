#include "prmforge/gf.hpp"

namespace prmforge {

// Mirrors data/moduli.txt; the gf tests check the two agree.
const std::vector<ModulusRecord>& builtin_moduli() {
    static const std::vector<ModulusRecord> table{
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 1, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {3, 6, {2, 1, 0, 0, 0, 0, 1}},
        {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},
        {5, 4, {2, 0, 0, 0, 1}},
        {7, 2, {1, 0, 1}},
        {7, 3, {2, 0, 0, 1}},
        {11, 2, {1, 0, 1}},
        {13, 2, {2, 0, 1}},
        {17, 2, {3, 0, 1}},
        {19, 2, {1, 0, 1}},
        {23, 2, {1, 0, 1}},
        {29, 2, {2, 0, 1}},
        {31, 2, {1, 0, 1}},
    };
    return table;
}

}  // namespace prmforge
