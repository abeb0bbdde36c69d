#pragma once
// The 54 exceptional orbit representatives with sizes and group orders.

#include <array>
#include <string>
#include <vector>

#include "garnier/charvariety.hpp"

namespace garnier {

struct Table2Row {
    int index;
    int orbit_size;
    int group_order;  // -1 for infinite
    std::array<const char*, 11> entries;
};

const std::vector<Table2Row>& table2_rows();
const Table2Row& table2_row(int index);
Number table2_symbol(const std::string& token);
PartialPoint table2_partial(const Table2Row& row);
std::vector<Point> table2_completions(const Table2Row& row);

}  // namespace garnier
