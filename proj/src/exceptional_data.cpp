#include "exceptional_data.hpp"

namespace weylwords::detail {

// G2, 6 reflections.
const std::array<TableRow, 6> kG2 = {{
    {{1, 0}, "1"},
    {{0, 1}, "2"},
    {{1, 1}, "212"},
    {{3, 1}, "121"},
    {{2, 1}, "12121"},
    {{3, 2}, "21212"},
}};

// F4, 24 reflections: B3 and C3 subsystems first, then the ten distinct to F4.
const std::array<TableRow, 24> kF4 = {{
    {{1, 0, 0, 0}, "1"},
    {{0, 1, 0, 0}, "2"},
    {{1, 1, 0, 0}, "121"},
    {{1, 1, 1, 0}, "12321"},
    {{0, 1, 1, 0}, "232"},
    {{0, 0, 1, 0}, "3"},
    {{0, 1, 2, 0}, "323"},
    {{1, 1, 2, 0}, "13231"},
    {{1, 2, 2, 0}, "2132312"},
    {{0, 0, 0, 1}, "4"},
    {{0, 0, 1, 1}, "434"},
    {{0, 1, 1, 1}, "42324"},
    {{0, 1, 2, 1}, "3423243"},
    {{0, 1, 2, 2}, "43234"},
    {{1, 1, 1, 1}, "1423241"},
    {{1, 1, 2, 1}, "134232431"},
    {{1, 2, 2, 1}, "21342324312"},
    {{1, 2, 3, 1}, "3213423243123"},
    {{1, 1, 2, 2}, "1432341"},
    {{1, 2, 2, 2}, "214323412"},
    {{1, 2, 4, 2}, "32143234123"},
    {{1, 3, 4, 2}, "2321432341232"},
    {{1, 2, 3, 2}, "432134232431234"},
    {{2, 3, 4, 2}, "123214323412321"},
}};

// E6, 36 reflections: two D5 subsystems, one A5 reflection, then seven distinct to E6.
const std::array<TableRow, 36> kE6 = {{
    {{1, 0, 0, 0, 0, 0}, "1"},
    {{1, 0, 1, 0, 0, 0}, "131"},
    {{1, 0, 1, 1, 0, 0}, "13431"},
    {{1, 1, 1, 1, 0, 0}, "1342431"},
    {{0, 0, 1, 0, 0, 0}, "3"},
    {{0, 0, 1, 1, 0, 0}, "343"},
    {{0, 0, 0, 1, 0, 0}, "4"},
    {{0, 1, 0, 0, 0, 0}, "2"},
    {{0, 1, 0, 1, 0, 0}, "424"},
    {{0, 1, 1, 1, 0, 0}, "34243"},
    {{0, 0, 0, 0, 1, 0}, "5"},
    {{0, 0, 0, 1, 1, 0}, "454"},
    {{0, 0, 1, 1, 1, 0}, "34543"},
    {{1, 0, 1, 1, 1, 0}, "1345431"},
    {{1, 1, 1, 1, 1, 0}, "132454231"},
    {{1, 1, 1, 2, 1, 0}, "41324542314"},
    {{1, 1, 2, 2, 1, 0}, "3413245423143"},
    {{0, 1, 0, 1, 1, 0}, "24542"},
    {{0, 1, 1, 1, 1, 0}, "3245423"},
    {{0, 1, 1, 2, 1, 0}, "432454234"},
    {{0, 0, 0, 0, 0, 1}, "6"},
    {{0, 0, 0, 0, 1, 1}, "656"},
    {{0, 0, 0, 1, 1, 1}, "65456"},
    {{0, 0, 1, 1, 1, 1}, "6543456"},
    {{0, 1, 0, 1, 1, 1}, "6542456"},
    {{0, 1, 1, 1, 1, 1}, "652434256"},
    {{0, 1, 1, 2, 1, 1}, "46524342564"},
    {{0, 1, 1, 2, 2, 1}, "5465243425645"},
    {{1, 0, 1, 1, 1, 1}, "134565431"},
    {{1, 1, 1, 1, 1, 1}, "16524342561"},
    {{1, 1, 1, 2, 1, 1}, "1465243425641"},
    {{1, 1, 1, 2, 2, 1}, "154652434256451"},
    {{1, 1, 2, 2, 1, 1}, "314652434256413"},
    {{1, 1, 2, 2, 2, 1}, "31546524342564513"},
    {{1, 1, 2, 3, 2, 1}, "4315465243425645134"},
    {{1, 2, 2, 3, 2, 1}, "243154652434256451342"},
}};

// E7 reflections outside E6 (27). Rows 1-10 come from D6, row 11 from A6.
const std::array<TableRow, 27> kE7 = {{
    {{0, 0, 0, 0, 0, 0, 1}, "7"},
    {{0, 0, 0, 0, 0, 1, 1}, "767"},
    {{0, 0, 0, 0, 1, 1, 1}, "76567"},
    {{0, 0, 0, 1, 1, 1, 1}, "7654567"},
    {{0, 0, 1, 1, 1, 1, 1}, "765434567"},
    {{0, 1, 0, 1, 1, 1, 1}, "765424567"},
    {{0, 1, 1, 1, 1, 1, 1}, "76524342567"},
    {{0, 1, 1, 2, 1, 1, 1}, "4765243425674"},
    {{0, 1, 1, 2, 2, 1, 1}, "547652434256745"},
    {{0, 1, 1, 2, 2, 2, 1}, "65476524342567456"},
    {{1, 0, 1, 1, 1, 1, 1}, "13456765431"},
    {{1, 1, 1, 1, 1, 1, 1}, "7165243425617"},
    {{1, 1, 1, 2, 1, 1, 1}, "714652434256417"},
    {{1, 1, 1, 2, 2, 1, 1}, "71546524342564517"},
    {{1, 1, 2, 2, 1, 1, 1}, "73146524342564137"},
    {{1, 1, 2, 2, 2, 1, 1}, "7315465243425645137"},
    {{1, 1, 2, 3, 2, 1, 1}, "743154652434256451347"},
    {{1, 2, 2, 3, 2, 1, 1}, "72431546524342564513427"},
    {{1, 1, 1, 2, 2, 2, 1}, "6715465243425645176"},
    {{1, 1, 2, 2, 2, 2, 1}, "673154652434256451376"},
    {{1, 1, 2, 3, 2, 2, 1}, "67431546524342564513476"},
    {{1, 2, 2, 3, 2, 2, 1}, "6724315465243425645134276"},
    {{1, 1, 2, 3, 3, 2, 1}, "5674315465243425645134765"},
    {{1, 2, 2, 3, 3, 2, 1}, "256743154652434256451347652"},
    {{1, 2, 2, 4, 3, 2, 1}, "42567431546524342564513476524"},
    {{1, 2, 3, 4, 3, 2, 1}, "3425674315465243425645134765243"},
    {{2, 2, 3, 4, 3, 2, 1}, "134256743154652434256451347652431"},
}};

// E8 reflections from the A7 and D7 subsystems that are not in E7 (13).
const std::array<TableRow, 13> kE8TypeAD = {{
    {{0, 0, 0, 0, 0, 0, 0, 1}, "8"},
    {{0, 0, 0, 0, 0, 0, 1, 1}, "878"},
    {{0, 0, 0, 0, 0, 1, 1, 1}, "87678"},
    {{0, 0, 0, 0, 1, 1, 1, 1}, "8765678"},
    {{0, 0, 0, 1, 1, 1, 1, 1}, "876545678"},
    {{0, 0, 1, 1, 1, 1, 1, 1}, "87654345678"},
    {{0, 1, 0, 1, 1, 1, 1, 1}, "87654245678"},
    {{0, 1, 1, 1, 1, 1, 1, 1}, "8765243425678"},
    {{0, 1, 1, 2, 1, 1, 1, 1}, "487652434256784"},
    {{0, 1, 1, 2, 2, 1, 1, 1}, "54876524342567845"},
    {{0, 1, 1, 2, 2, 2, 1, 1}, "6548765243425678456"},
    {{0, 1, 1, 2, 2, 2, 2, 1}, "765487652434256784567"},
    {{1, 0, 1, 1, 1, 1, 1, 1}, "1345678765431"},
}};

// Remaining 44 E8 reflections, stored as the conjugator w with s_a = w s_theta w^-1.
const std::array<TableRow, 44> kE8Conjugators = {{
    {{1, 1, 1, 1, 1, 1, 1, 1}, "87"},
    {{1, 1, 1, 2, 1, 1, 1, 1}, "487"},
    {{1, 1, 2, 2, 1, 1, 1, 1}, "3487"},
    {{1, 1, 2, 2, 2, 1, 1, 1}, "53487"},
    {{1, 1, 2, 3, 2, 1, 1, 1}, "453487"},
    {{1, 2, 2, 3, 2, 1, 1, 1}, "2453487"},
    {{1, 2, 2, 3, 2, 2, 1, 1}, "62453487"},
    {{1, 1, 1, 2, 2, 1, 1, 1}, "5487"},
    {{1, 1, 1, 2, 2, 2, 1, 1}, "65487"},
    {{1, 1, 2, 2, 2, 2, 1, 1}, "365487"},
    {{1, 1, 2, 3, 2, 2, 1, 1}, "4365487"},
    {{1, 1, 2, 3, 3, 2, 1, 1}, "54365487"},
    {{1, 2, 2, 3, 3, 2, 1, 1}, "254365487"},
    {{1, 2, 2, 4, 3, 2, 1, 1}, "4254365487"},
    {{1, 2, 3, 4, 3, 2, 1, 1}, "34254365487"},
    {{2, 2, 3, 4, 3, 2, 1, 1}, "134254365487"},
    {{1, 1, 1, 2, 2, 2, 2, 1}, "765487"},
    {{1, 1, 2, 2, 2, 2, 2, 1}, "3765487"},
    {{1, 1, 2, 3, 2, 2, 2, 1}, "43765487"},
    {{1, 2, 2, 3, 2, 2, 2, 1}, "243765487"},
    {{1, 2, 2, 3, 3, 2, 2, 1}, "5243765487"},
    {{1, 2, 2, 4, 3, 2, 2, 1}, "45243765487"},
    {{1, 2, 3, 4, 3, 2, 2, 1}, "345243765487"},
    {{2, 2, 3, 4, 3, 2, 2, 1}, "1345243765487"},
    {{1, 1, 2, 3, 3, 2, 2, 1}, "543765487"},
    {{1, 1, 2, 3, 3, 3, 2, 1}, "6543765487"},
    {{1, 2, 2, 3, 3, 3, 2, 1}, "26543765487"},
    {{1, 2, 2, 4, 3, 3, 2, 1}, "426543765487"},
    {{1, 2, 3, 4, 3, 3, 2, 1}, "3426543765487"},
    {{2, 2, 3, 4, 3, 3, 2, 1}, "13426543765487"},
    {{2, 2, 3, 4, 4, 3, 2, 1}, "513426543765487"},
    {{2, 2, 3, 5, 4, 3, 2, 1}, "4513426543765487"},
    {{2, 2, 4, 5, 4, 3, 2, 1}, "34513426543765487"},
    {{1, 2, 2, 4, 4, 3, 2, 1}, "5426543765487"},
    {{1, 2, 3, 4, 4, 3, 2, 1}, "35426543765487"},
    {{1, 2, 3, 5, 4, 3, 2, 1}, "435426543765487"},
    {{1, 3, 3, 5, 4, 3, 2, 1}, "2435426543765487"},
    {{2, 3, 3, 5, 4, 3, 2, 1}, "12435426543765487"},
    {{2, 3, 4, 5, 4, 3, 2, 1}, "312435426543765487"},
    {{2, 3, 4, 6, 4, 3, 2, 1}, "4312435426543765487"},
    {{2, 3, 4, 6, 5, 3, 2, 1}, "54312435426543765487"},
    {{2, 3, 4, 6, 5, 4, 2, 1}, "654312435426543765487"},
    {{2, 3, 4, 6, 5, 4, 3, 1}, "7654312435426543765487"},
    {{2, 3, 4, 6, 5, 4, 3, 2}, "87654312435426543765487"},
}};

}  // namespace weylwords::detail
