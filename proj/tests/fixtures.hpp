#ifndef SIGINV_TEST_FIXTURES_HPP
#define SIGINV_TEST_FIXTURES_HPP

// Frozen reference bases shared by the unit suites and the acceptance
// runner, in the compact digit form read by from_compact.

#include <string>
#include <vector>

namespace siginv::testing {

// frozen reference bases, one line per element
inline const std::vector<std::string> kD2W1 = {"+12 -21"};

inline const std::vector<std::string> kD2W2 = {"+1212 -1221 -2112 +2121",
                                        "+1122 -1221 -2112 +2211"};

inline const std::vector<std::string> kD2W3 = {
    "+121212 -121221 -122112 +122121 -211212 +211221 +212112 -212121",
    "+112212 -112221 -122112 +122121 -211212 +211221 +221112 -221121",
    "+121122 -121221 -122112 +122211 -211122 +211221 +212112 -212211",
    "+112122 -112221 -122112 +122211 -211122 +211221 +221112 -221211",
    "+111222 -112221 -121212 +122211 -211122 +212121 +221112 -222111"};

inline const std::vector<std::string> kD3W1 = {"+123 -132 -213 +231 +312 -321"};

inline const std::vector<std::string> kD3W2 = {
    "+123123 -312132 +312312 +213132 -213231 -213123 +321213 -312321 -132231 -132123 -321231 "
    "+321132 +132321 +132213 +231231 +321321 +213321 +123231 +231123 -312213 -321123 -231132 "
    "+213213 +132132 +312231 -213312 -231321 -132312 -123213 -321312 +312123 -231213 +231312 "
    "-123321 +123312 -123132",
    "+211332 -121332 +212313 -132231 -313221 +122331 -211323 +321132 +132213 -233121 +323121 "
    "-122313 +213321 +231123 -312213 +121323 -321123 -212331 -231132 +133221 -131223 +312231 "
    "+233112 -323112 -311232 -213312 +313212 -133212 +131232 +311223 -232113 +322113 -123321 "
    "-322131 +123312 +232131",
    "+112323 +312132 +332121 -213132 +211332 +213123 -321213 +113232 -331221 +122331 -211323 "
    "+321231 +223131 -332112 -132321 -233121 +331212 -122313 -123231 -223113 +133221 +233112 "
    "-311232 -133212 -221331 +231321 +132312 +123213 -312123 +221313 +311223 -231312 +322113 "
    "-322131 -113223 -112332",
    "-213132 +211332 +213231 -133122 -121332 -321213 +312321 +212133 -313221 +122331 +132123 "
    "+131322 +232311 -322311 -132321 -311322 -123231 +323211 -212331 +133221 -122133 -131223 "
    "-211233 +233112 +313122 -233211 -323112 +321312 -312123 +231213 +311223 +121233 -231312 "
    "-232113 +322113 +123132",
    "+123123 +312312 +112233 +211332 -133122 -132231 -331221 +122331 -332112 -322311 +231231 "
    "+321321 +332211 -311322 -312213 +331122 -223113 -321123 -231132 +213213 +133221 +132132 "
    "-122133 -211233 +233112 -233211 -213312 -221331 +221133 +311223 +223311 +322113 -123321 "
    "-113223 +113322 -112332"};

inline const std::vector<std::string> kD4W1 = {
    "+1234 -1243 -1324 +1342 +1423 -1432 -2134 +2143 +2314 -2341 -2413 +2431 +3124 -3142 "
    "-3214 +3241 +3412 -3421 -4123 +4132 +4213 -4231 -4312 +4321"};


// rotation bases for the plane, in emission order
inline const std::vector<std::string> kSo2Level2 = {"+11 +22", "-12 +21"};

inline const std::vector<std::string> kSo2Level4 = {
    "+1111 -1122 +1212 +1221 +2112 +2121 -2211 +2222",
    "-1112 -1121 +1211 -1222 +2111 -2122 +2212 +2221",
    "+1111 +1122 -1212 +1221 +2112 -2121 +2211 +2222",
    "-1112 +1121 -1211 -1222 +2111 +2122 -2212 +2221",
    "+1111 +1122 +1212 -1221 -2112 +2121 +2211 +2222",
    "+1112 -1121 -1211 -1222 +2111 +2122 +2212 -2221"};

// relabeling bases over three letters, one vector per level 1..3, in
// partition enumeration order
inline const std::vector<std::vector<std::string>> kPermD3 = {
    {"+1 +2 +3"},
    {"+11 +22 +33", "+12 +13 +21 +23 +31 +32"},
    {"+111 +222 +333",
     "+112 +113 +221 +223 +331 +332",
     "+121 +131 +212 +232 +313 +323",
     "+122 +133 +211 +233 +311 +322",
     "+123 +132 +213 +231 +312 +321"}};

}  // namespace siginv::testing

#endif
